"""Cosine/Euclidean distances between count vectors and the dual-threshold
proximity test (cosine above t_cos AND Euclidean below t_euc).

Dot products and squared norms are accumulated as exact 64-bit integers;
floats enter only at the final division and comparisons, keeping results
deterministic across platforms. The flag is evaluated on squared
quantities, which avoids square roots and is equivalent because counts are
non-negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .syllabifier import VECTOR_LEN

DEFAULT_T_COS = 0.87
DEFAULT_T_EUC = 6.0


@dataclass(frozen=True, slots=True)
class ProximityParams:
    """Thresholds for the proximity flag: cosine floor and Euclidean ceiling."""

    t_cos: float = DEFAULT_T_COS
    t_euc: float = DEFAULT_T_EUC

    def __post_init__(self) -> None:
        if not 0.0 <= self.t_cos <= 1.0:
            raise ValueError(f"t_cos must be in [0, 1], got {self.t_cos}")
        if self.t_euc < 0.0:
            raise ValueError(f"t_euc must be >= 0, got {self.t_euc}")


DEFAULT_PARAMS = ProximityParams()


@dataclass(frozen=True, slots=True)
class DistancePair:
    cosine: float
    euclidean: float


def _moments(v1, v2) -> tuple[int, int, int, int]:
    """Exact integer (dot, |v1|^2, |v2|^2, |v1-v2|^2)."""
    a = np.asarray(v1, dtype=np.int64)
    b = np.asarray(v2, dtype=np.int64)
    if a.shape != (VECTOR_LEN,) or b.shape != (VECTOR_LEN,):
        raise ValueError(f"count vectors must have {VECTOR_LEN} slots")
    d = a - b
    return int(a @ b), int(a @ a), int(b @ b), int(d @ d)


def cosine(v1, v2) -> float | None:
    """Cosine similarity in [0, 1], or None when either vector is all-zero."""
    dot, n1, n2, _ = _moments(v1, v2)
    if n1 == 0 or n2 == 0:
        return None
    return float(dot) / math.sqrt(float(n1) * float(n2))

def euclidean(v1, v2) -> float:
    """Euclidean distance between two count vectors."""
    _, _, _, e2 = _moments(v1, v2)
    return math.sqrt(float(e2))


def distances(v1, v2) -> DistancePair:
    """Both distances in one pass; cosine is nan when undefined."""
    dot, n1, n2, e2 = _moments(v1, v2)
    if n1 == 0 or n2 == 0:
        cos = math.nan
    else:
        cos = float(dot) / math.sqrt(float(n1) * float(n2))
    return DistancePair(cosine=cos, euclidean=math.sqrt(float(e2)))


def proximity_flag(v1, v2, params: ProximityParams = DEFAULT_PARAMS) -> bool:
    """True iff cosine(v1, v2) > t_cos and euclidean(v1, v2) < t_euc.

    Evaluated on squared quantities; a zero-norm side is never proximate
    (an empty subject must not match anything).
    """
    dot, n1, n2, e2 = _moments(v1, v2)
    return _flag_from_moments(dot, n1, n2, e2, params.t_cos, params.t_euc)


def _flag_from_moments(dot: int, n1: int, n2: int, e2: int, t_cos: float, t_euc: float) -> bool:
    # Mirrors the store-scan kernel arithmetic exactly (same float ops).
    if n1 == 0 or n2 == 0:
        return False
    if float(e2) >= t_euc * t_euc:
        return False
    c2 = float(dot) * float(dot) / (float(n1) * float(n2))
    return c2 > t_cos * t_cos

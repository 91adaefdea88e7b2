"""Deterministic throughput benchmark for the full hash/match/classify path.

Subjects are generated up front from a seeded RNG (a mix of repeated bulk
templates, lightly mutated templates, and fresh noise, so the store sees
merges, inserts, and evictions); only the pipeline loop is timed. Counts
are a pure function of (n, seed); the timing fields are not.
"""

from __future__ import annotations

import random
import string
import time
from dataclasses import dataclass

from . import _kernels
from .classifier import PerceptronModel
from .hashstore import StoreConfig, SubjectStore
from .labels import Label
from .pipeline import process_subject

_VOCAB_SIZE = 400
_TEMPLATES = 200


@dataclass(frozen=True, slots=True)
class BenchReport:
    total: int
    flagged: int
    spam: int
    ham: int
    unknown: int
    seconds: float
    msgs_per_sec: float
    mean_latency_us: float

    def counts_line(self) -> str:
        return (
            f"total={self.total} flagged={self.flagged} spam={self.spam} "
            f"ham={self.ham} unknown={self.unknown}"
        )

    def timing_line(self) -> str:
        return f"msgs_per_sec={self.msgs_per_sec:.2f} mean_latency_us={self.mean_latency_us:.2f}"


def generate_subjects(n: int, seed: int) -> list[str]:
    """n pseudo-random subject lines, reproducible from the seed."""
    rng = random.Random(seed)
    letters = string.ascii_lowercase
    vocab = [
        "".join(rng.choice(letters) for _ in range(rng.randint(3, 9)))
        for _ in range(_VOCAB_SIZE)
    ]
    templates = [
        " ".join(rng.choice(vocab) for _ in range(rng.randint(3, 7)))
        for _ in range(_TEMPLATES)
    ]
    subjects = []
    for _ in range(n):
        r = rng.random()
        if r < 0.60:  # bulk: verbatim repeat
            subjects.append(rng.choice(templates))
        elif r < 0.85:  # near-duplicate: a template with 1-2 characters touched
            chars = list(rng.choice(templates))
            for _ in range(rng.randint(1, 2)):
                chars[rng.randrange(len(chars))] = rng.choice(letters)
            subjects.append("".join(chars))
        else:  # fresh noise
            subjects.append(" ".join(rng.choice(vocab) for _ in range(rng.randint(3, 7))))
    return subjects


def run_bench(n: int, seed: int, config: StoreConfig | None = None) -> BenchReport:
    """Generate n subjects, push them through the pipeline, measure the loop."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    subjects = generate_subjects(n, seed)
    store = SubjectStore(config)
    model = PerceptronModel()
    _kernels.warm_up()  # JIT compile outside the timed region
    flagged = 0
    t0 = time.perf_counter()
    for subject in subjects:
        decision = process_subject(subject, store, model, Label.UNKNOWN)
        flagged += decision.boss_flag
    seconds = time.perf_counter() - t0
    rate = n / seconds if seconds > 0 else 0.0
    return BenchReport(
        total=n,
        flagged=flagged,
        spam=0,
        ham=0,
        unknown=n,
        seconds=seconds,
        msgs_per_sec=rate,
        mean_latency_us=(seconds / n) * 1e6,
    )

"""Single-perceptron verdict combiner.

The verdict vector packs up to 100 features in [0, 1] (binary verdicts as
0/1); the model is a classic perceptron with bias and signed targets,
trained online. Labels are three-way (spam/ham/unknown) but predictions are
binary: abstention is the pipeline's concern, not the model's.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .labels import Label

DEFAULT_WIDTH = 100
DEFAULT_LEARNING_RATE = 0.01
DEFAULT_SELF_TRAIN_MARGIN = 0.5


@dataclass(frozen=True, slots=True)
class Prediction:
    score: float
    label: Label


class PerceptronModel:
    """Online perceptron over a fixed-width verdict vector.

    train_step mutates the model in place and returns it; one observation
    may arrive every few microseconds, so no copies on the hot path.
    """

    def __init__(
        self,
        width: int = DEFAULT_WIDTH,
        learning_rate: float = DEFAULT_LEARNING_RATE,
        self_train: bool = False,
        self_train_margin: float = DEFAULT_SELF_TRAIN_MARGIN,
    ):
        if width < 1:
            raise ValueError(f"width must be >= 1, got {width}")
        if learning_rate <= 0.0:
            raise ValueError(f"learning_rate must be > 0, got {learning_rate}")
        if self_train_margin <= 0.0:
            raise ValueError(f"self_train_margin must be > 0, got {self_train_margin}")
        self.width = width
        self.learning_rate = learning_rate
        self.self_train = self_train
        self.self_train_margin = self_train_margin
        self.weights = np.zeros(width, dtype=np.float64)
        self.bias = 0.0

    def _coerce(self, x) -> np.ndarray:
        v = np.ascontiguousarray(x, dtype=np.float64)
        if v.shape != (self.width,):
            raise ValueError(
                f"verdict vector width {v.shape} does not match model width {self.width}"
            )
        return v

    def score_of(self, x) -> float:
        """Raw decision score w.x + b."""
        return float(self.weights @ self._coerce(x)) + self.bias

    def predict(self, x) -> Prediction:
        """Binary decision: spam iff the score is strictly positive."""
        score = self.score_of(x)
        return Prediction(score=score, label=Label.SPAM if score > 0.0 else Label.HAM)

    def train_step(self, x, y: Label) -> "PerceptronModel":
        """One online update; a correctly classified example is an exact no-op.

        Unknown labels leave the model untouched unless self_train is on, in
        which case the model's own confident prediction (|score| above the
        margin) stands in for the label.
        """
        x = self._coerce(x)
        score = float(self.weights @ x) + self.bias
        if y is Label.UNKNOWN:
            if not self.self_train:
                return self
            if abs(score) <= self.self_train_margin:
                return self
            y = Label.SPAM if score > 0.0 else Label.HAM
        target = 1.0 if y is Label.SPAM else -1.0
        predicted = 1.0 if score > 0.0 else -1.0
        if predicted != target:
            self.weights += self.learning_rate * target * x
            self.bias += self.learning_rate * target
        return self

    # --- persistence -----------------------------------------------------
    # Header line "width learning_rate", then the weights and finally the
    # bias, one decimal per line.

    def save(self, path: str | Path) -> None:
        lines = [f"{self.width} {self.learning_rate!r}"]
        lines.extend(repr(float(w)) for w in self.weights)
        lines.append(repr(self.bias))
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "PerceptronModel":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not lines:
            raise ValueError("empty model file")
        header = lines[0].split()
        if len(header) != 2:
            raise ValueError(f"bad model header: {lines[0]!r}")
        width = int(header[0])
        rate = float(header[1])
        values = [float(v) for v in lines[1:] if v.strip()]
        if len(values) != width + 1:
            raise ValueError(f"expected {width + 1} values, got {len(values)}")
        model = cls(width=width, learning_rate=rate)
        model.weights = np.array(values[:width], dtype=np.float64)
        model.bias = values[width]
        return model

    def snapshot(self) -> tuple[bytes, float]:
        """Cheap fingerprint of the parameters (for no-mutation assertions)."""
        return self.weights.tobytes(), self.bias


def make_verdicts(width: int, boss_flag: float, aux: Sequence[float] | Iterable[float] | None = None) -> np.ndarray:
    """Assemble a verdict vector: slot 0 is the proximity flag, the rest are
    caller-supplied auxiliary verdicts (missing ones default to 0)."""
    x = np.zeros(width, dtype=np.float64)
    x[0] = boss_flag
    if aux is not None:
        aux = np.asarray(aux, dtype=np.float64)
        if aux.shape[0] > width - 1:
            raise ValueError(
                f"{aux.shape[0]} auxiliary verdicts do not fit width {width}"
            )
        x[1 : 1 + aux.shape[0]] = aux
    return x

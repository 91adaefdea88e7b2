"""Streaming orchestration: subject line in, spam/ham decision out.

Each subject is fingerprinted, matched against the frequent-subject buffer,
packed into a verdict vector (slot 0 = proximity flag), and scored by the
perceptron. When a definite label arrives, the model trains after the
prediction, so every estimate precedes its own correction. Corpus scanning
aggregates distance histograms over flagged messages plus label counts and
throughput.
"""

from __future__ import annotations

import time
from contextlib import nullcontext
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np

from .classifier import PerceptronModel, make_verdicts
from .hashstore import SubjectStore
from .labels import Label
from .syllabifier import build_hash, serialize_hash

HIST_BINS = 20
EUCLID_HIST_RANGE = 20.0  # last bin is open-ended

_NO_LOCK = nullcontext()


@dataclass(slots=True)
class Decision:
    """Per-message outcome of the full hash/match/classify path."""

    vector: np.ndarray
    matched: bool
    cosine: float | None
    euclidean: float | None
    boss_flag: int
    score: float
    label: Label
    elapsed_us: float

    @property
    def hash_text(self) -> str:
        return serialize_hash(self.vector)


def process_subject(
    text: str | bytes,
    store: SubjectStore,
    model: PerceptronModel,
    label: Label = Label.UNKNOWN,
    aux: Sequence[float] | None = None,
    lock=None,
) -> Decision:
    """Run one subject through hash, store match, and perceptron decision.

    aux supplies verdict features 1..width-1 (defaults to zeros). When a
    definite label is given, the model takes one training step after the
    prediction. lock, if given, guards store/model mutation only; the hash
    is computed outside it.
    """
    t0 = time.perf_counter_ns()
    vector = build_hash(text)
    with lock if lock is not None else _NO_LOCK:
        result = store.observe(vector, label)
        flag = 1 if result.merged else 0
        if aux is None:
            # only slot 0 can be nonzero; the full dot product degenerates
            score = float(model.weights[0]) * flag + model.bias
            x = None
        else:
            x = make_verdicts(model.width, float(flag), aux)
            score = model.score_of(x)
        decided = Label.SPAM if score > 0.0 else Label.HAM
        if label.definite or model.self_train:
            if x is None:
                x = make_verdicts(model.width, float(flag))
            model.train_step(x, label)
    elapsed_us = (time.perf_counter_ns() - t0) / 1000.0
    dist = result.distances
    return Decision(
        vector=vector,
        matched=result.merged,
        cosine=dist.cosine if dist is not None else None,
        euclidean=dist.euclidean if dist is not None else None,
        boss_flag=flag,
        score=score,
        label=decided,
        elapsed_us=elapsed_us,
    )


def format_summary(total: int, flagged: int, spam: int, ham: int, unknown: int, msgs_per_sec: float) -> str:
    return (
        f"total={total} flagged={flagged} spam={spam} ham={ham} "
        f"unknown={unknown} msgs_per_sec={msgs_per_sec:.2f}"
    )


@dataclass(slots=True)
class ScanStats:
    """Aggregates over one corpus scan.

    Histograms cover only flagged (matched) messages: cosine over [0, 1] in
    20 bins, Euclidean over [0, 20) in 20 bins with the last bin open-ended.
    Label counts reflect the input labels, not the decisions.
    """

    total: int = 0
    flagged: int = 0
    spam: int = 0
    ham: int = 0
    unknown: int = 0
    msgs_per_sec: float = 0.0
    cosine_hist: np.ndarray = field(default_factory=lambda: np.zeros(HIST_BINS, dtype=np.int64))
    euclid_hist: np.ndarray = field(default_factory=lambda: np.zeros(HIST_BINS, dtype=np.int64))

    def record(self, decision: Decision, label: Label) -> None:
        self.total += 1
        if label is Label.SPAM:
            self.spam += 1
        elif label is Label.HAM:
            self.ham += 1
        else:
            self.unknown += 1
        if decision.matched:
            self.flagged += 1
            self.cosine_hist[min(int(decision.cosine * HIST_BINS), HIST_BINS - 1)] += 1
            self.euclid_hist[min(int(decision.euclidean), HIST_BINS - 1)] += 1

    def summary_line(self) -> str:
        return format_summary(
            self.total, self.flagged, self.spam, self.ham, self.unknown, self.msgs_per_sec
        )

    def write_csv(self, out_dir: str | Path) -> tuple[Path, Path]:
        """Write cosine_hist.csv and euclid_hist.csv; returns their paths."""
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        cos_path = out / "cosine_hist.csv"
        euc_path = out / "euclid_hist.csv"
        with cos_path.open("w", encoding="utf-8") as fh:
            fh.write("bin_low,bin_high,count\n")
            for i in range(HIST_BINS):
                fh.write(f"{i / HIST_BINS:.2f},{(i + 1) / HIST_BINS:.2f},{self.cosine_hist[i]}\n")
        with euc_path.open("w", encoding="utf-8") as fh:
            fh.write("bin_low,bin_high,count\n")
            width = EUCLID_HIST_RANGE / HIST_BINS
            for i in range(HIST_BINS):
                high = "inf" if i == HIST_BINS - 1 else f"{(i + 1) * width:.1f}"
                fh.write(f"{i * width:.1f},{high},{self.euclid_hist[i]}\n")
        return cos_path, euc_path


def split_label_column(line: str) -> tuple[Label, str]:
    """Parse an optional leading "spam|ham|unknown<TAB>" off a corpus line.

    A line with a TAB has a label column by definition: an unparseable label
    is treated as unknown. Without a TAB the whole line is the subject.
    """
    head, sep, rest = line.partition("\t")
    if not sep:
        return Label.UNKNOWN, line
    label = Label.parse(head)
    return (label if label is not None else Label.UNKNOWN), rest


def scan_corpus(
    lines: Iterable[str] | TextIO,
    store: SubjectStore,
    model: PerceptronModel,
    out_dir: str | Path | None = None,
) -> ScanStats:
    """Process every line (optionally "label<TAB>subject") through the
    pipeline; returns aggregate stats and optionally writes histogram CSVs."""
    stats = ScanStats()
    t0 = time.perf_counter()
    for raw in lines:
        line = raw.rstrip("\n")
        label, subject = split_label_column(line)
        decision = process_subject(subject, store, model, label)
        stats.record(decision, label)
    elapsed = time.perf_counter() - t0
    stats.msgs_per_sec = stats.total / elapsed if elapsed > 0 else 0.0
    if out_dir is not None:
        stats.write_csv(out_dir)
    return stats

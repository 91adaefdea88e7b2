"""Bounded in-memory buffer of frequent subject fingerprints.

Each observation is scanned against every buffered entry; among entries
passing the dual-threshold proximity test the one with maximal cosine wins
(ties: higher occurrence count, then older entry). A match merges into the
winner; anything else is inserted, evicting the least-frequent/least-recent
entry when the buffer is full. Capacity defaults to 1000 entries.

Storage is slot-major numpy (one 189 x capacity matrix plus per-entry
metadata arrays) so a full scan is a handful of SIMD passes; at the default
capacity one observe costs single-digit microseconds.

Concurrency: single writer. Concurrent readers must go through entries()
snapshots; mutation is serialized by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .labels import Label
from .proximity import DistancePair, ProximityParams
from .syllabifier import VECTOR_LEN, MalformedHashError, parse_hash, serialize_hash

DEFAULT_CAPACITY = 1000

_LABEL_CODE = {Label.UNKNOWN: 0, Label.SPAM: 1, Label.HAM: 2}
_CODE_LABEL = {code: label for label, code in _LABEL_CODE.items()}


@dataclass(frozen=True, slots=True)
class StoreConfig:
    capacity: int = DEFAULT_CAPACITY
    params: ProximityParams = field(default_factory=ProximityParams)

    def __post_init__(self) -> None:
        if self.capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {self.capacity}")


@dataclass(slots=True)
class SubjectEntry:
    """Snapshot of one buffered subject."""

    vector: np.ndarray
    occurrences: int
    spam_flag: Label
    last_seen: int


@dataclass(slots=True)
class MatchResult:
    """Outcome of one observation: the merged-into entry, or an insert."""

    entry: SubjectEntry | None
    distances: DistancePair | None
    merged: bool

    @property
    def matched(self) -> bool:
        return self.entry is not None


class StoreFormatError(ValueError):
    """Raised by from_lines() on a malformed export line."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class SubjectStore:
    def __init__(self, config: StoreConfig | None = None):
        self.config = config or StoreConfig()
        cap = self.config.capacity
        params = self.config.params
        self._tcos2 = params.t_cos * params.t_cos
        self._teuc2 = params.t_euc * params.t_euc
        self._cols = np.zeros((VECTOR_LEN, cap), dtype=np.int32)
        self._norm2 = np.zeros(cap, dtype=np.int64)
        self._occ = np.zeros(cap, dtype=np.int64)
        self._last = np.zeros(cap, dtype=np.int64)
        self._flags = np.zeros(cap, dtype=np.int8)
        self._n = 0
        self._tick = 0
        # reusable per-observe scratch (single-writer, so safe to share)
        self._qidx = np.empty(VECTOR_LEN, dtype=np.int32)
        self._qval = np.empty(VECTOR_LEN, dtype=np.int32)
        self._dotbuf = np.empty(cap, dtype=np.int64)
        self.last_scan_size = 0  # entries touched by the most recent observe

    @property
    def capacity(self) -> int:
        return self.config.capacity

    @property
    def params(self) -> ProximityParams:
        return self.config.params

    def __len__(self) -> int:
        return self._n

    def observe(self, vector, label: Label = Label.UNKNOWN) -> MatchResult:
        """Record one subject sighting; merge into a proximate entry or insert.

        A merge bumps the entry's occurrences and recency and upgrades its
        spam flag when the incoming label is definite (spam/ham overrides
        unknown; conflicting definite labels resolve to the incoming one).
        An insert evicts the least-frequent/least-recent entry first when
        the buffer is full.
        """
        v = np.ascontiguousarray(vector, dtype=np.int32)
        if v.shape != (VECTOR_LEN,):
            raise ValueError(f"count vector must have {VECTOR_LEN} slots, got {v.shape}")
        m, vnorm2 = _kernels.prepare_query(v, self._qidx, self._qval)
        self.last_scan_size = self._n
        best = _kernels.store_scan(
            self._cols, self._norm2, self._occ, self._last, self._n,
            self._qidx, self._qval, m, vnorm2,
            self._tcos2, self._teuc2, self._dotbuf,
        )
        self._tick += 1
        if best >= 0:
            self._occ[best] += 1
            self._last[best] = self._tick
            if label is not Label.UNKNOWN:
                self._flags[best] = _LABEL_CODE[label]
            dot = int(self._dotbuf[best])
            n2 = int(self._norm2[best])
            vn2 = int(vnorm2)
            pair = DistancePair(
                cosine=float(dot) / math.sqrt(float(n2) * float(vn2)),
                euclidean=math.sqrt(float(n2 + vn2 - 2 * dot)),
            )
            return MatchResult(entry=self._entry_at(best), distances=pair, merged=True)
        if self._n == self.capacity:
            idx = _kernels.find_victim(self._occ, self._last, self._n)
        else:
            idx = self._n
            self._n += 1
        self._cols[:, idx] = v
        self._norm2[idx] = vnorm2
        self._occ[idx] = 1
        self._last[idx] = self._tick
        self._flags[idx] = _LABEL_CODE[label]
        return MatchResult(entry=None, distances=None, merged=False)

    def evict(self) -> SubjectEntry:
        """Remove and return the least-frequent (then least-recent) entry.

        Contract: only callable on a full store.
        """
        if self._n < self.capacity:
            raise RuntimeError(
                f"evict() requires a full store ({self._n}/{self.capacity} entries)"
            )
        idx = _kernels.find_victim(self._occ, self._last, self._n)
        entry = self._entry_at(idx)
        tail = self._n - 1
        if idx != tail:
            self._cols[:, idx] = self._cols[:, tail]
            self._norm2[idx] = self._norm2[tail]
            self._occ[idx] = self._occ[tail]
            self._last[idx] = self._last[tail]
            self._flags[idx] = self._flags[tail]
        self._n = tail
        return entry

    def entries(self) -> list[SubjectEntry]:
        """Snapshot of all buffered entries (copies; safe to read anywhere)."""
        return [self._entry_at(i) for i in range(self._n)]

    def occurrence_mass(self) -> int:
        """Sum of all occurrence counts (accounting invariant hook)."""
        return int(self._occ[: self._n].sum())

    def _entry_at(self, idx: int) -> SubjectEntry:
        return SubjectEntry(
            vector=self._cols[:, idx].copy(),
            occurrences=int(self._occ[idx]),
            spam_flag=_CODE_LABEL[int(self._flags[idx])],
            last_seen=int(self._last[idx]),
        )

    # --- persistence -----------------------------------------------------
    # One entry per line: hash text, occurrences, flag, last_seen,
    # tab-separated. Counts above 78 saturate in the hash text.

    def to_lines(self) -> Iterator[str]:
        for i in range(self._n):
            yield "\t".join((
                serialize_hash(self._cols[:, i]),
                str(int(self._occ[i])),
                _CODE_LABEL[int(self._flags[i])].value,
                str(int(self._last[i])),
            ))

    @classmethod
    def from_lines(cls, lines: Iterable[str], config: StoreConfig | None = None) -> "SubjectStore":
        store = cls(config)
        for line_no, raw in enumerate(lines, start=1):
            line = raw.rstrip("\n")
            parts = line.split("\t")
            if len(parts) != 4:
                raise StoreFormatError(line_no, f"expected 4 tab-separated fields, got {len(parts)}")
            hash_text, occ_text, flag_text, last_text = parts
            try:
                vector = parse_hash(hash_text)
            except MalformedHashError as exc:
                raise StoreFormatError(line_no, str(exc)) from None
            try:
                occurrences = int(occ_text)
                last_seen = int(last_text)
            except ValueError:
                raise StoreFormatError(line_no, "occurrences/last_seen must be integers") from None
            if occurrences < 1:
                raise StoreFormatError(line_no, f"occurrences must be >= 1, got {occurrences}")
            flag = Label.parse(flag_text)
            if flag is None:
                raise StoreFormatError(line_no, f"unknown flag {flag_text!r}")
            if store._n == store.capacity:
                raise StoreFormatError(line_no, f"more entries than capacity {store.capacity}")
            idx = store._n
            store._n += 1
            store._cols[:, idx] = vector
            v64 = vector.astype(np.int64)
            store._norm2[idx] = int(v64 @ v64)
            store._occ[idx] = occurrences
            store._last[idx] = last_seen
            store._flags[idx] = _LABEL_CODE[flag]
        if store._n:
            store._tick = int(store._last[: store._n].max())
        return store

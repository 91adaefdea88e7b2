"""JIT-compiled hot loops: hash building, store scanning, eviction.

Everything here accumulates in 64-bit integers and converts to float only
for the final threshold comparisons, so results are bit-identical across
platforms. The pure-Python surfaces live in the sibling modules; these
kernels are an implementation detail.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# Row index per letter offset: 0 for consonants, 1..6 for vowels.
# The vowel order a,i,u,e,o,y fixes the slot layout; changing it changes
# every hash ever produced.
_VOWEL_ROW = np.zeros(26, dtype=np.int8)
for _i, _ch in enumerate("aiueoy"):
    _VOWEL_ROW[ord(_ch) - 97] = _i + 1


@njit(cache=True)
def hash_bytes(buf, counts):
    """Scan a byte buffer into 189 syllable-count slots (counts is zeroed here).

    State machine: a consonant is held pending until the next symbol decides
    whether it heads a consonant+vowel syllable or stands alone. The pending
    consonant is flushed exactly once at end of input.
    """
    counts[:] = 0
    pending = -1  # letter offset of a held consonant; -1 = between syllables
    for k in range(buf.shape[0]):
        b = buf[k]
        if 65 <= b <= 90:  # fold A-Z to a-z
            b += 32
        if 97 <= b <= 122:
            off = b - 97
            row = _VOWEL_ROW[off]
            if row > 0:  # vowel
                if pending >= 0:
                    counts[row * 27 + pending] += 1
                    pending = -1
                else:
                    counts[row * 27] += 1  # standalone vowel, column 0
            else:  # consonant
                if pending >= 0:
                    counts[pending] += 1  # previous consonant stands alone
                pending = off
        else:  # any non-letter byte delimits
            if pending >= 0:
                counts[pending] += 1
                pending = -1
    if pending >= 0:
        counts[pending] += 1


@njit(cache=True)
def prepare_query(counts, idx_out, val_out):
    """Extract nonzero slots of a count vector; returns (nnz, squared norm)."""
    m = 0
    n2 = np.int64(0)
    for j in range(counts.shape[0]):
        c = counts[j]
        if c != 0:
            idx_out[m] = j
            val_out[m] = c
            n2 += np.int64(c) * np.int64(c)
            m += 1
    return m, n2


@njit(cache=True)
def store_scan(cols, norm2, occ, last, n, nz_idx, nz_val, m, vnorm2, tcos2, teuc2, dotbuf):
    """Find the stored entry closest to the query under the dual threshold.

    cols is slot-major (189 x capacity) so each slot's row is contiguous over
    entries; the dot products touch only the query's nonzero slots. Returns
    the index of the proximate entry with maximal cosine (ties: higher
    occurrences, then lower last_seen), or -1 when nothing passes. dotbuf is
    caller-owned scratch; dotbuf[best] holds the exact integer dot product.
    """
    for e in range(n):
        dotbuf[e] = 0
    for k in range(m):
        j = nz_idx[k]
        val = np.int64(nz_val[k])
        row = cols[j]
        for e in range(n):
            dotbuf[e] += np.int64(row[e]) * val
    best = -1
    best_c2 = -1.0
    for e in range(n):
        n2 = norm2[e]
        if n2 <= 0 or vnorm2 <= 0:  # zero-norm sides never match
            continue
        d = dotbuf[e]
        e2 = n2 + vnorm2 - 2 * d
        if e2 >= teuc2:
            continue
        c2 = float(d) * float(d) / (float(n2) * float(vnorm2))
        if c2 <= tcos2:
            continue
        if c2 > best_c2:
            best = e
            best_c2 = c2
        elif c2 == best_c2 and best >= 0:
            if occ[e] > occ[best] or (occ[e] == occ[best] and last[e] < last[best]):
                best = e
    return best


@njit(cache=True)
def find_victim(occ, last, n):
    """Index of the least-frequent entry; ties broken by least-recent."""
    best = 0
    for e in range(1, n):
        if occ[e] < occ[best] or (occ[e] == occ[best] and last[e] < last[best]):
            best = e
    return best


def warm_up():
    """Force JIT compilation of every kernel (used before benchmarking)."""
    counts = np.zeros(189, dtype=np.int32)
    hash_bytes(np.frombuffer(b"warm up", dtype=np.uint8), counts)
    idx = np.zeros(189, dtype=np.int32)
    val = np.zeros(189, dtype=np.int32)
    m, n2 = prepare_query(counts, idx, val)
    cols = np.zeros((189, 2), dtype=np.int32)
    norm2 = np.zeros(2, dtype=np.int64)
    occ = np.ones(2, dtype=np.int64)
    last = np.zeros(2, dtype=np.int64)
    dotbuf = np.zeros(2, dtype=np.int64)
    store_scan(cols, norm2, occ, last, 2, idx, val, m, n2, 0.7569, 36.0, dotbuf)
    find_victim(occ, last, 2)

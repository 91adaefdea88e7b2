"""Fingerprint short texts into a 189-slot synthetic-syllable count vector.

A synthetic syllable is a consonant+vowel pair, a lone vowel, or a lone
consonant, produced by a single left-to-right scan in mora style: each
consonant waits for the next symbol; a vowel completes the pair, anything
else (another consonant, a delimiter, end of input) drops the consonant as
a one-symbol syllable. Bytes outside a-z/A-Z delimit words; A-Z fold to
lowercase.

The count vector lives in a 7-row x 27-column layout (189 slots): row 0
holds standalone consonants at their letter offset, rows 1..6 (one per
vowel, in the order a,i,u,e,o,y) hold consonant+vowel pairs at the
consonant's offset, with column 0 of each vowel row holding that vowel
standing alone. 43 slots are structurally unreachable (vowel-letter columns
of row 0 and of the pair columns, plus offset 26), leaving the 146 slots a
text can actually populate.

The printable serialization ("hash text") renders slot i as the character
'0' + count, saturated at '~' so the whole hash stays in ASCII '0'..'~'.
"""

from __future__ import annotations

import numpy as np

from . import _kernels

VECTOR_LEN = 189        # 7 rows x 27 columns
ROW_LEN = 27
NUM_ROWS = 7
MAX_INPUT_BYTES = 1024  # input is truncated here before any processing
SERIAL_MAX = 78         # '0' + 78 == '~', the last printable ASCII char

VOWELS = "aiueoy"       # order fixes rows 1..6; do not reorder

_VOWEL_OFFSETS = frozenset(ord(ch) - 97 for ch in VOWELS)
_CONSONANT_OFFSETS = tuple(off for off in range(26) if off not in _VOWEL_OFFSETS)

# Slot classification, used by invariants and tests.
STANDALONE_CONSONANT_SLOTS = frozenset(_CONSONANT_OFFSETS)
STANDALONE_VOWEL_SLOTS = frozenset(row * ROW_LEN for row in range(1, NUM_ROWS))
PAIR_SLOTS = frozenset(
    row * ROW_LEN + off for row in range(1, NUM_ROWS) for off in _CONSONANT_OFFSETS
)
STANDALONE_SLOTS = STANDALONE_CONSONANT_SLOTS | STANDALONE_VOWEL_SLOTS
UNREACHABLE_SLOTS = frozenset(range(VECTOR_LEN)) - STANDALONE_SLOTS - PAIR_SLOTS


class MalformedHashError(ValueError):
    """Raised when hash text is not 189 characters of ASCII '0'..'~'."""


def build_hash(text: str | bytes) -> np.ndarray:
    """Fingerprint a subject line into its syllable count vector.

    Accepts any string or byte string; str input is encoded as UTF-8 first
    (non-ASCII bytes act as word delimiters either way). Only the first
    1024 bytes are scanned. Total function: no input can fail.
    """
    if isinstance(text, str):
        data = text.encode("utf-8", errors="replace")
    else:
        data = bytes(text)
    counts = np.empty(VECTOR_LEN, dtype=np.int32)
    _kernels.hash_bytes(np.frombuffer(data[:MAX_INPUT_BYTES], dtype=np.uint8), counts)
    return counts


def serialize_hash(vector: np.ndarray) -> str:
    """Render a count vector as 189 printable characters ('0' + count).

    Counts above 78 saturate at '~' so every character stays printable;
    parsing is lossless below that bound.
    """
    v = np.asarray(vector)
    if v.shape != (VECTOR_LEN,):
        raise ValueError(f"count vector must have {VECTOR_LEN} slots, got {v.shape}")
    if v.min() < 0:
        raise ValueError("count vector has negative counts")
    chars = (np.minimum(v, SERIAL_MAX) + ord("0")).astype(np.uint8)
    return chars.tobytes().decode("ascii")


def parse_hash(text: str) -> np.ndarray:
    """Decode 189-character hash text back into a count vector.

    Raises MalformedHashError on wrong length or characters outside
    '0'..'~'.
    """
    try:
        raw = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedHashError(f"hash text has non-ASCII characters: {exc}") from None
    if len(raw) != VECTOR_LEN:
        raise MalformedHashError(
            f"hash text must be exactly {VECTOR_LEN} characters, got {len(raw)}"
        )
    counts = np.frombuffer(raw, dtype=np.uint8).astype(np.int32) - ord("0")
    if counts.min() < 0 or counts.max() > SERIAL_MAX:
        raise MalformedHashError("hash text has characters outside '0'..'~'")
    return counts


def hash_text(text: str | bytes) -> str:
    """Convenience: build and serialize in one step."""
    return serialize_hash(build_hash(text))

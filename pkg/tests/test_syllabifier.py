from __future__ import annotations

import random

import numpy as np
import pytest

import gen
import oracle
from bossfilter import (
    MAX_INPUT_BYTES,
    MalformedHashError,
    VECTOR_LEN,
    build_hash,
    hash_text,
    parse_hash,
    serialize_hash,
)
from bossfilter.syllabifier import (
    PAIR_SLOTS,
    STANDALONE_CONSONANT_SLOTS,
    STANDALONE_VOWEL_SLOTS,
    UNREACHABLE_SLOTS,
)
from golden import HASH_A, HASH_B, SLOTS_A, SLOTS_B, SUBJECT_A, SUBJECT_B, TREE_SLOTS


def as_dict(vector) -> dict[int, int]:
    return {i: int(c) for i, c in enumerate(vector) if c}


def test_reference_hashes_byte_for_byte():
    assert hash_text(SUBJECT_A) == HASH_A
    assert hash_text(SUBJECT_B) == HASH_B


def test_reference_slot_counts():
    assert as_dict(build_hash(SUBJECT_A)) == SLOTS_A
    assert as_dict(build_hash(SUBJECT_B)) == SLOTS_B


def test_tree_slots():
    assert as_dict(build_hash("tree")) == TREE_SLOTS


def test_empty_and_letterless_inputs():
    assert hash_text("") == "0" * VECTOR_LEN
    assert hash_text("123 !? ...") == "0" * VECTOR_LEN
    assert not build_hash(b"\x00\xff\x80").any()


def test_case_folding():
    for text in (SUBJECT_A, "TREE", "TrEe", "bAnAnA"):
        assert np.array_equal(build_hash(text), build_hash(text.lower()))


def test_delimiters_are_interchangeable():
    variants = [
        "donald: sprucing up for spring",
        "donald? sprucing,up;for!spring",
        "donald\tsprucing\nup 9 for#spring",
        "donaldésprucing€up for spring",  # non-ASCII delimits too
    ]
    base = build_hash(variants[0])
    for v in variants[1:]:
        assert np.array_equal(build_hash(v), base), v


def test_bytes_input_equals_str_input():
    assert np.array_equal(build_hash(SUBJECT_A.encode()), build_hash(SUBJECT_A))


def test_truncation_at_1024_bytes():
    long = "ba" * 3000
    assert np.array_equal(build_hash(long), build_hash(long[:MAX_INPUT_BYTES]))
    # the 1024th byte still counts, the 1025th does not
    v = build_hash("a" * 5000)
    assert int(v.sum()) == MAX_INPUT_BYTES
    # a consonant left pending at the cut is flushed as standalone
    cut = "a" * (MAX_INPUT_BYTES - 1) + "br"
    assert as_dict(build_hash(cut)) == {27: MAX_INPUT_BYTES - 1, 1: 1}


def test_pending_consonant_flushes_once():
    # wordfinal consonant runs: each consonant lands exactly one count
    assert as_dict(build_hash("bcd")) == {1: 1, 2: 1, 3: 1}
    assert as_dict(build_hash("b")) == {1: 1}
    assert int(build_hash("xxxxxx").sum()) == 6


def test_standalone_vowels_take_column_zero():
    assert as_dict(build_hash("a i u e o y")) == {27: 1, 54: 1, 81: 1, 108: 1, 135: 1, 162: 1}
    # vowel runs: every vowel after the first is also standalone
    assert as_dict(build_hash("aa")) == {27: 2}
    assert as_dict(build_hash("ai")) == {27: 1, 54: 1}


def test_pair_takes_priority_over_standalone():
    assert as_dict(build_hash("ba")) == {28: 1}
    # consonant run before a vowel: only the last consonant pairs
    assert as_dict(build_hash("stra")) == {18: 1, 19: 1, 27 + 17: 1}


def test_slot_partition():
    assert len(STANDALONE_CONSONANT_SLOTS) == 20
    assert len(STANDALONE_VOWEL_SLOTS) == 6
    assert len(PAIR_SLOTS) == 120
    assert len(UNREACHABLE_SLOTS) == 43
    covered = STANDALONE_CONSONANT_SLOTS | STANDALONE_VOWEL_SLOTS | PAIR_SLOTS | UNREACHABLE_SLOTS
    assert covered == set(range(VECTOR_LEN))


def test_unreachable_slots_stay_zero():
    rng = random.Random(901)
    for _ in range(300):
        v = build_hash(gen.random_text(rng))
        assert all(int(v[s]) == 0 for s in UNREACHABLE_SLOTS)


def test_matches_reference_implementation():
    rng = random.Random(902)
    for _ in range(500):
        text = gen.random_text(rng, max_len=200)
        assert list(build_hash(text)) == oracle.vector(text), repr(text)


def test_serialize_saturates_at_78():
    v = np.zeros(VECTOR_LEN, dtype=np.int32)
    v[28] = 77
    assert serialize_hash(v)[28] == "}"
    v[28] = 78
    assert serialize_hash(v)[28] == "~"
    v[28] = 79
    assert serialize_hash(v)[28] == "~"
    v[28] = 1000
    assert serialize_hash(v)[28] == "~"


def test_round_trip_below_saturation():
    rng = random.Random(903)
    for _ in range(300):
        v = np.zeros(VECTOR_LEN, dtype=np.int32)
        for _ in range(rng.randrange(40)):
            v[rng.randrange(VECTOR_LEN)] = rng.randint(0, 78)
        assert np.array_equal(parse_hash(serialize_hash(v)), v)


def test_round_trip_clips_above_saturation():
    v = build_hash("ba" * 200)  # count 200 in one slot
    assert int(parse_hash(serialize_hash(v))[28]) == 78


def test_serialize_rejects_bad_vectors():
    with pytest.raises(ValueError):
        serialize_hash(np.zeros(10, dtype=np.int32))
    bad = np.zeros(VECTOR_LEN, dtype=np.int32)
    bad[5] = -1
    with pytest.raises(ValueError):
        serialize_hash(bad)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "0" * 188,
        "0" * 190,
        "0" * 188 + " ",   # space is below '0'
        "0" * 188 + "/",   # one below '0'
        "0" * 188 + "\x7f",
        "0" * 188 + "é",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(MalformedHashError):
        parse_hash(text)


def test_parse_accepts_full_charset():
    v = parse_hash("~" * VECTOR_LEN)
    assert int(v.min()) == 78 and int(v.max()) == 78
    assert int(parse_hash("A" + "0" * 188)[0]) == ord("A") - ord("0")


def test_hash_text_is_build_plus_serialize():
    assert hash_text("tree") == serialize_hash(build_hash("tree"))

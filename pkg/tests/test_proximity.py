from __future__ import annotations

import math
import random

import numpy as np
import pytest

import gen
import oracle
from bossfilter import (
    DEFAULT_T_COS,
    DEFAULT_T_EUC,
    ProximityParams,
    VECTOR_LEN,
    build_hash,
    cosine,
    distances,
    euclidean,
    proximity_flag,
)
from golden import GOLDEN_COSINE, GOLDEN_EUCLIDEAN, SUBJECT_A, SUBJECT_B, TOLERANCE


def vec(**slots) -> np.ndarray:
    v = np.zeros(VECTOR_LEN, dtype=np.int32)
    for name, count in slots.items():
        v[int(name[1:])] = count
    return v


def test_reference_distances():
    a, b = build_hash(SUBJECT_A), build_hash(SUBJECT_B)
    assert cosine(a, b) == pytest.approx(GOLDEN_COSINE, abs=TOLERANCE)
    assert euclidean(a, b) == pytest.approx(GOLDEN_EUCLIDEAN, abs=TOLERANCE)
    assert proximity_flag(a, b)


def test_identical_vectors():
    v = build_hash(SUBJECT_A)
    assert cosine(v, v) == 1.0
    assert euclidean(v, v) == 0.0
    assert proximity_flag(v, v)


def test_zero_vector_has_no_cosine_and_never_flags():
    z = np.zeros(VECTOR_LEN, dtype=np.int32)
    v = vec(s28=3)
    assert cosine(z, v) is None
    assert cosine(v, z) is None
    assert cosine(z, z) is None
    assert euclidean(z, v) == 3.0
    assert math.isnan(distances(z, v).cosine)
    assert not proximity_flag(z, v)
    assert not proximity_flag(z, z)  # euclidean 0, but no direction to agree on


def test_symmetry():
    rng = random.Random(911)
    for _ in range(100):
        a = build_hash(gen.random_subject(rng))
        b = build_hash(gen.random_subject(rng))
        assert cosine(a, b) == cosine(b, a)
        assert euclidean(a, b) == euclidean(b, a)
        assert proximity_flag(a, b) == proximity_flag(b, a)


def test_flag_needs_both_tests():
    # same direction, far apart: cosine 1, euclidean 12
    near = vec(s28=6)
    assert not proximity_flag(near, vec(s28=18))
    # close by, wrong direction: euclidean ~1.41, cosine 0
    assert not proximity_flag(vec(s28=1), vec(s29=1))


def test_euclidean_boundary_is_strict():
    # distance exactly 6.0: differs by 6 in one slot, shared bulk elsewhere
    a = vec(s28=6, s29=100)
    b = vec(s29=100)
    assert euclidean(a, b) == 6.0
    assert cosine(a, b) > 0.99
    assert not proximity_flag(a, b)
    assert proximity_flag(a, b, ProximityParams(t_euc=6.001))


def test_cosine_boundary_is_strict():
    v = vec(s28=2, s30=5)
    assert not proximity_flag(v, v, ProximityParams(t_cos=1.0, t_euc=6.0))


def test_default_params():
    assert DEFAULT_T_COS == 0.87
    assert DEFAULT_T_EUC == 6.0
    p = ProximityParams()
    assert (p.t_cos, p.t_euc) == (0.87, 6.0)


@pytest.mark.parametrize("t_cos,t_euc", [(-0.1, 6.0), (1.1, 6.0), (0.87, -1.0)])
def test_params_validation(t_cos, t_euc):
    with pytest.raises(ValueError):
        ProximityParams(t_cos=t_cos, t_euc=t_euc)


def test_wrong_width_rejected():
    with pytest.raises(ValueError):
        cosine(np.zeros(10), np.zeros(10))


def test_matches_reference_arithmetic():
    # includes saturation-scale counts; the oracle uses unbounded Python ints
    rng = random.Random(912)
    for _ in range(200):
        a = [0] * VECTOR_LEN
        b = [0] * VECTOR_LEN
        for target in (a, b):
            for _ in range(rng.randrange(25)):
                target[rng.randrange(VECTOR_LEN)] = rng.randint(0, 1024)
        got_c = cosine(np.array(a, dtype=np.int32), np.array(b, dtype=np.int32))
        want_c = oracle.cosine(a, b)
        if want_c is None:
            assert got_c is None
        else:
            assert got_c == pytest.approx(want_c, abs=1e-12)
        got_e = euclidean(np.array(a, dtype=np.int32), np.array(b, dtype=np.int32))
        assert got_e == pytest.approx(oracle.euclidean(a, b), abs=1e-12)


def test_squared_form_agrees_with_direct_form():
    rng = random.Random(913)
    params = ProximityParams()
    for _ in range(500):
        a = build_hash(gen.random_subject(rng, max_words=4))
        b = build_hash(gen.random_subject(rng, max_words=4))
        direct = oracle.direct_flag(list(a), list(b), params.t_cos, params.t_euc)
        assert proximity_flag(a, b, params) == direct


def test_triangle_inequality():
    rng = random.Random(914)
    for _ in range(200):
        a = build_hash(gen.random_subject(rng))
        b = build_hash(gen.random_subject(rng))
        c = build_hash(gen.random_subject(rng))
        assert euclidean(a, c) <= euclidean(a, b) + euclidean(b, c) + 1e-9

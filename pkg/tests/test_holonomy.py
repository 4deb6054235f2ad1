import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qholonomy.geometry import PLPath, concat, signed_area_between, signed_area_loop
from qholonomy.holonomy import (
    IDENTITY,
    U1,
    U2,
    HolonomyWord,
    QAngle,
    evaluate_numeric,
    holonomy_of_path,
    segment_word,
    straight_word,
    word_mul,
)
from qholonomy.serialize import word_from_json, word_to_json
from qholonomy.verify import random_path

from oracles import clock_shift, rel_err, weyl_word

F = Fraction

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
words = st.builds(HolonomyWord, rationals, rationals, rationals)


def test_segment_words():
    assert segment_word(1, 0) == U1
    assert segment_word(0, 0) == IDENTITY
    assert segment_word(F(1, 2), F(-3, 2)) == HolonomyWord(0, F(1, 2), F(-3, 2))


def test_fundamental_relation():
    assert word_mul(U1, U2) == word_mul(U2, U1).times_q(1)
    assert word_mul(U1, U2).phase_exp - word_mul(U2, U1).phase_exp == 1


def test_triangle_example():
    assert word_mul(straight_word(1, 2), straight_word(2, 1)) == HolonomyWord(F(-3, 2), 3, 3)


def test_staircase_versus_diagonal():
    stair = holonomy_of_path(PLPath.from_steps([(1, 0), (0, 1)]))
    diag = holonomy_of_path(PLPath.straight(1, 1))
    assert stair == HolonomyWord(F(1, 2), 1, 1)
    assert diag == HolonomyWord(0, 1, 1)
    assert stair.phase_exp - diag.phase_exp == signed_area_between(
        PLPath.from_steps([(1, 0), (0, 1)]), PLPath.straight(1, 1)
    )


def test_straight_holonomy():
    assert holonomy_of_path(PLPath.straight(3, -2)) == HolonomyWord(0, 3, -2)


@settings(max_examples=100, deadline=None)
@given(words)
def test_inverse(w):
    assert word_mul(w, w.inverse()) == IDENTITY
    assert word_mul(w.inverse(), w) == IDENTITY


@settings(max_examples=100, deadline=None)
@given(words, words, words)
def test_associative(a, b, c):
    assert word_mul(word_mul(a, b), c) == word_mul(a, word_mul(b, c))


@settings(max_examples=100, deadline=None)
@given(words)
def test_identity(w):
    assert word_mul(IDENTITY, w) == w == word_mul(w, IDENTITY)


ints = st.integers(-6, 6)


@settings(max_examples=200, deadline=None)
@given(ints, ints, ints, ints)
def test_parallelogram_and_triangle(m, n, s, t):
    a, b = straight_word(m, n), straight_word(s, t)
    d = m * t - n * s
    assert word_mul(a, b) == word_mul(b, a).times_q(d)
    assert word_mul(a, b) == straight_word(m + s, n + t).times_q(F(d, 2))


def test_area_phase_theorem_random():
    rng = random.Random(7)
    for _ in range(50):
        end = (rng.randint(-4, 4), rng.randint(-4, 4))
        if end == (0, 0):
            continue
        p = random_path(rng, end)
        area = signed_area_between(p, PLPath.straight(*end))
        assert holonomy_of_path(p) == straight_word(*end).times_q(area)


def test_area_phase_theorem_closed_loops():
    rng = random.Random(8)
    for _ in range(30):
        p = random_path(rng, (0, 0))
        assert holonomy_of_path(p) == IDENTITY.times_q(signed_area_loop(p))


def test_multiplicative_under_concat():
    rng = random.Random(9)
    for _ in range(30):
        a, b = random_path(rng), random_path(rng)
        assert holonomy_of_path(concat(a, b)) == word_mul(holonomy_of_path(a), holonomy_of_path(b))


def test_json_round_trip():
    w = HolonomyWord(F(-7, 3), F(1, 2), -4)
    assert word_from_json(word_to_json(w)) == w


def test_word_rejects_floats():
    with pytest.raises(TypeError):
        HolonomyWord(0.5, 0, 0)


# -- numeric evaluation ---------------------------------------------------------


def test_evaluate_u1():
    m = evaluate_numeric(U1, math.log(2), 0.0, QAngle(0.3))
    assert np.allclose(m, np.diag([2, 0.5]))


def test_evaluate_phase():
    m = evaluate_numeric(HolonomyWord(F(1, 2), 0, 0), 0.0, 0.0, QAngle(1.0))
    assert np.allclose(m, np.exp(0.5j) * np.eye(2))


def test_evaluate_classical_multiplicative():
    rng = random.Random(1)
    q = QAngle(0.0)
    for _ in range(20):
        a = HolonomyWord(0, F(rng.randint(-6, 6), 2), F(rng.randint(-6, 6), 3))
        b = HolonomyWord(0, F(rng.randint(-6, 6), 2), F(rng.randint(-6, 6), 3))
        r1, r2 = rng.uniform(-1, 1), rng.uniform(-1, 1)
        prod = evaluate_numeric(word_mul(a, b), r1, r2, q)
        ref = evaluate_numeric(a, r1, r2, q) @ evaluate_numeric(b, r1, r2, q)
        assert rel_err(prod, ref) < 1e-12


def test_qangle_from_physical():
    q = QAngle.from_physical(2.0, -4.0)
    assert q.theta == pytest.approx(-1.0)
    with pytest.raises(ValueError):
        QAngle.from_physical(1.0, 1.0)
    with pytest.raises(ValueError):
        QAngle(float("nan"))


@pytest.mark.parametrize("n", [5, 7, 9])
def test_clock_shift_word_products(n):
    theta = 2 * math.pi / n
    clock, shift = clock_shift(n, theta)
    assert rel_err(clock @ shift, np.exp(1j * theta) * shift @ clock) < 1e-12
    rng = random.Random(n)
    for _ in range(40):
        a = HolonomyWord(F(rng.randint(-4, 4), 2), rng.randint(-3, 3), rng.randint(-3, 3))
        b = HolonomyWord(F(rng.randint(-4, 4), 2), rng.randint(-3, 3), rng.randint(-3, 3))
        lhs = weyl_word(word_mul(a, b), clock, shift, theta)
        rhs = weyl_word(a, clock, shift, theta) @ weyl_word(b, clock, shift, theta)
        assert rel_err(lhs, rhs) < 1e-10

"""Acceptance criteria, one test per criterion.

Each test is named ``test_criterion_NN_*``; the terminal summary prints one
PASS/FAIL line per criterion (see ``conftest.py``).
"""

import io
import math
import random
import statistics
import time
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from qholonomy.cli import run
from qholonomy.geometry import (
    LatticePolygon,
    PLPath,
    RatPoint,
    concat,
    pick_area,
    signed_area_between,
    signed_area_loop,
)
from qholonomy.goldman import goldman_quantum, reroute, rerouting_trace, strip_areas, verify_bracket_equality
from qholonomy.holonomy import U1, U2, HolonomyWord, holonomy_of_path, straight_word, word_mul
from qholonomy.intersections import enumerate_along_p1, enumerate_points, total_intersection_number
from qholonomy.loop_algebra import AlgebraElement, QLaurent, commutator_straight
from qholonomy.modular import IDENTITY_MATRIX, S, T, act_on_holonomy, act_on_path, check_relations
from qholonomy.verify import (
    random_modular,
    random_path,
    suite_bracket_equality,
    suite_classical_limit,
    suite_determinant,
    suite_jacobi,
)

from oracles import clock_shift, rel_err, weyl_element, weyl_trace, weyl_word, winding_area

F = Fraction
mono = QLaurent.monomial
WORKED = "(q^{-3/2}-q^{3/2})(T(3,3)-T(-1,1))"


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out, stderr=io.StringIO())
    return code, out.getvalue().strip()


def test_criterion_01_worked_commutator():
    argv = ("bracket", "--p1", "1,2", "--p2", "2,1", "--form", "straight", "--format", "latex")
    code, out = cli(*argv)
    assert code == 0 and out == WORKED
    c = mono(F(-3, 2)) - mono(F(3, 2))
    assert commutator_straight(1, 2, 2, 1) == AlgebraElement([((3, 3), c), ((-1, 1), -c)])
    timings = []
    for _ in range(25):
        t0 = time.perf_counter()
        cli(*argv)
        timings.append(time.perf_counter() - t0)
    assert statistics.median(timings) < 1e-3


def test_criterion_02_rerouted_form():
    code, out = cli("bracket", "--p1", "1,2", "--p2", "2,1", "--form", "rerouted", "--format", "latex")
    assert code == 0 and out == WORKED
    assert goldman_quantum((1, 2), (2, 1)) == commutator_straight(1, 2, 2, 1)
    pts = enumerate_along_p1((1, 2), (2, 1))
    assert [p.lift_param for p in pts] == [0, F(1, 3), F(2, 3)]
    plus = [rerouting_trace(reroute((1, 2), (2, 1), p, +1)) for p in pts]
    minus = [rerouting_trace(reroute((1, 2), (2, 1), p, -1)) for p in pts]
    assert plus == [AlgebraElement([((3, 3), mono(k))]) for k in (F(3, 2), F(1, 2), F(-1, 2))]
    assert minus == [AlgebraElement([((-1, 1), mono(k))]) for k in (F(-3, 2), F(-1, 2), F(1, 2))]


def _table(v, w):
    return [((p.position.x, p.position.y), p.index) for p in enumerate_points(v, w)]


def test_criterion_03_intersection_tables():
    assert _table((1, 0), (0, 1)) == [((0, 0), 1)]
    assert _table((2, 1), (0, 1)) == [((0, 0), 1), ((0, F(1, 2)), 1)]
    # the endpoint S=(1,1) coincides with P=(0,0) on the torus and is not listed again
    assert _table((1, 2), (2, 1)) == [((0, 0), -1), ((F(1, 3), F(2, 3)), -1), ((F(2, 3), F(1, 3)), -1)]
    assert _table((1, 1), (-1, 2)) == [((0, 0), 1), ((F(1, 3), F(1, 3)), 1), ((F(2, 3), F(2, 3)), 1)]
    totals = [total_intersection_number(v, w) for v, w in [((1, 0), (0, 1)), ((2, 1), (0, 1)), ((1, 2), (2, 1)), ((1, 1), (-1, 2))]]
    assert totals == [1, 2, -3, 3]


def test_criterion_04_determinant_law():
    t0 = time.perf_counter()
    res = suite_determinant(6)
    elapsed = time.perf_counter() - t0
    assert res.passed, res.failures
    assert res.cases > 0
    assert elapsed < 60


@pytest.mark.slow
def test_criterion_05_bracket_equality():
    first = verify_bracket_equality((2, 0), (1, 2))
    assert first.ok and len(first.rows) == 4
    second = verify_bracket_equality((2, 1), (0, 2))
    assert second.ok and len(second.rows) == 2
    assert all(row.exponent == 2 for row in second.rows)
    res = suite_bracket_equality(6)
    assert res.passed, res.failures


def test_criterion_06_area_phase_theorem():
    rng = random.Random(2024)
    checked = 0
    while checked < 250:
        end = (rng.randint(-4, 4), rng.randint(-4, 4))
        p, p2 = random_path(rng, end), random_path(rng, end)
        w, w2 = holonomy_of_path(p), holonomy_of_path(p2)
        area = signed_area_between(p, p2)
        assert (w.alpha, w.beta) == (w2.alpha, w2.beta)
        assert w.phase_exp - w2.phase_exp == area
        closed = p.vertices + tuple(reversed(p2.vertices[1:-1]))
        assert area == winding_area([tuple(v) for v in closed])
        checked += 1
    for _ in range(100):
        loop = random_path(rng, (0, 0))
        assert signed_area_loop(loop) == winding_area([tuple(v) for v in loop.vertices[:-1]])


def test_criterion_07_representation_axioms():
    rng = random.Random(7)
    for _ in range(200):
        e1 = (rng.randint(-3, 3), rng.randint(-3, 3))
        e2 = (rng.randint(-3, 3), rng.randint(-3, 3))
        p1, p2, p3 = (random_path(rng, e1) for _ in range(3))
        assert signed_area_between(p1, p3) == signed_area_between(p1, p2) + signed_area_between(p2, p3)
        q1, q3 = random_path(rng, e1), random_path(rng, e1)
        q2, q4 = random_path(rng, e2), random_path(rng, e2)
        lhs = signed_area_between(concat(q1, q2), concat(q3, q4))
        assert lhs == signed_area_between(q1, q3) + signed_area_between(q2, q4)


def _random_simple_polygon(rng):
    while True:
        k = rng.randint(3, 8)
        pts = {(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(k)}
        if len(pts) < 3:
            continue
        cx = sum(x for x, _ in pts) / len(pts)
        cy = sum(y for _, y in pts) / len(pts)
        ordered = sorted(pts, key=lambda v: (math.atan2(v[1] - cy, v[0] - cx), (v[0] - cx) ** 2 + (v[1] - cy) ** 2))
        try:
            poly = LatticePolygon(tuple(RatPoint(F(x), F(y)) for x, y in ordered))
        except ValueError:
            continue
        loop = PLPath(poly.vertices + poly.vertices[:1])
        if signed_area_loop(loop) != 0:
            return poly, loop


def test_criterion_08_pick():
    rng = random.Random(8)
    for _ in range(100):
        poly, loop = _random_simple_polygon(rng)
        assert pick_area(poly) == abs(signed_area_loop(loop))
    strips = strip_areas((1, 2), (2, 1))
    assert len(strips) == 3 and all(abs(a) == 1 for a in strips)
    assert sum(strips) == total_intersection_number((1, 2), (2, 1))


def test_criterion_09_modular():
    assert S**4 == IDENTITY_MATRIX and (S @ T) ** 3 == IDENTITY_MATRIX
    assert act_on_holonomy(T, PLPath.straight(1, 0)) == word_mul(U1, U2).times_q(F(-1, 2))
    assert act_on_holonomy(T, PLPath.straight(-1, 0)) == word_mul(U2.inverse(), U1.inverse()).times_q(F(1, 2))
    assert act_on_holonomy(S, PLPath.straight(1, 0)) == U2
    assert act_on_holonomy(S, PLPath.straight(0, 1)) == U1.inverse()
    assert check_relations().ok
    rng = random.Random(9)
    for _ in range(50):
        M = random_modular(rng)
        end = (rng.randint(-3, 3), rng.randint(-3, 3))
        p, p2 = random_path(rng, end), random_path(rng, end)
        assert signed_area_between(act_on_path(M, p), act_on_path(M, p2)) == signed_area_between(p, p2)
        v, w = (rng.randint(1, 4), rng.randint(-4, 4)), (rng.randint(-4, 4), rng.randint(1, 4))
        mv = (M.a * v[0] + M.b * v[1], M.c * v[0] + M.d * v[1])
        mw = (M.a * w[0] + M.b * w[1], M.c * w[0] + M.d * w[1])
        assert total_intersection_number(mv, mw) == total_intersection_number(v, w)


def test_criterion_10_jacobi():
    t0 = time.perf_counter()
    res = suite_jacobi(3)
    elapsed = time.perf_counter() - t0
    assert res.passed, res.failures
    assert res.cases == 25**3
    assert elapsed < 120


def test_criterion_11_classical_limit():
    res = suite_classical_limit(6)
    assert res.passed, res.failures


@pytest.mark.parametrize("n", [5, 7, 9])
def test_criterion_12_clock_and_shift(n):
    # q = exp(2 pi i / n): q^(1/2) is a primitive 2n-th root and C^n = Sh^n = 1
    theta = 2 * math.pi / n
    clock, shift = clock_shift(n, theta)
    assert rel_err(np.linalg.matrix_power(clock, n), np.eye(n)) < 1e-9
    assert rel_err(clock @ shift, np.exp(1j * theta) * shift @ clock) < 1e-9
    u1, u2 = weyl_word(U1, clock, shift, theta), weyl_word(U2, clock, shift, theta)
    assert rel_err(u1 @ u2, np.exp(1j * theta) * u2 @ u1) < 1e-9
    vecs = list(product(range(-3, 4), repeat=2))
    for (m, k), (s, t) in product(vecs, vecs):
        a, b = straight_word(m, k), straight_word(s, t)
        lhs = weyl_word(a, clock, shift, theta) @ weyl_word(b, clock, shift, theta)
        assert rel_err(lhs, weyl_word(word_mul(a, b), clock, shift, theta)) < 1e-9
        ta, tb = weyl_trace(m, k, clock, shift, theta), weyl_trace(s, t, clock, shift, theta)
        rhs = weyl_element(commutator_straight(m, k, s, t), clock, shift, theta)
        assert rel_err(ta @ tb - tb @ ta, rhs) < 1e-9
    rng = random.Random(n)
    for _ in range(50):
        end = (rng.randint(-3, 3), rng.randint(-3, 3))
        p = random_path(rng, end, dens=(1,))
        w = holonomy_of_path(p)
        seg = np.eye(n, dtype=complex)
        for d in p.steps():
            seg = seg @ weyl_word(HolonomyWord(0, d.x, d.y), clock, shift, theta)
        assert rel_err(seg, weyl_word(w, clock, shift, theta)) < 1e-9

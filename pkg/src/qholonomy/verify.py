"""Exhaustive and randomized identity checks behind ``qholonomy verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .geometry import PLPath, RatPoint, concat, signed_area_between
from .goldman import goldman_classical, verify_bracket_equality
from .holonomy import holonomy_of_path, straight_word, word_mul
from .intersections import enumerate_along_p1, enumerate_points, total_intersection_number
from .loop_algebra import (
    AlgebraElement,
    LoopClass,
    classical_limit,
    commutator,
    commutator_straight,
    poisson_bracket,
    t_straight,
)
from .modular import S, T, ModularMatrix, act_on_path, check_relations, IDENTITY_MATRIX

MAX_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(msg)
        elif len(self.failures) == MAX_FAILURES:
            self.failures.append("...")


@dataclass
class VerifyReport:
    sweep: int
    seed: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


def random_rational(rng: random.Random, lo: int, hi: int, dens=(1, 1, 2, 3)) -> Fraction:
    den = rng.choice(dens)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_path(
    rng: random.Random, end=None, max_segments: int = 8, box: int = 4, dens=(1, 1, 2, 3)
) -> PLPath:
    """Random PL path from the origin with vertices in ``[-box, box]^2``.

    If ``end`` is given the last vertex is forced to it.
    """
    k = rng.randint(1, max_segments)
    pts = [RatPoint(Fraction(0), Fraction(0))]
    for _ in range(k - 1 if end is not None else k):
        pts.append(RatPoint(random_rational(rng, -box, box, dens), random_rational(rng, -box, box, dens)))
    if end is not None:
        pts.append(RatPoint(Fraction(end[0]), Fraction(end[1])))
    verts = [pts[0]]
    for v in pts[1:]:
        if v != verts[-1]:
            verts.append(v)
    if len(verts) == 1:
        # closed request with no usable interior vertex: go out and back
        verts = [verts[0], RatPoint(Fraction(1), Fraction(0)), verts[0]]
    return PLPath(tuple(verts))


def random_modular(rng: random.Random, length: int = 8) -> ModularMatrix:
    M = IDENTITY_MATRIX
    for _ in range(rng.randint(0, length)):
        M = M @ rng.choice((S, T, T.inverse()))
    return M


def _sweep_vectors(n: int):
    return [(a, b) for a, b in product(range(-n, n + 1), repeat=2) if (a, b) != (0, 0)]


def _timed(fn):
    def run(*args, **kwargs) -> SuiteResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    run.__name__ = fn.__name__
    return run


@_timed
def suite_area_laws(rng: random.Random, trials: int) -> SuiteResult:
    res = SuiteResult("signed-area laws (antisymmetry, chain, translation, concatenation)")
    for _ in range(trials):
        end = (rng.randint(-3, 3), rng.randint(-3, 3))
        p1, p2, p3 = (random_path(rng, end) for _ in range(3))
        res.cases += 1
        s12, s21 = signed_area_between(p1, p2), signed_area_between(p2, p1)
        if s12 != -s21:
            res.fail(f"antisymmetry {p1} {p2}")
        if signed_area_between(p1, p3) != s12 + signed_area_between(p2, p3):
            res.fail(f"chain additivity {p1} {p2} {p3}")
        shift = RatPoint(random_rational(rng, -3, 3), random_rational(rng, -3, 3))
        if signed_area_between(p1.translate(shift), p2.translate(shift)) != s12:
            res.fail(f"translation invariance {p1} {p2}")
        end2 = (rng.randint(-3, 3), rng.randint(-3, 3))
        p4, p5 = random_path(rng, end2), random_path(rng, end2)
        lhs = signed_area_between(concat(p1, p4), concat(p2, p5))
        if lhs != s12 + signed_area_between(p4, p5):
            res.fail(f"concatenation law {p1} {p4} / {p2} {p5}")
    return res


@_timed
def suite_straight_relations(n: int) -> SuiteResult:
    res = SuiteResult("parallelogram and triangle relations on straight words")
    vecs = [v for v in product(range(-n, n + 1), repeat=2)]
    for (m, k), (s, t) in product(vecs, vecs):
        res.cases += 1
        a, b = straight_word(m, k), straight_word(s, t)
        d = m * t - k * s
        if word_mul(a, b) != word_mul(b, a).times_q(d):
            res.fail(f"U({m},{k})U({s},{t}) != q^{d} U({s},{t})U({m},{k})")
        if word_mul(a, b) != straight_word(m + s, k + t).times_q(Fraction(d, 2)):
            res.fail(f"triangle relation at ({m},{k}),({s},{t})")
    return res


@_timed
def suite_area_phase(rng: random.Random, trials: int) -> SuiteResult:
    res = SuiteResult("holonomy phase difference equals signed area")
    for _ in range(trials):
        end = (rng.randint(-4, 4), rng.randint(-4, 4))
        p, p2 = random_path(rng, end), random_path(rng, end)
        res.cases += 1
        w, w2 = holonomy_of_path(p), holonomy_of_path(p2)
        if (w.alpha, w.beta) != (w2.alpha, w2.beta) or w.phase_exp - w2.phase_exp != signed_area_between(p, p2):
            res.fail(f"{p} vs {p2}")
    return res


@_timed
def suite_representation(rng: random.Random, trials: int) -> SuiteResult:
    res = SuiteResult("q-deformed representation axioms")
    for _ in range(trials):
        e1 = (rng.randint(-3, 3), rng.randint(-3, 3))
        e2 = (rng.randint(-3, 3), rng.randint(-3, 3))
        p1, p3 = random_path(rng, e1), random_path(rng, e1)
        p2, p4 = random_path(rng, e2), random_path(rng, e2)
        res.cases += 1
        if holonomy_of_path(concat(p1, p2)) != word_mul(holonomy_of_path(p1), holonomy_of_path(p2)):
            res.fail(f"multiplicativity {p1} {p2}")
        lhs = holonomy_of_path(concat(p1, p2))
        rhs = holonomy_of_path(concat(p3, p4)).times_q(signed_area_between(concat(p1, p2), concat(p3, p4)))
        if lhs != rhs:
            res.fail(f"homotopy phase {p1}{p2} vs {p3}{p4}")
    return res


@_timed
def suite_determinant(n: int) -> SuiteResult:
    res = SuiteResult("intersection indices sum to the determinant")
    vecs = _sweep_vectors(n)
    for v, w in product(vecs, vecs):
        d = total_intersection_number(v, w)
        if d == 0:
            continue
        res.cases += 1
        if sum(pt.index for pt in enumerate_points(v, w)) != d:
            res.fail(f"geometric mode {v} {w}")
        if sum(pt.index for pt in enumerate_along_p1(v, w)) != d:
            res.fail(f"lift mode {v} {w}")
    return res


@_timed
def suite_bracket_equality(n: int) -> SuiteResult:
    res = SuiteResult("intersection-sum bracket equals straight commutator")
    vecs = _sweep_vectors(n)
    for v, w in product(vecs, vecs):
        if total_intersection_number(v, w) == 0:
            continue
        res.cases += 1
        report = verify_bracket_equality(v, w)
        if not report.ok:
            res.fail(f"{v} {w}: equal={report.equal} ladder={report.ladder_ok} "
                     f"homotopy={report.homotopy_ok} series={report.series_ok}")
    return res


@_timed
def suite_classical_limit(n: int) -> SuiteResult:
    res = SuiteResult("classical limit of the commutator is the Poisson bracket")
    vecs = _sweep_vectors(n)
    for (m, k), (s, t) in product(vecs, vecs):
        res.cases += 1
        pb = poisson_bracket(m, k, s, t)
        if classical_limit(commutator_straight(m, k, s, t)) != pb:
            res.fail(f"({m},{k}),({s},{t})")
        if goldman_classical((m, k), (s, t)) != pb:
            res.fail(f"goldman_classical ({m},{k}),({s},{t})")
    return res


def loop_classes(n: int) -> list[LoopClass]:
    """Distinct loop classes with entries in ``[-n, n]``, the trivial class included."""
    return sorted({LoopClass.of(a, b) for a, b in product(range(-n, n + 1), repeat=2)})


@_timed
def suite_jacobi(n: int) -> SuiteResult:
    res = SuiteResult("Jacobi identity for the straight-loop commutator")
    classes = loop_classes(n)
    basis = {c: t_straight(c.m, c.n) for c in classes}
    pair: dict[tuple[LoopClass, LoopClass], AlgebraElement] = {}
    for a, b in product(classes, classes):
        pair[a, b] = commutator_straight(a.m, a.n, b.m, b.n)
    for a, b, c in product(classes, classes, classes):
        res.cases += 1
        total = (
            commutator(pair[a, b], basis[c])
            + commutator(pair[b, c], basis[a])
            + commutator(pair[c, a], basis[b])
        )
        if total:
            res.fail(f"{a} {b} {c}")
    return res


@_timed
def suite_modular(rng: random.Random, trials: int) -> SuiteResult:
    res = SuiteResult("modular relations and invariances")
    report = check_relations()
    for check in report.checks:
        res.cases += 1
        if not check.passed:
            res.fail(check.name)
    for _ in range(trials):
        M = random_modular(rng)
        end = (rng.randint(-3, 3), rng.randint(-3, 3))
        p, p2 = random_path(rng, end), random_path(rng, end)
        res.cases += 1
        if signed_area_between(act_on_path(M, p), act_on_path(M, p2)) != signed_area_between(p, p2):
            res.fail(f"area under {M.rows()}")
        v = (rng.randint(-4, 4), rng.randint(-4, 4))
        w = (rng.randint(-4, 4), rng.randint(-4, 4))
        mv = (M.a * v[0] + M.b * v[1], M.c * v[0] + M.d * v[1])
        mw = (M.a * w[0] + M.b * w[1], M.c * w[0] + M.d * w[1])
        if (0, 0) not in (v, w) and total_intersection_number(mv, mw) != total_intersection_number(v, w):
            res.fail(f"intersection number under {M.rows()}")
    return res


def run_suite(sweep: int = 6, seed: int = 0, trials: int = 200) -> VerifyReport:
    """Run every identity suite; ``sweep`` bounds the exhaustive integer ranges."""
    rng = random.Random(seed)
    report = VerifyReport(sweep, seed)
    report.suites.append(suite_area_laws(rng, trials))
    report.suites.append(suite_straight_relations(min(sweep, 4)))
    report.suites.append(suite_area_phase(rng, trials))
    report.suites.append(suite_representation(rng, trials))
    report.suites.append(suite_determinant(sweep))
    report.suites.append(suite_bracket_equality(sweep))
    report.suites.append(suite_jacobi(min(sweep, 3)))
    report.suites.append(suite_classical_limit(sweep))
    report.suites.append(suite_modular(rng, min(trials, 50)))
    return report


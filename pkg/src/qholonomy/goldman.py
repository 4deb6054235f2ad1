"""Reroutings at intersection points and the quantized Goldman bracket.

Rerouted paths are built as explicit PL paths and their trace phases come
from signed areas, never from closed-form phase ladders.  The ladders are
checked against the geometry in :func:`verify_bracket_equality`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import ORIGIN, PLPath, RatPoint, signed_area_between, signed_area_loop
from .intersections import (
    IntersectionPoint,
    StraightLoop,
    enumerate_along_p1,
    enumerate_points,
    intersection_index_sign,
    total_intersection_number,
)
from .loop_algebra import (
    AlgebraElement,
    QLaurent,
    commutator_straight,
    poisson_bracket,
    t_of_path,
)


@dataclass(frozen=True)
class Rerouting:
    base1: StraightLoop
    base2: StraightLoop
    at: IntersectionPoint
    sign: int
    path: PLPath

    @property
    def homotopy_class(self) -> tuple[int, int]:
        return int(self.path.end.x), int(self.path.end.y)


def _check_sign(sign) -> int:
    if sign in (1, "+", "+1"):
        return 1
    if sign in (-1, "-", "-1"):
        return -1
    raise ValueError(f"rerouting sign must be +1 or -1, got {sign!r}")


def reroute(p1, p2, at: IntersectionPoint | Fraction, sign) -> Rerouting:
    """Follow ``p1`` to ``at``, traverse ``p2`` (or its inverse) once, finish along ``p1``.

    ``at`` may be an :class:`IntersectionPoint` from lift-mode enumeration or a
    bare lift parameter.  At the basepoint the path is ``p2^sign`` then ``p1``.
    """
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    sign = _check_sign(sign)
    lam = at.lift_param if isinstance(at, IntersectionPoint) else Fraction(at)
    s, t = p2.primitive
    steps = abs(p1.m * t - p1.n * s)
    if steps == 0 or not 0 <= lam < 1 or (lam * steps).denominator != 1:
        raise ValueError(f"lift parameter {lam} is not a crossing of {p1} with {p2}")
    match = IntersectionPoint(
        p1.point_at(lam).mod1(), lam, intersection_index_sign(p1, p2) * p2.multiplicity
    )
    if isinstance(at, IntersectionPoint) and at.position != match.position:
        raise ValueError(f"{at} does not lie on the lift of {p1}")
    v, w = p1.vector, p2.vector.scale(sign)
    if lam == 0:
        verts = (ORIGIN, w, w + v)
    else:
        q_lift = v.scale(lam)
        verts = (ORIGIN, q_lift, q_lift + w, v + w)
    return Rerouting(p1, p2, match, sign, PLPath(verts))


def rerouting_trace(r: Rerouting) -> AlgebraElement:
    return t_of_path(r.path)


def rerouting_phase(r: Rerouting) -> Fraction:
    """Exponent ``S(r.path, straight)`` of the single q-monomial in its trace."""
    ((_, coeff),) = rerouting_trace(r).items()
    ((k, _),) = coeff.items()
    return k


@dataclass
class PointRow:
    lift_param: Fraction
    position: RatPoint
    exponent: int
    plus_path: PLPath
    plus_phase: Fraction
    minus_path: PLPath
    minus_phase: Fraction


def _rerouting_rows(p1: StraightLoop, p2: StraightLoop) -> list[PointRow]:
    rows = []
    for pt in enumerate_along_p1(p1, p2):
        rp, rm = reroute(p1, p2, pt, +1), reroute(p1, p2, pt, -1)
        rows.append(PointRow(
            pt.lift_param, pt.position, pt.index,
            rp.path, rerouting_phase(rp), rm.path, rerouting_phase(rm),
        ))
    return rows


def _assemble(p1: StraightLoop, p2: StraightLoop, rows: list[PointRow]) -> AlgebraElement:
    plus: dict[Fraction, int] = {}
    minus: dict[Fraction, int] = {}
    for row in rows:
        e = row.exponent
        # (q^e - 1) q^a  and  (q^-e - 1) q^b
        for acc, k, a in ((plus, e, row.plus_phase), (minus, -e, row.minus_phase)):
            acc[a + k] = acc.get(a + k, 0) + 1
            acc[a] = acc.get(a, 0) - 1
    return AlgebraElement([
        ((p1.m + p2.m, p1.n + p2.n), QLaurent(plus)),
        ((p1.m - p2.m, p1.n - p2.n), QLaurent(minus)),
    ])


def goldman_quantum(p1, p2) -> AlgebraElement:
    """Intersection-sum form of the quantum bracket.

    ``sum_Q (q^e - 1) T(p1 Q p2) + (q^-e - 1) T(p1 Q p2^-1)`` over lift-mode
    crossings ``Q`` with ``e = sign * c2``.  Parallel loops give zero.
    """
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    if total_intersection_number(p1, p2) == 0:
        return AlgebraElement()
    return _assemble(p1, p2, _rerouting_rows(p1, p2))


def goldman_classical(p1, p2) -> AlgebraElement:
    """Classical bracket: every rerouting collapsed to its homotopy class.

    The index sum is the determinant, so this is the straight-loop Poisson
    bracket with ``{r1, r2} = 1``.
    """
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    return poisson_bracket(p1.m, p1.n, p2.m, p2.n)


def strip_areas(p1, p2) -> list[Fraction]:
    """Signed areas of the strips cut from the ``p1 x p2`` parallelogram.

    The cuts are the lines parallel to ``p2`` through the lift-mode crossings
    on ``p1``; each strip has area ``sign * c2``.
    """
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    lams = [pt.lift_param for pt in enumerate_along_p1(p1, p2)] + [Fraction(1)]
    v, w = p1.vector, p2.vector
    out = []
    for lo, hi in zip(lams, lams[1:]):
        a, b = v.scale(lo), v.scale(hi)
        out.append(signed_area_loop(PLPath((a, b, b + w, a + w, a))))
    return out


@dataclass
class BracketReport:
    p1: StraightLoop
    p2: StraightLoop
    straight: AlgebraElement
    rerouted: AlgebraElement
    difference: AlgebraElement
    rows: list[PointRow] = field(default_factory=list)
    geometric_points: list[IntersectionPoint] = field(default_factory=list)
    ladder_ok: bool = True
    homotopy_ok: bool = True
    series_ok: bool = True

    @property
    def equal(self) -> bool:
        return not self.difference

    @property
    def ok(self) -> bool:
        return self.equal and self.ladder_ok and self.homotopy_ok and self.series_ok


def verify_bracket_equality(p1, p2) -> BracketReport:
    """Compare the intersection-sum bracket with the straight-loop commutator.

    Besides the difference, the report checks that consecutive positive
    reroutings differ by ``q^e`` and negative ones by ``q^-e``, that each
    rerouting lands in class ``p1 +- p2``, and that the positive phases sum
    to the geometric series ``q^(-d/2) (1 + q^e + ... )`` with ``d`` the determinant.
    """
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    straight = commutator_straight(p1.m, p1.n, p2.m, p2.n)
    d = total_intersection_number(p1, p2)
    if d == 0:
        zero = AlgebraElement()
        return BracketReport(p1, p2, straight, zero, straight - zero)
    rows = _rerouting_rows(p1, p2)
    rerouted = _assemble(p1, p2, rows)
    report = BracketReport(
        p1, p2, straight, rerouted, rerouted - straight,
        rows=rows, geometric_points=enumerate_points(p1, p2),
    )
    plus_target = (p1.m + p2.m, p1.n + p2.n)
    minus_target = (p1.m - p2.m, p1.n - p2.n)
    series = QLaurent()
    for prev, row in zip([None] + rows, rows):
        ends = (row.plus_path.end, row.minus_path.end)
        if ends != (RatPoint(*plus_target), RatPoint(*minus_target)):
            report.homotopy_ok = False
        if prev is not None:
            if row.plus_phase - prev.plus_phase != row.exponent:
                report.ladder_ok = False
            if row.minus_phase - prev.minus_phase != -row.exponent:
                report.ladder_ok = False
        series = series + QLaurent.monomial(row.plus_phase)
    e = report.rows[0].exponent
    expected = QLaurent({Fraction(-d, 2) + i * e: 1 for i in range(len(report.rows))})
    report.series_ok = series == expected
    return report


def rerouting_area_steps(p1, p2) -> list[Fraction]:
    """``S`` between each pair of consecutive positive reroutings."""
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    paths = [reroute(p1, p2, pt, +1).path for pt in enumerate_along_p1(p1, p2)]
    return [signed_area_between(b, a) for a, b in zip(paths, paths[1:])]


"""Transversal intersection points of straight loops on the torus.

Two enumeration modes are provided.  The geometric mode lists distinct torus
points, each weighted by both multiplicities.  The lift mode walks the full
lift of the first loop and records one entry per crossing with the family of
lattice lines parallel to the second loop; this is the form consumed by the
intersection-sum bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .geometry import RatPoint


@dataclass(frozen=True)
class StraightLoop:
    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 and self.n == 0:
            raise ValueError("the zero loop is not a straight loop")

    @property
    def multiplicity(self) -> int:
        return gcd(self.m, self.n)

    @property
    def primitive(self) -> tuple[int, int]:
        c = self.multiplicity
        return self.m // c, self.n // c

    @property
    def vector(self) -> RatPoint:
        return RatPoint(Fraction(self.m), Fraction(self.n))

    def point_at(self, lift_param) -> RatPoint:
        """Point of the lift ``(0,0) -> (m,n)`` at the given fraction."""
        return self.vector.scale(lift_param)

    def inverse(self) -> StraightLoop:
        return StraightLoop(-self.m, -self.n)

    @classmethod
    def coerce(cls, loop) -> StraightLoop:
        return loop if isinstance(loop, cls) else cls(*loop)


@dataclass(frozen=True)
class IntersectionPoint:
    position: RatPoint
    lift_param: Fraction
    index: int


def total_intersection_number(p1, p2) -> int:
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    return p1.m * p2.n - p1.n * p2.m


def intersection_index_sign(p1, p2) -> int:
    """Common sign of every crossing: +1 when the turn from p1 to p2 is anticlockwise."""
    det = total_intersection_number(p1, p2)
    if det == 0:
        raise ValueError(f"loops {p1} and {p2} are parallel; no transversal crossings")
    return 1 if det > 0 else -1


def _crossing_params(m: int, n: int, s: int, t: int) -> list[Fraction]:
    # lambda*(m,n) - (j,k) is parallel to the primitive (s,t) iff
    # lambda*(m*t - n*s) = j*t - k*s; as gcd(s,t) = 1 the right side hits
    # every integer, so the solutions in [0,1) are i/|m*t - n*s|.
    d = abs(m * t - n * s)
    return [Fraction(i, d) for i in range(d)]


def enumerate_points(p1, p2) -> list[IntersectionPoint]:
    """Distinct torus intersection points, sorted along ``p1``.

    ``lift_param`` refers to the first visit along the full lift of ``p1``;
    every point carries index ``sign * c1 * c2``.
    """
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    sign = intersection_index_sign(p1, p2)
    c1, c2 = p1.multiplicity, p2.multiplicity
    (m, n), (s, t) = p1.primitive, p2.primitive
    out = []
    for lam in _crossing_params(m, n, s, t):
        pos = RatPoint(lam * m, lam * n).mod1()
        out.append(IntersectionPoint(pos, lam / c1, sign * c1 * c2))
    return out


def enumerate_along_p1(p1, p2) -> list[IntersectionPoint]:
    """One entry per crossing of the full lift of ``p1`` with lines parallel to ``p2``.

    There are ``c1`` times as many entries as geometric points; each carries
    index ``sign * c2``, the exponent of the quantum multiple intersection
    number ``q^(sign*c2) - 1``.  Entries are not deduplicated by position.
    """
    p1, p2 = StraightLoop.coerce(p1), StraightLoop.coerce(p2)
    sign = intersection_index_sign(p1, p2)
    s, t = p2.primitive
    out = []
    for lam in _crossing_params(p1.m, p1.n, s, t):
        out.append(IntersectionPoint(p1.point_at(lam).mod1(), lam, sign * p2.multiplicity))
    return out

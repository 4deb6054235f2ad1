"""Exact planar geometry of piecewise-linear lattice paths.

Every coordinate is a :class:`fractions.Fraction`; nothing in this module
touches floating point.  A loop on the torus ``R^2 / Z^2`` is represented by
a PL path in the plane starting at the origin; its homotopy class is the
integer endpoint ``(m, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, lcm
from typing import Iterable, Sequence

Number = int | Fraction


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to ``Fraction``.

    Floats are refused so that inexact values cannot leak in silently.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean coordinate {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


@dataclass(frozen=True, order=True)
class RatPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if type(self.x) is not Fraction:
            object.__setattr__(self, "x", as_fraction(self.x))
        if type(self.y) is not Fraction:
            object.__setattr__(self, "y", as_fraction(self.y))

    def __add__(self, other: RatPoint) -> RatPoint:
        return RatPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: RatPoint) -> RatPoint:
        return RatPoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> RatPoint:
        return RatPoint(-self.x, -self.y)

    def scale(self, k: Number) -> RatPoint:
        return RatPoint(self.x * k, self.y * k)

    def cross(self, other: RatPoint) -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: RatPoint) -> Fraction:
        return self.x * other.x + self.y * other.y

    @property
    def is_integer(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def mod1(self) -> RatPoint:
        """Reduce to the half-open unit square ``[0,1)^2``."""
        return RatPoint(self.x - floor(self.x), self.y - floor(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"RatPoint({self.x}, {self.y})"


ORIGIN = RatPoint(0, 0)


def point(x, y) -> RatPoint:
    return RatPoint(as_fraction(x), as_fraction(y))


@dataclass(frozen=True)
class PLPath:
    """A piecewise-linear path given by its vertex list.

    Consecutive vertices must differ; collinear joints are allowed and kept.
    """

    vertices: tuple[RatPoint, ...]

    def __post_init__(self):
        verts = tuple(v if isinstance(v, RatPoint) else point(*v) for v in self.vertices)
        if len(verts) < 2:
            raise ValueError("a PL path needs at least two vertices")
        for a, b in zip(verts, verts[1:]):
            if a == b:
                raise ValueError(f"zero-length segment at {a!r}")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, pts: Iterable) -> PLPath:
        return cls(tuple(pts))

    @classmethod
    def from_steps(cls, steps: Iterable, start=(0, 0)) -> PLPath:
        """Build a path from successive displacement vectors."""
        cur = start if isinstance(start, RatPoint) else point(*start)
        verts = [cur]
        for step in steps:
            d = step if isinstance(step, RatPoint) else point(*step)
            cur = cur + d
            verts.append(cur)
        return cls(tuple(verts))

    @classmethod
    def straight(cls, m, n) -> PLPath:
        return cls((ORIGIN, point(m, n)))

    @property
    def start(self) -> RatPoint:
        return self.vertices[0]

    @property
    def end(self) -> RatPoint:
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def segments(self) -> list[tuple[RatPoint, RatPoint]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def steps(self) -> list[RatPoint]:
        """Displacement vector of every segment, in order."""
        return [b - a for a, b in zip(self.vertices, self.vertices[1:])]

    def translate(self, v: RatPoint) -> PLPath:
        return PLPath(tuple(p + v for p in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices) - 1


def endpoint(p: PLPath) -> RatPoint:
    """Last vertex; for an integer endpoint this is the winding pair ``(m, n)``."""
    return p.end


def concat(p: PLPath, p2: PLPath) -> PLPath:
    """``p`` followed by ``p2`` translated to start where ``p`` ends.

    The shared vertex appears once; collinear joints are not merged.
    """
    shift = p.end - p2.start
    return PLPath(p.vertices + tuple(v + shift for v in p2.vertices[1:]))


def inverse(p: PLPath) -> PLPath:
    """Reverse ``p`` and translate it to start at the origin."""
    shift = -p.end
    return PLPath(tuple(v + shift for v in reversed(p.vertices)))


def canonicalize(p: PLPath) -> PLPath:
    """Merge consecutive segments pointing in the same direction.

    Backtracking joints are left alone since merging them would change the path.
    """
    verts = [p.vertices[0]]
    for v in p.vertices[1:]:
        if len(verts) >= 2:
            a, b = verts[-2], verts[-1]
            d1, d2 = b - a, v - b
            if d1.cross(d2) == 0 and d1.dot(d2) > 0:
                verts[-1] = v
                continue
        verts.append(v)
    return PLPath(tuple(verts))


def _shoelace2(verts: Sequence[RatPoint]) -> Fraction:
    # Twice the signed area of the closed polygon through ``verts``.  Works on
    # integers scaled by a common denominator; the Fraction-per-term version
    # dominates the bracket sweeps otherwise.
    den = 1
    for v in verts:
        den = lcm(den, v.x.denominator, v.y.denominator)
    xs = [v.x.numerator * (den // v.x.denominator) for v in verts]
    ys = [v.y.numerator * (den // v.y.denominator) for v in verts]
    k = len(verts)
    total = 0
    for i in range(k):
        j = (i + 1) % k
        total += xs[i] * ys[j] - xs[j] * ys[i]
    return Fraction(total, den * den)


def signed_area_loop(loop: PLPath) -> Fraction:
    """Winding-number-weighted area enclosed by a closed PL loop.

    This is the generalized shoelace sum, so self-intersecting and
    backtracking loops are fine: each face counts with its winding number.
    """
    if not loop.is_closed:
        raise ValueError(f"loop is not closed: starts at {loop.start!r}, ends at {loop.end!r}")
    return _shoelace2(loop.vertices[:-1]) / 2


def signed_area_between(p: PLPath, p2: PLPath) -> Fraction:
    """Signed area ``S(p, p2)`` enclosed by ``p`` followed by ``p2`` reversed.

    Positive when that closed loop runs anticlockwise.  Both paths must share
    their start and end points.
    """
    if p.start != p2.start:
        raise ValueError(f"paths start at different points: {p.start!r} vs {p2.start!r}")
    if p.end != p2.end:
        raise ValueError(f"endpoint mismatch: {p.end!r} vs {p2.end!r}")
    # closed loop p * reverse(p2), listed without the repeated closing vertex
    verts = p.vertices + tuple(reversed(p2.vertices[1:-1]))
    return _shoelace2(verts) / 2


def winding_number(loop: Sequence[RatPoint], pt: RatPoint) -> int:
    """Winding number of a closed vertex cycle around ``pt`` (not on the loop)."""
    w = 0
    k = len(loop)
    for i in range(k):
        a, b = loop[i], loop[(i + 1) % k]
        side = (b - a).cross(pt - a)
        if a.y <= pt.y:
            if b.y > pt.y and side > 0:
                w += 1
        elif b.y <= pt.y and side < 0:
            w -= 1
    return w


def on_segment(pt: RatPoint, a: RatPoint, b: RatPoint) -> bool:
    if (b - a).cross(pt - a) != 0:
        return False
    return min(a.x, b.x) <= pt.x <= max(a.x, b.x) and min(a.y, b.y) <= pt.y <= max(a.y, b.y)


def segments_intersect(a: RatPoint, b: RatPoint, c: RatPoint, d: RatPoint) -> bool:
    """Closed-segment intersection test, collinear overlaps included."""
    d1 = (b - a).cross(c - a)
    d2 = (b - a).cross(d - a)
    d3 = (d - c).cross(a - c)
    d4 = (d - c).cross(b - c)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    return (
        on_segment(c, a, b) or on_segment(d, a, b) or on_segment(a, c, d) or on_segment(b, c, d)
    )


@dataclass(frozen=True)
class LatticePolygon:
    """Simple closed polygon with integer vertices (closing vertex not repeated)."""

    vertices: tuple[RatPoint, ...]

    def __post_init__(self):
        verts = tuple(v if isinstance(v, RatPoint) else point(*v) for v in self.vertices)
        if len(verts) >= 2 and verts[0] == verts[-1]:
            verts = verts[:-1]
        if len(verts) < 3:
            raise ValueError("a polygon needs at least three vertices")
        if not all(v.is_integer for v in verts):
            raise ValueError("lattice polygon vertices must be integer points")
        if not is_simple(verts):
            raise ValueError("polygon boundary is self-intersecting")
        object.__setattr__(self, "vertices", verts)

    def edges(self) -> list[tuple[RatPoint, RatPoint]]:
        k = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]


def is_simple(verts: Sequence[RatPoint]) -> bool:
    """True if the closed cycle through ``verts`` has a non-self-intersecting boundary."""
    k = len(verts)
    if len(set(verts)) != k:
        return False
    edges = [(verts[i], verts[(i + 1) % k]) for i in range(k)]
    for i in range(k):
        a, b = edges[i]
        for j in range(i + 1, k):
            c, d = edges[j]
            if j == i + 1 or (i == 0 and j == k - 1):
                # adjacent edges share exactly one vertex; any overlap is a spike
                shared = b if j == i + 1 else a
                other_i = a if shared == b else b
                other_j = d if shared == c else c
                if on_segment(other_j, a, b) or on_segment(other_i, c, d):
                    return False
            elif segments_intersect(a, b, c, d):
                return False
    return True


def lattice_point_counts(poly: LatticePolygon) -> tuple[int, int]:
    """``(interior, boundary)`` lattice point counts, by direct enumeration."""
    xs = [int(v.x) for v in poly.vertices]
    ys = [int(v.y) for v in poly.vertices]
    edges = poly.edges()
    interior = boundary = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            pt = RatPoint(Fraction(x), Fraction(y))
            if any(on_segment(pt, a, b) for a, b in edges):
                boundary += 1
            elif winding_number(poly.vertices, pt) != 0:
                interior += 1
    return interior, boundary


def pick_area(poly: LatticePolygon) -> Fraction:
    """Area from lattice point counts: ``I + B/2 - 1``."""
    interior, boundary = lattice_point_counts(poly)
    return interior + Fraction(boundary, 2) - 1


def fundamental_reduction(m: int, n: int) -> list[tuple[RatPoint, RatPoint]]:
    """Pieces of the straight path ``(0,0) -> (m,n)`` reduced into ``[0,1]^2``.

    The path is cut wherever it crosses a grid line and each piece is shifted
    into the unit square.  A reducible path ``c * (m', n')`` yields the
    pieces of ``(m', n')`` repeated ``c`` times, one copy per traversal.
    """
    if m == 0 and n == 0:
        raise ValueError("the zero path has no fundamental reduction")
    cuts = {Fraction(0), Fraction(1)}
    for k in (abs(m), abs(n)):
        cuts.update(Fraction(i, k) for i in range(1, k))
    cuts = sorted(cuts)
    direction = RatPoint(Fraction(m), Fraction(n))
    out = []
    for lo, hi in zip(cuts, cuts[1:]):
        a, b = direction.scale(lo), direction.scale(hi)
        mid = direction.scale((lo + hi) / 2)
        shift = RatPoint(Fraction(floor(mid.x)), Fraction(floor(mid.y)))
        out.append((a - shift, b - shift))
    return out


def multiplicity(m: int, n: int) -> int:
    return gcd(m, n)

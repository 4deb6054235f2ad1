"""Trace algebra of straight torus loops with q-power coefficients.

Elements are finite sums ``sum_c f_c(q) T(c)`` where ``c`` runs over loop
classes ``(m, n) ~ (-m, -n)`` and every ``f_c`` is a Laurent polynomial in
``q`` with rational exponents and rational coefficients.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping

from .geometry import PLPath, as_fraction, signed_area_between, signed_area_loop
from .holonomy import QAngle


class QLaurent:
    """Sparse Laurent polynomial in ``q``: ``{exponent: coefficient}``.

    Zero coefficients are never stored, so ``QLaurent()`` is the zero
    polynomial and equality is plain dict equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean: dict[Fraction, Fraction] = {}
        for k, c in (terms or {}).items():
            k, c = as_fraction(k), as_fraction(c)
            if c:
                clean[k] = clean.get(k, Fraction(0)) + c
                if not clean[k]:
                    del clean[k]
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exponent, coeff=1) -> QLaurent:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c) -> QLaurent:
        return cls({0: c})

    @classmethod
    def _raw(cls, terms: dict) -> QLaurent:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[Fraction, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Fraction, Fraction]]:
        """Terms sorted by ascending exponent."""
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QLaurent.constant(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> QLaurent:
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return QLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self) -> QLaurent:
        return QLaurent._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> QLaurent:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> QLaurent:
        return _coerce(other) - self

    def __mul__(self, other) -> QLaurent:
        if isinstance(other, (int, Fraction)):
            if not other:
                return QLaurent()
            return QLaurent._raw({k: c * other for k, c in self._terms.items()})
        other = _coerce(other)
        out: dict[Fraction, Fraction] = {}
        for (k1, c1), (k2, c2) in product(self._terms.items(), other._terms.items()):
            k = k1 + k2
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return QLaurent._raw(out)

    __rmul__ = __mul__

    def shift(self, k) -> QLaurent:
        """Multiply by ``q^k``."""
        k = as_fraction(k)
        return QLaurent._raw({e + k: c for e, c in self._terms.items()})

    def evaluate(self, q: QAngle) -> complex:
        return sum((float(c) * q.power(k) for k, c in self._terms.items()), 0j)

    def at_one(self) -> Fraction:
        """Value at ``q = 1``."""
        return sum(self._terms.values(), Fraction(0))

    def derivative_at_one(self) -> Fraction:
        """``d/dq`` at ``q = 1``, i.e. the sum of exponent times coefficient."""
        return sum((k * c for k, c in self._terms.items()), Fraction(0))

    def __repr__(self) -> str:
        if not self._terms:
            return "QLaurent(0)"
        return "QLaurent(" + " + ".join(f"{c}*q^({k})" for k, c in self.items()) + ")"


def _coerce(x) -> QLaurent:
    if isinstance(x, QLaurent):
        return x
    if isinstance(x, (int, Fraction)):
        return QLaurent.constant(x)
    raise TypeError(f"cannot use {x!r} as a q-Laurent coefficient")


def q_sym(d) -> QLaurent:
    """``q^(d/2) - q^(-d/2)``, the prefactor of the straight-loop commutator."""
    half = as_fraction(d) / 2
    return QLaurent({half: 1}) - QLaurent({-half: 1})


@dataclass(frozen=True, order=True)
class LoopClass:
    """Loop class ``(m, n)`` modulo orientation, stored in canonical form.

    The canonical representative has ``n > 0``, or ``n == 0`` and ``m >= 0``.
    ``LoopClass(0, 0)`` is the trivial loop, whose trace is the scalar 2.
    """

    m: int
    n: int

    @classmethod
    def of(cls, m: int, n: int) -> LoopClass:
        m, n = int(m), int(n)
        if n < 0 or (n == 0 and m < 0):
            m, n = -m, -n
        return cls(m, n)

    @property
    def is_trivial(self) -> bool:
        return self.m == 0 and self.n == 0

    def __str__(self) -> str:
        return f"T({self.m},{self.n})"


class AlgebraElement:
    """Finite combination of loop-class symbols with ``QLaurent`` coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        clean: dict[LoopClass, QLaurent] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for cls_, coeff in items:
            if not isinstance(cls_, LoopClass):
                cls_ = LoopClass.of(*cls_)
            elif cls_ != LoopClass.of(cls_.m, cls_.n):
                cls_ = LoopClass.of(cls_.m, cls_.n)
            coeff = _coerce(coeff)
            total = clean.get(cls_, QLaurent()) + coeff
            if total:
                clean[cls_] = total
            else:
                clean.pop(cls_, None)
        self._terms = clean

    @classmethod
    def zero(cls) -> AlgebraElement:
        return cls()

    @property
    def terms(self) -> dict[LoopClass, QLaurent]:
        return dict(self._terms)

    def items(self) -> list[tuple[LoopClass, QLaurent]]:
        """Terms sorted lexicographically by class."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].m, kv[0].n))

    def coefficient(self, m: int, n: int) -> QLaurent:
        return self._terms.get(LoopClass.of(m, n), QLaurent())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, QLaurent()) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _element(out)

    def __neg__(self) -> AlgebraElement:
        return _element({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, scalar) -> AlgebraElement:
        """Scale by a q-Laurent coefficient (not an algebra product)."""
        scalar = _coerce(scalar)
        out = {}
        for k, c in self._terms.items():
            v = c * scalar
            if v:
                out[k] = v
        return _element(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "AlgebraElement(0)"
        return "AlgebraElement(" + ", ".join(f"{k}: {c!r}" for k, c in self.items()) + ")"


def _element(terms: dict) -> AlgebraElement:
    obj = AlgebraElement.__new__(AlgebraElement)
    obj._terms = terms
    return obj


def t_straight(m: int, n: int) -> AlgebraElement:
    return _element({LoopClass.of(m, n): QLaurent.constant(1)})


def t_of_path(p: PLPath) -> AlgebraElement:
    """Trace of an arbitrary PL loop: ``q^S(p, straight) T(m, n)``."""
    end = p.end
    if not end.is_integer:
        raise ValueError(f"path must end at an integer point, got {end!r}")
    m, n = int(end.x), int(end.y)
    if m == 0 and n == 0:
        # null-homotopic: the straight representative is the constant path
        area = signed_area_loop(p)
    else:
        area = signed_area_between(p, PLPath.straight(m, n))
    return _element({LoopClass.of(m, n): QLaurent.monomial(area)})


def poisson_bracket(m: int, n: int, s: int, t: int) -> AlgebraElement:
    """``{T(m,n), T(s,t)} = (mt - ns)(T(m+s, n+t) - T(m-s, n-t))`` with ``{r1, r2} = 1``."""
    d = m * t - n * s
    if d == 0:
        return AlgebraElement()
    return AlgebraElement([((m + s, n + t), d), ((m - s, n - t), -d)])


def commutator_straight(m: int, n: int, s: int, t: int) -> AlgebraElement:
    """``[T(m,n), T(s,t)] = (q^(d/2) - q^(-d/2))(T(m+s, n+t) - T(m-s, n-t))``, ``d = mt - ns``."""
    d = m * t - n * s
    if d == 0:
        return AlgebraElement()
    c = q_sym(d)
    return AlgebraElement([((m + s, n + t), c), ((m - s, n - t), -c)])


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of :func:`commutator_straight`."""
    out = AlgebraElement()
    for ca, fa in a._terms.items():
        for cb, fb in b._terms.items():
            br = commutator_straight(ca.m, ca.n, cb.m, cb.n)
            if br:
                out = out + br * (fa * fb)
    return out


def classical_limit(e: AlgebraElement) -> AlgebraElement:
    """First-order term at ``q = 1``: each coefficient becomes ``sum k c_k``.

    For ``q = exp(i hbar x)`` this is the ``hbar -> 0`` limit of ``[ , ] / (i hbar x)``.
    """
    return AlgebraElement({k: c.derivative_at_one() for k, c in e._terms.items()})


def numeric_trace(e: AlgebraElement, r1: float, r2: float, q: QAngle) -> complex:
    total = 0j
    for cls_, coeff in e._terms.items():
        x = cls_.m * r1 + cls_.n * r2
        total += coeff.evaluate(q) * (cmath.exp(x) + cmath.exp(-x))
    return total

"""Normal-form quantum holonomies of a constant diagonal connection.

A word ``(k, alpha, beta)`` stands for ``q^k exp((alpha r1 + beta r2) sigma3)``
where ``[r1, r2]`` is central with ``exp([r1, r2]) = q``.  Products are
brought back to normal form with ``e^X e^Y = e^(X+Y) e^([X,Y]/2)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .geometry import PLPath, as_fraction


@dataclass(frozen=True)
class HolonomyWord:
    phase_exp: Fraction
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        for name in ("phase_exp", "alpha", "beta"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    def __mul__(self, other: HolonomyWord) -> HolonomyWord:
        return word_mul(self, other)

    def inverse(self) -> HolonomyWord:
        return HolonomyWord(-self.phase_exp, -self.alpha, -self.beta)

    def times_q(self, k) -> HolonomyWord:
        """Multiply by the central scalar ``q^k``."""
        return HolonomyWord(self.phase_exp + as_fraction(k), self.alpha, self.beta)

    def __repr__(self) -> str:
        return f"HolonomyWord(phase_exp={self.phase_exp}, alpha={self.alpha}, beta={self.beta})"


IDENTITY = HolonomyWord(0, 0, 0)
U1 = HolonomyWord(0, 1, 0)
U2 = HolonomyWord(0, 0, 1)


def segment_word(a, b) -> HolonomyWord:
    """Holonomy of a single straight segment with displacement ``(a, b)``."""
    return HolonomyWord(0, a, b)


def word_mul(w1: HolonomyWord, w2: HolonomyWord) -> HolonomyWord:
    twist = (w1.alpha * w2.beta - w1.beta * w2.alpha) / 2
    return HolonomyWord(w1.phase_exp + w2.phase_exp + twist, w1.alpha + w2.alpha, w1.beta + w2.beta)


def straight_word(m, n) -> HolonomyWord:
    return segment_word(m, n)


def holonomy_of_path(p: PLPath) -> HolonomyWord:
    """Ordered product of the segment holonomies along ``p``."""
    return reduce(word_mul, (segment_word(d.x, d.y) for d in p.steps()), IDENTITY)


@dataclass(frozen=True)
class QAngle:
    """Deformation parameter ``q = exp(i theta)``."""

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise ValueError(f"theta must be finite, got {self.theta!r}")

    @classmethod
    def from_physical(cls, hbar: float, cosmological_constant: float) -> QAngle:
        """``theta = -hbar sqrt(-Lambda) / 4``; requires ``Lambda < 0``."""
        if cosmological_constant >= 0:
            raise ValueError("the cosmological constant must be negative")
        return cls(-hbar * math.sqrt(-cosmological_constant) / 4)

    @property
    def q(self) -> complex:
        return cmath.exp(1j * self.theta)

    def power(self, k) -> complex:
        """``q^k`` for rational ``k``, taking the branch ``exp(i theta k)``."""
        return cmath.exp(1j * self.theta * float(as_fraction(k)))


def evaluate_numeric(w: HolonomyWord, r1: float, r2: float, q: QAngle) -> np.ndarray:
    """Numeric 2x2 matrix ``q^k diag(e^x, e^-x)`` with ``x = alpha r1 + beta r2``.

    At ``theta = 0`` this is the classical holonomy of the connection.
    """
    x = float(w.alpha) * r1 + float(w.beta) * r2
    return q.power(w.phase_exp) * np.diag([math.exp(x), math.exp(-x)]).astype(complex)

"""JSON, LaTeX and plain-text renderings of the library's values.

Rationals are always ``[numerator, denominator]`` pairs so that JSON
round-trips are exact.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import PLPath, RatPoint, as_fraction
from .holonomy import HolonomyWord
from .intersections import IntersectionPoint
from .loop_algebra import AlgebraElement, LoopClass, QLaurent


def rat_to_json(x) -> list[int]:
    x = as_fraction(x)
    return [x.numerator, x.denominator]


def rat_from_json(pair) -> Fraction:
    num, den = pair
    if not isinstance(num, int) or not isinstance(den, int) or isinstance(num, bool) or isinstance(den, bool):
        raise ValueError(f"rational must be a pair of integers, got {pair!r}")
    return Fraction(num, den)


def point_to_json(pt: RatPoint) -> list[list[int]]:
    return [rat_to_json(pt.x), rat_to_json(pt.y)]


def point_from_json(data) -> RatPoint:
    x, y = data
    return RatPoint(rat_from_json(x), rat_from_json(y))


def path_to_json(p: PLPath) -> list:
    return [point_to_json(v) for v in p.vertices]


def path_from_json(data) -> PLPath:
    return PLPath(tuple(point_from_json(v) for v in data))


def word_to_json(w: HolonomyWord) -> dict:
    return {"phase": rat_to_json(w.phase_exp), "alpha": rat_to_json(w.alpha), "beta": rat_to_json(w.beta)}


def word_from_json(data) -> HolonomyWord:
    return HolonomyWord(
        rat_from_json(data["phase"]), rat_from_json(data["alpha"]), rat_from_json(data["beta"])
    )


def laurent_to_json(c: QLaurent) -> list[dict]:
    return [{"qexp": rat_to_json(k), "c": rat_to_json(v)} for k, v in c.items()]


def laurent_from_json(data) -> QLaurent:
    out = QLaurent()
    for term in data:
        out = out + QLaurent.monomial(rat_from_json(term["qexp"]), rat_from_json(term["c"]))
    return out


def element_to_json(e: AlgebraElement) -> list[dict]:
    return [{"class": [k.m, k.n], "coeff": laurent_to_json(c)} for k, c in e.items()]


def element_from_json(data) -> AlgebraElement:
    return AlgebraElement([(tuple(entry["class"]), laurent_from_json(entry["coeff"])) for entry in data])


def intersections_to_json(points: list[IntersectionPoint], total: int) -> dict:
    return {
        "points": [
            {"pos": point_to_json(pt.position), "lift": rat_to_json(pt.lift_param), "index": pt.index}
            for pt in points
        ],
        "total": total,
    }


def intersections_from_json(data) -> tuple[list[IntersectionPoint], int]:
    points = [
        IntersectionPoint(point_from_json(d["pos"]), rat_from_json(d["lift"]), int(d["index"]))
        for d in data["points"]
    ]
    return points, int(data["total"])


# -- LaTeX / text -----------------------------------------------------------


def _rat_tex(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _coeff_tex(c: Fraction, latex: bool) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return f"({c.numerator}/{c.denominator})"


def _monomial(k: Fraction, c: Fraction, latex: bool) -> str:
    if k == 0:
        return _coeff_tex(c, latex)
    if latex:
        power = "q" if k == 1 else f"q^{{{_rat_tex(k)}}}"
    else:
        power = "q" if k == 1 else f"q^({_rat_tex(k)})"
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return _coeff_tex(c, latex) + ("" if latex else "*") + power


def _join(parts: list[str], latex: bool) -> str:
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += part if latex else " - " + part[1:]
        else:
            out += "+" + part if latex else " + " + part
    return out


def laurent_str(c: QLaurent, latex: bool = True) -> str:
    if not c:
        return "0"
    return _join([_monomial(k, v, latex) for k, v in c.items()], latex)


def _class_str(k: LoopClass) -> str:
    return f"T({k.m},{k.n})"


def _scaled(c: QLaurent, sym: str, latex: bool) -> str:
    """Render ``c * sym`` with parentheses only where needed."""
    items = c.items()
    if len(items) == 1:
        (k, v), = items
        if k == 0 and v == 1:
            return sym
        if k == 0 and v == -1:
            return "-" + sym
        mono = _monomial(k, v, latex)
        return mono + ("" if latex else "*") + sym
    return f"({laurent_str(c, latex)})" + ("" if latex else "*") + sym


def _common_factor(e: AlgebraElement) -> QLaurent | None:
    items = e.items()
    if len(items) < 2:
        return None
    base = items[0][1]
    if any(c != base and c != -base for _, c in items):
        return None
    # normalize so the lowest-exponent coefficient is positive
    if base.items()[0][1] < 0:
        base = -base
    return base


def element_str(e: AlgebraElement, latex: bool = True) -> str:
    """Deterministic rendering, factored as ``c(T(..)-T(..))`` when possible.

    Inside a factored sum the positive terms come first; within each sign
    group, and in unfactored output, classes are in lexicographic order.
    """
    if not e:
        return "0"
    factor = _common_factor(e)
    if factor is not None:
        pos = [_class_str(k) for k, c in e.items() if c == factor]
        neg = ["-" + _class_str(k) for k, c in e.items() if c != factor]
        inner = _join(pos + neg, latex)
        if factor == 1:
            return inner
        return _scaled(factor, f"({inner})", latex)
    return _join([_scaled(c, _class_str(k), latex) for k, c in e.items()], latex)


def word_str(w: HolonomyWord, latex: bool = True) -> str:
    exp = []
    for coeff, sym in ((w.alpha, "r_1" if latex else "r1"), (w.beta, "r_2" if latex else "r2")):
        if coeff:
            exp.append(sym if coeff == 1 else ("-" + sym if coeff == -1 else _coeff_tex(coeff, latex) + ("" if latex else "*") + sym))
    body = _join(exp, latex) if exp else "0"
    if latex:
        hol = f"e^{{({body})\\sigma_3}}"
    else:
        hol = f"exp(({body}) sigma3)"
    if w.phase_exp == 0:
        return hol
    return _monomial(w.phase_exp, Fraction(1), latex) + ("" if latex else " ") + hol


def path_str(p: PLPath) -> str:
    return " ".join(f"{_rat_tex(v.x)},{_rat_tex(v.y)}" for v in p.vertices)

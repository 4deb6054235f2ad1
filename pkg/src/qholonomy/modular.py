"""SL(2,Z) acting on PL paths, and through them on holonomy words."""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import PLPath, RatPoint, signed_area_between
from .holonomy import IDENTITY, U1, U2, HolonomyWord, holonomy_of_path, segment_word, word_mul


@dataclass(frozen=True)
class ModularMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")

    @classmethod
    def from_rows(cls, rows) -> ModularMatrix:
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, other: ModularMatrix) -> ModularMatrix:
        return ModularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, k: int) -> ModularMatrix:
        base = self if k >= 0 else self.inverse()
        out = IDENTITY_MATRIX
        for _ in range(abs(k)):
            out = out @ base
        return out

    def inverse(self) -> ModularMatrix:
        return ModularMatrix(self.d, -self.b, -self.c, self.a)

    def apply(self, pt: RatPoint) -> RatPoint:
        return RatPoint(self.a * pt.x + self.b * pt.y, self.c * pt.x + self.d * pt.y)


IDENTITY_MATRIX = ModularMatrix(1, 0, 0, 1)
S = ModularMatrix(0, -1, 1, 0)
T = ModularMatrix(1, 0, 1, 1)


def act_on_path(M: ModularMatrix, p: PLPath) -> PLPath:
    return PLPath(tuple(M.apply(v) for v in p.vertices))


def act_on_holonomy(M: ModularMatrix, p: PLPath) -> HolonomyWord:
    """``M . U_p = U_(M.p)``; the action on words is defined through paths only."""
    return holonomy_of_path(act_on_path(M, p))


def dual_act(M: ModularMatrix, p: PLPath) -> PLPath:
    """Argument transform of the dual action ``(M.phi)(p) = phi(M^-1 . p)``."""
    return act_on_path(M.inverse(), p)


# Phase-free images of the generators: U1 -> U1 U2, U2 -> U2 under T and
# U1 -> U2, U2 -> U1^-1 under S.
CLASSICAL_IMAGES = {
    "T": (word_mul(U1, U2), U2),
    "S": (U2, U1.inverse()),
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ModularReport:
    checks: list[Check] = field(default_factory=list)
    images: dict[str, dict[str, HolonomyWord]] = field(default_factory=dict)
    classical_images: dict[str, dict[str, HolonomyWord]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))


def _preserves_fundamental(img1: HolonomyWord, img2: HolonomyWord) -> bool:
    # U1 U2 = q U2 U1 must survive the substitution
    return word_mul(img1, img2) == word_mul(img2, img1).times_q(1)


DEFAULT_BATTERY = (
    PLPath.straight(1, 0),
    PLPath.straight(0, 1),
    PLPath.straight(2, 1),
    PLPath.from_steps([(1, 0), (0, 1)]),
    PLPath.from_steps([(1, 2), (2, 1)]),
    PLPath.from_steps([(1, 0), (1, 1), (-1, 2), (1, -1)]),
    PLPath.from_points([(0, 0), ("1/2", "3/2"), (2, "1/3"), (1, 1)]),
)


def check_relations(battery=DEFAULT_BATTERY) -> ModularReport:
    """Generator relations, generator images and functoriality on a path battery."""
    report = ModularReport()
    ident = IDENTITY_MATRIX
    report.add("S^2 = -I", (S @ S).rows() == [[-1, 0], [0, -1]])
    report.add("S^4 = I", S**4 == ident)
    report.add("(ST)^3 = I", (S @ T) ** 3 == ident)

    u1, u2 = PLPath.straight(1, 0), PLPath.straight(0, 1)
    for name, M in (("T", T), ("S", S)):
        img1, img2 = act_on_holonomy(M, u1), act_on_holonomy(M, u2)
        report.images[name] = {"U1": img1, "U2": img2}
        report.add(f"{name} preserves U1 U2 = q U2 U1", _preserves_fundamental(img1, img2))
        c1, c2 = CLASSICAL_IMAGES[name]
        report.classical_images[name] = {"U1": c1, "U2": c2}
        report.add(f"classical {name} preserves U1 U2 = q U2 U1", _preserves_fundamental(c1, c2))

    report.add("T.U1 = q^(-1/2) U1 U2", report.images["T"]["U1"] == word_mul(U1, U2).times_q("-1/2"))
    report.add("T.U2 = U2", report.images["T"]["U2"] == U2)
    report.add("S.U1 = U2", report.images["S"]["U1"] == U2)
    report.add("S.U2 = U1^-1", report.images["S"]["U2"] == U1.inverse())
    t_u1_inv = act_on_holonomy(T, PLPath.straight(-1, 0))
    report.add(
        "T.U1^-1 = q^(1/2) U2^-1 U1^-1",
        t_u1_inv == word_mul(U2.inverse(), U1.inverse()).times_q("1/2"),
    )

    functorial = relation_paths = area_ok = True
    words = [ident, S, T, S @ T, T @ S, S @ S, T**2, T.inverse()]
    for p in battery:
        for M1 in words:
            for M2 in words:
                lhs = act_on_holonomy(M1 @ M2, p)
                if lhs != act_on_holonomy(M1, act_on_path(M2, p)):
                    functorial = False
                # (M1.(M2.phi))(p) = phi(M2^-1 M1^-1 p)
                if dual_act(M2, dual_act(M1, p)) != dual_act(M1 @ M2, p):
                    functorial = False
        if act_on_path(S**4, p) != p or act_on_path((S @ T) ** 3, p) != p:
            relation_paths = False
        # S^2 acts as p -> -p: the segment inverses taken in the original order
        neg = act_on_path(S @ S, p)
        pointwise_inv = IDENTITY
        for d in p.steps():
            pointwise_inv = word_mul(pointwise_inv, segment_word(-d.x, -d.y))
        if holonomy_of_path(neg) != pointwise_inv:
            relation_paths = False
        if len(p) == 1 and holonomy_of_path(neg) != holonomy_of_path(p).inverse():
            relation_paths = False
        straight = PLPath((p.start, p.end))
        for M in words:
            if signed_area_between(act_on_path(M, p), act_on_path(M, straight)) != signed_area_between(p, straight):
                area_ok = False
    report.add("functoriality of the path and dual actions", functorial)
    report.add("S^4 and (ST)^3 fix every battery path", relation_paths)
    report.add("signed area invariant under the battery", area_ok)
    return report

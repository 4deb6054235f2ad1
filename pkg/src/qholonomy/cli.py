"""Command-line front end.

Paths are space-separated ``x,y`` vertex lists (``1/2`` for fractions);
straight loops are ``m,n``.  Write negative leading values as ``--p1=-1,2``.
Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import lru_cache
from fractions import Fraction

from . import serialize as ser
from .geometry import PLPath, fundamental_reduction, point, signed_area_between, signed_area_loop
from .goldman import goldman_classical, goldman_quantum, reroute, rerouting_trace, verify_bracket_equality
from .holonomy import holonomy_of_path
from .intersections import StraightLoop, enumerate_along_p1, enumerate_points, total_intersection_number
from .loop_algebra import commutator_straight
from .modular import S, T, ModularMatrix, act_on_holonomy, act_on_path, check_relations
from .verify import run_suite


class InputError(ValueError):
    pass


def parse_path(text: str) -> PLPath:
    try:
        verts = []
        for tok in text.split():
            x, y = tok.split(",")
            verts.append(point(x.strip(), y.strip()))
        return PLPath(tuple(verts))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad path {text!r}: {exc}") from None


def parse_loop(text: str) -> StraightLoop:
    try:
        m, n = (int(v) for v in text.split(","))
        return StraightLoop(m, n)
    except ValueError as exc:
        raise InputError(f"bad loop {text!r}: {exc}") from None


def parse_matrix(text: str) -> ModularMatrix:
    named = {"S": S, "T": T, "I": ModularMatrix(1, 0, 0, 1)}
    try:
        if text in named:
            return named[text]
        a, b, c, d = (int(v) for v in text.split(","))
        return ModularMatrix(a, b, c, d)
    except ValueError as exc:
        raise InputError(f"bad matrix {text!r}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _rat(x: Fraction) -> str:
    return str(x)


def cmd_area(args) -> tuple[int, str]:
    p = parse_path(args.p)
    if args.q is None:
        try:
            area = signed_area_loop(p)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        try:
            area = signed_area_between(p, parse_path(args.q))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if args.format == "json":
        return 0, _dump({"area": ser.rat_to_json(area)})
    if args.format == "latex":
        return 0, f"S(p,p')={area}" if area.denominator == 1 else f"S(p,p')=\\frac{{{area.numerator}}}{{{area.denominator}}}"
    return 0, _rat(area)


def cmd_holonomy(args) -> tuple[int, str]:
    w = holonomy_of_path(parse_path(args.p))
    if args.format == "json":
        return 0, _dump(ser.word_to_json(w))
    return 0, ser.word_str(w, latex=args.format == "latex")


def cmd_reduce(args) -> tuple[int, str]:
    loop = parse_loop(args.loop)
    segs = fundamental_reduction(loop.m, loop.n)
    if args.format == "json":
        return 0, _dump({
            "loop": [loop.m, loop.n],
            "multiplicity": loop.multiplicity,
            "segments": [[ser.point_to_json(a), ser.point_to_json(b)] for a, b in segs],
        })
    lines = [f"{a.x},{a.y} -> {b.x},{b.y}" for a, b in segs]
    return 0, "\n".join(lines)


def cmd_intersections(args) -> tuple[int, str]:
    p1, p2 = parse_loop(args.p1), parse_loop(args.p2)
    total = total_intersection_number(p1, p2)
    if total == 0:
        points = []
    elif args.mode == "lift":
        points = enumerate_along_p1(p1, p2)
    else:
        points = enumerate_points(p1, p2)
    if args.format == "json":
        return 0, _dump(ser.intersections_to_json(points, total))
    rows = [f"{'position':<16}{'lift':<8}index"]
    for pt in points:
        rows.append(f"{str(pt.position.x) + ',' + str(pt.position.y):<16}{str(pt.lift_param):<8}{pt.index:+d}")
    rows.append(f"total {total:+d}")
    return 0, "\n".join(rows)


def cmd_reroute(args) -> tuple[int, str]:
    p1, p2 = parse_loop(args.p1), parse_loop(args.p2)
    try:
        r = reroute(p1, p2, Fraction(args.at), args.sign)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None
    value = rerouting_trace(r)
    if args.format == "json":
        return 0, _dump({"path": ser.path_to_json(r.path), "trace": ser.element_to_json(value)})
    latex = args.format == "latex"
    return 0, f"{ser.path_str(r.path)}\n{ser.element_str(value, latex)}"


def cmd_bracket(args) -> tuple[int, str]:
    p1, p2 = parse_loop(args.p1), parse_loop(args.p2)
    out = {}
    if args.form in ("straight", "both"):
        out["straight"] = commutator_straight(p1.m, p1.n, p2.m, p2.n)
    if args.form in ("rerouted", "both"):
        out["rerouted"] = goldman_quantum(p1, p2)
    if args.form == "classical":
        out["classical"] = goldman_classical(p1, p2)
    code = 0
    if args.form == "both":
        out["difference"] = out["rerouted"] - out["straight"]
        code = 0 if not out["difference"] else 1
    if args.format == "json":
        return code, _dump({k: ser.element_to_json(v) for k, v in out.items()})
    latex = args.format == "latex"
    if len(out) == 1:
        return code, ser.element_str(next(iter(out.values())), latex)
    return code, "\n".join(f"{k}: {ser.element_str(v, latex)}" for k, v in out.items())


def cmd_modular(args) -> tuple[int, str]:
    if args.matrix is not None:
        M = parse_matrix(args.matrix)
        p = parse_path(args.path or "0,0 1,0")
        image = act_on_path(M, p)
        w = act_on_holonomy(M, p)
        if args.format == "json":
            return 0, _dump({"matrix": M.rows(), "path": ser.path_to_json(image), "word": ser.word_to_json(w)})
        return 0, f"{ser.path_str(image)}\n{ser.word_str(w, latex=args.format == 'latex')}"
    report = check_relations()
    code = 0 if report.ok else 1
    if args.format == "json":
        return code, _dump({
            "checks": [{"name": c.name, "passed": c.passed} for c in report.checks],
            "images": {g: {k: ser.word_to_json(w) for k, w in imgs.items()} for g, imgs in report.images.items()},
            "classical_images": {
                g: {k: ser.word_to_json(w) for k, w in imgs.items()} for g, imgs in report.classical_images.items()
            },
            "matrices": {"S": S.rows(), "T": T.rows()},
        })
    return code, "\n".join(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" for c in report.checks)


def cmd_verify(args) -> tuple[int, str]:
    report = run_suite(sweep=args.sweep, seed=args.seed, trials=args.trials)
    code = 0 if report.passed else 1
    if args.format == "json":
        return code, _dump({
            "sweep": report.sweep,
            "seed": report.seed,
            "passed": report.passed,
            "suites": [
                {"name": s.name, "passed": s.passed, "cases": s.cases, "failures": s.failures}
                for s in report.suites
            ],
        })
    lines = [f"{'PASS' if s.passed else 'FAIL'}  {s.name} ({s.cases} cases)" for s in report.suites]
    for s in report.suites:
        lines.extend(f"      {s.name}: {f}" for f in s.failures)
    lines.append("all suites passed" if report.passed else "verification FAILED")
    return code, "\n".join(lines)


@lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qholonomy",
        description="Exact quantum holonomies, area phases and the quantum Goldman bracket on the torus.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("json", "latex", "text"), default="text")
        sp.set_defaults(func=fn)
        return sp

    sp = add("area", cmd_area, "signed area between two PL paths, or of one closed loop")
    sp.add_argument("--p", required=True, help='vertices, e.g. "0,0 1,0 1,1"')
    sp.add_argument("--q", help="second path with the same endpoints")

    sp = add("holonomy", cmd_holonomy, "normal-form holonomy word of a PL path")
    sp.add_argument("--p", required=True)

    sp = add("reduce", cmd_reduce, "fundamental-domain reduction of a straight loop")
    sp.add_argument("--loop", required=True, help="m,n")

    sp = add("intersections", cmd_intersections, "intersection points of two straight loops")
    sp.add_argument("--p1", required=True)
    sp.add_argument("--p2", required=True)
    sp.add_argument("--mode", choices=("geometric", "lift"), default="geometric")

    sp = add("reroute", cmd_reroute, "rerouted path at a crossing and its trace")
    sp.add_argument("--p1", required=True)
    sp.add_argument("--p2", required=True)
    sp.add_argument("--at", required=True, help="lift parameter along p1, e.g. 1/3")
    sp.add_argument("--sign", choices=("+", "-"), default="+")

    sp = add("bracket", cmd_bracket, "quantum bracket of two straight loops")
    sp.add_argument("--p1", required=True)
    sp.add_argument("--p2", required=True)
    sp.add_argument("--form", choices=("straight", "rerouted", "both", "classical"), default="straight")

    sp = add("modular", cmd_modular, "SL(2,Z) relations, or the image of a path under a matrix")
    sp.add_argument("--matrix", help='"S", "T", "I" or "a,b,c,d"')
    sp.add_argument("--path")

    sp = add("verify", cmd_verify, "run the identity suite")
    sp.add_argument("--sweep", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=200)
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

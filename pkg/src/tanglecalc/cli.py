"""``tanglecalc`` command-line interface.

Every subcommand prints plain text by default and a JSON object with the
keys ``query``, ``mode``, ``solutions``, ``provenance`` and ``warnings``
under ``--json``.  The equivalence mode defaults to mirror-agnostic; set
``TANGLECALC_MODE=chiral`` or pass ``--chiral`` to change it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .equations import DistributiveInput, ProcessiveInput, load_system
from .exceptions import TangleError
from .fourplat import (
    CHIRAL,
    MIRROR_AGNOSTIC,
    CompositeKnot,
    EquivalenceMode,
    TwoBridgeLink,
    closure,
    crossing_number,
    determinant,
    knot_name,
)
from .notation import (
    Closure,
    WordLit,
    evaluate_knot,
    evaluate_tangle,
    is_knot_expr,
    parse,
    parse_knot_list,
)
from .oracle.check import closure_diagram, verify_closure
from .render import render_fourplat_svg
from .solvers import (
    WARN_TREFOIL,
    Observation,
    chirality_filter,
    montesinos_distance_one_family,
    solve_distributive,
    solve_processive,
)
from .tangles import MontesinosTangle, RationalTangle, distance, tangle_to_word

MODE_ENV = "TANGLECALC_MODE"


def _default_mode() -> str:
    value = os.environ.get(MODE_ENV, "mirror-agnostic").strip().lower()
    if value in ("chiral", "chirality-sensitive"):
        return "chiral"
    if value in ("mirror-agnostic", "mirror_agnostic", "agnostic", ""):
        return "mirror-agnostic"
    raise TangleError(f"{MODE_ENV} must be 'chiral' or 'mirror-agnostic', got {value!r}")


def _mode(args) -> EquivalenceMode:
    return CHIRAL if args.mode == "chiral" else MIRROR_AGNOSTIC


def _tangle(text: str):
    node = parse(text)
    if isinstance(node, Closure):
        node = node.body
    return evaluate_tangle(node)


def _knot(text: str):
    node = parse(text)
    if not is_knot_expr(node):
        raise TangleError(f"{text!r} is not a knot expression")
    return evaluate_knot(node)


class Report:
    """Collects the structured result of one invocation."""

    def __init__(self, query: str, mode: EquivalenceMode):
        self.query = query
        self.mode = mode
        self.solutions: dict | list = {}
        self.provenance: list[dict] = []
        self.warnings: list[str] = []
        self.lines: list[str] = []

    def as_dict(self) -> dict:
        return {
            "query": self.query,
            "mode": self.mode.label,
            "solutions": self.solutions,
            "provenance": self.provenance,
            "warnings": self.warnings,
        }

    def emit(self, as_json: bool, stream) -> None:
        if as_json:
            stream.write(json.dumps(self.as_dict(), indent=2) + "\n")
            return
        for line in self.lines:
            stream.write(line + "\n")
        for p in self.provenance:
            stream.write(f"rule: {p['rule']} ({p['citation']})\n")
        for w in self.warnings:
            stream.write(f"warning: {w}\n")


def _knot_info(k, mode: EquivalenceMode) -> dict:
    if isinstance(k, CompositeKnot):
        canon = k.canonical(mode)
    else:
        canon = k.canonical(mode) if k.p > 1 else k
    return {
        "value": str(k),
        "canonical": str(canon),
        "name": knot_name(k),
        "crossings": crossing_number(k),
        "determinant": determinant(k),
    }


# -- subcommands ------------------------------------------------------------

def cmd_eval(args, rep: Report) -> None:
    node = parse(args.expr)
    if isinstance(node, WordLit):
        t = evaluate_tangle(node)
    elif isinstance(node, Closure):
        return cmd_closure(args, rep)
    else:
        t = evaluate_tangle(node)
    out = {"tangle": str(t)}
    if isinstance(t, RationalTangle):
        out["word"] = str(tangle_to_word(t))
    rep.solutions = out
    rep.lines.append(str(t))
    if "word" in out:
        rep.lines.append(f"word: {out['word'] or '(empty)'}")


def cmd_closure(args, rep: Report) -> None:
    t = _tangle(args.expr)
    k = closure(t, _mode(args))
    info = _knot_info(k, _mode(args))
    rep.solutions = info
    rep.lines.append(f"N({t}) = {info['canonical']}" + (f"  [{info['name']}]" if info["name"] else ""))
    if isinstance(k, TwoBridgeLink) and k.p in (0, 1):
        rep.warnings.append(f"degenerate closure: {info['name']}")
    if args.mode == "chiral":
        rep.warnings.append(WARN_TREFOIL)


def cmd_distance(args, rep: Report) -> None:
    P, R = _tangle(args.P), _tangle(args.R)
    d = distance(P, R)
    rep.solutions = {"distance": d}
    rep.lines.append(str(d))


def cmd_classify(args, rep: Report) -> None:
    k = _knot(args.knot)
    mode = _mode(args)
    info = _knot_info(k, mode)
    info["value"] = args.knot.strip()
    if isinstance(k, TwoBridgeLink) and k.p > 1:
        info["orbit"] = sorted({x % k.p for x in (k.q, -k.q, pow(k.q, -1, k.p), -pow(k.q, -1, k.p))}
                               if mode.mirror_agnostic else {k.q % k.p, pow(k.q, -1, k.p)})
    rep.solutions = info
    rep.lines.append(f"{info['value']} -> {info['canonical']}")
    if info["name"]:
        rep.lines.append(f"name: {info['name']}")
    rep.lines.append(f"crossings: {info['crossings']}, determinant: {info['determinant']}")
    if "orbit" in info:
        rep.lines.append("equivalent q: " + ", ".join(str(q) for q in info["orbit"]))


def _parse_chirality(text: str) -> Observation:
    # round1=left  or  round1=b(3,1)
    try:
        key, value = text.split("=", 1)
        index = int(key.strip().lower().removeprefix("round"))
    except ValueError:
        raise TangleError(f"chirality must look like 'round1=left', got {text!r}") from None
    value = value.strip()
    if value.lower() in ("left", "right"):
        return Observation(index, handedness=value.lower())
    return Observation(index, signed=_knot(value))


def cmd_solve_processive(args, rep: Report) -> None:
    if args.file:
        system = load_system(Path(args.file).read_text(encoding="utf-8"))
        if not isinstance(system, ProcessiveInput):
            raise TangleError(f"{args.file} holds a distributive system")
        products = system.products
    elif args.products:
        products = [evaluate_knot(n) for n in parse_knot_list(args.products)]
    else:
        raise TangleError("give --products or --file")
    mode = _mode(args)
    result = solve_processive(products, mode, args.max_u, args.max_v, args.max_r, not args.full_grid)
    solutions = result.solutions
    if args.chirality:
        solutions = chirality_filter(solutions, _parse_chirality(args.chirality), n_rounds=len(products))
        rep.warnings.append(WARN_TREFOIL)
    rep.solutions = {
        "processive": [{"O": str(s.O), "R": str(s.R), "P": str(s.P_convention)} for s in solutions],
        "prefilter": [list(uk) for uk in result.prefilter],
        "rejected": [{"O": str(v.O), "R": str(v.R), "reason": v.reason} for v in result.rejected],
    }
    rep.provenance = [p.as_dict() for p in result.provenance]
    rep.warnings = list(result.warnings) + rep.warnings
    rep.lines.append(f"{len(solutions)} solution(s)")
    for s in solutions:
        rep.lines.append(f"  {s}")
    if args.verbose:
        rep.lines.append("pre-filter (u, k): " + ", ".join(str(uk) for uk in result.prefilter))
        for v in result.rejected:
            rep.lines.append(f"  rejected O={v.O}, R={v.R}: {v.reason}")


def cmd_solve_distributive(args, rep: Report) -> None:
    if args.file:
        system = load_system(Path(args.file).read_text(encoding="utf-8"))
        if not isinstance(system, DistributiveInput):
            raise TangleError(f"{args.file} holds a processive system")
    else:
        if not (args.k1 and args.product):
            raise TangleError("give --k1 and --product, or --file")
        system = DistributiveInput(_knot(args.k1), _knot(args.product), _tangle(args.P), _tangle(args.R))
    if not isinstance(system.product, CompositeKnot):
        raise TangleError("the product must be a connected sum")
    s = solve_distributive(system.K1, system.product, system.P, system.R, _mode(args), args.max_u, args.max_v)
    rep.solutions = {
        "rational": {"solutions": [str(x) for x in s.rational], "verdict": s.rational_verdict},
        "prime": {"solutions": [str(x) for x in s.prime], "verdict": s.prime_verdict},
        "locally_knotted": {
            "solutions": [
                {"core": str(x.core), "insert": str(x.insert), "placement": x.placement} for x in s.locally_knotted
            ],
            "verdict": s.locally_knotted_verdict,
            "reduced_filter": s.reduced_filter,
        },
        "flags": s.flags,
    }
    rep.provenance = [p.as_dict() for p in s.provenance]
    rep.lines.append(f"rational: {len(s.rational)} ({s.rational_verdict})")
    rep.lines.append(f"prime: {len(s.prime)} ({s.prime_verdict})")
    for x in s.prime:
        rep.lines.append(f"  {x}")
    rep.lines.append(f"locally knotted: {len(s.locally_knotted)} ({s.locally_knotted_verdict})")
    if s.reduced_filter:
        rep.lines.append(f"  reduced filter: {s.reduced_filter}")
    for x in s.locally_knotted:
        rep.lines.append(f"  {x}")
    for f in s.flags:
        rep.warnings.append(f)


def cmd_montesinos_family(args, rep: Report) -> None:
    fam = montesinos_distance_one_family(args.r, args.s, args.t, args.u, (args.m_min, args.m_max), _mode(args))
    out: dict = {"count": len(fam)}
    if args.target_p is not None:
        out["target_p"] = args.target_p
        out["signed_p_hits"] = [int(m) for m in fam.m[fam.p == args.target_p]]
        out["abs_p_hits"] = fam.members_with_abs_p(args.target_p)
        rep.lines.append(f"p = {args.target_p}: m in {out['signed_p_hits'] or 'none'}")
        rep.lines.append(f"|p| = {args.target_p}: m in {out['abs_p_hits'] or 'none'}")
    if len(fam) <= args.list_limit:
        out["members"] = [{"m": m, "link": str(k)} for m, k in fam]
        rep.lines += [f"m={m}: {k}" for m, k in fam]
    else:
        rep.lines.append(f"{len(fam)} members (listing suppressed above {args.list_limit})")
    rep.solutions = out


def cmd_oracle(args, rep: Report) -> None:
    t = _tangle(args.expr)
    mode = _mode(args)
    claimed = closure(t, CHIRAL)
    report = verify_closure(t, claimed, mirror_agnostic=mode.mirror_agnostic, cap=args.cap)
    rep.solutions = {
        "closure": str(claimed),
        "crossings": report.crossings,
        "jones": str(report.jones),
        "expected_jones": str(report.expected_jones),
        "determinant": report.determinant,
        "expected_determinant": report.expected_determinant,
        "agree": report.ok,
    }
    rep.lines.append(f"N({t}) claimed {claimed}; diagram has {report.crossings} crossings")
    rep.lines.append(f"jones(diagram)   = {report.jones}")
    rep.lines.append(f"jones(reference) = {report.expected_jones}")
    rep.lines.append(f"determinant {report.determinant} vs {report.expected_determinant}")
    rep.lines.append("agree" if report.ok else "MISMATCH")
    if args.export:
        Path(args.export).write_text(closure_diagram(t, args.cap).to_text(), encoding="utf-8")
        rep.lines.append(f"diagram written to {args.export}")


def cmd_render(args, rep: Report) -> None:
    node = parse(args.expr)
    if is_knot_expr(node):
        k = evaluate_knot(node)
    else:
        t = evaluate_tangle(node.body if isinstance(node, Closure) else node)
        if isinstance(t, MontesinosTangle):
            raise TangleError("render draws 4-plats; a Montesinos closure is not one in general")
        k = closure(t, CHIRAL)
    if not isinstance(k, TwoBridgeLink):
        raise TangleError(f"cannot render {k}")
    svg = render_fourplat_svg(k.p, k.q, title=args.expr)
    Path(args.output).write_text(svg, encoding="utf-8")
    rep.solutions = {"file": args.output, "link": str(k)}
    rep.lines.append(f"wrote {args.output} ({k})")


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    group = common.add_mutually_exclusive_group()
    group.add_argument("--chiral", dest="mode", action="store_const", const="chiral",
                       help="chirality-sensitive equivalence")
    group.add_argument("--mirror-agnostic", dest="mode", action="store_const", const="mirror-agnostic",
                       help="identify mirror images (default)")

    parser = argparse.ArgumentParser(prog="tanglecalc", description="Rational tangle calculus and tangle-equation solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a tangle expression or twist word")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("closure", parents=[common], help="numerator closure of a tangle expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("distance", parents=[common], help="distance d(P,R) between rational tangles")
    p.add_argument("P")
    p.add_argument("R")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("classify", parents=[common], help="canonical form and name of a knot")
    p.add_argument("knot")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve-processive", parents=[common], help="solve N(O+iR)=K_i")
    p.add_argument("--products", help='e.g. "b(1,1),b(3,1),b(7,3),7-crossing"')
    p.add_argument("--file", help="equation file")
    p.add_argument("--chirality", help='observed handedness, e.g. "round1=left"')
    p.add_argument("--max-u", type=int, default=64)
    p.add_argument("--max-v", type=int, default=64)
    p.add_argument("--max-r", type=int, default=32)
    p.add_argument("--full-grid", action="store_true", help="skip the linear pre-filter")
    p.add_argument("-v", "--verbose", action="store_true", help="show pre-filter and rejections")
    p.set_defaults(func=cmd_solve_processive)

    p = sub.add_parser("solve-distributive", parents=[common], help="solve N(Q+P)=K1, N(Q+R)=K2#K3")
    p.add_argument("--k1")
    p.add_argument("--product")
    p.add_argument("--P", default="T(0)")
    p.add_argument("--R", default="T(2)")
    p.add_argument("--file", help="equation file")
    p.add_argument("--max-u", type=int, default=64)
    p.add_argument("--max-v", type=int, default=64)
    p.set_defaults(func=cmd_solve_distributive)

    p = sub.add_parser("montesinos-family", parents=[common], help="distance-one Montesinos family")
    for name in ("r", "s", "t", "u"):
        p.add_argument(name, type=int)
    p.add_argument("--m-min", type=int, default=-10)
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--target-p", type=int)
    p.add_argument("--list-limit", type=int, default=50)
    p.set_defaults(func=cmd_montesinos_family)

    p = sub.add_parser("oracle", parents=[common], help="check a closure against diagram invariants")
    p.add_argument("expr")
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--export", help="write the diagram as an edge list")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", parents=[common], help="SVG of a 4-plat")
    p.add_argument("expr")
    p.add_argument("-o", "--output", default="diagram.svg")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.mode is None:
            args.mode = _default_mode()
        rep = Report(" ".join(argv if argv is not None else sys.argv[1:]), _mode(args))
        args.func(args, rep)
    except (ValueError, TypeError, OSError, IndexError) as exc:
        stderr.write(f"tanglecalc: error: {exc}\n")
        return 2
    rep.emit(args.json, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())

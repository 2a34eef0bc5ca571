"""Command-line front end.

Each verb runs one pipeline and prints ``key: value`` lines, or a JSON
object with ``--json``.  Without a verb, commands are read from stdin, one
per line.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from typing import Dict, List, Optional

from .algebra import compute_algebra_basis
from .classify import classify_curve
from .ideals import RelativeIdeal, intersect, kernel_generators, over_ideals, pair_relators
from .kahler import ParametrizationError, curve_invariants, non_exact_set, parametrization
from .modbasis import compute_module_basis
from .normalize import (
    NON_EXACT_WITNESS,
    PRECISION_EXHAUSTED,
    UnsupportedMoveError,
    normal_form,
)
from .numsgp import NotNumericalError, NumericalSemigroup, semigroup_invariants
from .poly import PolySyntaxError, parse_poly, parse_poly_list, render_list

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECISION = 3

VERBS = ("semigroup", "module-basis", "kahler", "normalize", "ideal", "classify")


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(f"{self.prog}: {message}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--show", choices=("basis", "generators", "all"), default="all")
    common.add_argument("--verbose", action="store_true", help="print per-step traces")
    common.add_argument("--precision", type=int, default=None, help="series truncation floor for normalize")

    parser = _Parser(prog="curvemonoid", description="Semigroups, bases and differentials of plane curves.")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    p = sub.add_parser("semigroup", parents=[common], help="algebra basis and degree semigroup")
    p.add_argument("--gens", required=True, help='polynomials, e.g. "t^6+t,t^4"')

    p = sub.add_parser("module-basis", parents=[common], help="basis of a module over an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--gens", required=True)

    for verb, text in (("kahler", "differential module of (x, y)"), ("normalize", "normal form of (x, y)"),
                       ("classify", "ne and family checks for (x, y)")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)

    p = sub.add_parser("ideal", parents=[common], help="relative ideals of a numerical semigroup")
    p.add_argument("--op", choices=("relators", "intersect", "kernel", "over-ideals"), required=True)
    p.add_argument("--semigroup", type=_int_list, required=True, help="generators, e.g. 3,4")
    p.add_argument("--gens", type=_int_list, required=True, help="ideal generators (a,b for relators)")
    p.add_argument("--other", type=_int_list, help="second ideal for intersect")
    return parser


def _q(c) -> str:
    return str(c)


def _semigroup(args) -> Dict:
    A = compute_algebra_basis(parse_poly_list(args.gens))
    out: Dict = {"basis": [g.render() for g in A.gens], "degrees": list(A.degree_monoid.minimal_generators)}
    out["content"] = A.degree_monoid.content
    if A.numerical:
        out.update(semigroup_invariants(A.semigroup()))
    text = []
    if args.show in ("basis", "all"):
        text.append(render_list(A.gens) if args.show == "basis" else f"basis: {render_list(A.gens)}")
    if args.show in ("generators", "all"):
        text.append(f"generators: {out['degrees']}")
    if args.show == "all":
        if A.numerical:
            text.append(f"frobenius: {out['frobenius']}")
            text.append(f"conductor: {out['conductor']}")
            text.append(f"genus: {out['genus']}")
            text.append(f"symmetric: {str(out['is_symmetric']).lower()}")
        else:
            text.append(f"content: {out['content']} (not numerical)")
    return {"data": out, "text": text}


def _module_basis(args) -> Dict:
    A = compute_algebra_basis(parse_poly_list(args.algebra))
    M = compute_module_basis(parse_poly_list(args.gens), A)
    out = {
        "algebra": [g.render() for g in A.gens],
        "basis": [g.render() for g in M.gens],
        "degree_ideal": list(M.degree_ideal.min_gens),
    }
    if args.verbose:
        out["trace"] = list(M.trace)
    text = []
    if args.verbose:
        text.extend(M.trace)
    if args.show == "basis":
        text.append(M.render())
    else:
        if args.show == "all":
            text.append(f"algebra: {A.render()}")
            text.append(f"basis: {M.render()}")
        text.append(f"degree ideal generators: {out['degree_ideal']}")
    return {"data": out, "text": text}


def _curve(args):
    return parametrization(parse_poly(args.x), parse_poly(args.y))


def _kahler(args) -> Dict:
    p = _curve(args)
    rep = curve_invariants(p)
    out = {
        "x": p.x.render(),
        "y": p.y.render(),
        "semigroup": list(rep.gamma.minimal_generators),
        "basis": [g.render() for g in rep.basis.gens],
        "degree_ideal": list(rep.ideal.min_gens),
        "ne_set": list(rep.ne_set),
        "ne": rep.ne,
        "mu": rep.mu,
        "nu": rep.nu,
        "quasi_homogeneous": rep.quasi_homogeneous,
        "notes": list(rep.notes),
    }
    text = []
    if args.verbose:
        text.extend(rep.basis.trace)
    if args.show == "basis":
        text.append(rep.basis.render())
    else:
        text.append(f"semigroup: {out['semigroup']}")
        if args.show == "all":
            text.append(f"basis: {rep.basis.render()}")
        text.append(f"degree ideal generators: {out['degree_ideal']}")
        text.append(f"NE: {out['ne_set']}")
        text.append(f"ne: {rep.ne}")
        text.append(f"mu: {rep.mu}")
        text.append(f"nu: {rep.nu}")
    text.extend(f"note: {s}" for s in rep.notes)
    return {"data": out, "text": text}


def _normalize(args) -> Dict:
    p = _curve(args)
    o = normal_form(p, args.precision)
    steps = []
    for s in o.steps:
        steps.append({
            "x": s.x.render(),
            "y": s.y.render(),
            "x1": s.x1.render(),
            "lambda": s.lam,
            "c_lambda": _q(s.c_lam),
            "w": s.w.render(),
            "move": s.move,
        })
    out = {"kind": o.kind, "witness_degree": o.witness_degree, "steps": steps, "message": o.message}
    text = [f"outcome: {o.kind}"]
    if o.kind == NON_EXACT_WITNESS:
        text.append(f"witness degree: {o.witness_degree}")
    if o.message:
        text.append(f"message: {o.message}")
    if args.verbose or args.show == "all":
        for k, s in enumerate(steps):
            text.append(f"step {k}: X = {s['x']}, Y = {s['y']}")
            text.append(f"  X1 = {s['x1']}")
            text.append(f"  lambda = {s['lambda']}, c = {s['c_lambda']}, W = {s['w']}")
            text.append(f"  {s['move']}")
    return {"data": out, "text": text, "code": EXIT_PRECISION if o.kind == PRECISION_EXHAUSTED else EXIT_OK}


def _classify(args) -> Dict:
    p = _curve(args)
    rep = curve_invariants(p)
    cl = classify_curve(rep)
    ds = rep.delta
    out = {
        "semigroup": list(rep.gamma.minimal_generators),
        "ne": cl.ne,
        "ne_set": list(rep.ne_set),
        "family": cl.family,
        "ne_set_pattern": cl.ne_set_pattern,
        "violations": list(cl.violations),
        "arrangement": list(ds.r) if ds else None,
        "puiseux": list(ds.puiseux) if ds else None,
        "notes": list(rep.notes),
    }
    text = [
        f"semigroup: {out['semigroup']}",
        f"arrangement: {out['arrangement']}",
        f"puiseux exponents: {out['puiseux']}",
        f"NE: {out['ne_set']}",
        f"ne: {cl.ne}",
        f"family: {cl.family}",
    ]
    if cl.ne_set_pattern:
        text.append(f"NE shape: {cl.ne_set_pattern}")
    text.extend(f"violation: {v}" for v in cl.violations)
    text.extend(f"note: {s}" for s in rep.notes)
    return {"data": out, "text": text}


def _ideal(args) -> Dict:
    S = NumericalSemigroup(args.semigroup)
    if args.op == "relators":
        if len(args.gens) != 2:
            raise ValueError("relators needs exactly two integers in --gens")
        a, b = args.gens
        rel = sorted(pair_relators(a, b, S))
        return {"data": {"relators": [list(r) for r in rel]}, "text": [f"R({a},{b}): {[list(r) for r in rel]}"]}
    I = RelativeIdeal(S, args.gens)
    if args.op == "intersect":
        if not args.other:
            raise ValueError("intersect needs --other")
        K = intersect(I, RelativeIdeal(S, args.other))
        return {"data": {"min_gens": list(K.min_gens)}, "text": [f"intersection generators: {list(K.min_gens)}"]}
    if args.op == "kernel":
        ks = sorted(kernel_generators(I), key=lambda k: (k.i, k.j, k.alpha, k.beta))
        data = [{"i": k.i, "j": k.j, "alpha": k.alpha, "beta": k.beta} for k in ks]
        text = [f"generators: {list(I.min_gens)}"]
        text += [f"(e_{k.i}, e_{k.j}): (t^{k.alpha}, -t^{k.beta})" for k in ks]
        return {"data": {"min_gens": list(I.min_gens), "relators": data}, "text": text}
    found = over_ideals(I)
    data = [{"min_gens": list(J.min_gens), "ne_set": non_exact_set(J, S)} for J in found]
    text = [f"{d['min_gens']} NE={d['ne_set']}" for d in data]
    return {"data": {"ideals": data}, "text": text}


_HANDLERS = {
    "semigroup": _semigroup,
    "module-basis": _module_basis,
    "kahler": _kahler,
    "normalize": _normalize,
    "ideal": _ideal,
    "classify": _classify,
}


def run(argv: List[str], stdout=None, stderr=None) -> int:
    """Run one command and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    if args.verb is None:
        print("error: missing verb, one of " + ", ".join(VERBS), file=stderr)
        return EXIT_INPUT
    try:
        res = _HANDLERS[args.verb](args)
    except PolySyntaxError as exc:
        print(f"error: parse error: {exc}", file=stderr)
        return EXIT_INPUT
    except (NotNumericalError, ParametrizationError, UnsupportedMoveError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps({"verb": args.verb, **res["data"]}, sort_keys=True), file=stdout)
    else:
        for line in res["text"]:
            print(line, file=stdout)
    return res.get("code", EXIT_OK)


def run_batch(lines, stdout=None, stderr=None) -> int:
    """One command per line; blank lines and ``#`` comments are skipped."""
    worst = EXIT_OK
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            argv = shlex.split(line)
        except ValueError as exc:
            print(f"error: {exc}", file=stderr or sys.stderr)
            worst = max(worst, EXIT_INPUT)
            continue
        worst = max(worst, run(argv, stdout, stderr))
    return worst


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv or argv == ["-"]:
        if sys.stdin.isatty() and not argv:
            build_parser().print_help()
            return EXIT_INPUT
        return run_batch(sys.stdin)
    if argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return EXIT_OK
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

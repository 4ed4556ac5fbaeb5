"""Command-line interface.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
3 budget exceeded. The default path/vertex budget can be overridden with
the D43_BUDGET environment variable or ``--budget``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import demazure, perfect
from .crystal import BudgetExceeded, DEFAULT_BUDGET, export_dot, graph_to_json, induced_graph
from .paths import PathCrystal, demazure_paths, pk_set
from .perfect import PerfectCrystal

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SUITES = ("crystal", "formulas", "perfect", "minimal", "chain", "predicates",
          "condition1", "condition2", "condition3", "lemma-weyl", "theorem")


class UsageError(Exception):
    pass


def positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def nonnegative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return n


def _default_budget() -> int:
    raw = os.environ.get("D43_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="d43demazure",
                                description="D4(3) perfect crystals and Demazure crystals")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="-", help="output file (default: stdout)")
    common.add_argument("--budget", type=positive, default=None,
                        help="vertex/path cap (default 10^6 or $D43_BUDGET)")
    sub = p.add_subparsers(dest="command", required=True)

    en = sub.add_parser("enumerate", parents=[common], help="list the elements of B^{1,L}")
    en.add_argument("--L", type=positive, required=True)
    en.add_argument("--format", choices=("text", "json"), default="text")

    ve = sub.add_parser("verify", parents=[common], help="run verification suites")
    ve.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ve.add_argument("--L", type=positive, default=None, help="raw crystal level")
    ve.add_argument("--l", type=positive, default=1, help="lambda = l Lambda_2")
    ve.add_argument("--kmax", type=nonnegative, default=None)
    ve.add_argument("--jmax", type=positive, default=6)
    ve.add_argument("--amended", action="store_true",
                    help="predicates: restrict the D-sets to xb1 = 0")

    de = sub.add_parser("demazure", parents=[common], help="Demazure subsets and path sets")
    de.add_argument("--l", type=positive, default=1)
    de.add_argument("--L", type=positive, default=None)
    g = de.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", type=int, choices=range(7), metavar="A", help="subset B_a, 0 <= A <= 6")
    g.add_argument("--k", type=nonnegative, help="Demazure crystal B_{w^(k)}")
    de.add_argument("--paths", action="store_true", help="with --k: list the paths")
    de.add_argument("--model", choices=("closure", "predicate", "tensor"), default="closure",
                    help="closure (default), predicate filter (--a) or P^(k) product (--k)")
    de.add_argument("--amended", action="store_true")
    de.add_argument("--format", choices=("text", "json", "dot"), default="text")

    ex = sub.add_parser("export", parents=[common], help="crystal graph of B^{1,L}")
    ex.add_argument("--L", type=positive, required=True)
    ex.add_argument("--format", choices=("dot", "json"), default="dot")
    return p


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_enumerate(args) -> int:
    elems = perfect.enumerate_b1l(args.L)
    if args.format == "json":
        text = _dumps({"L": args.L, "count": len(elems), "elements": [list(b) for b in elems]})
    else:
        text = "".join(f"{b}\n" for b in elems) + f"# {len(elems)} elements of B^(1,{args.L})\n"
    _emit(text, args.out)
    return EXIT_OK


def _run_suite(name: str, args, budget: int):
    L = args.L if args.L is not None else 3 * args.l
    if name == "crystal":
        return [perfect.axiom_report(L, tensor_square=L <= 3)]
    if name == "formulas":
        return [perfect.formula_check(L)]
    if name == "perfect":
        return [perfect.perfect_axioms(L)]
    if name == "minimal":
        return [perfect.minimal_check(L)]
    if args.L is not None and args.L != 3 * args.l:
        raise UsageError(f"suite {name} needs L = 3l (got L={args.L}, l={args.l})")
    if name == "chain":
        return [demazure.chain_check(args.l)]
    if name == "predicates":
        return [demazure.predicate_check(args.l, args.amended)]
    if name == "condition1":
        return [demazure.verify_condition1(args.l)]
    if name == "condition2":
        return [demazure.verify_condition2(args.l)]
    if name == "condition3":
        return [demazure.verify_condition3(args.l, 60 if args.kmax is None else args.kmax)]
    if name == "lemma-weyl":
        return [demazure.lemma_weyl_check(args.jmax)]
    if name == "theorem":
        kmax = 12 if args.kmax is None else args.kmax
        return [demazure.verify_theorem(args.l, kmax, budget)]
    raise UsageError(name)


def cmd_verify(args, budget: int) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for name in names:
        reports.extend(_run_suite(name, args, budget))
    ok = all(r.passed for r in reports)
    doc = {"status": "pass" if ok else "fail", "reports": [r.to_dict() for r in reports]}
    _emit(_dumps(doc), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_demazure(args, budget: int) -> int:
    l = args.l
    if args.L is not None and args.L != 3 * l:
        raise UsageError(f"demazure needs L = 3l (got L={args.L}, l={l})")
    L = 3 * l
    if args.a is not None:
        if args.model == "predicate":
            elems = sorted(demazure.predicate_ba(args.a, l, args.amended))
        elif args.model == "closure":
            elems = demazure.ba_j(args.a, l).sorted()
        else:
            raise UsageError("--model tensor applies to --k")
        crystal = PerfectCrystal(L)
        what = {"l": l, "L": L, "a": args.a, "model": args.model}
        enc = [list(b) for b in elems]
    else:
        if args.model == "predicate":
            raise UsageError("--model predicate applies to --a")
        paths = (pk_set(args.k, l, budget) if args.model == "tensor"
                 else demazure_paths(args.k, l, budget))
        crystal = PathCrystal(l)
        elems = sorted(paths, key=crystal.key)
        what = {"l": l, "L": L, "k": args.k, "model": args.model}
        enc = [p.encode() for p in elems]
    if args.format == "dot":
        text = export_dot(induced_graph(elems, crystal), name="demazure")
    elif args.format == "json":
        doc = dict(what, count=len(elems))
        if args.a is not None or args.paths:
            doc["elements"] = enc
        text = _dumps(doc)
    else:
        lines = [str(x) for x in elems] if (args.a is not None or args.paths) else []
        lines.append(f"# {len(elems)} elements")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    B = PerfectCrystal(args.L)
    g = induced_graph(B.elements(), B)
    if args.format == "dot":
        text = export_dot(g, name=f"B1_{args.L}")
    else:
        text = _dumps(graph_to_json(g, L=args.L))
    _emit(text, args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    budget = args.budget or _default_budget()
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args)
        if args.command == "verify":
            return cmd_verify(args, budget)
        if args.command == "demazure":
            return cmd_demazure(args, budget)
        return cmd_export(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

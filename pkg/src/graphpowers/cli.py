"""Command line interface.

Exit codes: 0 success or pass, 1 failure or false, 2 usage error,
3 timeout or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as cons
from . import invariants as inv
from . import io
from .graph import CapExceeded, LoopCreated, SearchTimeout, complete_graph, cycle_graph, walk_power
from .homomorphism import SearchOptions
from .suites import SUITES, VerificationReport, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3
BUDGET_ENV = "GRAPHPOWERS_BUDGET"


def _default_budget() -> float:
    raw = os.environ.get(BUDGET_ENV)
    return float(raw) if raw else 60.0


def _options(args) -> SearchOptions:
    budget = args.budget if args.budget is not None else _default_budget()
    return SearchOptions(time_budget=budget, parallel=getattr(args, "parallel", False))


def _emit_graph(g, output) -> None:
    summary = f"{g.name}: {g.order} vertices, {g.size} edges"
    if output:
        io.save_graph(g, output)
        print(summary)
    else:
        sys.stdout.write(io.dumps_graph(g) + "\n")
        print(summary, file=sys.stderr)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"{args.family}: missing --{', --'.join(missing)}")


class _Usage(Exception):
    pass


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "circular":
        _require(args, "n", "d")
        g = cons.circular_complete(args.n, args.d)
    elif fam == "kneser":
        _require(args, "m", "n")
        g = cons.kneser(args.m, args.n, args.s or 0)
    elif fam == "cycle":
        _require(args, "n")
        g = cycle_graph(args.n)
    elif fam == "complete":
        _require(args, "n")
        g = complete_graph(args.n)
    elif fam == "hajos":
        _require(args, "d", "k")
        g = cons.hajos_chain(args.d, args.k)
    else:
        g = cons.petersen()
    _emit_graph(g, args.output)
    return EXIT_OK


def cmd_power(args) -> int:
    g = io.load_graph(args.input)
    kind = args.kind
    if kind == "subdivide":
        out = cons.subdivide(g, args.s or 1)
    elif kind == "walk":
        out = walk_power(g, args.k or 1)
    elif kind == "frac":
        out = cons.frac_power(g, args.num or 1, args.den or 1)
    else:
        out = cons.dual_power(g, args.r or 0, args.s or 0, cap=args.cap)
    _emit_graph(out, args.output)
    return EXIT_OK


def _certificate(which: str, g, result) -> dict:
    doc = {"format": "graphpowers-certificate", "version": 1, "invariant": which,
           "graph": g.name}
    if which == "chic":
        doc["value"] = str(result)
        doc["target"] = result.witness.target
        doc["mapping"] = list(result.witness.mapping)
    elif which == "chif":
        doc["value"] = str(result)
        doc["primal"] = [{"set": sorted(s), "weight": io.fraction_text(w)}
                         for s, w in sorted(result.primal.items(), key=lambda t: sorted(t[0]))]
        doc["dual"] = {str(v): io.fraction_text(w) for v, w in sorted(result.dual.items())}
    elif which == "chin":
        m, colouring = result
        doc["value"] = str(m)
        doc["colouring"] = {str(v): sorted(c) for v, c in sorted(colouring.items())}
    return doc


def cmd_invariant(args) -> int:
    g = io.load_graph(args.input)
    opts = _options(args)
    which = args.which
    if which == "chi":
        result = inv.chromatic_number(g, opts)
        text = str(result)
    elif which == "chic":
        result = inv.circular_chromatic_number(g, opts)
        text = str(result)
    elif which == "chif":
        result = inv.fractional_chromatic_number(g, args.cap)
        text = str(result)
    elif which == "chin":
        result = inv.tuple_coloring(g, args.n or 1, opts)
        text = str(result[0])
    elif which == "alpha":
        result = inv.independence_number(g)
        text = str(result)
    elif which == "mu":
        result = inv.mu(g, opts)
        text = io.fraction_text(result)
    else:
        result = inv.zeta(g, opts)
        text = str(result)
    print(text)
    if args.witness and which in ("chic", "chif", "chin"):
        Path(args.witness).write_text(json.dumps(_certificate(which, g, result), indent=1) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    opts = _options(args)
    params = {"suite": args.suite, "budget": opts.time_budget, "include_long": args.include_long}
    if args.suite == "all":
        report = run_all(opts.time_budget, args.include_long)
    else:
        suite_args = {"opts": opts, "include_long": args.include_long, "k": args.k,
                      "d": args.d, "n": args.k if args.suite == "hajos" else args.n,
                      "m": args.m, "l_max": args.l_max}
        if args.suite == "hajos" and args.d is not None and args.k is None:
            raise _Usage("hajos: --d needs --k (clique order)")
        params.update({k: v for k, v in suite_args.items() if k != "opts" and v is not None})
        report: VerificationReport = SUITES[args.suite](suite_args)
    for line in report.lines():
        print(line)
    print(f"{len(report.records)} records, {len(report.failures)} failed, "
          f"{len(report.inconclusive)} inconclusive")
    if args.output:
        io.save_report(report, args.output, params)
    if report.failures:
        return EXIT_FAIL
    if report.inconclusive:
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_dot(args) -> int:
    sys.stdout.write(io.to_dot(io.load_graph(args.input)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphpowers", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named graph family")
    c.add_argument("family", choices=["circular", "kneser", "cycle", "complete", "hajos", "petersen"])
    for flag in ("--n", "--d", "--m", "--s", "--k"):
        c.add_argument(flag, type=int)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    w = sub.add_parser("power", help="apply a graph power to a graph document")
    w.add_argument("input")
    w.add_argument("--kind", required=True, choices=["subdivide", "walk", "frac", "dual"])
    for flag in ("--k", "--num", "--den", "--s", "--r"):
        w.add_argument(flag, type=int)
    w.add_argument("--cap", type=int, default=cons.DEFAULT_DUAL_CAP)
    w.add_argument("-o", "--output")
    w.set_defaults(func=cmd_power)

    i = sub.add_parser("invariant", help="compute an exact invariant")
    i.add_argument("input")
    i.add_argument("which", choices=["chi", "chic", "chif", "chin", "alpha", "mu", "zeta"])
    i.add_argument("--n", type=int, help="tuple size for chin")
    i.add_argument("--witness", help="write the certificate document here")
    i.add_argument("--cap", type=int, default=inv.DEFAULT_MIS_CAP)
    i.add_argument("--budget", type=float)
    i.add_argument("--parallel", action="store_true")
    i.set_defaults(func=cmd_invariant)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=["all", *SUITES])
    for flag in ("--k", "--d", "--n", "--m", "--l-max"):
        v.add_argument(flag, type=int)
    v.add_argument("--include-long", action="store_true")
    v.add_argument("--budget", type=float)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dot", help="export a graph document as DOT")
    d.add_argument("input")
    d.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (LoopCreated, CapExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

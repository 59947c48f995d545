"""``tubings-dse`` command line front end.

Results go to stdout, diagnostics to stderr.  Exit status: 0 success,
1 failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import chords
from .dse import (DSESpec, anomalous_dimension, solve_exp_star, solve_fixed_point,
                  solve_system, solve_tubing, tree_terms)
from .feynman import tubing_feynman_rules
from .mellin import MellinTable
from .rings import Poly, format_scalar, parse_rational
from .trees import Decoration, TreeSyntaxError, enumerate_trees, parse_tree
from .tubings import count_tubings, enumerate_tubings
from .verify import run_suite, SUITES

EMIT_KINDS = ("gamma", "green", "per-tree", "per-tubing", "per-diagram")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tubings-dse", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=["enumerate", "count", "solve", "biject", "verify", "bench"])
    p.add_argument("--tree", help='tree text such as "1(1,1(1))"')
    p.add_argument("--diagram", help='chord diagram such as "(1,3)(2,4)"')
    p.add_argument("--s", default="0", help="insertion parameter as p/q")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--mellin", default="yukawa", help="yukawa, symbolic, or a JSON file")
    p.add_argument("--kernels", default="1", help="comma separated kernel weights for builtin tables")
    p.add_argument("--system", help="JSON file describing a system of equations")
    p.add_argument("--emit", default="gamma", choices=EMIT_KINDS)
    p.add_argument("--method", default="tubing", choices=["tubing", "plane", "fixed-point", "exp-star", "chords"])
    p.add_argument("--kind", default="tubings", choices=["tubings", "trees", "plane-trees", "diagrams"])
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--max", type=int, default=5, dest="max_n")
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p.add_argument("--seed", type=int, default=0)
    return p


# ---------------------------------------------------------------------------
# helpers


def _tree(args):
    if not args.tree:
        raise UsageError("--tree is required")
    try:
        return parse_tree(args.tree)
    except TreeSyntaxError as exc:
        raise UsageError(str(exc)) from None


def _order(args, default=None) -> int:
    order = args.order if args.order is not None else default
    if order is None:
        raise UsageError("--order is required")
    if order < 1:
        raise UsageError("--order must be >= 1")
    return order


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _table(args, order: int) -> MellinTable:
    try:
        weights = sorted({int(k) for k in args.kernels.split(",")})
    except ValueError:
        raise UsageError(f"bad --kernels {args.kernels!r}") from None
    decs = [Decoration(k) for k in weights]
    if args.mellin == "yukawa":
        return MellinTable.yukawa(order, decs)
    if args.mellin == "symbolic":
        return MellinTable.symbolic(order, decs)
    path = Path(args.mellin)
    if not path.is_file():
        raise UsageError(f"unknown mellin source {args.mellin!r}")
    try:
        return MellinTable.load(path)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read Mellin table: {exc}") from None


def _emit(rows: List[dict], fmt: str, text_lines: List[str], out):
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif fmt == "csv":
        if rows:
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows({k: ";".join(v) if isinstance(v, list) else v for k, v in r.items()}
                             for r in rows)
            out.write(buf.getvalue())
    else:
        for line in text_lines:
            out.write(line + "\n")


def _lpoly_json(p) -> List[str]:
    return [format_scalar(c) for c in p.coeffs]


# ---------------------------------------------------------------------------
# subcommands


def cmd_enumerate(args, out) -> int:
    if args.kind in ("trees", "plane-trees"):
        n = _order(args)
        trees = enumerate_trees(n, [Decoration(1)], plane=args.kind == "plane-trees")
        rows = [{"tree": t.to_text(), "tubings": count_tubings(t)} for t in trees]
        _emit(rows, args.format, [r["tree"] for r in rows], out)
        return 0
    if args.kind == "diagrams":
        n = _order(args)
        if n > 7:
            raise UsageError("diagram enumeration is limited to 7 chords")
        rows = [{"diagram": C.to_text(), "terminals": len(chords.terminal_chords(C))}
                for C in chords.enumerate_connected_diagrams(n)]
        _emit(rows, args.format, [r["diagram"] for r in rows], out)
        return 0
    t = _tree(args)
    rows, lines = [], []
    for tub in enumerate_tubings(t):
        rows.append({"tubes": str(tub), "b": tub.b, "tubing": json.dumps(tub.to_json())})
        lines.append(f"{tub}  b={tub.b}")
    _emit(rows, args.format, lines, out)
    return 0


def cmd_count(args, out) -> int:
    if args.tree:
        t = _tree(args)
        n = count_tubings(t)
        _emit([{"tree": t.to_text(), "tubings": n}], args.format, [f"tubings={n}"], out)
        return 0
    n = _order(args)
    rows = [{"tree": t.to_text(), "tubings": count_tubings(t)}
            for t in enumerate_trees(n, [Decoration(1)])]
    _emit(rows, args.format, [f"{r['tree']} tubings={r['tubings']}" for r in rows], out)
    return 0


def _solve_system(args, out) -> int:
    path = Path(args.system)
    if not path.is_file():
        raise UsageError(f"no such system file {args.system!r}")
    obj = json.loads(path.read_text(encoding="utf-8"))
    order = _order(args, obj.get("order"))
    table = MellinTable.from_json(obj["mellin"])
    s_map = {a: _rational(str(v)) for a, v in obj["s"].items()}
    spec = DSESpec(s_map, table, order)
    sols = solve_system(spec) if args.method == "tubing" else solve_fixed_point(spec)
    rows, lines = [], []
    for a in sorted(sols):
        G = sols[a]
        if args.emit == "gamma":
            gam = [format_scalar(c) for c in anomalous_dimension(G)]
            rows.append({"type": a, "gamma": gam})
            lines.append(f"{a}: " + ",".join(gam))
        elif args.emit == "green":
            for n in range(1, order + 1):
                rows.append({"type": a, "n": n, "L_coeffs": _lpoly_json(G.coeff(n))})
                lines.append(f"{a} x^{n}: {G.coeff(n)}")
        else:
            raise UsageError("systems support --emit gamma or green")
    _emit(rows, args.format, lines, out)
    return 0


def _solve_series(args, spec: DSESpec):
    if args.method == "tubing":
        return solve_tubing(spec)
    if args.method == "plane":
        return solve_tubing(spec, plane=True)
    if args.method == "fixed-point":
        return solve_fixed_point(spec)
    if args.method == "exp-star":
        return solve_exp_star(spec)
    return chords.chord_expansion(spec.s, spec.mellin, spec.order)


def cmd_solve(args, out) -> int:
    if args.system:
        return _solve_system(args, out)
    order = _order(args)
    s = _rational(args.s)
    table = _table(args, order)
    try:
        spec = DSESpec(s, table, order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.emit in ("gamma", "green"):
        try:
            G = _solve_series(args, spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.emit == "gamma":
            gam = anomalous_dimension(G)
            rows = [{"n": n, "gamma": format_scalar(c)} for n, c in enumerate(gam, start=1)]
            if all(not isinstance(c, Poly) for c in gam):
                lines = [",".join(format_scalar(c) for c in gam)]
            else:
                lines = [f"x^{r['n']}: {r['gamma']}" for r in rows]
        else:
            rows = [{"n": n, "L_coeffs": _lpoly_json(G.coeff(n))} for n in range(1, order + 1)]
            lines = [f"x^{n}: {G.coeff(n)}" for n in range(1, order + 1)]
        _emit(rows, args.format, lines, out)
        return 0
    if args.emit == "per-tree":
        rows = []
        for t, factor, amp in tree_terms(spec):
            if factor == 0:
                continue
            rows.append({"tree": t.to_text(), "factor": format_scalar(factor), "phi": str(amp)})
        _emit(rows, args.format, [f"{r['tree']}\t{r['factor']}\t{r['phi']}" for r in rows], out)
        return 0
    if args.emit == "per-tubing":
        rows = []
        for t, factor, _ in tree_terms(spec, plane=True):
            if factor == 0:
                continue
            for tub in enumerate_tubings(t):
                term = tubing_feynman_rules(tub, table) * factor
                rows.append({"tree": t.to_text(), "tubes": str(tub),
                             "diagram": chords.theta(tub).to_text(), "term": str(term)})
        _emit(rows, args.format, [f"{r['tree']}\t{r['tubes']}\t{r['term']}" for r in rows], out)
        return 0
    # per-diagram
    if s.denominator != 1 or s >= 0:
        raise UsageError("per-diagram output needs a negative integer --s")
    rows = []
    for C in chords.weighted_diagrams(order, [d.weight for d in table.decorations]):
        term = chords.diagram_contribution(C, s, table)
        if term.is_zero():
            continue
        ws = ",".join(str(C.weight(c)) for c in C.chords)
        rows.append({"diagram": C.to_text(), "weights": ws, "term": str(term)})
    _emit(rows, args.format, [f"{r['diagram']}\t{r['weights']}\t{r['term']}" for r in rows], out)
    return 0


def cmd_biject(args, out) -> int:
    if args.diagram:
        try:
            C = chords.ChordDiagram.parse(args.diagram)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not chords.is_connected(C):
            raise UsageError("diagram is not connected")
        tub, cmap = chords.mu_with_map(C)
        labels = chords.intersection_order(C)
        nus = chords.nu(C)
        row = {
            "diagram": C.to_text(),
            "tree": tub.host.to_text(),
            "tubes": str(tub),
            "terminals": list(labels.terminals),
            "nu": {f"({a},{b})": nus[(a, b)] for a, b in C.chords},
            "classes": chords.classify(C),
        }
        if chords.is_one_terminal(C):
            row["kappa"] = str(chords.kappa(C))
        lines = [f"{k}={v if isinstance(v, str) else json.dumps(v)}" for k, v in row.items()]
        if args.format == "json":
            out.write(json.dumps(row, indent=2) + "\n")
        else:
            _emit([], "text", lines, out)
        return 0
    t = _tree(args)
    rows = [{"tubes": str(tub), "diagram": chords.theta(tub).to_text()} for tub in enumerate_tubings(t)]
    _emit(rows, args.format, [f"{r['tubes']}\t{r['diagram']}" for r in rows], out)
    return 0


def cmd_verify(args, out) -> int:
    if args.max_n < 1:
        raise UsageError("--max must be >= 1")
    results = run_suite(args.suite, args.max_n, args.seed)
    rows = [{"check": name, "passed": ok} for name, ok in results]
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results]
    _emit(rows, args.format, lines, out)
    failed = [name for name, ok in results if not ok]
    for name in failed:
        print(f"verification failed: {name}", file=sys.stderr)
    return 1 if failed else 0


def cmd_bench(args, out) -> int:
    order = _order(args, 8)
    s = _rational(args.s)
    table = _table(args, order)
    spec = DSESpec(s, table, order)
    rows = []
    for method in ("tubing", "fixed-point"):
        start = time.perf_counter()
        if method == "tubing":
            solve_tubing(spec)
        else:
            solve_fixed_point(spec)
        rows.append({"method": method, "order": order, "seconds": f"{time.perf_counter() - start:.3f}"})
    _emit(rows, args.format, [f"{r['method']} order={r['order']} {r['seconds']}s" for r in rows], out)
    return 0


def _glue_values(argv: List[str]) -> List[str]:
    # "--s -1/2" would otherwise be read as an unknown option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--s" and i + 1 < len(argv):
            out.append(f"--s={argv[i + 1]}")
            i += 2
            continue
        out.append(argv[i])
        i += 1
    return out


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "solve": cmd_solve,
    "biject": cmd_biject,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"tubings-dse: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

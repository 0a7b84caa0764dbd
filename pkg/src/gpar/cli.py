"""Command line: gpar gen | ar | verify-theorems | coloring.

Exit codes: 0 ok, 1 a closed-form row disagrees (or a coloring check fails),
2 invalid input, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from pathlib import Path

from .coloring import CONSTRUCTIONS, check_construction, construction
from .engine import CSV_COLUMNS, anti_ramsey, theorem_table
from .errors import InputError, SearchBudgetExceeded
from .petersen import PetersenParams, generate

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args) -> int:
    p = PetersenParams.normalized(args.n, args.k)
    G = generate(p)
    if args.format == "dot":
        text = G.to_dot(f"P_{p.n}_{p.k}")
    else:
        text = G.to_json(indent=2) + "\n"
    _write(text, args.out)
    return EXIT_OK


def cmd_ar(args) -> int:
    try:
        res = anti_ramsey(args.n, args.k, args.d, method=args.method,
                          node_budget=args.budget, symmetry=args.symmetry)
    except SearchBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        print(f"Ar bracket: [{exc.lower}, {exc.upper}]", file=sys.stderr)
        return EXIT_BUDGET
    p = PetersenParams.normalized(args.n, args.k)
    print(f"Ar(P({p.n},{p.k}), C{args.d}) = {res.value}  [method {res.method}, "
          f"{res.dead_edge_count} copy-free edges, {res.nodes} search nodes]")
    if args.out:
        Path(args.out).write_text(res.to_json(indent=2) + "\n")
        print(f"result and certificates written to {args.out}")
    return EXIT_OK


def cmd_verify_theorems(args) -> int:
    rows = theorem_table(args.d, args.n_max, jobs=args.jobs, node_budget=args.budget)
    if args.report in (None, "-"):
        fh = sys.stdout
    else:
        fh = open(args.report, "w", newline="")
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow(r.csv_fields())
    finally:
        if fh is not sys.stdout:
            fh.close()
    bad = [r for r in rows if r.agree is False]
    skipped = [r for r in rows if r.agree is None]
    for r in bad:
        print(f"DISAGREE n={r.n} k={r.k}: closed form {r.closed_form}, computed {r.computed}",
              file=sys.stderr)
    for r in skipped:
        print(f"skipped n={r.n} k={r.k}: {r.status}", file=sys.stderr)
    print(f"{len(rows)} rows, {len(bad)} disagree, {len(skipped)} skipped", file=sys.stderr)
    return EXIT_DISAGREE if bad else EXIT_OK


def cmd_coloring(args) -> int:
    if args.check:
        col, witness = check_construction(args.lemma, args.n, args.k)
    else:
        col, witness = construction(args.lemma, args.n, args.k), None
    _write(col.to_json() + "\n", args.out)
    if args.check:
        if witness is None:
            print(f"{col.colors} colors, ok: no rainbow copy", file=sys.stderr)
        else:
            print(f"{col.colors} colors, rainbow copy {witness.label} "
                  f"edges {sorted(witness.edge_ids)}", file=sys.stderr)
            return EXIT_DISAGREE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gpar", description="Anti-Ramsey numbers of C5/C6 in generalized Petersen graphs")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit P(n,k) as JSON or DOT")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--format", choices=("json", "dot"), default="json")
    g.add_argument("--out", help="output file (default stdout)")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("ar", help="compute Ar(P(n,k), C_d) exactly")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--d", type=int, required=True, choices=(5, 6))
    a.add_argument("--method", choices=("auto", "packing", "cover", "oracle"), default="auto")
    a.add_argument("--budget", type=int, default=None,
                   help="search node budget (default $GPAR_NODE_BUDGET or 10^7)")
    sym = a.add_mutually_exclusive_group()
    sym.add_argument("--symmetry", dest="symmetry", action="store_true", default=None,
                     help="force rotation symmetry reduction")
    sym.add_argument("--no-symmetry", dest="symmetry", action="store_false")
    a.add_argument("--out", help="write the JSON result with certificates here")
    a.set_defaults(func=cmd_ar)

    v = sub.add_parser("verify-theorems", help="compare computed values with the closed forms")
    v.add_argument("--d", type=int, required=True, choices=(5, 6))
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    v.add_argument("--budget", type=int, default=None)
    v.add_argument("--report", help="CSV output path (default stdout)")
    v.set_defaults(func=cmd_verify_theorems)

    c = sub.add_parser("coloring", help="emit an explicit lower-bound coloring")
    c.add_argument("--lemma", required=True, choices=sorted(CONSTRUCTIONS, key=lambda s: float(s)))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--check", action="store_true", help="verify it has no rainbow copy")
    c.add_argument("--out", help="output file (default stdout)")
    c.set_defaults(func=cmd_coloring)
    return ap


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

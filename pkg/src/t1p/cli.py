"""Command-line front end.

Exit codes: 0 accept (or MATCH), 1 reject (or MISMATCH), 2 input error,
3 oracle timeout or exhausted search budget.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from .families import (
    CATALOG,
    VARIANTS,
    catalog_small,
    gen_planar_triangulation,
    gen_planted_t1p,
    gen_two_star,
)
from .graph import Graph, GraphError
from .io import InputError, format_edge_list, read_graph
from .oracle import OracleConstraints, OracleError, OracleTimeout, oracle_count
from .pipeline import SCHEMA_VERSION, SearchBudgetExceeded, recognize

EXIT_ACCEPT, EXIT_REJECT, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3
GRAPH_SUFFIXES = (".txt", ".edges", ".el", ".g6")


def _err(msg: str) -> None:
    print(f"t1p: {msg}", file=sys.stderr)


def _run(g: Graph, args) -> object:
    return recognize(g, time_budget=args.time_budget)


def _load(path: str) -> Graph:
    return read_graph(path)


def cmd_recognize(args) -> int:
    g = _load(args.input)
    res = _run(g, args)
    if args.format == "json":
        print(res.to_json())
    else:
        if res.is_t1p:
            print(f"T1P: yes  embeddings: {res.count}  crossings: {len(res.witness.crossings)}")
        else:
            print(f"T1P: no  reason: {res.reason}")
    return EXIT_ACCEPT if res.is_t1p else EXIT_REJECT


def cmd_count(args) -> int:
    res = _run(_load(args.input), args)
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, "count": res.count, "reason": res.reason},
                         sort_keys=True))
    else:
        print(res.count)
    return EXIT_ACCEPT if res.is_t1p else EXIT_REJECT


def cmd_witness(args) -> int:
    res = _run(_load(args.input), args)
    if not res.is_t1p:
        _err(f"no witness: {res.reason}")
        return EXIT_REJECT
    text = res.witness.to_json()
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    if args.trace:
        Path(args.trace).write_text(res.trace.to_json_lines())
    return EXIT_ACCEPT


def cmd_oracle(args) -> int:
    g = _load(args.input)
    cons = OracleConstraints(max_vertices=args.oracle_limit, time_budget=args.time_budget or 10.0)
    try:
        expected = oracle_count(g, cons)
    except OracleError as exc:
        _err(str(exc))
        return EXIT_INPUT
    res = _run(g, args)
    verdict = "MATCH" if expected == res.count else "MISMATCH"
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, "oracle": expected, "pipeline": res.count,
                          "verdict": verdict}, sort_keys=True))
    else:
        print(f"oracle: {expected}")
        print(f"pipeline: {res.count}")
        print(verdict)
    return EXIT_ACCEPT if verdict == "MATCH" else EXIT_REJECT


def cmd_generate(args) -> int:
    fam, params = args.family, args.params
    try:
        if fam == "two-star":
            if len(params) != 2 or params[0] not in VARIANTS:
                raise GraphError(f"usage: generate two-star {{{','.join(sorted(VARIANTS))}}} K")
            g = gen_two_star(params[0], int(params[1]))
        elif fam == "triangulation":
            if len(params) != 1:
                raise GraphError("usage: generate triangulation N [--seed S]")
            g = gen_planar_triangulation(int(params[0]), seed=args.seed)
        elif fam == "planted":
            if len(params) != 2:
                raise GraphError("usage: generate planted N CROSSINGS [--seed S]")
            inst = gen_planted_t1p(int(params[0]), int(params[1]), seed=args.seed)
            if not inst.complete:
                _err(f"placed only {len(inst.crossings)} of {inst.requested} crossings")
            g = inst.graph
        elif fam == "catalog":
            if len(params) != 1:
                raise GraphError(f"usage: generate catalog {{{','.join(CATALOG)}}}")
            g = catalog_small(params[0])
        else:
            raise GraphError(f"unknown family {fam!r}")
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    text = format_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_ACCEPT


# -- corpus ------------------------------------------------------------------

def read_expected(path: Path) -> Optional[int]:
    """``# expected_count: N`` header line, if present."""
    if path.suffix == ".g6":
        return None
    for line in path.read_text().splitlines():
        line = line.strip()
        if line.startswith("#") and "expected_count" in line:
            try:
                return int(line.split(":", 1)[1])
            except (IndexError, ValueError):
                return None
    return None


def corpus_row(path: str, oracle_limit: int, time_budget: Optional[float]) -> dict:
    p = Path(path)
    row: dict = {"name": p.name, "n": 0, "m": 0, "decision": "error", "count": "",
                 "expected": "", "status": "ERROR", "seconds": 0.0, "reason": ""}
    try:
        g = read_graph(p)
    except InputError as exc:
        row["reason"] = str(exc)
        return row
    row["n"], row["m"] = g.n, g.m
    expected = read_expected(p)
    t0 = time.perf_counter()
    try:
        res = recognize(g, time_budget=time_budget)
    except (SearchBudgetExceeded, OracleTimeout) as exc:
        row.update(decision="timeout", status="TIMEOUT", reason=str(exc),
                   seconds=round(time.perf_counter() - t0, 6))
        return row
    row["seconds"] = round(time.perf_counter() - t0, 6)
    row["decision"] = "accept" if res.is_t1p else "reject"
    row["count"] = res.count
    row["reason"] = res.reason or ""
    if expected is None and g.n <= oracle_limit:
        try:
            expected = oracle_count(g, OracleConstraints(max_vertices=oracle_limit))
        except (OracleTimeout, OracleError):
            expected = None
    if expected is None:
        row["status"] = "OK"
    else:
        row["expected"] = expected
        row["status"] = "MATCH" if expected == res.count else "MISMATCH"
    return row


def cmd_corpus(args) -> int:
    root = Path(args.directory)
    if not root.is_dir():
        _err(f"not a directory: {root}")
        return EXIT_INPUT
    files = sorted(str(p) for p in root.iterdir() if p.suffix in GRAPH_SUFFIXES)
    if not files:
        _err(f"no graph files in {root}")
        return EXIT_INPUT
    lim, tb = args.oracle_limit, args.time_budget
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(corpus_row, files, [lim] * len(files), [tb] * len(files)))
    else:
        rows = [corpus_row(f, lim, tb) for f in files]
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, "rows": rows}, sort_keys=True))
    else:
        print(f"{'name':<28} {'n':>5} {'m':>6} {'decision':>9} {'count':>8} {'expected':>8} "
              f"{'status':>9} {'seconds':>9}")
        for r in rows:
            print(f"{r['name']:<28} {r['n']:>5} {r['m']:>6} {r['decision']:>9} {r['count']!s:>8} "
                  f"{r['expected']!s:>8} {r['status']:>9} {r['seconds']:>9.4f}")
    if args.csv or args.plot:
        from .report import plot_runtime, write_csv
        if args.csv:
            write_csv(rows, args.csv)
        if args.plot:
            plot_runtime(rows, args.plot, title=f"corpus {root.name}")
    bad = [r for r in rows if r["status"] in ("MISMATCH", "ERROR")]
    if bad:
        return EXIT_REJECT
    if any(r["status"] == "TIMEOUT" for r in rows):
        return EXIT_TIMEOUT
    return EXIT_ACCEPT


def cmd_bench(args) -> int:
    from .report import loglog_slope, plot_runtime, write_csv
    rows = []
    for n in args.sizes:
        g = gen_planar_triangulation(n, seed=args.seed)
        t0 = time.perf_counter()
        res = recognize(g, time_budget=args.time_budget)
        dt = time.perf_counter() - t0
        rows.append({"name": f"triangulation-{n}", "n": n, "m": g.m,
                     "decision": "accept" if res.is_t1p else "reject", "count": res.count,
                     "expected": 1, "status": "MATCH" if res.count == 1 else "MISMATCH",
                     "seconds": round(dt, 6), "reason": res.reason or ""})
        print(f"n={n:<6} m={g.m:<6} count={res.count} seconds={dt:.3f}")
    slope = loglog_slope([r["n"] for r in rows], [r["seconds"] for r in rows]) if len(rows) > 1 else 0.0
    print(f"log-log slope: {slope:.3f}")
    if args.csv:
        write_csv(rows, args.csv)
    if args.plot:
        plot_runtime(rows, args.plot, title="triangulated planar inputs")
    return EXIT_ACCEPT if all(r["status"] == "MATCH" for r in rows) else EXIT_REJECT


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--oracle-limit", type=int, default=10,
                        help="largest order checked against the oracle")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--time-budget", type=float, default=None,
                        help="seconds per graph before giving up")

    ap = argparse.ArgumentParser(prog="t1p", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name, fn, helptext in (
        ("recognize", cmd_recognize, "decide, count and print the result JSON"),
        ("count", cmd_count, "print the number of T1P embeddings"),
        ("witness", cmd_witness, "print a witness embedding"),
        ("oracle", cmd_oracle, "compare the pipeline with the brute-force oracle"),
    ):
        p = sub.add_parser(name, help=helptext, parents=[common])
        p.add_argument("input")
        if name == "witness":
            p.add_argument("--output", "-o")
            p.add_argument("--trace", help="write the reduction trace as JSON lines")
        p.set_defaults(func=fn)
    p = sub.add_parser("generate", help="write a generated graph as an edge list",
                       parents=[common])
    p.add_argument("family", help="two-star | triangulation | planted | catalog")
    p.add_argument("params", nargs="*")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_generate)
    p = sub.add_parser("corpus", help="run every graph file in a directory", parents=[common])
    p.add_argument("directory")
    p.add_argument("--csv")
    p.add_argument("--plot")
    p.set_defaults(func=cmd_corpus)
    p = sub.add_parser("bench", help="runtime on triangulated planar inputs", parents=[common])
    p.add_argument("sizes", nargs="+", type=int)
    p.add_argument("--csv")
    p.add_argument("--plot")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _err(str(exc))
        return EXIT_INPUT
    except (OracleTimeout, SearchBudgetExceeded) as exc:
        _err(f"timeout: {exc}")
        return EXIT_TIMEOUT


if __name__ == "__main__":
    sys.exit(main())

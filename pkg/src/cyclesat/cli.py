"""Command-line front end: ``cyclesat <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or range error,
3 budget exhausted without a definitive answer.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional

from . import __version__
from .analysis import DischargeError, discharge, probe_report
from .constructions import (
    ConstructionError,
    FormulaRangeError,
    formula_table,
    generate,
    parse_construction,
    sat_formula,
)
from .conjectures import check_conjecture
from .families import FamilyError, parse_family
from .graph import Graph, Graph6Error, GraphError, decode_graph6, encode_graph6, to_dot
from .saturation import check_saturated
from .search import Budget, compute_sat
from .store import ResultRecord, merge_records, reverify, store_append, store_path, store_records

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

log = logging.getLogger("cyclesat")


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(human)


def _read_graph(args) -> Graph:
    if getattr(args, "construct", None):
        return generate(parse_construction(args.construct))
    text = args.graph6
    if text is None or text == "-":
        text = sys.stdin.readline()
    text = text.strip()
    if not text:
        raise UsageError("no graph given; use --graph6 or --construct")
    return decode_graph6(text)


def _budget(args) -> Budget:
    return Budget(max_edges=args.max_edges, timeout=args.timeout)


def _ns(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part or ".." in part:
            lo, hi = part.replace("..", "-").split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty range")
    return out


# -- subcommands --------------------------------------------------------------


def cmd_construct(args) -> int:
    g = generate(parse_construction(args.spec))
    if args.format == "dot":
        print(to_dot(g, args.spec.split("(")[0]))
    elif args.format == "json" or args.json:
        print(json.dumps({"construction": args.spec, "n": g.n, "m": g.m,
                          "graph6": encode_graph6(g).decode("ascii"),
                          "edges": [list(e) for e in g.edges()]}, sort_keys=True))
    else:
        print(encode_graph6(g).decode("ascii"))
    return EXIT_OK


def cmd_verify(args) -> int:
    fam = parse_family(args.family)
    g = _read_graph(args)
    v = check_saturated(g, fam)
    human = f"{v.status}  n={g.n} m={g.m} family={fam}"
    if v.witness:
        human += f"  witness={v.witness}"
    _emit(v.to_json(), args.json, human)
    return EXIT_OK if v.saturated else EXIT_FAIL


def cmd_search(args) -> int:
    fam = parse_family(args.family)
    res = compute_sat(args.n, fam, budget=_budget(args), mode=args.mode, jobs=args.jobs)
    if not args.no_store:
        store_append(store_path(args.store), ResultRecord.from_result(res))
    if res.value is None:
        human = f"sat({args.n}, {fam}) >= {res.lower_bound}  (budget exhausted)"
    else:
        tag = "" if res.exhaustive else "  (level incomplete)"
        human = f"sat({args.n}, {fam}) = {res.value}{tag}\n" + "\n".join(f"  {w}" for w in res.witnesses)
    _emit(res.to_json(), args.json, human)
    return EXIT_OK if res.value is not None and res.exhaustive else EXIT_BUDGET


def cmd_probe(args) -> int:
    rep = probe_report(_read_graph(args))
    lines = [f"graph6 {rep['graph6']}"]
    for name, members in rep["classes"].items():
        lines.append(f"  {name:10s} {members}")
    for p in rep["degenerated_paths"]:
        lines.append(f"  path {p['vertices']} extension {p['extension']}{' closed' if p['closed'] else ''}")
    for c in rep["pure_cycles"]:
        lines.append(f"  pure cycle {c}")
    for name, ok in rep["probes"].items():
        lines.append(f"  {name:40s} {'yes' if ok else 'no'}")
    _emit(rep, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_discharge(args) -> int:
    ledger = discharge(_read_graph(args))
    data = ledger.to_json()
    lines = [f"{'v':>4} {'ch':>6} {'ch*':>6}"]
    for v, (a, b) in enumerate(zip(ledger.initial, ledger.final)):
        lines.append(f"{v:>4} {a / 4:>6g} {b / 4:>6g}")
    lines.append(f"total {ledger.total_initial} -> {ledger.total_final}")
    _emit(data, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_conjecture(args) -> int:
    rep = check_conjecture(args.id, args.ns, budget=_budget(args), r=args.r, s=args.s, a=args.a, jobs=args.jobs)
    lines = [rep.statement, f"{'n':>4} {'conj':>6} {'found':>6}  status"]
    for row in rep.rows:
        found = row.computed if row.computed is not None else f">={row.lower_bound}"
        lines.append(f"{row.n:>4} {str(row.conjectured):>6} {str(found):>6}  {row.status}")
    if rep.skipped:
        lines.append(f"skipped n={rep.skipped}")
    _emit(rep.to_json(), args.json, "\n".join(lines))
    return EXIT_OK


def cmd_formula(args) -> int:
    if args.table:
        table = formula_table()
        _emit(table, args.json, "\n".join(f"{e['key']:12s} {e['closed_form']:28s} {e['validity']:18s} {e['status']}"
                                          for e in table))
        return EXIT_OK
    if args.family is None or args.n is None:
        raise UsageError("formula needs --family and --n, or --table")
    val = sat_formula(args.family, args.n, via_truncation=args.via_truncation)
    if val.value is not None:
        human = f"{val.value}  {val.status}  ({val.source})"
    else:
        human = f"between {val.lower} and {val.upper}  {val.status}  ({val.source})"
    _emit(val.to_json(), args.json, human)
    return EXIT_OK


def cmd_reverify(args) -> int:
    problems = reverify(store_path(args.store))
    _emit({"problems": problems}, args.json, "\n".join(problems) or "all stored witnesses verified")
    return EXIT_FAIL if problems else EXIT_OK


def cmd_merge(args) -> int:
    recs = []
    for p in args.inputs:
        recs.extend(store_records(p))
    merged = merge_records(recs)
    with open(args.output, "w", encoding="utf-8") as fh:
        for rec in merged:
            fh.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    _emit({"records": len(merged)}, args.json, f"wrote {len(merged)} records to {args.output}")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", help="graph6 string, or '-' to read one line from stdin (the default)")
    src.add_argument("--construct", metavar="SPEC", help="named construction, e.g. 'SatN(10)'")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-edges", type=int, help="give up past this many edges")
    p.add_argument("--timeout", type=float, help="give up after this many seconds")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON on stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="cyclesat", description="Cycle-family saturation toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="emit a named construction")
    p.add_argument("spec", help="e.g. 'SatN(10)', 'JGraph(4,1,1)', 'FriendshipPlus(3)'")
    p.add_argument("--format", choices=("graph6", "dot", "json"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check that a graph is saturated for a family")
    p.add_argument("--family", required=True)
    _add_graph_input(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="compute sat(n, family) exhaustively")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--mode", choices=("value", "full"), default="value")
    _add_budget(p)
    p.add_argument("--store", help="result store path (default: $SATDB or satdb.jsonl)")
    p.add_argument("--no-store", action="store_true", help="do not append the result to the store")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("probe", parents=[common], help="degree classes, degenerated paths and structural probes")
    _add_graph_input(p)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("discharge", parents=[common], help="run the quarter-charge discharging rules")
    _add_graph_input(p)
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("conjecture", parents=[common], help="compare a conjecture with search")
    p.add_argument("--id", type=int, required=True, choices=range(1, 6))
    p.add_argument("--n", dest="ns", type=_ns, required=True, help="e.g. '3-8' or '4,6,8'")
    p.add_argument("--r", type=int, default=6)
    p.add_argument("--s", type=int, default=4)
    p.add_argument("--a", type=int, default=2)
    _add_budget(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("formula", parents=[common], help="closed-form saturation numbers")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--via-truncation", action="store_true",
                   help="also answer through sat(n, I) = sat(n, I truncated to [3,n])")
    p.add_argument("--table", action="store_true", help="dump the whole table")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("reverify", parents=[common], help="re-check every witness in the store")
    p.add_argument("--store")
    p.set_defaults(func=cmd_reverify)

    p = sub.add_parser("merge", parents=[common], help="merge stores, one record per (family, n)")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_merge)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, FamilyError, ConstructionError, FormulaRangeError, Graph6Error, GraphError, ValueError) as exc:
        if isinstance(exc, DischargeError):
            print(f"cyclesat: discharge: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"cyclesat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:  # witness re-check failed
        print(f"cyclesat: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

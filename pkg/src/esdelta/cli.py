"""Command-line entry point: ``esdelta report|verify|generate``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 graph not valid for the requested operation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import EdgelessGraphError, GraphError, ParseError
from .generators import parse_family
from .graph import Graph
from .io import parse_graph_text, read_graph6_lines, to_edgelist, to_graph6
from .oracle import sweep
from .stability import stability_report
from .verify import SUITES, Options, random_corpus, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _single_graph(args: argparse.Namespace) -> Graph:
    given = [x for x in (args.input, args.g6, args.family) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --input, --g6, --family")
    try:
        if args.g6 is not None:
            return parse_graph_text(args.g6)
        if args.family is not None:
            return parse_family(args.family)
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return parse_graph_text(text)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except (ParseError, GraphError, UnicodeError) as exc:
        raise ParseError(str(exc)) from None


def _corpus(args: argparse.Namespace) -> list[Graph]:
    graphs: list[Graph] = []
    try:
        if args.input is not None:
            text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
            lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
            if lines and all(len(ln.split()) == 1 for ln in lines):
                graphs.extend(read_graph6_lines(lines))
            else:
                graphs.append(parse_graph_text(text))
        for g6 in args.g6 or []:
            graphs.append(parse_graph_text(g6))
        for fam in args.family or []:
            graphs.append(parse_family(fam))
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except (ParseError, GraphError, UnicodeError) as exc:
        raise ParseError(str(exc)) from None
    if args.sweep is not None or args.deep:
        graphs.extend(sweep(7 if args.deep else args.sweep))
    if args.random:
        graphs.extend(random_corpus(args.random, args.seed, max_n=args.max_n))
    if not graphs:
        raise UsageError("empty corpus: give --input, --g6, --family, --sweep, --deep or --random")
    return graphs


def cmd_report(args: argparse.Namespace) -> int:
    g = _single_graph(args)
    g.require_edges()
    sys.stdout.write(_dump(stability_report(g).to_dict()))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        g = parse_family(args.spec)
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    out = to_graph6(g) + "\n" if args.format == "g6" else to_edgelist(g)
    sys.stdout.write(out)
    if args.with_report:
        g.require_edges()
        sys.stdout.write(_dump(stability_report(g).to_dict()))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = [s.strip() for s in args.suite.split(",") if s.strip()]
    if names == ["all"]:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; known: {', '.join(SUITES)}")
    graphs = _corpus(args)
    opt = Options(core_limit=args.threshold_exact)
    summaries = run_suites(graphs, names, opt, jobs=args.jobs)
    ok = all(s.ok for s in summaries)
    if args.json:
        payload = {
            "schema": 1,
            "graphs": len(graphs),
            "ok": ok,
            "suites": [
                {
                    "name": s.name,
                    "checked": s.checked,
                    "skipped": s.skipped,
                    "failed": [{"graph6": g6, "failures": f} for g6, f in s.failed],
                    "notes": [{"graph6": g6, "notes": n} for g6, n in s.notes],
                }
                for s in summaries
            ],
        }
        sys.stdout.write(_dump(payload))
    else:
        for s in summaries:
            status = "PASS" if s.ok else "FAIL"
            if not args.quiet or not s.ok:
                print(f"{status} {s.name}: checked={s.checked} skipped={s.skipped} failed={len(s.failed)}")
            for g6, fails in s.failed[:20]:
                print(f"  {g6}: {'; '.join(fails)}")
            if not args.quiet:
                for g6, notes in s.notes[:5]:
                    print(f"  note {g6}: {'; '.join(notes)}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="esdelta", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    rp = sub.add_parser("report", help="JSON stability report for one graph")
    rp.add_argument("--input", metavar="PATH", help="graph6 line or edge list file ('-' for stdin)")
    rp.add_argument("--g6", metavar="STRING")
    rp.add_argument("--family", metavar="SPEC", help="e.g. gk:2, gt:7, cycle:5, kbip:3,3")
    rp.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    rp.set_defaults(func=cmd_report)

    gp = sub.add_parser("generate", help="emit a member of a graph family")
    gp.add_argument("spec", metavar="FAMILY")
    gp.add_argument("--format", choices=("g6", "edgelist"), default="g6")
    gp.add_argument("--with-report", action="store_true")
    gp.set_defaults(func=cmd_generate)

    vp = sub.add_parser("verify", help="run property suites over a corpus")
    vp.add_argument("--suite", default="all", help=f"comma list of: {', '.join(SUITES)} (or 'all')")
    vp.add_argument("--input", metavar="PATH", help="file of graph6 lines, or one edge list")
    vp.add_argument("--g6", metavar="STRING", action="append")
    vp.add_argument("--family", metavar="SPEC", action="append")
    vp.add_argument("--sweep", metavar="N", type=int, help="all connected graphs with 2..N vertices")
    vp.add_argument("--deep", action="store_true", help="sweep up to N = 7 (slow)")
    vp.add_argument("--random", metavar="COUNT", type=int, default=0, help="add seeded random graphs")
    vp.add_argument("--max-n", type=int, default=12, help="order cap for --random")
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--threshold-exact", type=int, default=10, help="largest core for exhaustive checks")
    vp.add_argument("--jobs", type=int, default=1)
    vp.add_argument("--json", action="store_true")
    vp.add_argument("--quiet", action="store_true")
    vp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EdgelessGraphError as exc:
        print(f"esdelta: invalid graph: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, ParseError) as exc:
        print(f"esdelta: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

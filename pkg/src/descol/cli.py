#!/usr/bin/env python3
"""descol command line.

Examples:
    descol thread gen --depth 8 > t.txt
    descol thread check t.txt
    descol g0 level --k 3 --thread t.txt
    descol chrom k4.col --oracle
    descol verify c5.col --coloring c5.txt
    descol shift3 --lasso "3:2,0;1"
    descol shift3 sweep --alphabet 3 --max-prefix 4 --max-cycle 4
    descol color palette petersen.col
    descol obstruct --family g1 --depth 3
    descol check solver levels

Exit codes: 0 success, 1 failed verdict, 2 usage or input error.
With --json every command prints one JSON object (sorted keys).
"""

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from descol import __version__
from descol.colorings import (
    mis_peel_color, palette_color, shift3_case, shift3_color, transfer_3color,
    two_color_acyclic,
)
from descol.config import load_config
from descol.experiments import BATTERIES, run_battery, sweep_shift3
from descol.formats import (
    format_coloring, format_functions, format_graph, format_level_graph, format_thread,
    parse_coloring, parse_functions, parse_graph, parse_thread,
)
from descol.graphs import (
    component_transversal, components, covering_family, generate_graph, uniformize,
)
from descol.report import (
    format_battery_report, format_chi_report, format_obstruction, format_sweep_report,
    format_thread_report, format_verify_report,
)
from descol.seqspace import format_lasso, parse_lasso, shift, shift_graph
from descol.solver import (
    brute_force_chi, chromatic_number, improper_edges, is_proper, to_dimacs_cnf,
)
from descol.thread import (
    FAMILIES, canonical_thread, check_obstruction, level_graph, prefix_obstruction,
    random_thread, validate_thread,
)

log = logging.getLogger(__name__)


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


def _load_functions(path: str):
    try:
        return parse_functions(_read(path))
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


def _load_thread(path: str | None, depth: int):
    if path is None:
        return canonical_thread(depth)
    try:
        return parse_thread(_read(path))
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


def _edges_1based(g) -> list[list[int]]:
    return [[u + 1, v + 1] for u, v in g.sorted_edges()]


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (exit_code, json payload, text)
# ---------------------------------------------------------------------------

def cmd_thread_gen(args, config):
    if args.depth < 1:
        raise ValueError(f"--depth must be >= 1, got {args.depth}")
    if args.seed is None:
        t = canonical_thread(args.depth)
    else:
        t = random_thread(args.depth, random.Random(args.seed))
    payload = {"depth": t.depth, "rows": list(t.rows)}
    return 0, payload, format_thread(t).rstrip("\n")


def cmd_thread_check(args, config):
    result = validate_thread(_load_thread(args.file, depth=1))
    return (0 if result["valid"] else 1), result, format_thread_report(result)


def cmd_g0_level(args, config):
    if args.k < 0:
        raise ValueError(f"--k must be >= 0, got {args.k}")
    t = _load_thread(args.thread, args.k + 1)
    level = level_graph(t, args.k)
    payload = {
        "k": args.k,
        "vertices": level.graph.vertex_count,
        "edges": _edges_1based(level.graph),
        "labels": [level.label(v) for v in range(level.graph.vertex_count)],
    }
    return 0, payload, format_level_graph(level).rstrip("\n")


def cmd_chrom(args, config):
    g = _load_graph(args.file)
    result = chromatic_number(g)
    oracle = None
    if args.oracle:
        oracle = brute_force_chi(g, config["solver"]["brute_force_max_vertices"])
    payload = {
        "chi": result.chi,
        "witness": list(result.witness.colours),
        "clique": (None if result.lower_bound_certificate is None
                   else [v + 1 for v in result.lower_bound_certificate]),
        "oracle": oracle,
        "agrees": None if oracle is None else oracle == result.chi,
    }
    code = 1 if oracle is not None and oracle != result.chi else 0
    return code, payload, format_chi_report(result, oracle)


def cmd_verify(args, config):
    g = _load_graph(args.file)
    try:
        c = parse_coloring(_read(args.coloring), g.vertex_count)
    except ValueError as e:
        raise ValueError(f"{args.coloring}: {e}") from None
    bad = improper_edges(g, c)
    payload = {
        "proper": not bad,
        "improper_edges": [[u + 1, v + 1] for u, v in bad],
        "colours": c.distinct_colours,
    }
    return (1 if bad else 0), payload, format_verify_report(bad, c.distinct_colours)


def cmd_shift3(args, config):
    if args.mode == "sweep":
        result = sweep_shift3([args.alphabet], args.max_prefix, args.max_cycle)
        return (0 if result["ok"] else 1), result, format_sweep_report(result)
    if args.mode == "graph":
        g, labels = shift_graph(args.alphabet, args.max_prefix, args.max_cycle)
        colouring_ok = all(
            shift3_color(labels[u]) != shift3_color(labels[v]) for u, v in g.edges
        )
        chi = chromatic_number(g).chi
        payload = {"vertices": g.vertex_count, "edges": g.edge_count, "chi": chi,
                   "shift3_proper": colouring_ok}
        text = "\n".join([
            f"shift graph on {g.vertex_count} lassos, {g.edge_count} edges",
            f"chi {chi}",
            f"shift3 colouring {'proper' if colouring_ok else 'IMPROPER'}",
        ])
        return (0 if colouring_ok and chi <= 3 else 1), payload, text
    if args.lasso is None:
        raise ValueError("shift3 needs --lasso SPEC or a 'sweep'/'graph' mode")
    x = parse_lasso(args.lasso)
    if x.alphabet < 2:
        raise ValueError(f"shift3 needs alphabet >= 2, got {x.alphabet}")
    y = shift(x)
    payload = {
        "lasso": format_lasso(x),
        "colour": shift3_color(x),
        "case": shift3_case(x),
        "shift": format_lasso(y),
        "shift_colour": shift3_color(y),
    }
    text = "\n".join([
        f"{payload['lasso']} colour {payload['colour']} (case {payload['case']})",
        f"{payload['shift']} colour {payload['shift_colour']} (shift)",
    ])
    return 0, payload, text


def cmd_gen_graph(args, config):
    g = generate_graph(_load_functions(args.functions))
    payload = {"vertices": g.vertex_count, "edges": _edges_1based(g)}
    return 0, payload, format_graph(g).rstrip("\n")


def cmd_uniformize(args, config):
    pairs = sorted(uniformize(_load_functions(args.functions)))
    payload = {"pairs": [[x + 1, y + 1] for x, y in pairs]}
    return 0, payload, "\n".join(f"{x + 1} {y + 1}" for x, y in pairs)


def cmd_cover(args, config):
    spec = covering_family(_load_graph(args.file))
    payload = {
        "vertices": spec.vertex_count,
        "functions": [[w + 1 for w in f] for f in spec.functions],
    }
    return 0, payload, format_functions(spec).rstrip("\n")


def cmd_color(args, config):
    if args.engine == "transfer":
        if args.functions is None:
            raise ValueError("color transfer needs --functions FILE")
        spec = _load_functions(args.functions)
        g = generate_graph(spec)
        c = transfer_3color(spec)
    else:
        if args.file is None:
            raise ValueError(f"color {args.engine} needs a graph FILE")
        g = _load_graph(args.file)
        if args.engine == "mis":
            c = mis_peel_color(g)
        elif args.engine == "palette":
            c = palette_color(g, components(g))
        else:
            if args.transversal:
                transversal = [_parse_vertex(tok) for tok in args.transversal.split(",")]
            else:
                transversal = component_transversal(components(g))
            c = two_color_acyclic(g, transversal)

    proper = is_proper(g, c)
    payload = {
        "engine": args.engine,
        "colours": list(c.colours),
        "proper": proper,
        "distinct_colours": c.distinct_colours,
    }
    text = format_coloring(c) + "\n".join([
        f"c proper {'yes' if proper else 'no'}",
        f"c colours {c.distinct_colours}",
    ])
    return (0 if proper else 1), payload, text


def _parse_vertex(tok: str) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ValueError(f"bad vertex {tok!r} in --transversal") from None
    if v < 1:
        raise ValueError(f"bad vertex {tok!r} in --transversal")
    return v - 1


def cmd_obstruct(args, config):
    thread = None
    if args.family == "g0":
        thread = _load_thread(args.thread, args.depth + 2)
    w = prefix_obstruction(args.family, args.depth, args.colours, thread=thread)
    holds = check_obstruction(w, thread=thread)
    if w.family == "g1":
        first, second = format_lasso(w.first), format_lasso(w.second)
    else:
        first, second = w.first, w.second
    payload = {"family": w.family, "depth": w.depth, "colours": w.colours,
               "first": first, "second": second, "level": w.level, "valid": holds}
    return (0 if holds else 1), payload, format_obstruction(w, holds)


def cmd_export_cnf(args, config):
    g = _load_graph(args.file)
    if args.k < 1:
        raise ValueError(f"--k must be >= 1, got {args.k}")
    text = to_dimacs_cnf(g, args.k).rstrip("\n")
    return 0, {"k": args.k, "cnf": text}, text


def cmd_check(args, config):
    results = run_battery(args.names, config)
    ok = all(r["ok"] for r in results)
    return (0 if ok else 1), {"ok": ok, "results": results}, format_battery_report(results)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="descol",
        description="Constructive colourings checked at desk scale",
    )
    parser.add_argument("--version", action="version", version=f"descol {__version__}")
    parser.add_argument("--json", action="store_true",
                        help="Print one JSON object instead of text")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr (-vv for debug)")
    parser.add_argument("--config", default=None,
                        help="Settings YAML (default: ./config.yaml if present)")
    sub = parser.add_subparsers(dest="command", required=True)

    thread = sub.add_parser("thread", help="Dense thread files")
    thread_sub = thread.add_subparsers(dest="mode", required=True)
    p = thread_sub.add_parser("gen", help="Emit a dense thread")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--seed", type=int, default=None,
                   help="Pad with random bits (default: canonical zero padding)")
    p.set_defaults(handler=cmd_thread_gen)
    p = thread_sub.add_parser("check", help="Validate a thread file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_thread_check)

    g0 = sub.add_parser("g0", help="Finite levels of G_s")
    g0_sub = g0.add_subparsers(dest="mode", required=True)
    p = g0_sub.add_parser("level", help="Emit level k as a graph file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--thread", default=None, help="Thread file (default: canonical)")
    p.set_defaults(handler=cmd_g0_level)

    p = sub.add_parser("chrom", help="Exact chromatic number")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true",
                   help="Also run the brute-force oracle and compare")
    p.set_defaults(handler=cmd_chrom)

    p = sub.add_parser("verify", help="Check a colouring file against a graph")
    p.add_argument("file")
    p.add_argument("--coloring", required=True)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("shift3", help="Shift-graph 3-colouring")
    p.add_argument("mode", nargs="?", choices=["sweep", "graph"], default=None)
    p.add_argument("--lasso", default=None, help="e.g. '3:2,0;1'")
    p.add_argument("--alphabet", type=int, default=3)
    p.add_argument("--max-prefix", type=int, default=4)
    p.add_argument("--max-cycle", type=int, default=4)
    p.set_defaults(handler=cmd_shift3)

    p = sub.add_parser("gen-graph", help="Graph generated by a function family")
    p.add_argument("--functions", required=True)
    p.set_defaults(handler=cmd_gen_graph)

    p = sub.add_parser("uniformize", help="Least-index selection pairs")
    p.add_argument("--functions", required=True)
    p.set_defaults(handler=cmd_uniformize)

    p = sub.add_parser("cover", help="Function family generating a graph")
    p.add_argument("file")
    p.set_defaults(handler=cmd_cover)

    p = sub.add_parser("color", help="Run a colouring engine")
    p.add_argument("engine", choices=["mis", "acyclic", "palette", "transfer"])
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--transversal", default=None,
                   help="Comma-separated vertices, one per component")
    p.add_argument("--functions", default=None)
    p.set_defaults(handler=cmd_color)

    p = sub.add_parser("obstruct", help="Prefix-determined colouring obstruction")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--colours", type=int, default=2)
    p.add_argument("--thread", default=None)
    p.set_defaults(handler=cmd_obstruct)

    p = sub.add_parser("export-cnf", help="DIMACS CNF of k-colourability")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_export_cnf)

    p = sub.add_parser("check", help="Run property batteries")
    p.add_argument("names", nargs="*", metavar="NAME",
                   help=f"Any of: {', '.join(BATTERIES)} (default: all)")
    p.set_defaults(handler=cmd_check)
    return parser


def _command_name(args) -> str:
    mode = getattr(args, "mode", None) or getattr(args, "engine", None)
    return f"{args.command} {mode}" if mode else args.command


def run(argv=None) -> int:
    """Parse argv, run one subcommand, print its report; return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        config = load_config(args.config)
        code, payload, text = args.handler(args, config)
    except (ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2

    log.info("%s finished with exit code %d", _command_name(args), code)
    if args.json:
        payload = dict(payload)
        payload["command"] = _command_name(args)
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line interface.

Subcommands: gen, color, verify, exact, bench, export-dot.  Graph and
coloring payloads go to stdout; summaries, traces, and witnesses go to
stderr.  Exit codes: 0 success, 1 usage or I/O error, 2 verification
failure, 3 a construction fallback was exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Optional, Sequence

from . import gen as genmod
from . import graphio
from .core import EdgeColoring, HalinGraph, build_halin
from .cubic import color_cubic
from .errors import (
    HalinError,
    NoColorAvailable,
    NodeLimitReached,
    StarViolationProduced,
)
from .exact import SearchConfig, is_star_colorable, search_colorable
from .general import color_halin, palette_bound
from .report import ColoringStats
from .verify import find_all_violations, find_violation

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_FALLBACK_EXHAUSTED = 3

SWEEP_SCHEMA = "# halinstar sweep schema=1"
SWEEP_COLUMNS = (
    "instance",
    "family",
    "vertices",
    "cycle",
    "delta",
    "algorithm",
    "colors",
    "bound",
    "valid",
    "fallbacks",
    "exact",
    "seconds",
)

_DOT_PALETTE = (
    "#e6194b", "#3cb44b", "#d4a017", "#4363d8", "#f58231", "#911eb4",
    "#42d4f4", "#f032e6", "#bfef45", "#fabed4", "#469990", "#9a6324",
    "#800000", "#808000", "#000075", "#a9a9a9",
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(path: str) -> HalinGraph:
    return build_halin(graphio.parse_tree(_read_text(path)))


def _cmd_gen(args) -> int:
    spec = genmod.GenSpec(
        family=args.family, n=args.n, delta=args.delta, seed=args.seed
    )
    tree = genmod.generate(spec)
    sys.stdout.write(graphio.serialize_tree(tree))
    return EXIT_OK


def _print_witness(violation) -> None:
    ids = ",".join(map(str, violation.edges))
    colors = ",".join(map(str, violation.colors))
    print(f"VIOLATION {violation.kind} {ids} {colors}", file=sys.stderr)


def _cmd_color(args) -> int:
    g = _load_graph(args.graph)
    stats = ColoringStats()
    trace: Optional[list] = [] if args.trace else None
    try:
        if args.cubic:
            stats.algorithm = "cubic-inductive"
            coloring = color_cubic(g, stats=stats, trace=trace)
        else:
            coloring = color_halin(g, stats=stats, trace=trace)
    except (StarViolationProduced, NoColorAvailable) as exc:
        print(f"FALLBACK-EXHAUSTED {exc}", file=sys.stderr)
        return EXIT_FALLBACK_EXHAUSTED
    if trace:
        for frame in trace:
            print(json.dumps(frame), file=sys.stderr)
    violation = find_violation(g, coloring)
    valid = violation is None and coloring.is_total
    sys.stdout.write(graphio.serialize_coloring(g, coloring))
    bound = palette_bound(g.delta)
    print(
        f"RESULT colors={coloring.num_colors_used} bound={bound} "
        f"valid={str(valid).lower()} fallbacks={stats.fallbacks}",
        file=sys.stderr,
    )
    if not valid:
        if violation is not None:
            _print_witness(violation)
        return EXIT_INVALID
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    coloring = graphio.parse_coloring(g, _read_text(args.coloring))
    if args.all:
        violations = list(find_all_violations(g, coloring))
        for v in violations:
            _print_witness(v)
        if violations:
            return EXIT_INVALID
    violation = find_violation(g, coloring)
    if violation is not None:
        if not args.all:
            _print_witness(violation)
        return EXIT_INVALID
    if not coloring.is_total:
        missing = [e for e in range(g.num_edges) if coloring.get(e) is None]
        ids = ",".join(map(str, missing))
        print(f"VIOLATION Unassigned {ids} -", file=sys.stderr)
        return EXIT_INVALID
    print(f"VALID colors={coloring.num_colors_used}")
    return EXIT_OK


def _cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    cfg = SearchConfig(node_limit=args.node_limit)
    nodes = 0
    answer: Optional[int] = None
    hi = args.max_colors if args.max_colors is not None else g.num_edges
    try:
        for k in range(g.delta, hi + 1):
            found, spent = search_colorable(g, k, cfg)
            nodes += spent
            if found is not None:
                answer = k
                break
    except NodeLimitReached as exc:
        nodes += exc.nodes
    chi = str(answer) if answer is not None else "unknown"
    print(f"EXACT chi_s={chi} nodes={nodes}")
    return EXIT_OK


def _parse_delta_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _bench_spec(delta: int, index: int, seed: int) -> genmod.GenSpec:
    # size knob cycles through small internal counts, capped near 40 vertices
    if delta == 3:
        internal = 1 + index % 19
        return genmod.GenSpec("cubicRandom", n=internal, seed=seed)
    max_internal = max(2, (40 - delta - 1) // delta + 1)
    internal = 1 + index % max_internal
    return genmod.GenSpec("boundedDeltaRandom", n=internal, delta=delta, seed=seed)


def _cmd_bench(args) -> int:
    deltas = _parse_delta_range(args.delta)
    rows = []
    for delta in deltas:
        for i in range(args.count):
            spec = _bench_spec(delta, i, args.seed + 7919 * delta + i)
            tree = genmod.generate(spec)
            g = build_halin(tree)
            stats = ColoringStats()
            t0 = time.perf_counter()
            coloring = color_halin(g, stats=stats)
            seconds = time.perf_counter() - t0
            valid = find_violation(g, coloring) is None and coloring.is_total
            exact_value = ""
            if args.exact_upto and g.num_edges <= args.exact_upto:
                try:
                    for k in range(g.delta, g.num_edges + 1):
                        if is_star_colorable(g, k) is not None:
                            exact_value = str(k)
                            break
                except NodeLimitReached:
                    exact_value = "unknown"
            rows.append(
                (
                    f"{spec.family}-d{delta}-{i}",
                    spec.family,
                    g.n_vertices,
                    len(g.cycle),
                    g.delta,
                    stats.algorithm,
                    coloring.num_colors_used,
                    palette_bound(g.delta),
                    str(valid).lower(),
                    stats.fallbacks,
                    exact_value,
                    f"{seconds:.6f}",
                )
            )
    buf = io.StringIO()
    buf.write(SWEEP_SCHEMA + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    writer.writerows(rows)
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    coloring: Optional[EdgeColoring] = None
    if args.coloring:
        coloring = graphio.parse_coloring(g, _read_text(args.coloring))
    lines = ["graph halin {", "  layout=neato;", "  node [shape=circle];"]
    for e, (u, v) in enumerate(g.edges):
        style = "bold" if g.is_cycle_edge(e) else "solid"
        attrs = [f"style={style}"]
        if coloring is not None:
            c = coloring.get(e)
            if c is None:
                attrs.append('label="*"')
                attrs.append('color="#cccccc"')
            else:
                attrs.append(f'label="{c}"')
                attrs.append(f'color="{_DOT_PALETTE[(c - 1) % len(_DOT_PALETTE)]}"')
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halinstar",
        description="Star edge coloring of Halin graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("--family", required=True, choices=genmod.FAMILIES)
    p.add_argument("--n", type=int, help="leaves (wheel) or internal vertices (random)")
    p.add_argument("--delta", type=int, help="maximum degree (boundedDeltaRandom)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("color", help="color a graph; coloring on stdout")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--cubic", action="store_true", help="force the cubic routine")
    p.add_argument("--trace", action="store_true", help="dump reduction frames")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--all", action="store_true", help="list every violation")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exact star chromatic index")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--max-colors", type=int, default=None)
    p.add_argument("--node-limit", type=int, default=500_000_000)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("bench", help="sweep instance families, emit CSV")
    p.add_argument("--delta", default="4..8", help="single value or lo..hi")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact-upto", type=int, default=0,
                   help="also solve exactly when the graph has at most this many edges")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("export-dot", help="graphviz rendering with edge colors")
    p.add_argument("graph")
    p.add_argument("--coloring", default=None)
    p.set_defaults(func=_cmd_export_dot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, HalinError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

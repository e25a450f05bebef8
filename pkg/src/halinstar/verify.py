"""Validity checking for star edge colorings.

A star edge coloring is a proper edge coloring in which every path and
every cycle on four edges carries at least three distinct colors.  The
checker works on partial colorings too: unassigned edges never participate
in a violation, so a partial coloring with no violation may still extend
to an invalid one only through its unassigned edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import EdgeColoring, HalinGraph
from .errors import ColorOutOfRange

KIND_ADJACENT = "AdjacentSameColor"
KIND_PATH = "BicoloredP4path"
KIND_CYCLE = "BicoloredC4cycle"


@dataclass(frozen=True)
class StarViolation:
    """Witness of invalidity: the cited edges form the claimed structure."""

    kind: str
    edges: tuple[int, ...]
    colors: tuple[int, ...]


@dataclass(frozen=True)
class Structure:
    """A path or cycle on exactly four edges, in walk order."""

    kind: str
    edges: tuple[int, int, int, int]
    vertices: tuple[int, ...]


def edge_pairs(g) -> tuple[tuple[int, int], ...]:
    """Accept a HalinGraph or any sequence of endpoint pairs."""
    if isinstance(g, HalinGraph):
        return g.edges
    return tuple((int(u), int(v)) for u, v in g)


def _adjacency(edges: Sequence[tuple[int, int]]):
    n = max((max(u, v) for u, v in edges), default=-1) + 1
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    for a in adj:
        a.sort()
    return adj


def four_edge_structures(g) -> tuple[Structure, ...]:
    """All 4-edge paths (once per reversal class) and 4-cycles (once per
    rotation/reflection class), sorted by their canonical edge-id tuples."""
    edges = edge_pairs(g)
    adj = _adjacency(edges)
    n = len(adj)
    found: list[Structure] = []
    for v0 in range(n):
        for v1, e1 in adj[v0]:
            for v2, e2 in adj[v1]:
                if v2 == v0:
                    continue
                for v3, e3 in adj[v2]:
                    if v3 == v0 or v3 == v1:
                        continue
                    for v4, e4 in adj[v3]:
                        if v4 == v0:
                            # 4-cycle v0 v1 v2 v3; emit one orientation only
                            if v0 < min(v1, v2, v3) and v1 < v3:
                                es = (e1, e2, e3, e4)
                                canon = min(_cycle_variants(es))
                                found.append(
                                    Structure(KIND_CYCLE, canon, (v0, v1, v2, v3))
                                )
                        elif v4 != v1 and v4 != v2:
                            if v0 < v4:
                                es = (e1, e2, e3, e4)
                                rev = es[::-1]
                                canon = es if es <= rev else rev
                                found.append(
                                    Structure(
                                        KIND_PATH, canon, (v0, v1, v2, v3, v4)
                                    )
                                )
    found.sort(key=lambda s: (s.edges, s.kind))
    return tuple(found)


def _cycle_variants(es: tuple[int, int, int, int]):
    for r in range(4):
        rot = es[r:] + es[:r]
        yield rot
        yield rot[::-1]


def find_violation(g, coloring: EdgeColoring) -> Optional[StarViolation]:
    """First violation under a fixed deterministic scan order, or None.

    Adjacent same-color pairs are reported first (smallest edge-id pair),
    then bicolored 4-edge paths/cycles in increasing edge-id-tuple order.
    A coloring is a valid star edge coloring iff this returns None and the
    coloring is total.
    """
    edges = edge_pairs(g)
    cols = coloring.colors
    for e, c in enumerate(cols):
        if c != 0 and c > coloring.palette_size:
            raise ColorOutOfRange(
                f"edge {e} has color {c} > palette {coloring.palette_size}"
            )
    adj = _adjacency(edges)
    incident: list[list[int]] = [[] for _ in range(len(edges))]
    for a in adj:
        ids = sorted(e for _, e in a)
        for i, e1 in enumerate(ids):
            for e2 in ids[i + 1 :]:
                incident[e1].append(e2)
    for e1 in range(len(edges)):
        c1 = cols[e1]
        if c1 == 0:
            continue
        for e2 in sorted(set(incident[e1])):
            if cols[e2] == c1:
                return StarViolation(KIND_ADJACENT, (e1, e2), (c1,))
    for s in four_edge_structures(edges):
        cs = [cols[e] for e in s.edges]
        if 0 in cs:
            continue
        distinct = sorted(set(cs))
        if len(distinct) <= 2:
            return StarViolation(s.kind, s.edges, tuple(distinct))
    return None


def find_all_violations(g, coloring: EdgeColoring):
    """Every violation in the first-witness scan order (exhaustive mode)."""
    edges = edge_pairs(g)
    cols = coloring.colors
    for e, c in enumerate(cols):
        if c != 0 and c > coloring.palette_size:
            raise ColorOutOfRange(
                f"edge {e} has color {c} > palette {coloring.palette_size}"
            )
    adj = _adjacency(edges)
    bad_pairs = set()
    for a in adj:
        ids = [e for _, e in a]
        for i, e1 in enumerate(ids):
            for e2 in ids[i + 1 :]:
                pair = (min(e1, e2), max(e1, e2))
                if cols[pair[0]] != 0 and cols[pair[0]] == cols[pair[1]]:
                    bad_pairs.add(pair)
    for pair in sorted(bad_pairs):
        yield StarViolation(KIND_ADJACENT, pair, (cols[pair[0]],))
    for s in four_edge_structures(edges):
        cs = [cols[e] for e in s.edges]
        if 0 in cs:
            continue
        distinct = sorted(set(cs))
        if len(distinct) <= 2:
            yield StarViolation(s.kind, s.edges, tuple(distinct))


def is_star_valid(g, coloring: EdgeColoring) -> bool:
    """Total and violation-free."""
    return coloring.is_total and find_violation(g, coloring) is None

"""Exact star chromatic index by backtracking search, plus a naive oracle.

The backtracker extends a partial coloring edge by edge, rejecting a color
the moment it creates an adjacent same-color pair or a bicolored 4-edge
path/cycle, with color-class symmetry breaking (at most one new color per
step).  The naive oracle enumerates every assignment and full-checks each;
it exists purely as an independent cross-check and builds its own list of
4-edge structures by scanning edge quadruples.

Both accept any simple graph given as a HalinGraph or a sequence of
endpoint pairs.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from ._kernels import STATUS_EXHAUSTED, STATUS_FOUND, get_backend
from .core import EdgeColoring, HalinGraph
from .errors import HalinError, InternalInvariantBroken, NodeLimitReached
from .verify import edge_pairs, find_violation, four_edge_structures

EDGE_ORDERS = ("degree_descending", "cycle_first", "input")


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the exact search.

    ``max_colors`` caps the ascending search in ``star_chromatic_index``.
    ``seed`` shuffles the edge order once (a cheap restart knob); the search
    itself is deterministic given the configuration.
    """

    max_colors: Optional[int] = None
    edge_order: str = "degree_descending"
    node_limit: int = 500_000_000
    seed: Optional[int] = None

    def __post_init__(self):
        if self.edge_order not in EDGE_ORDERS:
            raise ValueError(f"edge_order must be one of {EDGE_ORDERS}")
        if self.node_limit < 1:
            raise ValueError("node_limit must be >= 1")
        if self.max_colors is not None and self.max_colors < 1:
            raise ValueError("max_colors must be >= 1")


DEFAULT_CONFIG = SearchConfig()


def _edge_order(graph, edges, cfg: SearchConfig) -> list[int]:
    m = len(edges)
    if cfg.edge_order == "input":
        order = list(range(m))
    elif cfg.edge_order == "cycle_first" and isinstance(graph, HalinGraph):
        order = list(graph.cycle_edge_ids) + list(range(graph.n_tree_edges))
    elif cfg.edge_order == "cycle_first":
        order = list(range(m))
    else:
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        order = sorted(range(m), key=lambda e: (-(deg[edges[e][0]] + deg[edges[e][1]]), e))
    if cfg.seed is not None:
        random.Random(cfg.seed).shuffle(order)
    return order


def _csr(per_edge: list[list[int]]):
    indptr = np.zeros(len(per_edge) + 1, dtype=np.int64)
    for i, lst in enumerate(per_edge):
        indptr[i + 1] = indptr[i] + len(lst)
    indices = np.fromiter(
        (x for lst in per_edge for x in lst), dtype=np.int64, count=int(indptr[-1])
    )
    return indptr, indices


def _search_arrays(edges, structures):
    m = len(edges)
    incident: dict[int, list[int]] = {}
    for e, (u, v) in enumerate(edges):
        incident.setdefault(u, []).append(e)
        incident.setdefault(v, []).append(e)
    adjacent: list[list[int]] = [[] for _ in range(m)]
    for ids in incident.values():
        for a in ids:
            for b in ids:
                if a != b:
                    adjacent[a].append(b)
    adjacent = [sorted(set(a)) for a in adjacent]
    adj_indptr, adj_indices = _csr(adjacent)
    st_edges = np.array(
        [s for s in structures], dtype=np.int64
    ).reshape(len(structures), 4) if structures else np.zeros((0, 4), dtype=np.int64)
    per_edge: list[list[int]] = [[] for _ in range(m)]
    for si, s in enumerate(structures):
        for e in s:
            per_edge[e].append(si)
    st_indptr, st_indices = _csr(per_edge)
    return adj_indptr, adj_indices, st_indptr, st_indices, st_edges


def search_colorable(
    graph, k: int, cfg: SearchConfig = DEFAULT_CONFIG, *, pure: bool | None = None
) -> tuple[Optional[EdgeColoring], int]:
    """Like is_star_colorable but also reports the node count (color
    attempts) the search spent."""
    if k < 1:
        raise ValueError("k must be >= 1")
    edges = edge_pairs(graph)
    if not edges:
        raise ValueError("graph has no edges")
    structures = tuple(s.edges for s in four_edge_structures(edges))
    arrays = _search_arrays(edges, structures)
    order = np.array(_edge_order(graph, edges, cfg), dtype=np.int64)
    backend = get_backend(pure)
    status, colors, nodes = backend.exact_search(
        k, order, *arrays, cfg.node_limit
    )
    nodes = int(nodes)
    if status == STATUS_FOUND:
        coloring = EdgeColoring(len(edges), k, [int(c) for c in colors])
        if find_violation(edges, coloring) is not None:
            raise InternalInvariantBroken("search returned an invalid coloring")
        return coloring, nodes
    if status == STATUS_EXHAUSTED:
        return None, nodes
    raise NodeLimitReached(f"node limit {cfg.node_limit} reached", nodes=nodes)


def is_star_colorable(
    graph, k: int, cfg: SearchConfig = DEFAULT_CONFIG, *, pure: bool | None = None
) -> Optional[EdgeColoring]:
    """A star-valid k-coloring, or None once the search space is exhausted.

    Raises NodeLimitReached when the budget runs out before an answer; that
    outcome is inconclusive and never coerced to a yes or no.
    """
    coloring, _ = search_colorable(graph, k, cfg, pure=pure)
    return coloring


def star_chromatic_index(
    graph, cfg: SearchConfig = DEFAULT_CONFIG, *, pure: bool | None = None
) -> int:
    """Smallest k admitting a star edge coloring, by ascending search from
    the trivial lower bound (the maximum degree)."""
    edges = edge_pairs(graph)
    if not edges:
        raise ValueError("graph has no edges")
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    lo = max(deg.values())
    hi = len(edges)  # all-distinct colors are always star-valid
    if cfg.max_colors is not None:
        hi = min(hi, cfg.max_colors)
    for k in range(lo, hi + 1):
        if is_star_colorable(graph, k, cfg, pure=pure) is not None:
            return k
    raise HalinError(f"not star-colorable within {hi} colors")


def naive_structures(edges) -> tuple[tuple[int, int, int, int], ...]:
    """4-edge paths and cycles found by scanning all edge quadruples."""
    edges = edge_pairs(edges)
    out = []
    for quad in combinations(range(len(edges)), 4):
        kind = _classify_quad([edges[e] for e in quad])
        if kind is not None:
            out.append(quad)
    return tuple(out)


def _classify_quad(pairs) -> Optional[str]:
    deg: dict[int, int] = {}
    for u, v in pairs:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    counts = sorted(deg.values())
    if len(deg) == 5 and counts == [1, 1, 2, 2, 2]:
        shape = "path"
    elif len(deg) == 4 and counts == [2, 2, 2, 2]:
        shape = "cycle"
    else:
        return None
    # connectivity over the four edges
    verts = list(deg)
    comp = {v: v for v in verts}

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for u, v in pairs:
        comp[find(u)] = find(v)
    if len({find(v) for v in verts}) != 1:
        return None
    return shape


def naive_is_star_colorable(
    graph, k: int, *, pure: bool | None = None
) -> Optional[EdgeColoring]:
    """Enumerate-everything reference check; independent of the backtracker."""
    edges = edge_pairs(graph)
    m = len(edges)
    if k < 1 or not edges:
        raise ValueError("need k >= 1 and a nonempty graph")
    if m * math.log2(k) > 60:
        raise ValueError(f"naive enumeration of {k}^{m} assignments is too large")
    pairs = _adjacent_pairs(edges)
    sts = naive_structures(edges)
    st_edges = (
        np.array(sts, dtype=np.int64)
        if sts
        else np.zeros((0, 4), dtype=np.int64)
    )
    backend = get_backend(pure)
    found, colors = backend.naive_search(m, k, pairs, st_edges)
    if not found:
        return None
    return EdgeColoring(m, k, [int(c) for c in colors])


def naive_star_chromatic_index(graph, *, pure: bool | None = None) -> int:
    edges = edge_pairs(graph)
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    for k in range(max(deg.values()), len(edges) + 1):
        if naive_is_star_colorable(graph, k, pure=pure) is not None:
            return k
    raise HalinError("unreachable: all-distinct coloring is always valid")


def _adjacent_pairs(edges) -> np.ndarray:
    incident: dict[int, list[int]] = {}
    for e, (u, v) in enumerate(edges):
        incident.setdefault(u, []).append(e)
        incident.setdefault(v, []).append(e)
    pairs = set()
    for ids in incident.values():
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                pairs.add((min(a, b), max(a, b)))
    if not pairs:
        return np.zeros((0, 2), dtype=np.int64)
    return np.array(sorted(pairs), dtype=np.int64)

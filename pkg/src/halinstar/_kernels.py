"""Hot search loops: numba-jitted by default, pure numpy on request.

Set ``HALINSTAR_PURE=1`` in the environment to skip numba and run the pure
implementations; the same happens automatically when numba is missing.
The exact-search fallback is the identical loop interpreted (backtracking
does not vectorize); the naive enumeration and the validity check have
genuinely vectorized numpy fallbacks.  ``benchmarks/kernel_benchmark.py``
compares the two backends.
"""
from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

PURE_ENV = "HALINSTAR_PURE"

STATUS_FOUND = 0
STATUS_EXHAUSTED = 1
STATUS_LIMIT = 2


def _exact_search_loop(k, order, adj_indptr, adj_indices, st_indptr, st_indices,
                       st_edges, node_limit):
    # Depth-first search over edge colors in `order`, one color attempt per
    # node.  Colors are symmetric, so at depth d only colors up to one past
    # the maximum used so far are tried.
    m = order.shape[0]
    colors = np.zeros(m, dtype=np.int64)
    trial = np.zeros(m, dtype=np.int64)
    max_used = np.zeros(m + 1, dtype=np.int64)
    nodes = 0
    depth = 0
    while 0 <= depth < m:
        e = order[depth]
        colors[e] = 0
        c = trial[depth] + 1
        cap = max_used[depth] + 1
        if cap > k:
            cap = k
        placed = False
        while c <= cap:
            nodes += 1
            if nodes > node_limit:
                return STATUS_LIMIT, colors, nodes
            ok = True
            for j in range(adj_indptr[e], adj_indptr[e + 1]):
                if colors[adj_indices[j]] == c:
                    ok = False
                    break
            if ok:
                colors[e] = c
                for j in range(st_indptr[e], st_indptr[e + 1]):
                    s = st_indices[j]
                    c0 = colors[st_edges[s, 0]]
                    c1 = colors[st_edges[s, 1]]
                    c2 = colors[st_edges[s, 2]]
                    c3 = colors[st_edges[s, 3]]
                    if c0 != 0 and c1 != 0 and c2 != 0 and c3 != 0:
                        d = 1
                        if c1 != c0:
                            d += 1
                        if c2 != c0 and c2 != c1:
                            d += 1
                        if c3 != c0 and c3 != c1 and c3 != c2:
                            d += 1
                        if d <= 2:
                            ok = False
                            colors[e] = 0
                            break
            if ok:
                trial[depth] = c
                nm = max_used[depth]
                if c > nm:
                    nm = c
                max_used[depth + 1] = nm
                depth += 1
                if depth < m:
                    trial[depth] = 0
                placed = True
                break
            c += 1
        if not placed:
            colors[e] = 0
            trial[depth] = 0
            depth -= 1
    if depth == m:
        return STATUS_FOUND, colors, nodes
    return STATUS_EXHAUSTED, colors, nodes


def _naive_search_loop(m, k, pairs, st_edges):
    # Enumerate every one of the k**m assignments in lexicographic order and
    # run the full check on each; stop at the first valid one.
    colors = np.ones(m, dtype=np.int64)
    np_ = pairs.shape[0]
    ns = st_edges.shape[0]
    while True:
        ok = True
        for i in range(np_):
            if colors[pairs[i, 0]] == colors[pairs[i, 1]]:
                ok = False
                break
        if ok:
            for s in range(ns):
                c0 = colors[st_edges[s, 0]]
                c1 = colors[st_edges[s, 1]]
                c2 = colors[st_edges[s, 2]]
                c3 = colors[st_edges[s, 3]]
                d = 1
                if c1 != c0:
                    d += 1
                if c2 != c0 and c2 != c1:
                    d += 1
                if c3 != c0 and c3 != c1 and c3 != c2:
                    d += 1
                if d <= 2:
                    ok = False
                    break
        if ok:
            return True, colors
        i = m - 1
        while i >= 0:
            colors[i] += 1
            if colors[i] <= k:
                break
            colors[i] = 1
            i -= 1
        if i < 0:
            return False, colors


def _check_coloring_loop(colors, pairs, st_edges):
    # Partial-aware: unassigned edges (0) never participate.
    for i in range(pairs.shape[0]):
        a = colors[pairs[i, 0]]
        if a != 0 and a == colors[pairs[i, 1]]:
            return False
    for s in range(st_edges.shape[0]):
        c0 = colors[st_edges[s, 0]]
        c1 = colors[st_edges[s, 1]]
        c2 = colors[st_edges[s, 2]]
        c3 = colors[st_edges[s, 3]]
        if c0 != 0 and c1 != 0 and c2 != 0 and c3 != 0:
            d = 1
            if c1 != c0:
                d += 1
            if c2 != c0 and c2 != c1:
                d += 1
            if c3 != c0 and c3 != c1 and c3 != c2:
                d += 1
            if d <= 2:
                return False
    return True


def _naive_search_numpy(m, k, pairs, st_edges, chunk=1 << 17):
    total = k**m
    weights = np.array([k ** (m - 1 - j) for j in range(m)], dtype=np.int64)
    lo = 0
    while lo < total:
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        cols = ((idx[:, None] // weights[None, :]) % k + 1).astype(np.int64)
        ok = np.ones(hi - lo, dtype=bool)
        for i in range(pairs.shape[0]):
            ok &= cols[:, pairs[i, 0]] != cols[:, pairs[i, 1]]
        if ok.any():
            sub = cols[ok]
            sok = np.ones(sub.shape[0], dtype=bool)
            for s in range(st_edges.shape[0]):
                q0 = sub[:, st_edges[s, 0]]
                q1 = sub[:, st_edges[s, 1]]
                q2 = sub[:, st_edges[s, 2]]
                q3 = sub[:, st_edges[s, 3]]
                d = (
                    1
                    + (q1 != q0)
                    + ((q2 != q0) & (q2 != q1))
                    + ((q3 != q0) & (q3 != q1) & (q3 != q2))
                )
                sok &= d >= 3
            if sok.any():
                first = int(np.argmax(sok))
                return True, sub[first].copy()
        lo = hi
    return False, np.ones(m, dtype=np.int64)


def _check_coloring_numpy(colors, pairs, st_edges):
    c = np.asarray(colors, dtype=np.int64)
    if pairs.shape[0]:
        a = c[pairs[:, 0]]
        b = c[pairs[:, 1]]
        if np.any((a != 0) & (a == b)):
            return False
    if st_edges.shape[0]:
        q = c[st_edges]
        assigned = (q != 0).all(axis=1)
        d = (
            1
            + (q[:, 1] != q[:, 0])
            + ((q[:, 2] != q[:, 0]) & (q[:, 2] != q[:, 1]))
            + ((q[:, 3] != q[:, 0]) & (q[:, 3] != q[:, 1]) & (q[:, 3] != q[:, 2]))
        )
        if np.any(assigned & (d <= 2)):
            return False
    return True


def _pure_backend() -> SimpleNamespace:
    return SimpleNamespace(
        name="pure",
        exact_search=_exact_search_loop,
        naive_search=_naive_search_numpy,
        check_coloring=_check_coloring_numpy,
    )


def _numba_backend() -> SimpleNamespace:
    from numba import njit

    return SimpleNamespace(
        name="numba",
        exact_search=njit(cache=True)(_exact_search_loop),
        naive_search=njit(cache=True)(_naive_search_loop),
        check_coloring=njit(cache=True)(_check_coloring_loop),
    )


def _pick_default() -> SimpleNamespace:
    if os.environ.get(PURE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}:
        return _pure_backend()
    try:
        return _numba_backend()
    except ImportError:
        return _pure_backend()


_BACKENDS: dict[str, SimpleNamespace] = {}


def get_backend(pure: bool | None = None) -> SimpleNamespace:
    """The active kernel set; pass pure=True/False to force one."""
    if pure is None:
        key = "default"
        if key not in _BACKENDS:
            _BACKENDS[key] = _pick_default()
        return _BACKENDS[key]
    key = "pure" if pure else "numba"
    if key not in _BACKENDS:
        _BACKENDS[key] = _pure_backend() if pure else _numba_backend()
    return _BACKENDS[key]


def warmup(pure: bool | None = None) -> None:
    """Trigger jit compilation on a toy instance so later calls run hot."""
    b = get_backend(pure)
    order = np.arange(3, dtype=np.int64)
    indptr = np.zeros(4, dtype=np.int64)
    empty = np.zeros(0, dtype=np.int64)
    st = np.zeros((0, 4), dtype=np.int64)
    b.exact_search(2, order, indptr, empty, indptr, empty, st, 1000)
    pairs = np.array([[0, 1]], dtype=np.int64)
    b.naive_search(2, 2, pairs, st)
    b.check_coloring(np.ones(2, dtype=np.int64), pairs, st)

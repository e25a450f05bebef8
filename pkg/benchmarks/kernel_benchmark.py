#!/usr/bin/env python3
"""Compare the numba kernels against the pure numpy fallback.

Covers the three hot loops: exact backtracking search, naive
enumerate-everything search, and full-coloring validity checks.  Run as

    python3 benchmarks/kernel_benchmark.py

or force the fallback everywhere in normal use with HALINSTAR_PURE=1.
"""
from __future__ import annotations

import time

import numpy as np

import halinstar as hs
from halinstar._kernels import get_backend, warmup
from halinstar.exact import _adjacent_pairs, _edge_order, _search_arrays, naive_structures
from halinstar.verify import four_edge_structures


def _prep(g):
    structures = tuple(s.edges for s in four_edge_structures(g))
    arrays = _search_arrays(g.edges, structures)
    order = np.array(
        _edge_order(g, g.edges, hs.SearchConfig()), dtype=np.int64
    )
    return order, arrays


def bench_exact(backend, g, k, repeat=3):
    order, arrays = _prep(g)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        status, _, nodes = backend.exact_search(k, order, *arrays, 10**12)
        best = min(best, time.perf_counter() - t0)
    return best, status, nodes


def bench_naive(backend, g, k, repeat=3):
    pairs = _adjacent_pairs(g.edges)
    sts = naive_structures(g.edges)
    st_edges = np.array(sts, dtype=np.int64) if sts else np.zeros((0, 4), dtype=np.int64)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        found, _ = backend.naive_search(g.num_edges, k, pairs, st_edges)
        best = min(best, time.perf_counter() - t0)
    return best, found


def bench_check(backend, g, batch=20000):
    structures = tuple(s.edges for s in four_edge_structures(g))
    st_edges = np.array(structures, dtype=np.int64)
    pairs = _adjacent_pairs(g.edges)
    coloring = hs.color_halin(g)
    colors = np.array(coloring.colors, dtype=np.int64)
    t0 = time.perf_counter()
    acc = 0
    for _ in range(batch):
        acc += 1 if backend.check_coloring(colors, pairs, st_edges) else 0
    elapsed = time.perf_counter() - t0
    assert acc == batch
    return elapsed


def main() -> None:
    k4 = hs.build_halin(hs.generate(hs.GenSpec("wheel", n=3)))
    cubic12 = hs.build_halin(hs.generate(hs.GenSpec("cubicRandom", n=3, seed=5)))
    big = hs.build_halin(hs.generate(hs.GenSpec("boundedDeltaRandom", n=5, delta=6, seed=3)))

    rows = []
    for pure in (False, True):
        try:
            backend = get_backend(pure)
        except ImportError:
            print("numba unavailable; only the pure backend can run")
            continue
        warmup(pure)
        t, status, nodes = bench_exact(backend, cubic12, 5)
        rows.append((backend.name, "exact 12-edge cubic k=5", t, f"status={status} nodes={nodes}"))
        t, found = bench_naive(backend, k4, 4)
        rows.append((backend.name, "naive K4 k=4", t, f"found={found}"))
        t, found = bench_naive(backend, cubic12, 4)
        rows.append((backend.name, "naive 12-edge cubic k=4", t, f"found={found}"))
        t = bench_check(backend, big)
        rows.append((backend.name, "check x20000 (42-edge)", t, ""))

    print(f"{'backend':8s} {'case':28s} {'seconds':>10s}  notes")
    for name, case, t, note in rows:
        print(f"{name:8s} {case:28s} {t:10.4f}  {note}")
    by_case: dict[str, dict[str, float]] = {}
    for name, case, t, _ in rows:
        by_case.setdefault(case, {})[name] = t
    print()
    for case, times in by_case.items():
        if "numba" in times and "pure" in times and times["numba"] > 0:
            print(f"{case:28s} speedup x{times['pure'] / times['numba']:.1f}")


if __name__ == "__main__":
    main()

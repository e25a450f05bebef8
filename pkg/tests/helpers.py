"""Independent reference implementations used only as test oracles."""
from __future__ import annotations

from collections import deque

import halinstar as hs


def double_bfs_diameter(tree: hs.PlaneTree) -> int:
    """Tree diameter via two breadth-first sweeps."""
    n = tree.n_vertices
    adj: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for c in tree.children[v]:
            adj[v].append(c)
            adj[c].append(v)

    def farthest(src: int) -> tuple[int, int]:
        dist = [-1] * n
        dist[src] = 0
        q = deque([src])
        far, fd = src, 0
        while q:
            x = q.popleft()
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    if dist[y] > fd:
                        far, fd = y, dist[y]
                    q.append(y)
        return far, fd

    a, _ = farthest(0)
    _, diameter = farthest(a)
    return diameter


def binary_plane_trees(leaf_count: int):
    """Nested-tuple plane binary trees; () is a leaf."""
    if leaf_count == 1:
        yield ()
        return
    for left in range(1, leaf_count):
        for lt in binary_plane_trees(left):
            for rt in binary_plane_trees(leaf_count - left):
                yield (lt, rt)


def rooted_cubic_plane_trees(leaves: int):
    """Cubic plane trees as a root with three ordered binary subtrees."""
    for a in range(1, leaves - 1):
        for b in range(1, leaves - a):
            c = leaves - a - b
            if c < 1:
                continue
            for ta in binary_plane_trees(a):
                for tb in binary_plane_trees(b):
                    for tc in binary_plane_trees(c):
                        yield (ta, tb, tc)


def nested_to_plane_tree(root_children) -> hs.PlaneTree:
    children: list[list[int]] = [[]]

    def build(node, parent: int) -> None:
        my = len(children)
        children.append([])
        children[parent].append(my)
        for sub in node:
            build(sub, my)

    for sub in root_children:
        build(sub, 0)
    return hs.PlaneTree(0, [tuple(c) for c in children])


def naive_cubic_codes(max_leaves: int) -> set[str]:
    """Canonical codes of all cubic plane trees, by direct construction."""
    codes: set[str] = set()
    for leaves in range(3, max_leaves + 1):
        for shape in rooted_cubic_plane_trees(leaves):
            codes.add(hs.canonical_code(nested_to_plane_tree(shape)))
    return codes


def small_halin_corpus(max_edges: int, deltas=(3, 4)) -> list[hs.HalinGraph]:
    out = []
    for tree in hs.enumerate_halin_trees(6, max_degree=max(deltas)):
        g = hs.build_halin(tree)
        if g.num_edges <= max_edges and g.delta in deltas:
            out.append(g)
    return out

"""Plane trees, Halin graphs, edge colorings, and their basic statistics.

A Halin graph is determined here by its characteristic tree alone: the tree
is stored rooted, with an explicit cyclic child order at every vertex (the
planar embedding), and the outer cycle through the leaves is derived from
the embedding's depth-first leaf order.  Orientation is fixed clockwise;
every result is orientation-symmetric.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import ColorOutOfRange, NotAHalinTree, NotInternalVertex

UNCOLORED = 0


class PlaneTree:
    """Rooted tree with a cyclic child order at every vertex.

    Vertex ids are dense (0..n-1).  The root must be internal (degree >= 3);
    every other vertex is either a leaf or has degree >= 3.
    """

    __slots__ = ("root", "children", "parent")

    def __init__(self, root: int, children: Sequence[Sequence[int]]):
        n = len(children)
        if n == 0:
            raise NotAHalinTree("empty tree")
        if not 0 <= root < n:
            raise NotAHalinTree(f"root id {root} out of range", vertex=root)
        kids = tuple(tuple(c) for c in children)
        parent: list[Optional[int]] = [None] * n
        seen_as_child = 0
        for v, cs in enumerate(kids):
            for c in cs:
                if not 0 <= c < n:
                    raise NotAHalinTree(f"child id {c} out of range", vertex=v)
                if c == root:
                    raise NotAHalinTree("root listed as a child", vertex=v)
                if parent[c] is not None:
                    raise NotAHalinTree(f"vertex {c} has two parents", vertex=c)
                parent[c] = v
                seen_as_child += 1
        if seen_as_child != n - 1:
            raise NotAHalinTree("vertex ids are not dense or tree is disconnected")
        # reachability from the root (guards against parent cycles off-root)
        reached = 1
        stack = [root]
        marked = bytearray(n)
        marked[root] = 1
        while stack:
            v = stack.pop()
            for c in kids[v]:
                if not marked[c]:
                    marked[c] = 1
                    reached += 1
                    stack.append(c)
        if reached != n:
            raise NotAHalinTree("tree is disconnected")
        if len(kids[root]) < 3:
            raise NotAHalinTree(
                f"root {root} has degree {len(kids[root])} < 3", vertex=root
            )
        for v, cs in enumerate(kids):
            if v != root and len(cs) == 1:
                raise NotAHalinTree(
                    f"internal vertex {v} has degree 2", vertex=v
                )
        self.root = root
        self.children = kids
        self.parent = tuple(parent)

    @property
    def n_vertices(self) -> int:
        return len(self.children)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def degree(self, v: int) -> int:
        d = len(self.children[v])
        return d if v == self.root else d + 1

    @property
    def delta(self) -> int:
        return max(self.degree(v) for v in range(self.n_vertices))

    def internal_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n_vertices) if self.children[v])

    def leaves(self) -> tuple[int, ...]:
        """Leaves in plane depth-first order (leftmost subtree first)."""
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            if not self.children[v]:
                out.append(v)
            else:
                stack.extend(reversed(self.children[v]))
        return tuple(out)

    def tree_edges(self) -> tuple[tuple[int, int], ...]:
        """(parent, child) pairs in depth-first discovery order."""
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            if v != self.root:
                out.append((self.parent[v], v))
            stack.extend(reversed(self.children[v]))
        return tuple(out)

    def neighbor_orders(self) -> list[list[int]]:
        """Cyclic neighbor order per vertex: parent first, then children."""
        orders = []
        for v in range(self.n_vertices):
            p = self.parent[v]
            order = [] if p is None else [p]
            order.extend(self.children[v])
            orders.append(order)
        return orders

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlaneTree)
            and self.root == other.root
            and self.children == other.children
        )

    def __hash__(self) -> int:
        return hash((self.root, self.children))

    def __repr__(self) -> str:
        return f"PlaneTree(root={self.root}, n={self.n_vertices})"


def plane_tree_from_orders(
    orders: Mapping[int, Sequence[int]], root: int, relabel: bool = False
) -> tuple[PlaneTree, dict[int, int]]:
    """Rebuild a rooted plane tree from cyclic neighbor orders.

    Children of a vertex are its cyclic neighbors starting right after the
    parent.  With ``relabel`` the vertices get fresh dense ids in preorder;
    otherwise the ids must already be dense.  Returns the tree and the
    old-to-new id mapping.
    """
    children_old: dict[int, list[int]] = {}
    preorder: list[int] = []
    stack: list[tuple[int, Optional[int]]] = [(root, None)]
    while stack:
        v, par = stack.pop()
        preorder.append(v)
        order = list(orders[v])
        if par is None:
            kids = order
        else:
            i = order.index(par)
            kids = order[i + 1 :] + order[:i]
        children_old[v] = kids
        for kid in reversed(kids):
            stack.append((kid, v))
    if relabel:
        mapping = {old: new for new, old in enumerate(preorder)}
    else:
        mapping = {v: v for v in preorder}
        if sorted(mapping) != list(range(len(preorder))):
            raise NotAHalinTree("vertex ids are not dense; pass relabel=True")
    table: list[tuple[int, ...]] = [() for _ in preorder]
    for old, kids in children_old.items():
        table[mapping[old]] = tuple(mapping[k] for k in kids)
    return PlaneTree(mapping[root], table), mapping


class HalinGraph:
    """Characteristic tree plus the derived outer cycle through the leaves.

    Edge ids are dense: tree edges first in depth-first discovery order,
    then cycle edges following the embedding's leaf order.
    """

    __slots__ = ("tree", "cycle", "edges", "n_tree_edges", "_adj", "_eid", "_cycle_pos")

    def __init__(self, tree: PlaneTree):
        leaves = tree.leaves()
        if len(leaves) < 3:
            raise NotAHalinTree(f"only {len(leaves)} leaves; need at least 3")
        edges = list(tree.tree_edges())
        self.n_tree_edges = len(edges)
        for i, leaf in enumerate(leaves):
            edges.append((leaf, leaves[(i + 1) % len(leaves)]))
        self.tree = tree
        self.cycle = leaves
        self.edges = tuple(edges)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(tree.n_vertices)]
        eid: dict[tuple[int, int], int] = {}
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            adj[v].append((u, e))
            key = (u, v) if u < v else (v, u)
            if key in eid:
                raise NotAHalinTree(f"duplicate edge {key}")
            eid[key] = e
        self._adj = tuple(tuple(sorted(a, key=lambda t: t[1])) for a in adj)
        self._eid = eid
        self._cycle_pos = {leaf: i for i, leaf in enumerate(leaves)}

    @property
    def n_vertices(self) -> int:
        return self.tree.n_vertices

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def cycle_edge_ids(self) -> range:
        return range(self.n_tree_edges, self.num_edges)

    def is_cycle_edge(self, e: int) -> bool:
        return e >= self.n_tree_edges

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def delta(self) -> int:
        return max(len(a) for a in self._adj)

    @property
    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self._adj)

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(neighbor, edge id) pairs at v, sorted by edge id."""
        return self._adj[v]

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._eid[key]
        except KeyError:
            raise ValueError(f"no edge between {u} and {v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._eid

    def leaf_tree_neighbor(self, leaf: int) -> int:
        p = self.tree.parent[leaf]
        if p is None or self.tree.children[leaf]:
            raise ValueError(f"vertex {leaf} is not a leaf")
        return p

    def cycle_neighbors(self, leaf: int) -> tuple[int, int]:
        i = self._cycle_pos[leaf]
        n = len(self.cycle)
        return self.cycle[(i - 1) % n], self.cycle[(i + 1) % n]

    def __repr__(self) -> str:
        return (
            f"HalinGraph(n={self.n_vertices}, cycle={len(self.cycle)}, "
            f"delta={self.delta})"
        )


def build_halin(tree: PlaneTree) -> HalinGraph:
    """Derive the Halin graph of a characteristic tree."""
    return HalinGraph(tree)


@dataclass(frozen=True)
class CycleEdgeClass:
    """Partition of the cycle edges by whether the two leaves share a parent."""

    same_parent: frozenset[int]
    different_parent: frozenset[int]


def classify_cycle_edges(g: HalinGraph) -> CycleEdgeClass:
    same, diff = [], []
    for e in g.cycle_edge_ids:
        u, v = g.edges[e]
        if g.tree.parent[u] == g.tree.parent[v]:
            same.append(e)
        else:
            diff.append(e)
    return CycleEdgeClass(frozenset(same), frozenset(diff))


def cross_leaf_cap(delta: int) -> int:
    """Claimed ceiling on the cross-edge leaf count at one vertex.

    Holds throughout the supported sweep range (delta 4..8) but is not a
    theorem in general: a degree-9 vertex whose six leaf children sit in
    three runs of two between three internal children has six cross-edge
    leaves, one above the cap.  Callers that rely on the cap treat an
    excess as a reportable finding, not a crash.
    """
    return delta // 2 + 1


def leaves_with_cross_edges(
    g: HalinGraph, classes: CycleEdgeClass, v: int
) -> frozenset[int]:
    """Leaf neighbors of internal vertex v touching a different-parent cycle edge."""
    if g.tree.is_leaf(v):
        raise NotInternalVertex(f"vertex {v} is a leaf")
    out = []
    for leaf in g.tree.children[v]:
        if not g.tree.is_leaf(leaf):
            continue
        a, b = g.cycle_neighbors(leaf)
        if (
            g.edge_id(leaf, a) in classes.different_parent
            or g.edge_id(leaf, b) in classes.different_parent
        ):
            out.append(leaf)
    return frozenset(out)


def uncolored_cross_counts(
    g: HalinGraph, classes: CycleEdgeClass, coloring: "EdgeColoring"
) -> dict[int, int]:
    """Per-leaf count of currently uncolored different-parent cycle edges."""
    counts = {leaf: 0 for leaf in g.cycle}
    for e in classes.different_parent:
        if coloring.get(e) is None:
            u, v = g.edges[e]
            counts[u] += 1
            counts[v] += 1
    return counts


def longest_tree_path(g: HalinGraph | PlaneTree) -> tuple[int, ...]:
    """A maximum-length path in the characteristic tree.

    Ties are broken by the lexicographically smallest vertex id sequence,
    considering both orientations, so the result is deterministic.
    """
    tree = g.tree if isinstance(g, HalinGraph) else g
    n = tree.n_vertices
    adj: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for c in tree.children[v]:
            adj[v].append(c)
            adj[c].append(v)
    leaves = sorted(v for v in range(n) if tree.is_leaf(v)) or [tree.root]

    def bfs(src: int) -> tuple[list[int], list[int]]:
        dist = [-1] * n
        prev = [-1] * n
        dist[src] = 0
        q = deque([src])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    prev[y] = x
                    q.append(y)
        return dist, prev

    best: tuple[int, ...] | None = None
    diameter = -1
    from_leaf = {a: bfs(a) for a in leaves}
    for a in leaves:
        dist, _ = from_leaf[a]
        diameter = max(diameter, max(dist[b] for b in leaves))
    for a in leaves:
        dist, prev = from_leaf[a]
        for b in leaves:
            if dist[b] != diameter:
                continue
            path = [b]
            while path[-1] != a:
                path.append(prev[path[-1]])
            seq = tuple(reversed(path))
            if best is None or seq < best:
                best = seq
    assert best is not None
    return best


class EdgeColoring:
    """Partial or total assignment of 1-based colors to edge ids.

    Internally 0 marks an unassigned edge.
    """

    __slots__ = ("colors", "palette_size")

    def __init__(
        self,
        num_edges: int,
        palette_size: int,
        colors: Sequence[int] | None = None,
    ):
        if palette_size < 1:
            raise ColorOutOfRange(f"palette size {palette_size} < 1")
        if colors is None:
            self.colors = [UNCOLORED] * num_edges
        else:
            if len(colors) != num_edges:
                raise ColorOutOfRange("color vector length mismatch")
            for c in colors:
                if c != UNCOLORED and not 1 <= c <= palette_size:
                    raise ColorOutOfRange(
                        f"color {c} outside palette 1..{palette_size}"
                    )
            self.colors = list(colors)
        self.palette_size = palette_size

    @property
    def num_edges(self) -> int:
        return len(self.colors)

    def get(self, e: int) -> Optional[int]:
        c = self.colors[e]
        return None if c == UNCOLORED else c

    def assign(self, e: int, color: int) -> None:
        if not 1 <= color <= self.palette_size:
            raise ColorOutOfRange(
                f"color {color} outside palette 1..{self.palette_size}"
            )
        self.colors[e] = color

    def unassign(self, e: int) -> None:
        self.colors[e] = UNCOLORED

    @property
    def is_total(self) -> bool:
        return UNCOLORED not in self.colors

    def used_colors(self) -> frozenset[int]:
        return frozenset(c for c in self.colors if c != UNCOLORED)

    @property
    def num_colors_used(self) -> int:
        return len(self.used_colors())

    def copy(self) -> "EdgeColoring":
        return EdgeColoring(self.num_edges, self.palette_size, list(self.colors))

    def restricted(self, edge_ids) -> "EdgeColoring":
        """Copy keeping only the given edges assigned."""
        keep = set(edge_ids)
        out = EdgeColoring(self.num_edges, self.palette_size)
        for e in keep:
            if self.colors[e] != UNCOLORED:
                out.colors[e] = self.colors[e]
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EdgeColoring)
            and self.palette_size == other.palette_size
            and self.colors == other.colors
        )

    def __repr__(self) -> str:
        assigned = sum(1 for c in self.colors if c != UNCOLORED)
        return (
            f"EdgeColoring({assigned}/{self.num_edges} assigned, "
            f"palette={self.palette_size})"
        )

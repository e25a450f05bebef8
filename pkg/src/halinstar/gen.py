"""Deterministic, seeded generation of Halin instance families.

Random trees grow from a small star by repeatedly replacing a leaf with an
internal vertex carrying fresh leaves, which stays inside the class of
characteristic trees by construction.  The same growth step drives the
exhaustive enumerators, deduplicated by a canonical encoding of the
embedding (minimized over root choice, rotation, and reflection).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import PlaneTree
from .errors import InvalidSpec

FAMILIES = (
    "wheel",
    "cubicRandom",
    "boundedDeltaRandom",
    "figure1Neighborhood",
    "figure2a",
    "figure2b",
    "ellThreeCubic",
)


@dataclass(frozen=True)
class GenSpec:
    """Family plus parameters; identical specs generate identical trees.

    ``n`` is the family's size knob: leaf count for wheels, internal-vertex
    count for the random families.  ``delta`` only applies to
    boundedDeltaRandom.
    """

    family: str
    n: Optional[int] = None
    delta: Optional[int] = None
    seed: int = 0


class _Grower:
    """Mutable tree under construction, with stable insertion-ordered ids."""

    def __init__(self, root_leaves: int):
        self.kids: dict[int, list[int]] = {0: list(range(1, root_leaves + 1))}
        self.leaves: list[int] = list(range(1, root_leaves + 1))
        self.next_id = root_leaves + 1

    def expand(self, leaf_index: int, count: int) -> None:
        leaf = self.leaves.pop(leaf_index)
        fresh = list(range(self.next_id, self.next_id + count))
        self.next_id += count
        self.kids[leaf] = fresh
        self.leaves.extend(fresh)

    def to_plane_tree(self) -> PlaneTree:
        # relabel in preorder so ids are dense and embedding-stable
        mapping: dict[int, int] = {}
        order: list[int] = []
        stack = [0]
        while stack:
            v = stack.pop()
            mapping[v] = len(order)
            order.append(v)
            stack.extend(reversed(self.kids.get(v, [])))
        table: list[tuple[int, ...]] = [() for _ in order]
        for v, kids in self.kids.items():
            table[mapping[v]] = tuple(mapping[k] for k in kids)
        return PlaneTree(mapping[0], table)


def _wheel(n: int) -> PlaneTree:
    if n < 3:
        raise InvalidSpec(f"wheel needs n >= 3, got {n}")
    return PlaneTree(0, [tuple(range(1, n + 1))] + [()] * n)


def _ell_three_cubic() -> PlaneTree:
    return PlaneTree(0, [(1, 2, 3), (), (), (4, 5), (), ()])


def _figure2a() -> PlaneTree:
    # hub of degree 5 with two internal arms of two leaves each and three
    # direct leaves interleaved so every direct leaf touches a
    # different-parent cycle edge
    children = [() for _ in range(10)]
    children[0] = (1, 4, 5, 6, 9)
    children[1] = (2, 3)
    children[6] = (7, 8)
    return PlaneTree(0, children)


def _figure2b() -> PlaneTree:
    # degree-6 analogue with four direct leaves
    children = [() for _ in range(11)]
    children[0] = (1, 4, 5, 6, 9, 10)
    children[1] = (2, 3)
    children[6] = (7, 8)
    return PlaneTree(0, children)


def _figure1_neighborhood() -> PlaneTree:
    # cubic instance whose longest-path end has the branch-stub shape: the
    # middle vertex carries an internal branch with two leaves
    children = [() for _ in range(14)]
    children[0] = (1, 4, 7)  # u: v, y3, w
    children[1] = (2, 3)  # v: v1, v2
    children[4] = (5, 6)  # y3: y1, y2
    children[7] = (8, 11)  # w: two internal arms
    children[8] = (9, 10)
    children[11] = (12, 13)
    return PlaneTree(0, children)


def _cubic_random(internal: int, seed: int) -> PlaneTree:
    if internal < 1:
        raise InvalidSpec(f"cubicRandom needs at least 1 internal vertex, got {internal}")
    rng = random.Random(seed)
    grower = _Grower(3)
    for _ in range(internal - 1):
        grower.expand(rng.randrange(len(grower.leaves)), 2)
    return grower.to_plane_tree()


def _bounded_delta_random(delta: int, internal: int, seed: int) -> PlaneTree:
    if delta < 4:
        raise InvalidSpec(f"boundedDeltaRandom needs delta >= 4, got {delta}")
    if internal < 1:
        raise InvalidSpec(f"need at least 1 internal vertex, got {internal}")
    rng = random.Random(seed)
    grower = _Grower(delta)  # pins the maximum degree exactly
    for _ in range(internal - 1):
        grower.expand(rng.randrange(len(grower.leaves)), rng.randint(2, delta - 1))
    return grower.to_plane_tree()


def generate(spec: GenSpec) -> PlaneTree:
    if spec.family == "wheel":
        if spec.n is None:
            raise InvalidSpec("wheel needs n")
        return _wheel(spec.n)
    if spec.family == "cubicRandom":
        if spec.n is None:
            raise InvalidSpec("cubicRandom needs n (internal vertex count)")
        return _cubic_random(spec.n, spec.seed)
    if spec.family == "boundedDeltaRandom":
        if spec.n is None or spec.delta is None:
            raise InvalidSpec("boundedDeltaRandom needs n and delta")
        return _bounded_delta_random(spec.delta, spec.n, spec.seed)
    if spec.family == "figure1Neighborhood":
        return _figure1_neighborhood()
    if spec.family == "figure2a":
        return _figure2a()
    if spec.family == "figure2b":
        return _figure2b()
    if spec.family == "ellThreeCubic":
        return _ell_three_cubic()
    raise InvalidSpec(f"unknown family {spec.family!r}; choose from {FAMILIES}")


def canonical_code(tree: PlaneTree) -> str:
    """Embedding-invariant encoding: minimal over root, rotation, reflection."""
    orders = tree.neighbor_orders()

    def encode(v: int, parent: int, reverse: bool) -> str:
        order = orders[v]
        i = order.index(parent)
        kids = order[i + 1 :] + order[:i]
        if reverse:
            kids = kids[::-1]
        return "(" + "".join(encode(k, v, reverse) for k in kids) + ")"

    best: Optional[str] = None
    for reverse in (False, True):
        for root in tree.internal_vertices():
            order = orders[root]
            if reverse:
                order = order[::-1]
            for r in range(len(order)):
                rot = order[r:] + order[:r]
                code = "(" + "".join(encode(k, root, reverse) for k in rot) + ")"
                if best is None or code < best:
                    best = code
    assert best is not None
    return best


def _expansions(tree: PlaneTree, child_counts: range) -> Iterator[PlaneTree]:
    leaves = [v for v in range(tree.n_vertices) if tree.is_leaf(v)]
    for leaf in leaves:
        for count in child_counts:
            table = [list(c) for c in tree.children]
            base = tree.n_vertices
            table[leaf] = list(range(base, base + count))
            table.extend([] for _ in range(count))
            yield PlaneTree(tree.root, [tuple(c) for c in table])


def enumerate_halin_trees(
    max_leaves: int, max_degree: int = 3
) -> Iterator[PlaneTree]:
    """All characteristic trees with internal degrees in 3..max_degree and at
    most max_leaves leaves, one representative per embedding class."""
    if max_leaves < 3:
        return
    if max_leaves > 12:
        raise InvalidSpec("exhaustive enumeration is capped at 12 leaves")
    seen: set[str] = set()
    frontier: list[PlaneTree] = []
    for root_degree in range(3, max_degree + 1):
        if root_degree <= max_leaves:
            star = _wheel(root_degree)
            code = canonical_code(star)
            if code not in seen:
                seen.add(code)
                frontier.append(star)
    frontier.sort(key=canonical_code)
    yield from frontier
    while frontier:
        nxt: list[PlaneTree] = []
        for tree in frontier:
            for grown in _expansions(tree, range(2, max_degree)):
                if len(grown.leaves()) > max_leaves:
                    continue
                code = canonical_code(grown)
                if code not in seen:
                    seen.add(code)
                    nxt.append(grown)
        nxt.sort(key=canonical_code)
        yield from nxt
        frontier = nxt


def enumerate_small_cubic_halin(max_leaves: int) -> Iterator[PlaneTree]:
    """All cubic characteristic trees with at most max_leaves leaves."""
    return enumerate_halin_trees(max_leaves, max_degree=3)

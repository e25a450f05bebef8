"""Six-color star edge coloring of cubic Halin graphs.

The construction is inductive on the cycle length.  Two explicit base
shapes are colored from frozen tables; every larger instance is shrunk by
deleting the fan around one end of a longest tree path and re-attaching
the stub as a cycle leaf, colored recursively, and extended back with a
fixed set of constrained color choices.  The extension is verified on
every step; if the greedy choices ever produce a violation, all admissible
choice tuples are retried and the activation is reported as a finding.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .core import (
    EdgeColoring,
    HalinGraph,
    build_halin,
    longest_tree_path,
    plane_tree_from_orders,
)
from .errors import (
    EmptyChoiceSet,
    NotCubic,
    RoleExtractionFailed,
    StarViolationProduced,
    WrongBaseShape,
)
from .report import ColoringStats
from .verify import find_violation

PALETTE = 6
CASE_LEAF_STUB = 1
CASE_BRANCH_STUB = 2

@dataclass(frozen=True)
class ColorPermutation:
    """Bijection on the six color indices; preserves star-validity."""

    mapping: tuple[int, ...]  # mapping[c - 1] is the image of color c

    def __post_init__(self):
        if sorted(self.mapping) != list(range(1, PALETTE + 1)):
            raise ValueError("mapping is not a bijection on 1..6")

    def apply(self, coloring: EdgeColoring) -> EdgeColoring:
        out = coloring.copy()
        for e, c in enumerate(coloring.colors):
            if c != 0:
                out.colors[e] = self.mapping[c - 1]
        return out

    @classmethod
    def sending(cls, assignments: dict[int, int]) -> "ColorPermutation":
        """Smallest-index completion of the pinned color moves."""
        mapping = [0] * PALETTE
        used = set(assignments.values())
        for src, dst in assignments.items():
            mapping[src - 1] = dst
        spare = [c for c in range(1, PALETTE + 1) if c not in used]
        for i in range(PALETTE):
            if mapping[i] == 0:
                mapping[i] = spare.pop(0)
        return cls(tuple(mapping))


@dataclass
class ReductionFrame:
    """Everything needed to lift a coloring of the shrunk graph back up."""

    case: int
    roles: dict[str, int]
    removed_vertices: tuple[int, ...]
    removed_edges: tuple[tuple[int, int], ...]
    added_edges: tuple[tuple[int, int], ...]
    g: HalinGraph
    gprime: HalinGraph
    old_to_new: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "roles": dict(self.roles),
            "removed_vertices": list(self.removed_vertices),
            "removed_edges": [list(e) for e in self.removed_edges],
            "added_edges": [list(e) for e in self.added_edges],
            "cycle_before": len(self.g.cycle),
            "cycle_after": len(self.gprime.cycle),
        }


def _require_cubic(g: HalinGraph) -> None:
    if not g.is_cubic:
        bad = next(v for v in range(g.n_vertices) if g.degree(v) != 3)
        raise NotCubic(f"vertex {bad} has degree {g.degree(v=bad)}")


# Frozen base tables, keyed by structural roles.  Both were found with the
# exact search and are re-verified on every use.
_TABLE_WHEEL3 = {
    ("hub", "l0"): 1,
    ("hub", "l1"): 2,
    ("hub", "l2"): 3,
    ("l0", "l1"): 4,
    ("l1", "l2"): 5,
    ("l2", "l0"): 2,
}

_TABLE_DOUBLE_STAR = {
    ("p", "q"): 3,
    ("p", "pa"): 1,
    ("p", "pb"): 2,
    ("q", "qa"): 1,
    ("q", "qb"): 2,
    ("pa", "pb"): 4,
    ("pb", "qa"): 5,
    ("qa", "qb"): 4,
    ("qb", "pa"): 6,
}


def base_case_coloring(g: HalinGraph, ell: int) -> EdgeColoring:
    """Color one of the two base shapes from its frozen table.

    ell=2 is the wheel on three spokes (5 colors); ell=3 is the unique
    six-vertex cubic instance (6 colors).
    """
    _require_cubic(g)
    if ell == 2:
        internals = g.tree.internal_vertices()
        if len(internals) != 1 or len(g.cycle) != 3:
            raise WrongBaseShape("not a 3-spoke wheel")
        hub = internals[0]
        l0, l1, l2 = g.cycle
        names = {"hub": hub, "l0": l0, "l1": l1, "l2": l2}
        table = _TABLE_WHEEL3
    elif ell == 3:
        internals = g.tree.internal_vertices()
        if len(internals) != 2 or len(g.cycle) != 4:
            raise WrongBaseShape("not the two-internal-vertex shape")
        p, q = sorted(internals)
        p_leaves = [c for c in g.tree.children[p] if g.tree.is_leaf(c)]
        q_leaves = [x for x in g.cycle if x not in p_leaves]
        if len(p_leaves) != 2 or len(q_leaves) != 2:
            raise WrongBaseShape("leaf groups do not split two and two")
        # orient the cycle as pa, pb, qa, qb
        pos = {leaf: i for i, leaf in enumerate(g.cycle)}
        n = 4
        pa = None
        for leaf in p_leaves:
            if g.cycle[(pos[leaf] + 1) % n] in p_leaves:
                pa = leaf
        if pa is None:
            raise WrongBaseShape("leaves of one parent are not cycle-consecutive")
        pb = g.cycle[(pos[pa] + 1) % n]
        qa = g.cycle[(pos[pb] + 1) % n]
        qb = g.cycle[(pos[qa] + 1) % n]
        names = {"p": p, "q": q, "pa": pa, "pb": pb, "qa": qa, "qb": qb}
        table = _TABLE_DOUBLE_STAR
    else:
        raise WrongBaseShape(f"no base shape for path length {ell}")
    coloring = EdgeColoring(g.num_edges, PALETTE)
    for (ra, rb), color in table.items():
        coloring.assign(g.edge_id(names[ra], names[rb]), color)
    violation = find_violation(g, coloring)
    if violation is not None or not coloring.is_total:
        raise StarViolationProduced(f"base table failed verification: {violation}")
    return coloring


def reduce_instance(
    g: HalinGraph, path: tuple[int, ...]
) -> tuple[HalinGraph, ReductionFrame]:
    """Shrink around one end of a longest tree path.

    The second path vertex v carries two cycle leaves v1, v2.  The third
    vertex u has one neighbor off the path: either a cycle leaf (the stub
    fan is v, v1, v2, y1) or an internal vertex y3 whose two leaf children
    extend the fan to v, v1, v2, y1, y2, y3.  Deleting the fan turns u into
    a cycle leaf of the smaller graph, which is again cubic Halin.
    """
    _require_cubic(g)
    if len(path) < 5:
        raise RoleExtractionFailed("path shorter than four edges")
    tree = g.tree
    v, u, w = path[1], path[2], path[3]

    def tree_neighbors(x: int) -> list[int]:
        p = tree.parent[x]
        out = list(tree.children[x])
        if p is not None:
            out.append(p)
        return out

    v_leaves = [x for x in tree_neighbors(v) if x != u]
    if len(v_leaves) != 2 or not all(tree.is_leaf(x) for x in v_leaves):
        raise RoleExtractionFailed(f"neighbors of {v} off the path are not two leaves")
    q_candidates = [x for x in tree_neighbors(u) if x not in (v, w)]
    if len(q_candidates) != 1:
        raise RoleExtractionFailed(f"vertex {u} does not have exactly one spare neighbor")
    q = q_candidates[0]

    roles: dict[str, int] = {"v": v, "u": u, "w": w}
    if tree.is_leaf(q):
        case = CASE_LEAF_STUB
        y1 = q
        fan_leaves = [y1]
    else:
        case = CASE_BRANCH_STUB
        q_children = [x for x in tree_neighbors(q) if x != u]
        if len(q_children) != 2 or not all(tree.is_leaf(x) for x in q_children):
            raise RoleExtractionFailed(
                f"spare branch {q} does not carry exactly two leaves"
            )
        near = [
            x
            for x in q_children
            if any(nb in v_leaves for nb in g.cycle_neighbors(x))
        ]
        if len(near) != 1:
            raise RoleExtractionFailed(
                "exactly one leaf of the spare branch must touch the fan"
            )
        y1 = near[0]
        y2 = next(x for x in q_children if x != y1)
        roles["y2"] = y2
        roles["y3"] = q
        fan_leaves = [y1, y2]
    v2_candidates = [x for x in v_leaves if y1 in g.cycle_neighbors(x)]
    if len(v2_candidates) != 1:
        raise RoleExtractionFailed("fan leaf is not cycle-adjacent to exactly one leaf of v")
    v2 = v2_candidates[0]
    v1 = next(x for x in v_leaves if x != v2)
    x1 = next(nb for nb in g.cycle_neighbors(v1) if nb != v2)
    x2 = next(nb for nb in g.cycle_neighbors(x1) if nb != v1)
    x3 = g.leaf_tree_neighbor(x1)
    if case == CASE_LEAF_STUB:
        roles["y3"] = u  # the stub leaf hangs directly off u
        z = next(nb for nb in g.cycle_neighbors(y1) if nb != v2)
    else:
        z = next(nb for nb in g.cycle_neighbors(roles["y2"]) if nb != y1)
    roles.update({"v1": v1, "v2": v2, "x1": x1, "x2": x2, "x3": x3, "y1": y1, "z": z})

    removed = (v, v1, v2, *fan_leaves) if case == CASE_LEAF_STUB else (
        v,
        v1,
        v2,
        y1,
        roles["y2"],
        roles["y3"],
    )
    removed = tuple(dict.fromkeys(removed))
    removed_set = set(removed)
    if u in removed_set or z in removed_set or x1 in removed_set:
        raise RoleExtractionFailed("fan overlaps the surviving frame")

    orders = {
        x: [nb for nb in order if nb not in removed_set]
        for x, order in enumerate(tree.neighbor_orders())
        if x not in removed_set
    }
    tprime, mapping = plane_tree_from_orders(orders, root=w, relabel=True)
    gprime = build_halin(tprime)
    if not gprime.is_cubic:
        raise RoleExtractionFailed("shrunk graph is not cubic")
    expected_drop = 2 if case == CASE_LEAF_STUB else 3
    if len(gprime.cycle) != len(g.cycle) - expected_drop:
        raise RoleExtractionFailed("cycle did not shrink by the expected amount")
    for a, b in ((u, x1), (u, z)):
        if not gprime.has_edge(mapping[a], mapping[b]):
            raise RoleExtractionFailed(f"expected new cycle edge {a}-{b} is missing")

    removed_edges = tuple(
        sorted(
            (min(a, b), max(a, b))
            for e, (a, b) in enumerate(g.edges)
            if a in removed_set or b in removed_set
        )
    )
    frame = ReductionFrame(
        case=case,
        roles=roles,
        removed_vertices=removed,
        removed_edges=removed_edges,
        added_edges=((u, x1), (u, z)),
        g=g,
        gprime=gprime,
        old_to_new=mapping,
    )
    return gprime, frame


def _colors_at(g: HalinGraph, coloring: EdgeColoring, vertex: int) -> set[int]:
    return {
        coloring.colors[e] for _, e in g.incident(vertex) if coloring.colors[e] != 0
    }


def _smallest(excluded: set[int]) -> int:
    for c in range(1, PALETTE + 1):
        if c not in excluded:
            return c
    raise EmptyChoiceSet(f"all six colors excluded by {sorted(excluded)}")


def extend_coloring(
    gprime_coloring: EdgeColoring,
    frame: ReductionFrame,
    stats: Optional[ColoringStats] = None,
) -> EdgeColoring:
    """Lift a valid coloring of the shrunk graph back to the original.

    The colors of the shrunk graph are first permuted so the stub's three
    edges read 1 (toward x1), 2 (toward z), 3 (toward w); the fan edges are
    then assigned from small constrained choice sets.
    """
    g, gp, mapping = frame.g, frame.gprime, frame.old_to_new
    roles = frame.roles
    u, w, x1, z = roles["u"], roles["w"], roles["x1"], roles["z"]
    e_ux1 = gp.edge_id(mapping[u], mapping[x1])
    e_uz = gp.edge_id(mapping[u], mapping[z])
    e_uw = gp.edge_id(mapping[u], mapping[w])
    perm = ColorPermutation.sending(
        {
            gprime_coloring.colors[e_ux1]: 1,
            gprime_coloring.colors[e_uz]: 2,
            gprime_coloring.colors[e_uw]: 3,
        }
    )
    phi_p = perm.apply(gprime_coloring)

    base = EdgeColoring(g.num_edges, PALETTE)
    removed = set(frame.removed_vertices)
    for e, (a, b) in enumerate(g.edges):
        if a in removed or b in removed:
            continue
        base.colors[e] = phi_p.colors[gp.edge_id(mapping[a], mapping[b])]

    spare_w = _colors_at(gp, phi_p, mapping[w]) - {3}
    spare_z = _colors_at(gp, phi_p, mapping[z]) - {2}
    spare_x1 = _colors_at(gp, phi_p, mapping[x1]) - {1}

    def attempt(choices: dict[str, int]) -> EdgeColoring:
        out = base.copy()
        v, v1, v2, y1 = roles["v"], roles["v1"], roles["v2"], roles["y1"]
        if frame.case == CASE_LEAF_STUB:
            fixed = {
                (v1, x1): 1,
                (v1, v2): 3,
                (v, v1): 2,
                (u, y1): 1,
                (y1, z): 2,
                (u, v): choices["a"],
                (v2, y1): choices["b"],
                (v, v2): choices["c"],
            }
        else:
            y2, y3 = roles["y2"], roles["y3"]
            fixed = {
                (u, y3): 1,
                (u, v): 2,
                (v1, x1): 1,
                (v1, v2): 3,
                (y1, y2): 3,
                (y2, z): 2,
                (y2, y3): choices["a"],
                (v, v1): choices["b"],
                (v2, y1): choices["c"],
                (v, v2): choices["d"],
                (y3, y1): choices["e"],
            }
        for (a, b), c in fixed.items():
            out.assign(g.edge_id(a, b), c)
        return out

    def greedy_choices() -> dict[str, int]:
        if frame.case == CASE_LEAF_STUB:
            a = _smallest({1, 2, 3} | spare_w)
            b = _smallest({1, 2, 3} | spare_z)
            c = _smallest({1, 2, 3, a, b})
            return {"a": a, "b": b, "c": c}
        a = _smallest({1, 2, 3} | spare_z)
        b = _smallest({1, 2, 3} | spare_x1)
        c = _smallest({1, 2, 3, a, b})
        d = _smallest({1, 2, 3, b, c})
        e = _smallest({1, 2, 3, a, c})
        return {"a": a, "b": b, "c": c, "d": d, "e": e}

    result = attempt(greedy_choices())
    violation = find_violation(g, result)
    if violation is None and result.is_total:
        return result

    if stats is not None:
        stats.finding(
            f"cubic extension case {frame.case} greedy choice produced {violation}"
        )
    palette = range(1, PALETTE + 1)
    if frame.case == CASE_LEAF_STUB:
        set_a = [c for c in palette if c not in {1, 2, 3} | spare_w]
        set_b = [c for c in palette if c not in {1, 2, 3} | spare_z]
        for a, b in product(set_a, set_b):
            for c in [x for x in palette if x not in {1, 2, 3, a, b}]:
                cand = attempt({"a": a, "b": b, "c": c})
                if find_violation(g, cand) is None and cand.is_total:
                    return cand
    else:
        set_a = [c for c in palette if c not in {1, 2, 3} | spare_z]
        set_b = [c for c in palette if c not in {1, 2, 3} | spare_x1]
        for a, b in product(set_a, set_b):
            for c in [x for x in palette if x not in {1, 2, 3, a, b}]:
                for d in [x for x in palette if x not in {1, 2, 3, b, c}]:
                    for e in [x for x in palette if x not in {1, 2, 3, a, c}]:
                        cand = attempt({"a": a, "b": b, "c": c, "d": d, "e": e})
                        if find_violation(g, cand) is None and cand.is_total:
                            return cand
    raise StarViolationProduced(
        f"no admissible choice tuple extends the coloring; frame={frame.to_dict()}"
    )


def color_cubic(
    g: HalinGraph,
    stats: Optional[ColoringStats] = None,
    trace: Optional[list] = None,
) -> EdgeColoring:
    """Total star edge coloring of a cubic Halin graph with at most 6 colors.

    The 3-spoke wheel gets 5 colors.  The result is verified before it is
    returned; an invalid result raises instead of being passed along.
    """
    _require_cubic(g)
    path = longest_tree_path(g)
    ell = len(path) - 1
    if ell <= 3:
        return base_case_coloring(g, ell)
    gprime, frame = reduce_instance(g, path)
    if trace is not None:
        trace.append(frame.to_dict())
    phi_prime = color_cubic(gprime, stats=stats, trace=trace)
    phi = extend_coloring(phi_prime, frame, stats=stats)
    violation = find_violation(g, phi)
    if violation is not None or not phi.is_total:
        raise StarViolationProduced(f"extension left a violation: {violation}")
    return phi

"""Three-phase star edge coloring for Halin graphs of maximum degree >= 4.

Phase 1 pre-colors part of the outer cycle with two reserved colors laid
out in short repeating patterns, leaving gap edges open.  Phase 2 colors
the characteristic tree level by level inside the lower palette.  Phase 3
fills the remaining cycle edges, each from a provably nonempty allowed
set.  The total palette is floor(3*delta/2) + 2: the lower floor(3*delta/2)
colors for the tree and cycle completions, the top two reserved for the
patterns.

Cubic inputs are routed to the inductive construction; cycles too short
for the pattern prefix (length 5) are colored directly by exact search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    EdgeColoring,
    HalinGraph,
    classify_cycle_edges,
    leaves_with_cross_edges,
    uncolored_cross_counts,
)
from .cubic import color_cubic
from .errors import (
    CycleTooShortForPattern,
    InternalInvariantBroken,
    NoColorAvailable,
)
from .exact import SearchConfig, is_star_colorable
from .report import ColoringStats
from .verify import find_violation

STAR_TOKEN = 0


def palette_bound(delta: int) -> int:
    return (3 * delta) // 2 + 2


@dataclass(frozen=True)
class PatternPlan:
    """Resolved cycle pre-coloring: one token per cycle edge, in pattern order.

    ``tokens[i]`` is the color of ``edge_ids[i]`` or 0 for a gap to be
    filled after the tree is colored.  The first ``prefix_len`` positions
    tile (a, b, a, gap); the rest tile (a, b, gap).
    """

    cycle_len: int
    prefix_len: int
    color_a: int
    color_b: int
    start_edge: int
    edge_ids: tuple[int, ...]
    tokens: tuple[int, ...]

    @property
    def gap_edges(self) -> tuple[int, ...]:
        return tuple(
            e for e, t in zip(self.edge_ids, self.tokens) if t == STAR_TOKEN
        )


def plan_cycle_patterns(g: HalinGraph) -> PatternPlan:
    """Lay out the reserved-color patterns around the cycle.

    The prefix length is (n mod 3) * 4, which makes the remainder divisible
    by 3; a cycle of length 5 cannot host the 8-edge prefix and raises.
    """
    n = len(g.cycle)
    if n < 3:
        raise CycleTooShortForPattern(f"cycle length {n} < 3")
    k = (n % 3) * 4
    if k > n:
        raise CycleTooShortForPattern(
            f"prefix of {k} patterned edges does not fit a cycle of length {n}"
        )
    delta = g.delta
    color_a = (3 * delta) // 2 + 1
    color_b = (3 * delta) // 2 + 2
    ids = list(g.cycle_edge_ids)
    start_offset = min(
        range(n), key=lambda i: (min(g.edges[ids[i]]), max(g.edges[ids[i]]))
    )
    ordered = tuple(ids[start_offset:] + ids[:start_offset])
    prefix = (color_a, color_b, color_a, STAR_TOKEN)
    suffix = (color_a, color_b, STAR_TOKEN)
    tokens = tuple(
        prefix[i % 4] if i < k else suffix[(i - k) % 3] for i in range(n)
    )
    for i in range(n):
        t, nxt = tokens[i], tokens[(i + 1) % n]
        if t != STAR_TOKEN and t == nxt:
            raise InternalInvariantBroken(
                f"pattern puts equal colors on adjacent cycle edges at {i}"
            )
    return PatternPlan(
        cycle_len=n,
        prefix_len=k,
        color_a=color_a,
        color_b=color_b,
        start_edge=ordered[0],
        edge_ids=ordered,
        tokens=tokens,
    )


def apply_pattern(plan: PatternPlan, coloring: EdgeColoring) -> None:
    for e, t in zip(plan.edge_ids, plan.tokens):
        if t != STAR_TOKEN:
            coloring.assign(e, t)


def _rooted_view(g: HalinGraph, root: int):
    """Parent map, plane-ordered children, and levels, relative to root."""
    orders = g.tree.neighbor_orders()
    parent: dict[int, Optional[int]] = {root: None}
    children: dict[int, list[int]] = {}
    levels: list[list[int]] = [[root]]
    frontier = [root]
    while frontier:
        nxt: list[int] = []
        for v in frontier:
            order = orders[v]
            p = parent[v]
            if p is None:
                kids = list(order)
            else:
                i = order.index(p)
                kids = order[i + 1 :] + order[:i]
            children[v] = kids
            for kid in kids:
                parent[kid] = v
                nxt.append(kid)
        if nxt:
            levels.append(nxt)
        frontier = nxt
    return parent, children, levels


def _tree_path_blocked(
    g: HalinGraph, coloring: EdgeColoring, edge: int, color: int
) -> bool:
    """Would assigning this color close a bicolored 4-edge path within the tree?"""
    return _creates_bicolored(g, coloring, edge, color, tree_only=True)


def _creates_bicolored(
    g: HalinGraph, coloring: EdgeColoring, edge: int, color: int, tree_only: bool
) -> bool:
    """Check all 4-edge paths and cycles through `edge` against colored edges.

    Only structures whose other three edges are already colored can become
    violations, so checking around the new edge is sufficient to keep a
    violation-free partial coloring violation-free.
    """
    cols = coloring.colors
    a, b = g.edges[edge]
    # paths: split the other three edges between the two sides of `edge`
    for left_len in range(4):
        right_len = 3 - left_len
        for lcolors, lverts in _colored_walks(
            g, cols, edge, a, left_len, frozenset((a, b)), tree_only
        ):
            banned = frozenset((a, b)) | frozenset(lverts)
            for rcolors, _ in _colored_walks(
                g, cols, edge, b, right_len, banned, tree_only
            ):
                seq = lcolors + (color,) + rcolors
                if len(set(seq)) <= 2:
                    return True
    # 4-cycles: three colored edges from a back to b
    for ccolors, cverts in _colored_walks(
        g, cols, edge, a, 3, frozenset((a,)), tree_only, allow_end=b
    ):
        if cverts[-1] == b:
            if len(set(ccolors + (color,))) <= 2:
                return True
    return False


def _colored_walks(g, cols, edge, vertex, length, banned, tree_only, allow_end=None):
    """(colors, vertices) of colored simple walks with `length` edges from vertex.

    `allow_end` names one banned vertex that may still appear, but only as
    the final vertex of the walk (used for closing 4-cycles).
    """
    if length == 0:
        yield (), ()
        return
    for nb, e in g.incident(vertex):
        if e == edge:
            continue
        if tree_only and g.is_cycle_edge(e):
            continue
        if cols[e] == 0:
            continue
        if nb in banned and not (length == 1 and nb == allow_end):
            continue
        for rest_c, rest_v in _colored_walks(
            g, cols, edge, nb, length - 1, banned | {nb}, tree_only, allow_end
        ):
            yield (cols[e],) + rest_c, (nb,) + rest_v


def pick_tree_root(g: HalinGraph) -> int:
    """Smallest-id internal vertex of maximum degree."""
    delta = g.delta
    return min(v for v in g.tree.internal_vertices() if g.degree(v) == delta)


def color_tree(
    g: HalinGraph,
    partial: EdgeColoring,
    stats: Optional[ColoringStats] = None,
) -> EdgeColoring:
    """Level-order star coloring of the tree within the lower palette.

    At each vertex the children are ordered by how many uncolored
    different-parent cycle edges they touch, most first.  The first
    min(deg(v)-1, floor(delta/2)) child edges take colors absent at the
    parent's parent-side neighborhood; the remaining child edges take any
    lower-palette color that keeps the tree proper and free of bicolored
    4-edge paths.
    """
    delta = g.delta
    lower = (3 * delta) // 2
    classes = classify_cycle_edges(g)
    coloring = partial.copy()
    ucd = uncolored_cross_counts(g, classes, coloring)
    root = pick_tree_root(g)
    parent, children, levels = _rooted_view(g, root)

    # the forced slots can shelter at most floor(delta/2) cross-edge leaves
    # per vertex; an excess is a finding (possible once delta reaches 9,
    # where the cross-leaf ceiling itself can be exceeded)
    for v in g.tree.internal_vertices():
        crossing = leaves_with_cross_edges(g, classes, v)
        live = [leaf for leaf in crossing if ucd.get(leaf, 0) > 0]
        if len(live) > delta // 2 and stats is not None:
            stats.finding(
                f"{len(live)} leaves at vertex {v} still carry uncolored "
                f"cross edges, above the sheltered {delta // 2}"
            )

    for i, kid in enumerate(children[root]):
        coloring.assign(g.edge_id(root, kid), i + 1)

    for level in levels[1:]:
        for v in sorted(level):
            kids = children[v]
            if not kids:
                continue
            kids = sorted(kids, key=lambda x: (-ucd.get(x, 0), x))
            m = min(g.degree(v) - 1, delta // 2)
            p = parent[v]
            assert p is not None
            parent_colors = {
                coloring.colors[e]
                for _, e in g.incident(p)
                if not g.is_cycle_edge(e) and coloring.colors[e] != 0
            }
            near = sorted(c for c in range(1, lower + 1) if c not in parent_colors)
            if len(near) < m:
                raise NoColorAvailable(
                    f"only {len(near)} colors free of the grandparent side at {v}"
                )
            for i, kid in enumerate(kids[:m]):
                coloring.assign(g.edge_id(v, kid), near[i])
            used_here = set(near[:m]) | {coloring.colors[g.edge_id(v, p)]}
            for kid in kids[m:]:
                e = g.edge_id(v, kid)
                chosen = None
                for c in range(1, lower + 1):
                    if c in used_here:
                        continue
                    if _tree_path_blocked(g, coloring, e, c):
                        continue
                    chosen = c
                    break
                if chosen is None:
                    if stats is not None:
                        stats.finding(
                            f"tree coloring ran out of colors at edge {e}; backtracking"
                        )
                    return _color_tree_backtrack(g, partial, root, stats)
                coloring.assign(e, chosen)
                used_here.add(chosen)
    return coloring


def _color_tree_backtrack(
    g: HalinGraph,
    partial: EdgeColoring,
    root: int,
    stats: Optional[ColoringStats],
) -> EdgeColoring:
    """Exhaustive fallback over the same edge order and admissibility rules."""
    delta = g.delta
    lower = (3 * delta) // 2
    classes = classify_cycle_edges(g)
    ucd = uncolored_cross_counts(g, classes, partial)
    parent, children, levels = _rooted_view(g, root)
    edge_plan: list[tuple[int, int, bool]] = []  # (edge, vertex, near_slot)
    for i, kid in enumerate(children[root]):
        edge_plan.append((g.edge_id(root, kid), root, False))
    for level in levels[1:]:
        for v in sorted(level):
            kids = sorted(children[v], key=lambda x: (-ucd.get(x, 0), x))
            m = min(g.degree(v) - 1, delta // 2)
            for i, kid in enumerate(kids):
                edge_plan.append((g.edge_id(v, kid), v, i < m))

    coloring = partial.copy()
    root_kids = len(children[root])

    def candidates(idx: int) -> list[int]:
        e, v, near_slot = edge_plan[idx]
        if idx < root_kids:
            return [idx + 1]
        p = parent[v]
        assert p is not None
        banned = {
            coloring.colors[x]
            for _, x in g.incident(v)
            if not g.is_cycle_edge(x) and coloring.colors[x] != 0
        }
        if near_slot:
            parent_colors = {
                coloring.colors[x]
                for _, x in g.incident(p)
                if not g.is_cycle_edge(x) and coloring.colors[x] != 0
            }
            banned |= parent_colors
        out = []
        for c in range(1, lower + 1):
            if c in banned or _tree_path_blocked(g, coloring, e, c):
                continue
            out.append(c)
        return out

    idx = 0
    pointer = [0] * len(edge_plan)
    options: list[list[int]] = [[] for _ in edge_plan]
    while 0 <= idx < len(edge_plan):
        e = edge_plan[idx][0]
        coloring.unassign(e)
        if pointer[idx] == 0:
            options[idx] = candidates(idx)
        if pointer[idx] < len(options[idx]):
            coloring.assign(e, options[idx][pointer[idx]])
            pointer[idx] += 1
            idx += 1
            if idx < len(edge_plan):
                pointer[idx] = 0
        else:
            pointer[idx] = 0
            idx -= 1
    if idx < 0:
        raise NoColorAvailable("tree backtracking exhausted the lower palette")
    return coloring


@dataclass(frozen=True)
class ForbiddenSet:
    """Edges and colors excluded when completing a different-parent cycle edge."""

    edges: tuple[int, ...]
    colors: frozenset[int]


def forbidden_for_cross_edge(
    g: HalinGraph, coloring: EdgeColoring, e: int
) -> ForbiddenSet:
    """Colors ruled out for cycle edge e joining leaves of different parents.

    For each endpoint leaf: its own tree-edge color, plus the colors of the
    parent's tree edges leading to neighbors that already carry the leaf's
    tree-edge color somewhere on their own tree edges.
    """
    u, v = g.edges[e]
    edges: list[int] = []
    colors: set[int] = set()
    for leaf in (u, v):
        p = g.leaf_tree_neighbor(leaf)
        own = g.edge_id(leaf, p)
        own_color = coloring.colors[own]
        edges.append(own)
        colors.add(own_color)
        for nb, pe in g.incident(p):
            if g.is_cycle_edge(pe) or nb == leaf:
                continue
            carries = any(
                coloring.colors[x] == own_color
                for _, x in g.incident(nb)
                if not g.is_cycle_edge(x) and x != pe
            )
            if carries:
                edges.append(pe)
                colors.add(coloring.colors[pe])
    return ForbiddenSet(tuple(sorted(set(edges))), frozenset(colors))


def complete_cycle(
    g: HalinGraph,
    partial: EdgeColoring,
    plan: PatternPlan,
    stats: Optional[ColoringStats] = None,
) -> EdgeColoring:
    """Fill the gap cycle edges, smallest admissible color first.

    Same-parent gaps take a color unused at the shared parent; different-
    parent gaps take a color outside the forbidden set, whose size leaves
    at least floor(3*delta/2) - 2*ceil(delta/2) >= 1 options (asserted on
    every completion).  Both additionally pass a local check against all
    currently colored edges; if an edge has no admissible color the gaps
    are re-solved by backtracking and the activation is reported.
    """
    delta = g.delta
    lower = (3 * delta) // 2
    required_margin = lower - 2 * ((delta + 1) // 2)
    classes = classify_cycle_edges(g)
    coloring = partial.copy()
    gaps = [e for e in plan.gap_edges if coloring.colors[e] == 0]

    def candidates(e: int) -> list[int]:
        u, v = g.edges[e]
        if e in classes.same_parent:
            p = g.leaf_tree_neighbor(u)
            used = {
                coloring.colors[x]
                for _, x in g.incident(p)
                if coloring.colors[x] != 0
            }
            base = [c for c in range(1, lower + 1) if c not in used]
        else:
            forb = forbidden_for_cross_edge(g, coloring, e)
            base = [c for c in range(1, lower + 1) if c not in forb.colors]
            margin = len(base)
            if stats is not None:
                stats.margin(margin)
                if margin < max(required_margin, 1):
                    stats.finding(
                        f"allowed set for cycle edge {e} has {margin} colors, "
                        f"below the guaranteed {max(required_margin, 1)}"
                    )
        endpoint_used = {
            coloring.colors[x]
            for vert in (u, v)
            for _, x in g.incident(vert)
            if coloring.colors[x] != 0
        }
        return [
            c
            for c in base
            if c not in endpoint_used
            and not _creates_bicolored(g, coloring, e, c, tree_only=False)
        ]

    greedy_ok = True
    for e in gaps:
        cands = candidates(e)
        if not cands:
            greedy_ok = False
            break
        coloring.assign(e, cands[0])
    if greedy_ok:
        return coloring

    if stats is not None:
        stats.finding("cycle completion ran out of colors; backtracking over gaps")
    coloring = partial.copy()
    pointer = [0] * len(gaps)
    options: list[list[int]] = [[] for _ in gaps]
    idx = 0
    while 0 <= idx < len(gaps):
        e = gaps[idx]
        coloring.unassign(e)
        if pointer[idx] == 0:
            options[idx] = candidates(e)
        if pointer[idx] < len(options[idx]):
            coloring.assign(e, options[idx][pointer[idx]])
            pointer[idx] += 1
            idx += 1
            if idx < len(gaps):
                pointer[idx] = 0
        else:
            pointer[idx] = 0
            idx -= 1
    if idx < 0:
        raise NoColorAvailable("cycle completion backtracking exhausted")
    return coloring


def _joint_backtrack(
    g: HalinGraph,
    pattern_partial: EdgeColoring,
    plan: PatternPlan,
    stats: Optional[ColoringStats],
    node_cap: int = 2_000_000,
) -> EdgeColoring:
    """Backtracking over the tree's free choices and the gap completions.

    The greedy phases can pinch a gap edge between two pattern edges of the
    same reserved color whose outer tree edges exhaust the parent-free
    colors; re-ordering the forced child colors resolves it.  The search
    keeps every per-edge rule of the greedy phases and explores the choice
    space depth first, most recent decision first.
    """
    delta = g.delta
    lower = (3 * delta) // 2
    classes = classify_cycle_edges(g)
    ucd = uncolored_cross_counts(g, classes, pattern_partial)
    root = pick_tree_root(g)
    parent, children, levels = _rooted_view(g, root)

    KIND_ROOT, KIND_NEAR, KIND_FAR, KIND_GAP = range(4)
    edge_plan: list[tuple[int, int, int]] = []  # (edge, kind, vertex/slot)
    for i, kid in enumerate(children[root]):
        edge_plan.append((g.edge_id(root, kid), KIND_ROOT, i))
    for level in levels[1:]:
        for v in sorted(level):
            kids = sorted(children[v], key=lambda x: (-ucd.get(x, 0), x))
            m = min(g.degree(v) - 1, delta // 2)
            for i, kid in enumerate(kids):
                kind = KIND_NEAR if i < m else KIND_FAR
                edge_plan.append((g.edge_id(v, kid), kind, v))
    for e in plan.gap_edges:
        edge_plan.append((e, KIND_GAP, -1))

    coloring = pattern_partial.copy()

    def tree_colors_at(vertex: int) -> set[int]:
        return {
            coloring.colors[x]
            for _, x in g.incident(vertex)
            if not g.is_cycle_edge(x) and coloring.colors[x] != 0
        }

    def candidates(idx: int) -> list[int]:
        e, kind, aux = edge_plan[idx]
        if kind == KIND_ROOT:
            return [aux + 1]  # root colors are symmetric below the reserve
        if kind in (KIND_NEAR, KIND_FAR):
            v = aux
            p = parent[v]
            assert p is not None
            banned = tree_colors_at(v)
            if kind == KIND_NEAR:
                banned |= tree_colors_at(p)
            return [
                c
                for c in range(1, lower + 1)
                if c not in banned and not _tree_path_blocked(g, coloring, e, c)
            ]
        u, v = g.edges[e]
        if e in classes.same_parent:
            pu = g.leaf_tree_neighbor(u)
            used = {
                coloring.colors[x]
                for _, x in g.incident(pu)
                if coloring.colors[x] != 0
            }
            base = [c for c in range(1, lower + 1) if c not in used]
        else:
            forb = forbidden_for_cross_edge(g, coloring, e)
            base = [c for c in range(1, lower + 1) if c not in forb.colors]
            if stats is not None:
                stats.margin(len(base))
        endpoint_used = {
            coloring.colors[x]
            for vert in (u, v)
            for _, x in g.incident(vert)
            if coloring.colors[x] != 0
        }
        return [
            c
            for c in base
            if c not in endpoint_used
            and not _creates_bicolored(g, coloring, e, c, tree_only=False)
        ]

    pointer = [0] * len(edge_plan)
    options: list[list[int]] = [[] for _ in edge_plan]
    idx = 0
    nodes = 0
    while 0 <= idx < len(edge_plan):
        e = edge_plan[idx][0]
        coloring.unassign(e)
        if pointer[idx] == 0:
            options[idx] = candidates(idx)
        if pointer[idx] < len(options[idx]):
            nodes += 1
            if nodes > node_cap:
                raise NoColorAvailable("joint backtracking hit its node cap")
            coloring.assign(e, options[idx][pointer[idx]])
            pointer[idx] += 1
            idx += 1
            if idx < len(edge_plan):
                pointer[idx] = 0
        else:
            pointer[idx] = 0
            idx -= 1
    if idx < 0:
        raise NoColorAvailable("joint backtracking exhausted all phase choices")
    return coloring


def _exact_color_within_bound(
    g: HalinGraph, stats: Optional[ColoringStats]
) -> EdgeColoring:
    bound = palette_bound(g.delta)
    cfg = SearchConfig(edge_order="degree_descending")
    for k in range(g.delta, bound + 1):
        found = is_star_colorable(g, k, cfg)
        if found is not None:
            out = EdgeColoring(g.num_edges, bound, list(found.colors))
            return out
    raise InternalInvariantBroken(
        f"exact search found no coloring within the bound {bound}"
    )


def color_halin(
    g: HalinGraph,
    stats: Optional[ColoringStats] = None,
    trace: Optional[list] = None,
) -> EdgeColoring:
    """Star edge coloring of any Halin graph within floor(3*delta/2) + 2 colors.

    Cubic graphs use the inductive six-color construction; everything else
    runs the three phases.  The result is re-verified before it is returned.
    """
    delta = g.delta
    if delta == 3:
        if stats is not None:
            stats.algorithm = "cubic-inductive"
        coloring = color_cubic(g, stats=stats, trace=trace)
    else:
        bound = palette_bound(delta)
        try:
            plan = plan_cycle_patterns(g)
        except CycleTooShortForPattern:
            if stats is not None:
                stats.algorithm = "exact-fallback"
            coloring = _exact_color_within_bound(g, stats)
            plan = None
        if plan is not None:
            if stats is not None:
                stats.algorithm = "three-phase"
            patterned = EdgeColoring(g.num_edges, bound)
            apply_pattern(plan, patterned)
            try:
                working = color_tree(g, patterned, stats=stats)
                coloring = complete_cycle(g, working, plan, stats=stats)
            except NoColorAvailable:
                if stats is not None:
                    stats.finding(
                        "greedy phases pinched a gap edge; re-solving tree "
                        "choices and completions jointly"
                    )
                coloring = _joint_backtrack(g, patterned, plan, stats)
    violation = find_violation(g, coloring)
    if violation is not None or not coloring.is_total:
        raise InternalInvariantBroken(f"final coloring is invalid: {violation}")
    if coloring.num_colors_used > palette_bound(delta):
        raise InternalInvariantBroken("color count exceeds the proven bound")
    return coloring

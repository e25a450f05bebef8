"""Plain-text file formats for graphs and colorings.

Graph files carry the characteristic tree only; the outer cycle is always
derived.  Lines starting with ``#`` are ignored in both formats.

Graph file::

    HALIN 1
    T <vertex> <child1> <child2> ...

One ``T`` line per internal vertex, children in clockwise plane order.
The vertex on the first ``T`` line is the root.

Coloring file::

    COLORING <paletteSize>
    <u> <v> <color|*>
"""
from __future__ import annotations

from .core import EdgeColoring, HalinGraph, PlaneTree
from .errors import ColoringFormatError, GraphFormatError

GRAPH_MAGIC = "HALIN 1"
COLORING_MAGIC = "COLORING"
STAR = "*"


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def serialize_tree(tree: PlaneTree) -> str:
    """Canonical form: internal vertices in preorder, root first."""
    lines = [GRAPH_MAGIC]
    stack = [tree.root]
    while stack:
        v = stack.pop()
        if tree.children[v]:
            lines.append("T " + str(v) + " " + " ".join(map(str, tree.children[v])))
        stack.extend(reversed(tree.children[v]))
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> PlaneTree:
    lines = _content_lines(text)
    if not lines or lines[0] != GRAPH_MAGIC:
        raise GraphFormatError(f"expected header '{GRAPH_MAGIC}'")
    root = None
    table: dict[int, tuple[int, ...]] = {}
    max_id = -1
    for line in lines[1:]:
        parts = line.split()
        if parts[0] != "T" or len(parts) < 3:
            raise GraphFormatError(f"bad line: {line!r}")
        try:
            ids = [int(p) for p in parts[1:]]
        except ValueError:
            raise GraphFormatError(f"non-integer id in line: {line!r}") from None
        v, kids = ids[0], ids[1:]
        if min(ids) < 0:
            raise GraphFormatError(f"negative id in line: {line!r}")
        if v in table:
            raise GraphFormatError(f"vertex {v} listed twice")
        table[v] = tuple(kids)
        max_id = max(max_id, max(ids))
        if root is None:
            root = v
    if root is None:
        raise GraphFormatError("no T lines")
    children = [table.get(v, ()) for v in range(max_id + 1)]
    return PlaneTree(root, children)


def serialize_coloring(g: HalinGraph, coloring: EdgeColoring) -> str:
    if coloring.num_edges != g.num_edges:
        raise ColoringFormatError("coloring does not match the graph's edge count")
    lines = [f"{COLORING_MAGIC} {coloring.palette_size}"]
    for e, (u, v) in enumerate(g.edges):
        c = coloring.get(e)
        lines.append(f"{u} {v} {STAR if c is None else c}")
    return "\n".join(lines) + "\n"


def parse_coloring(g: HalinGraph, text: str) -> EdgeColoring:
    lines = _content_lines(text)
    if not lines:
        raise ColoringFormatError("empty coloring file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != COLORING_MAGIC:
        raise ColoringFormatError(f"expected header '{COLORING_MAGIC} <paletteSize>'")
    try:
        palette = int(head[1])
    except ValueError:
        raise ColoringFormatError("palette size is not an integer") from None
    coloring = EdgeColoring(g.num_edges, palette)
    seen: set[int] = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ColoringFormatError(f"bad line: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ColoringFormatError(f"non-integer endpoint in line: {line!r}") from None
        try:
            e = g.edge_id(u, v)
        except ValueError:
            raise ColoringFormatError(f"unknown edge {u} {v}") from None
        if e in seen:
            raise ColoringFormatError(f"edge {u} {v} listed twice")
        seen.add(e)
        if parts[2] != STAR:
            try:
                c = int(parts[2])
            except ValueError:
                raise ColoringFormatError(f"bad color in line: {line!r}") from None
            coloring.assign(e, c)
    return coloring

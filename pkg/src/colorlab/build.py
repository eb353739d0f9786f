"""Builders for the wheel, the 17-vertex gadget, the Mirzakhani graph M,
and its canonical list assignment.

Everything is generated from a cell grid: cell (x, y) contributes a hub at
(x, y), four corners at (2x±1, 2y±1), four hub-corner spokes, and the rim
4-cycle on its corners.  Corners and rim edges shared between adjacent
cells deduplicate, which is what reproduces the drawn graph exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .graph import Coord, Graph, GraphError, VertexId, apex, corner, hub, make_graph

PALETTE = (1, 2, 3, 4, 5)

# Cells of M: a 12-cell spine plus north/south cells at x = 1, 4, 7, 10.
M_CELLS: tuple[tuple[int, int], ...] = tuple(
    sorted([(x, 0) for x in range(12)] + [(x, s) for x in (1, 4, 7, 10) for s in (-1, 1)])
)

GADGET_CELLS: tuple[tuple[int, int], ...] = ((0, 0), (1, -1), (1, 0), (1, 1), (2, 0))

# Forbidden color of every section-1 corner, transcribed from the drawing.
SECTION1_FORBIDDEN: dict[tuple[int, int], int] = {
    (-1, -1): 2, (-1, 1): 4,
    (1, -1): 5, (1, 1): 3,
    (1, -3): 2, (3, -3): 3,
    (1, 3): 4, (3, 3): 5,
    (3, -1): 4, (3, 1): 2,
    (5, -1): 3, (5, 1): 5,
}

# Color permutation applied to the section-1 pattern to obtain section j.
# These are data read off the drawing, cross-checked at every shared
# boundary corner by canonical_lists().
SECTION_PERMUTATIONS: tuple[dict[int, int], ...] = (
    {1: 1, 2: 2, 3: 3, 4: 4, 5: 5},
    {1: 2, 2: 3, 3: 1, 4: 5, 5: 4},
    {1: 3, 3: 2, 2: 1, 4: 4, 5: 5},
    {1: 4, 4: 5, 5: 3, 3: 1, 2: 2},
)


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists over a finite palette."""

    palette: tuple[int, ...]
    lists: Mapping[VertexId, tuple[int, ...]]

    def __post_init__(self) -> None:
        pal = set(self.palette)
        for v, lst in self.lists.items():
            if not lst:
                raise GraphError(f"empty color list at {v}")
            if not set(lst) <= pal:
                raise GraphError(f"list at {v} leaves the palette: {lst}")

    def list_of(self, v: VertexId) -> tuple[int, ...]:
        return self.lists[v]

    def restrict(self, vertices: Iterable[VertexId]) -> "ListAssignment":
        return ListAssignment(self.palette, {v: self.lists[v] for v in vertices})

    def without_color(self, vertices: Iterable[VertexId], color: int) -> "ListAssignment":
        """Copy with ``color`` removed from the lists of ``vertices``."""
        new = dict(self.lists)
        for v in vertices:
            new[v] = tuple(c for c in new[v] if c != color)
        return ListAssignment(self.palette, new)


def make_lists(
    palette: Sequence[int], lists: Mapping[VertexId, Iterable[int]]
) -> ListAssignment:
    return ListAssignment(
        tuple(sorted(set(palette))),
        {v: tuple(sorted(set(cs))) for v, cs in lists.items()},
    )


def uniform_lists(g: Graph, colors: Sequence[int]) -> ListAssignment:
    """Every vertex receives the same list (plain k-coloring as list-coloring)."""
    cs = tuple(sorted(set(colors)))
    return ListAssignment(cs, {v: cs for v in g.vertices})


def forbidding(palette: Sequence[int], j: int) -> tuple[int, ...]:
    """The list that forbids exactly color j."""
    return tuple(c for c in sorted(set(palette)) if c != j)


def _cell_corners(x: int, y: int) -> list[VertexId]:
    return [corner(2 * x + dx, 2 * y + dy) for dx in (-1, 1) for dy in (-1, 1)]


def _cells_graph(cells: Iterable[tuple[int, int]]) -> Graph:
    """Hubs, deduplicated corners, spokes, and rim 4-cycles of the cells."""
    vertices: list[VertexId] = []
    edges: list[tuple[VertexId, VertexId]] = []
    layout: dict[VertexId, tuple[Coord, Coord]] = {}
    for x, y in cells:
        h = hub(x, y)
        sw = corner(2 * x - 1, 2 * y - 1)
        se = corner(2 * x + 1, 2 * y - 1)
        ne = corner(2 * x + 1, 2 * y + 1)
        nw = corner(2 * x - 1, 2 * y + 1)
        vertices += [h, sw, se, ne, nw]
        edges += [(h, sw), (h, se), (h, ne), (h, nw)]
        edges += [(sw, se), (se, ne), (ne, nw), (nw, sw)]
        layout[h] = (6 * x, 6 * y)
        for c in (sw, se, ne, nw):
            layout[c] = (3 * c.coords[0], 3 * c.coords[1])
    return make_graph(vertices, edges, layout)


def wheel4() -> Graph:
    """The 4-wheel: one hub plus its rim 4-cycle (a single cell at the origin)."""
    return _cells_graph([(0, 0)])


def gadget() -> tuple[Graph, tuple[VertexId, ...]]:
    """The 17-vertex five-wheel gadget and its 12 outer-face corners."""
    g = _cells_graph(GADGET_CELLS)
    outer = tuple(v for v in g.vertices if v.kind == "corner")
    return g, outer


def mirzakhani() -> Graph:
    """The 63-vertex Mirzakhani graph M: 20 cells plus an apex joined to
    every corner."""
    base = _cells_graph(M_CELLS)
    inf = apex()
    corners = [v for v in base.vertices if v.kind == "corner"]
    vertices = list(base.vertices) + [inf]
    edges = list(base.edges()) + [(inf, c) for c in corners]
    layout = dict(base.layout or {})
    layout[inf] = (33, 25)
    return make_graph(vertices, edges, layout)


def wheel_lists() -> ListAssignment:
    """Forcing lists for the standalone 4-wheel: color 1 absent everywhere,
    the four 3-subsets of {2,3,4,5} on the rim, the full set at the hub."""
    return make_lists(
        PALETTE,
        {
            hub(0, 0): (2, 3, 4, 5),
            corner(-1, 1): (2, 3, 5),   # nw
            corner(1, 1): (2, 3, 4),    # ne
            corner(-1, -1): (2, 4, 5),  # sw
            corner(1, -1): (3, 4, 5),   # se
        },
    )


def section_cells(j: int) -> tuple[tuple[int, int], ...]:
    if not 1 <= j <= 4:
        raise GraphError(f"section index must be 1..4, got {j}")
    xs = (3 * j - 3, 3 * j - 2, 3 * j - 1)
    return tuple(sorted((x, y) for x, y in M_CELLS if x in xs))


def canonical_lists() -> ListAssignment:
    """The list assignment drawn on M: hubs of section j get the list
    forbidding j, the apex forbids 5, and corners follow the section-1
    pattern pushed through the section permutations.

    Corners shared by two sections are computed from both sides and must
    agree; a mismatch would mean the transcribed data is wrong.
    """
    forb: dict[VertexId, int] = {}
    for j in range(1, 5):
        pi = SECTION_PERMUTATIONS[j - 1]
        for (x, y) in section_cells(j):
            forb[hub(x, y)] = j
        for (a, b), f in SECTION1_FORBIDDEN.items():
            v = corner(a + 6 * (j - 1), b)
            val = pi[f]
            if v in forb and forb[v] != val:
                raise GraphError(
                    f"inconsistent transcription at {v}: {forb[v]} vs {val}"
                )
            forb[v] = val
    forb[apex()] = 5
    return make_lists(PALETTE, {v: forbidding(PALETTE, f) for v, f in forb.items()})


def section_gadget(
    m: Graph, j: int
) -> tuple[Graph, tuple[VertexId, ...], dict[VertexId, VertexId]]:
    """Section j of M as an induced subgraph.

    Returns the subgraph, its 12 outer corners, and the translation map
    from gadget() vertices onto it (corner a -> a + 6(j-1), hub x -> x + 3(j-1)).
    """
    cells = section_cells(j)
    keep = set()
    for x, y in cells:
        keep.add(hub(x, y))
        keep.update(_cell_corners(x, y))
    sub = _induced(m, keep)
    outer = tuple(v for v in sub.vertices if v.kind == "corner")
    shift_hub = 3 * (j - 1)
    shift_corner = 6 * (j - 1)
    gmap: dict[VertexId, VertexId] = {}
    base, _ = gadget()
    for v in base.vertices:
        if v.kind == "hub":
            gmap[v] = hub(v.coords[0] + shift_hub, v.coords[1])
        else:
            gmap[v] = corner(v.coords[0] + shift_corner, v.coords[1])
    return sub, outer, gmap


def _induced(g: Graph, keep: set[VertexId]) -> Graph:
    unknown = keep - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertex {sorted(unknown)[0]}")
    vs = [v for v in g.vertices if v in keep]
    edges = [(u, v) for u, v in g.edges() if u in keep and v in keep]
    layout = {v: g.layout[v] for v in vs} if g.layout is not None else None
    return make_graph(vs, edges, layout)


def canonical_layout(g: Graph) -> Graph:
    """Re-derive the standard drawing coordinates from structured vertex ids.

    Useful after reading a format that does not carry coordinates.  Plain
    vertices have no canonical position, so graphs containing them are
    returned unchanged.
    """
    if any(v.kind == "plain" for v in g.vertices):
        return g
    layout: dict[VertexId, tuple[Coord, Coord]] = {}
    for v in g.vertices:
        if v.kind == "apex":
            layout[v] = (33, 25)
        elif v.kind == "hub":
            layout[v] = (6 * v.coords[0], 6 * v.coords[1])
        else:
            layout[v] = (3 * v.coords[0], 3 * v.coords[1])
    return Graph(vertices=g.vertices, adj=g.adj, layout=layout)

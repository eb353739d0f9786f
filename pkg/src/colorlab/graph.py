"""Simple undirected graphs with structured vertex identities.

Vertices carry their role in the cell construction (apex / hub / corner) or
a plain integer id for generic graphs.  A fixed total order on vertex ids
(apex < hub < corner < plain, coordinates lexicographic) makes every
derived sequence deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Union

Coord = Union[int, Fraction]

_KIND_RANK = {"apex": 0, "hub": 1, "corner": 2, "plain": 3}


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


@dataclass(frozen=True, order=False)
class VertexId:
    """Structural vertex identity; equality and order are value-based."""

    kind: str
    coords: tuple[int, ...] = ()

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (_KIND_RANK[self.kind], self.coords)

    def __lt__(self, other: "VertexId") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "VertexId") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "VertexId") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "VertexId") -> bool:
        return self.sort_key() >= other.sort_key()

    def __str__(self) -> str:
        if self.kind == "apex":
            return "apex"
        return f"{self.kind}:{','.join(str(c) for c in self.coords)}"

    def __repr__(self) -> str:
        return f"VertexId({self})"


def apex() -> VertexId:
    return VertexId("apex")


def hub(x: int, y: int) -> VertexId:
    return VertexId("hub", (int(x), int(y)))


def corner(a: int, b: int) -> VertexId:
    if a % 2 == 0 or b % 2 == 0:
        raise GraphError(f"corner coordinates must both be odd, got ({a}, {b})")
    return VertexId("corner", (int(a), int(b)))


def plain(n: int) -> VertexId:
    if n < 0:
        raise GraphError(f"plain vertex index must be nonnegative, got {n}")
    return VertexId("plain", (int(n),))


def parse_vertex(text: str) -> VertexId:
    """Inverse of ``str(vertex)``: 'apex', 'hub:x,y', 'corner:a,b', 'plain:n'."""
    if text == "apex":
        return apex()
    kind, _, rest = text.partition(":")
    try:
        coords = tuple(int(c) for c in rest.split(","))
    except ValueError:
        raise GraphError(f"unparseable vertex id {text!r}") from None
    if kind == "hub" and len(coords) == 2:
        return hub(*coords)
    if kind == "corner" and len(coords) == 2:
        return corner(*coords)
    if kind == "plain" and len(coords) == 1:
        return plain(*coords)
    raise GraphError(f"unparseable vertex id {text!r}")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``vertices`` is sorted by the vertex total order and every adjacency
    tuple is sorted the same way; treat all fields as read-only.
    """

    vertices: tuple[VertexId, ...]
    adj: Mapping[VertexId, tuple[VertexId, ...]]
    layout: Optional[Mapping[VertexId, tuple[Coord, Coord]]] = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj.values()) // 2

    def degree(self, v: VertexId) -> int:
        return len(self.adj[v])

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[VertexId, VertexId]]:
        """All edges as ordered pairs (u < v), in lexicographic order."""
        for u in self.vertices:
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def index(self) -> dict[VertexId, int]:
        """Vertex -> position in the fixed total order (0-based)."""
        return {v: i for i, v in enumerate(self.vertices)}


def make_graph(
    vertices: Iterable[VertexId],
    edges: Iterable[tuple[VertexId, VertexId]],
    layout: Optional[Mapping[VertexId, tuple[Coord, Coord]]] = None,
) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    vs = sorted(set(vertices))
    vset = set(vs)
    nbrs: dict[VertexId, set[VertexId]] = {v: set() for v in vs}
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge at {u}")
        if u not in vset or v not in vset:
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = {v: tuple(sorted(nbrs[v])) for v in vs}
    lay = None
    if layout is not None:
        missing = [v for v in vs if v not in layout]
        if missing:
            raise GraphError(f"layout missing coordinates for {missing[0]}")
        lay = {v: (layout[v][0], layout[v][1]) for v in vs}
    return Graph(vertices=tuple(vs), adj=adj, layout=lay)


def delete_vertices(g: Graph, remove: Iterable[VertexId]) -> Graph:
    """Induced subgraph on V minus ``remove``; layout entries are dropped too."""
    s = set(remove)
    unknown = s - set(g.vertices)
    if unknown:
        raise GraphError(f"cannot delete unknown vertex {sorted(unknown)[0]}")
    keep = [v for v in g.vertices if v not in s]
    adj = {v: tuple(u for u in g.adj[v] if u not in s) for v in keep}
    lay = None
    if g.layout is not None:
        lay = {v: g.layout[v] for v in keep}
    return Graph(vertices=tuple(keep), adj=adj, layout=lay)


def components(g: Graph) -> list[tuple[VertexId, ...]]:
    """Connected components, each sorted, listed by least member."""
    seen: set[VertexId] = set()
    out: list[tuple[VertexId, ...]] = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = [root]
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components(g)) == 1


def degree_histogram(g: Graph) -> dict[int, int]:
    """Map degree -> number of vertices of that degree."""
    hist: dict[int, int] = {}
    for v in g.vertices:
        d = len(g.adj[v])
        hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))


class BipartiteResult(NamedTuple):
    bipartite: bool
    coloring: Optional[dict[VertexId, int]]  # proper 2-coloring with sides 0/1
    odd_cycle: Optional[list[VertexId]]  # odd closed walk, closing edge implicit


def is_bipartite(g: Graph) -> BipartiteResult:
    """BFS 2-coloring; on failure returns an odd cycle as the witness.

    The odd cycle is a vertex sequence c0, ..., c_{2k} with consecutive
    members adjacent and c_{2k} adjacent back to c0.
    """
    side: dict[VertexId, int] = {}
    parent: dict[VertexId, Optional[VertexId]] = {}
    for root in g.vertices:
        if root in side:
            continue
        side[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return BipartiteResult(False, None, _odd_cycle(parent, u, w))
    return BipartiteResult(True, dict(side), None)


def _odd_cycle(
    parent: Mapping[VertexId, Optional[VertexId]], u: VertexId, w: VertexId
) -> list[VertexId]:
    # Walk both BFS ancestries up to the lowest common ancestor; the two legs
    # plus the offending edge close an odd cycle.
    anc_u = [u]
    x: Optional[VertexId] = u
    while parent[x] is not None:
        x = parent[x]
        anc_u.append(x)
    anc_w = [w]
    x = w
    while parent[x] is not None:
        x = parent[x]
        anc_w.append(x)
    in_u = {v: i for i, v in enumerate(anc_u)}
    meet_i = next(i for i, v in enumerate(anc_w) if v in in_u)
    lca = anc_w[meet_i]
    leg_u = anc_u[: in_u[lca] + 1]  # u ... lca
    leg_w = anc_w[:meet_i]  # w ... child of lca
    return leg_u + list(reversed(leg_w))

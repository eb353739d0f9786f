"""Structural certificates.

Planarity is certified constructively: build a rotation system from the
straight-line layout (exact rational arithmetic, no floating point), trace
its faces, and check Euler's formula V - E + F = 2 on a connected graph.
Hamiltonicity comes from a pruned search whose output is replayed by an
independent checker; non-Hamiltonicity of the apex-deleted graph comes from
a cut certificate (delete S, count components, compare against |S|); a
perfect matching is found by a blossom-contraction search and replayed.
``audit`` runs the whole battery and emits one deterministic JSON report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Mapping, Optional

from colorlab import __version__
from colorlab.build import ListAssignment, canonical_lists, mirzakhani
from colorlab.choose import verify_not_choosable
from colorlab.engine import BACKEND_NAME, EXHAUSTED, SAT, hamilton_cycle
from colorlab.graph import (
    Graph,
    GraphError,
    VertexId,
    components,
    degree_histogram,
    delete_vertices,
)
from colorlab.solve import DEFAULT_BUDGET, BudgetExhausted, chromatic_number

DEFAULT_HAMILTON_BUDGET = 10**8

DirectedEdge = tuple[VertexId, VertexId]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic counterclockwise neighbor order at every vertex."""

    rotation: Mapping[VertexId, tuple[VertexId, ...]]

    @property
    def directed_edges(self) -> int:
        return sum(len(r) for r in self.rotation.values())

    def succ(self, v: VertexId, u: VertexId) -> VertexId:
        """Neighbor following u in the cyclic order at v."""
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]


@dataclass(frozen=True)
class FaceCensus:
    """Face walks of a rotation system plus the Euler count."""

    faces: tuple[tuple[DirectedEdge, ...], ...]
    v: int
    e: int
    f: int
    euler: int

    def face_lengths(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for face in self.faces:
            out[len(face)] = out.get(len(face), 0) + 1
        return out

    @property
    def all_triangles(self) -> bool:
        return all(len(face) == 3 for face in self.faces)


@dataclass(frozen=True)
class CutCertificate:
    """Deleting S left more components than |S|: no Hamiltonian cycle."""

    cut: tuple[VertexId, ...]
    components_after: int

    @property
    def non_hamiltonian(self) -> bool:
        return self.components_after > len(self.cut)


def validate_rotation(g: Graph, rot: RotationSystem) -> None:
    """Raise unless the rotation covers g and permutes each adjacency."""
    if set(rot.rotation) != set(g.vertices):
        raise GraphError("rotation system does not cover the vertex set")
    for v in g.vertices:
        if tuple(sorted(rot.rotation[v])) != g.adj[v]:
            raise GraphError(f"rotation at {v} is not a permutation of its neighbors")


def _half(dx: Fraction, dy: Fraction) -> int:
    """0 for directions with angle in [0, pi), 1 for [pi, 2*pi)."""
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def rotation_from_layout(g: Graph) -> RotationSystem:
    """Order every vertex's neighbors counterclockwise by layout angle.

    Comparisons are exact (integer/Fraction cross products), so collinear
    ties are detected, not rounded: two neighbors in exactly the same
    direction raise an error naming the vertex.
    """
    if g.layout is None:
        raise GraphError("graph has no layout to orient by")
    rotation: dict[VertexId, tuple[VertexId, ...]] = {}
    for v in g.vertices:
        vx, vy = g.layout[v]
        dirs = []
        for u in g.adj[v]:
            ux, uy = g.layout[u]
            dirs.append((u, Fraction(ux) - Fraction(vx), Fraction(uy) - Fraction(vy)))

        def cmp(a, b):
            ha, hb = _half(a[1], a[2]), _half(b[1], b[2])
            if ha != hb:
                return -1 if ha < hb else 1
            cross = a[1] * b[2] - a[2] * b[1]
            if cross > 0:
                return -1
            if cross < 0:
                return 1
            raise GraphError(f"neighbors {a[0]} and {b[0]} of {v} lie at equal angle")

        dirs.sort(key=cmp_to_key(cmp))
        rotation[v] = tuple(u for u, _, _ in dirs)
    return RotationSystem(rotation)


def face_census(rot: RotationSystem) -> FaceCensus:
    """Trace every face of the rotation system.

    From a directed edge (u, v) the next edge of the same face is
    (v, w) where w follows u in the rotation at v.  Every directed edge
    lands in exactly one face; V - E + F = 2 on a connected graph means
    the rotation system is a plane (genus-0) embedding.
    """
    succ_at: dict[VertexId, dict[VertexId, VertexId]] = {}
    for v, rotv in rot.rotation.items():
        succ_at[v] = {u: rotv[(i + 1) % len(rotv)] for i, u in enumerate(rotv)}
    darts = [(v, u) for v in sorted(rot.rotation) for u in rot.rotation[v]]
    seen: set[DirectedEdge] = set()
    faces: list[tuple[DirectedEdge, ...]] = []
    for start in darts:
        if start in seen:
            continue
        walk = []
        cur = start
        while True:
            if cur in seen:
                raise GraphError(f"face tracing revisited directed edge {cur}")
            seen.add(cur)
            walk.append(cur)
            u, v = cur
            cur = (v, succ_at[v][u])
            if cur == start:
                break
        least = min(range(len(walk)), key=lambda i: walk[i])
        faces.append(tuple(walk[least:] + walk[:least]))
    faces.sort()
    nv = len(rot.rotation)
    ne = len(darts) // 2
    nf = len(faces)
    return FaceCensus(faces=tuple(faces), v=nv, e=ne, f=nf, euler=nv - ne + nf)


def _signed_area2(g: Graph, walk: list[VertexId]) -> Fraction:
    """Twice the shoelace area of the walk's polygon (exact)."""
    total = Fraction(0)
    for i, u in enumerate(walk):
        w = walk[(i + 1) % len(walk)]
        (ux, uy), (wx, wy) = g.layout[u], g.layout[w]
        total += Fraction(ux) * Fraction(wy) - Fraction(wx) * Fraction(uy)
    return total


def outer_walk(g: Graph, rot: Optional[RotationSystem] = None) -> tuple[VertexId, ...]:
    """The outer face of the layout embedding, as a simple closed walk.

    With counterclockwise rotations and the successor tracing rule the
    bounded faces come out clockwise (negative signed area) and the outer
    face is the unique positive one.  A repeated vertex on that walk is an
    error (the polygon would not be simple).  The walk starts at its least
    vertex, orientation as traced.
    """
    if rot is None:
        rot = rotation_from_layout(g)
    if g.layout is None:
        raise GraphError("outer_walk needs a layout")
    census = face_census(rot)
    positives = []
    for face in census.faces:
        verts = [u for u, _ in face]
        if _signed_area2(g, verts) > 0:
            positives.append(verts)
    if len(positives) != 1:
        raise GraphError(
            f"expected exactly one positive-area face, found {len(positives)}"
        )
    walk = positives[0]
    seen: set[VertexId] = set()
    for u in walk:
        if u in seen:
            raise GraphError(f"outer walk is not simple: {u} repeats")
        seen.add(u)
    least = walk.index(min(walk))
    return tuple(walk[least:] + walk[:least])


def apex_embed(g: Graph, rim_rot: Optional[RotationSystem] = None) -> RotationSystem:
    """Extend the rim embedding of an apexed graph to all of it.

    The apex must be adjacent to exactly the vertices of the rim's outer
    walk.  Its rotation is the outer walk reversed; each walk vertex gains
    the apex edge in its outer-face gap (right after its walk predecessor).
    The result is a plane embedding whenever the rim embedding was one.
    """
    apexes = [v for v in g.vertices if v.kind == "apex"]
    if len(apexes) != 1:
        raise GraphError(f"expected exactly one apex vertex, found {len(apexes)}")
    apex = apexes[0]
    rim = delete_vertices(g, [apex])
    if rim_rot is None:
        rim_rot = rotation_from_layout(rim)
    walk = outer_walk(rim, rim_rot)
    if set(g.adj[apex]) != set(walk):
        extra = sorted(set(g.adj[apex]) - set(walk))
        missing = sorted(set(walk) - set(g.adj[apex]))
        detail = extra[0] if extra else missing[0]
        raise GraphError(f"apex adjacency does not match the outer walk at {detail}")
    rotation: dict[VertexId, tuple[VertexId, ...]] = dict(rim_rot.rotation)
    for i, v in enumerate(walk):
        pred = walk[i - 1]
        rotv = list(rotation[v])
        at = rotv.index(pred)
        rotation[v] = tuple(rotv[: at + 1] + [apex] + rotv[at + 1 :])
    rotation[apex] = tuple(reversed(walk))
    return RotationSystem(rotation)


@dataclass(frozen=True)
class HamiltonResult:
    status: str  # FOUND | NONE | EXHAUSTED
    cycle: Optional[tuple[VertexId, ...]]
    nodes: int
    budget: int


def hamilton(g: Graph, budget: int = DEFAULT_HAMILTON_BUDGET) -> HamiltonResult:
    """Search for a Hamiltonian cycle.

    Pruned depth-first search (connectivity cut-off, unvisited-degree
    bounds, forced-degree-2 chaining).  NONE means the pruned space was
    exhausted: the graph has no Hamiltonian cycle.  Every returned cycle
    should be fed to check_hamiltonian_cycle, which shares no code with
    the search.
    """
    if g.n < 3:
        raise GraphError("Hamiltonian cycles need at least three vertices")
    order = list(g.vertices)
    pos = {v: i for i, v in enumerate(order)}
    adj = [[pos[u] for u in g.adj[v]] for v in order]
    status, cycle, nodes = hamilton_cycle(g.n, adj, budget)
    if status == SAT:
        return HamiltonResult(
            "FOUND", tuple(order[i] for i in cycle), nodes, budget
        )
    if status == EXHAUSTED:
        return HamiltonResult("EXHAUSTED", None, nodes, budget)
    return HamiltonResult("NONE", None, nodes, budget)


def check_hamiltonian_cycle(g: Graph, cycle: Iterable[VertexId]) -> list[str]:
    """Independent replay of a claimed Hamiltonian cycle; [] iff valid."""
    seq = list(cycle)
    problems = []
    if len(seq) != g.n:
        problems.append(f"cycle has {len(seq)} vertices, graph has {g.n}")
    if len(set(seq)) != len(seq):
        problems.append("cycle repeats a vertex")
    for v in seq:
        if v not in g.adj:
            problems.append(f"{v} is not a vertex of the graph")
            return problems
    for i, v in enumerate(seq):
        w = seq[(i + 1) % len(seq)]
        if not g.has_edge(v, w):
            problems.append(f"{v} -- {w} is not an edge")
    return problems


def cut_certificate(g: Graph, cut: Iterable[VertexId]) -> CutCertificate:
    """Count components of g - S.  More components than |S| bars a
    Hamiltonian cycle (a cycle through all vertices loses at most |S|
    pieces when S is removed)."""
    s = sorted(set(cut))
    rest = delete_vertices(g, s)  # raises on unknown vertices
    return CutCertificate(cut=tuple(s), components_after=len(components(rest)))


def _max_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum matching by augmenting paths with blossom contraction.

    Classic O(V^3) formulation: repeated alternating-tree searches from
    free vertices; odd cycles are contracted by rebasing every vertex of
    the blossom onto the cycle's least common ancestor.  Deterministic for
    a fixed adjacency order.
    """
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    in_blossom = [False] * n

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting(root: int) -> bool:
        for i in range(n):
            used[i] = False
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    for i in range(n):
                        in_blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        while to != -1:
                            prev = parent[to]
                            nxt = match[prev]
                            match[to] = prev
                            match[prev] = to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)
    return match


@dataclass(frozen=True)
class MatchingResult:
    matching: Optional[tuple[tuple[VertexId, VertexId], ...]]
    reason: str = ""

    @property
    def size(self) -> int:
        return len(self.matching) if self.matching is not None else 0


def perfect_matching(g: Graph) -> MatchingResult:
    """Find a perfect matching or report why none exists.

    Odd order is immediate.  Otherwise a maximum matching is computed; if
    it leaves vertices exposed, no perfect matching exists (no augmenting
    path from an exposed vertex means the matching is maximum), and the
    exposed count is the evidence.
    """
    if g.n % 2 == 1:
        return MatchingResult(None, reason=f"odd vertex count {g.n}")
    if g.n == 0:
        return MatchingResult(())
    order = list(g.vertices)
    pos = {v: i for i, v in enumerate(order)}
    adj = [[pos[u] for u in g.adj[v]] for v in order]
    match = _max_matching(g.n, adj)
    exposed = [order[i] for i in range(g.n) if match[i] == -1]
    if exposed:
        size = (g.n - len(exposed)) // 2
        return MatchingResult(
            None,
            reason=(
                f"maximum matching has {size} edges, leaving "
                f"{len(exposed)} vertices exposed (first: {exposed[0]})"
            ),
        )
    edges = sorted(
        (min(order[i], order[j]), max(order[i], order[j]))
        for i, j in enumerate(match)
        if i < j
    )
    return MatchingResult(tuple(edges))


def check_matching(g: Graph, matching: Iterable[tuple[VertexId, VertexId]]) -> list[str]:
    """Independent replay of a claimed perfect matching; [] iff valid."""
    pairs = list(matching)
    problems = []
    covered: set[VertexId] = set()
    for u, v in pairs:
        if u not in g.adj or v not in g.adj or not g.has_edge(u, v):
            problems.append(f"{u} -- {v} is not an edge")
            continue
        if u in covered or v in covered:
            problems.append(f"{u} -- {v} reuses a covered vertex")
        covered.add(u)
        covered.add(v)
    missing = [v for v in g.vertices if v not in covered]
    if missing:
        problems.append(f"{len(missing)} vertices uncovered (first: {missing[0]})")
    return problems


@dataclass(frozen=True)
class AuditReport:
    claims: tuple[dict, ...]
    versions: dict
    budgets: dict

    @property
    def all_pass(self) -> bool:
        return all(c["status"] == "pass" for c in self.claims)

    def to_json(self) -> str:
        payload = {
            "claims": list(self.claims),
            "versions": self.versions,
            "budgets": self.budgets,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def _claim(name: str, run) -> dict:
    """Run one audit claim; failures are recorded, never raised."""
    try:
        ok, certificate = run()
    except Exception as exc:  # noqa: BLE001 - report must always complete
        return {"name": name, "status": "fail", "certificate": {"error": str(exc)}}
    return {"name": name, "status": "pass" if ok else "fail", "certificate": certificate}


def audit(
    graph: Optional[Graph] = None,
    lists: Optional[ListAssignment] = None,
    solve_budget: int = DEFAULT_BUDGET,
    hamilton_budget: int = DEFAULT_HAMILTON_BUDGET,
) -> AuditReport:
    """Re-check every headline claim about the construction in one run.

    Audits the given graph/lists (defaults: the canonical construction)
    against the fixed expectations: 63 vertices and 183 edges with the
    right degree profile, a plane triangulation, chromatic number 3, the
    canonical lists admitting no coloring, a Hamiltonian cycle, the cut
    certificate for the apex-deleted graph, and its perfect matching.
    Deterministic: equal inputs give byte-identical JSON.
    """
    g = graph if graph is not None else mirzakhani()
    ls = lists if lists is not None else canonical_lists()

    def construction():
        hist = degree_histogram(g)
        cert = {
            "vertices": g.n,
            "edges": g.m,
            "degree_histogram": {str(k): hist[k] for k in sorted(hist)},
        }
        ok = g.n == 63 and g.m == 183 and hist == {4: 40, 6: 6, 8: 16, 42: 1}
        return ok, cert

    def planarity():
        census = face_census(apex_embed(g))
        cert = {
            "euler": census.euler,
            "faces": census.f,
            "face_lengths": {str(k): c for k, c in sorted(census.face_lengths().items())},
        }
        return census.euler == 2 and census.f == 122 and census.all_triangles, cert

    def chromatic():
        try:
            res = chromatic_number(g, budget=solve_budget)
        except BudgetExhausted as exc:
            return False, {"error": str(exc)}
        cert = {
            "k": res.k,
            "coloring": {str(v): c for v, c in sorted(res.witness.items())},
        }
        return res.k == 3, cert

    def choosability():
        verdict = verify_not_choosable(g, ls, 4, budget=solve_budget)
        cert = {"verdict": verdict.kind, "nodes": verdict.nodes}
        if verdict.reason:
            cert["reason"] = verdict.reason
        return verdict.kind == "WitnessConfirmed", cert

    def hamiltonicity():
        res = hamilton(g, budget=hamilton_budget)
        if res.status != "FOUND":
            return False, {"status": res.status, "nodes": res.nodes}
        problems = check_hamiltonian_cycle(g, res.cycle)
        cert = {
            "status": res.status,
            "nodes": res.nodes,
            "cycle": [str(v) for v in res.cycle],
            "replay": problems or "valid",
        }
        return not problems, cert

    def cut():
        apexes = [v for v in g.vertices if v.kind == "apex"]
        if len(apexes) != 1:
            return False, {"error": "no unique apex vertex"}
        rest = delete_vertices(g, apexes)
        s = [v for v in rest.vertices if rest.degree(v) == 7]
        cert_obj = cut_certificate(rest, s)
        cert = {
            "cut_size": len(cert_obj.cut),
            "cut": [str(v) for v in cert_obj.cut],
            "components_after": cert_obj.components_after,
            "non_hamiltonian": cert_obj.non_hamiltonian,
        }
        return (
            len(cert_obj.cut) == 16
            and cert_obj.components_after == 17
            and cert_obj.non_hamiltonian,
            cert,
        )

    def matching():
        apexes = [v for v in g.vertices if v.kind == "apex"]
        if len(apexes) != 1:
            return False, {"error": "no unique apex vertex"}
        rest = delete_vertices(g, apexes)
        res = perfect_matching(rest)
        if res.matching is None:
            return False, {"reason": res.reason}
        problems = check_matching(rest, res.matching)
        cert = {
            "size": res.size,
            "matching": [f"{u} -- {v}" for u, v in res.matching],
            "replay": problems or "valid",
        }
        return res.size == 31 and not problems, cert

    claims = (
        _claim("construction-counts", construction),
        _claim("planarity", planarity),
        _claim("chromatic-number-3", chromatic),
        _claim("not-4-choosable", choosability),
        _claim("hamiltonian", hamiltonicity),
        _claim("apex-deleted-not-hamiltonian", cut),
        _claim("apex-deleted-perfect-matching", matching),
    )
    return AuditReport(
        claims=claims,
        versions={"package": __version__, "backend": BACKEND_NAME},
        budgets={"solve": solve_budget, "hamilton": hamilton_budget},
    )

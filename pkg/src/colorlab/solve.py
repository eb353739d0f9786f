"""Exact list-coloring solves: decide, count, enumerate, verify, CNF export.

The search itself lives in the kernel backends (see ``colorlab.engine``);
this module translates between structured graphs and the kernels' indexed
form, packages results with the budget used (for reproducibility), and
provides the independent witness checker plus a CNF export channel for
third-party cross-validation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Union

from colorlab import engine
from colorlab.build import ListAssignment, uniform_lists
from colorlab.graph import Graph, GraphError, VertexId

DEFAULT_BUDGET = 10**7

# Domains are bit masks in a machine word; a larger palette is almost
# certainly a caller bug and would silently overflow the compiled kernel.
MAX_PALETTE = 64

_STATUS = {engine.UNSAT: "UNSAT", engine.SAT: "SAT", engine.EXHAUSTED: "EXHAUSTED"}

Coloring = Mapping[VertexId, int]


class BudgetExhausted(RuntimeError):
    """A search ran out of node budget where a verdict was required."""


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one decision solve.

    status "SAT" carries a verified witness; "UNSAT" means the search space
    was provably exhausted within the budget; "EXHAUSTED" carries no claim.
    """

    status: str
    witness: Optional[dict[VertexId, int]]
    nodes: int
    propagations: int
    budget: int

    @property
    def sat(self) -> bool:
        return self.status == "SAT"

    def to_json(self) -> str:
        payload = {
            "status": self.status,
            "witness": None
            if self.witness is None
            else {str(v): c for v, c in self.witness.items()},
            "nodes": self.nodes,
            "propagations": self.propagations,
            "budget": self.budget,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class CountResult:
    """Outcome of a counting or enumeration solve."""

    status: str
    count: int
    nodes: int
    propagations: int
    budget: int

    def to_json(self) -> str:
        payload = {
            "status": self.status,
            "count": self.count,
            "nodes": self.nodes,
            "propagations": self.propagations,
            "budget": self.budget,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _indexed(g: Graph, lists: ListAssignment):
    """Translate to the kernels' form: index order, CSR-ish adjacency, masks."""
    order = sorted(g.vertices)
    missing = [v for v in order if v not in lists.lists]
    if missing:
        raise GraphError(f"lists missing for {len(missing)} vertices, e.g. {missing[0]}")
    if len(lists.palette) > MAX_PALETTE:
        raise GraphError(f"palette size {len(lists.palette)} exceeds {MAX_PALETTE}")
    idx = {v: i for i, v in enumerate(order)}
    # g.adj neighbor tuples are sorted by VertexId and idx is monotone in
    # that order, so the index lists come out sorted.
    adj = [[idx[u] for u in g.adj[v]] for v in order]
    pos = {c: i for i, c in enumerate(lists.palette)}
    domains = [sum(1 << pos[c] for c in lists.list_of(v)) for v in order]
    return order, adj, domains


def _decode(order, palette, bits) -> dict[VertexId, int]:
    return {v: palette[bits[i].bit_length() - 1] for i, v in enumerate(order)}


def decide(g: Graph, lists: ListAssignment, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Does G admit a proper coloring from these lists?

    Deterministic: variable order is minimum remaining list with ties by
    VertexId order, colors ascending.  Every SAT witness is re-checked by
    verify_coloring before being returned.
    """
    order, adj, domains = _indexed(g, lists)
    status, bits, nodes, props, _ = engine.solve_colors(
        len(order), adj, domains, budget, engine.MODE_DECIDE
    )
    witness = None
    if status == engine.SAT:
        witness = _decode(order, lists.palette, bits)
        bad = verify_coloring(g, lists, witness)
        if bad:
            raise RuntimeError(f"engine produced an invalid witness: {bad[:3]}")
    return SolveResult(_STATUS[status], witness, nodes, props, budget)


def count(g: Graph, lists: ListAssignment, budget: int = DEFAULT_BUDGET) -> CountResult:
    """Exact number of proper list colorings (status EXHAUSTED = lower bound)."""
    order, adj, domains = _indexed(g, lists)
    status, _, nodes, props, found = engine.solve_colors(
        len(order), adj, domains, budget, engine.MODE_COUNT
    )
    return CountResult(_STATUS[status], found, nodes, props, budget)


def enumerate_colorings(
    g: Graph,
    lists: ListAssignment,
    visitor: Callable[[dict[VertexId, int]], None],
    budget: int = DEFAULT_BUDGET,
) -> CountResult:
    """Call visitor on every proper list coloring, in deterministic order."""
    order, adj, domains = _indexed(g, lists)

    def on_solution(bits):
        visitor(_decode(order, lists.palette, bits))

    status, _, nodes, props, found = engine.solve_colors(
        len(order), adj, domains, budget, engine.MODE_ENUM, on_solution
    )
    return CountResult(_STATUS[status], found, nodes, props, budget)


def verify_coloring(
    g: Graph, constraint: Union[ListAssignment, int], coloring: Coloring
) -> list[str]:
    """Independently check a coloring; returns all violations (empty = ok).

    constraint is either a ListAssignment (list membership is checked) or an
    integer k (colors must lie in 1..k).  Shares no code with the search.
    """
    missing = [v for v in g.vertices if v not in coloring]
    if missing:
        raise GraphError(f"coloring is partial: {len(missing)} vertices unassigned")
    violations = []
    for v in sorted(g.vertices):
        c = coloring[v]
        if isinstance(constraint, int):
            if not (isinstance(c, int) and 1 <= c <= constraint):
                violations.append(f"{v}: color {c} outside 1..{constraint}")
        elif c not in constraint.list_of(v):
            violations.append(f"{v}: color {c} not in list {constraint.list_of(v)}")
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            violations.append(f"edge {u} -- {v}: both colored {coloring[u]}")
    return violations


@dataclass(frozen=True)
class ChromaticResult:
    k: int
    witness: dict[VertexId, int]
    unsat_below: SolveResult  # the UNSAT (or vacuous k=0) result at k-1


def chromatic_number(
    g: Graph, upper: Optional[int] = None, budget: int = DEFAULT_BUDGET
) -> ChromaticResult:
    """Least k such that G is k-colorable, with certificates for k and k-1."""
    if g.n == 0:
        raise GraphError("chromatic number of the empty graph is undefined here")
    limit = g.n if upper is None else upper
    # A non-empty graph has no coloring from zero colors; serves as the
    # below-certificate when k = 1.
    below = SolveResult("UNSAT", None, 0, 0, budget)
    for k in range(1, limit + 1):
        res = decide(g, uniform_lists(g, range(1, k + 1)), budget)
        if res.status == "EXHAUSTED":
            raise BudgetExhausted(f"budget {budget} exhausted deciding {k}-colorability")
        if res.sat:
            assert res.witness is not None
            return ChromaticResult(k, res.witness, below)
        below = res
    raise GraphError(f"no coloring with up to {limit} colors")


@dataclass(frozen=True)
class CnfDocument:
    """Propositional encoding of a list-coloring instance.

    One variable per (vertex, color-in-list) pair; clauses are at-least-one
    per vertex plus one conflict clause per edge per shared color.
    At-most-one clauses are intentionally omitted: any satisfying assignment
    projects to a proper coloring by taking the least true color of each
    vertex, so satisfiability is unchanged.
    """

    nvars: int
    clauses: tuple[tuple[int, ...], ...]
    legend: tuple[tuple[int, VertexId, int], ...]  # (variable, vertex, color)


def to_cnf(g: Graph, lists: ListAssignment) -> CnfDocument:
    order, _, _ = _indexed(g, lists)
    var: dict[tuple[VertexId, int], int] = {}
    legend = []
    for v in order:
        for c in lists.list_of(v):
            var[(v, c)] = len(legend) + 1
            legend.append((len(legend) + 1, v, c))
    clauses: list[tuple[int, ...]] = []
    for v in order:
        clauses.append(tuple(var[(v, c)] for c in lists.list_of(v)))
    for u, v in g.edges():
        shared = sorted(set(lists.list_of(u)) & set(lists.list_of(v)))
        for c in shared:
            clauses.append((-var[(u, c)], -var[(v, c)]))
    return CnfDocument(len(legend), tuple(clauses), tuple(legend))

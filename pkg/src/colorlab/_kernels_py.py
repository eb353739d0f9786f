"""Pure-Python search kernels.

This is the reference implementation of the two hot loops: the list-coloring
backtracker and the Hamiltonian-cycle search.  ``colorlab._kernels`` is a
compiled twin of this file; both must implement the *identical* algorithm so
that node and propagation counts, witnesses, and visit order agree exactly.
Any change here must be mirrored there.

List-coloring search
    Domains are bit masks over palette indices.  Variable order is minimum
    remaining values with ties broken by vertex index; colors are tried in
    ascending bit order.  Assigning a color removes it from unassigned
    neighbors (forward checking, one propagation counted per removal);
    domains that collapse to a single color are assigned from a FIFO queue
    (unit propagation).  A search node is one color tried at a decision
    vertex; forced assignments are not nodes.

    Decision mode additionally backjumps on conflicts: every removal records
    the vertex that caused it, forced assignments record the decision
    vertices they descend from, and when a subtree is refuted without
    involving the decision vertex at its root, the remaining colors of that
    vertex are skipped (they fail for the same reason).  Backjumping changes
    node counts only, never the verdict or the first witness found, and is
    disabled for counting and enumeration, which must visit every solution.

Hamiltonian search
    Depth-first path extension from vertex 0 with three prunes: the
    unvisited vertices must induce a connected subgraph, every unvisited
    vertex must retain at least two usable cycle partners (unvisited
    neighbors, the path endpoint, or vertex 0), and a partner count of
    exactly two that includes the endpoint forces the next edge (two such
    forced edges at once is a dead end).  A node is one attempted extension.
"""

from __future__ import annotations

BACKEND_NAME = "python"

UNSAT, SAT, EXHAUSTED = 0, 1, 2
_NONE, _FOUND, _BUDGET = 0, 1, 2

MODE_DECIDE, MODE_COUNT, MODE_ENUM = 0, 1, 2


def solve_colors(n, adj, domains, budget, mode, on_solution=None):
    """Run the list-coloring search on an indexed instance.

    adj: list of sorted neighbor-index lists; domains: list of bit masks.
    Returns (status, witness, nodes, propagations, count) where witness is
    a tuple of bit indices (decide mode, SAT only) and count is the number
    of proper colorings seen (exact unless status is EXHAUSTED).
    """
    dom = list(domains)
    color = [-1] * n
    decision = [False] * n
    reason = [0] * n  # for forced vertices: bit set of responsible decisions
    rem = [[] for _ in range(n)]  # active removals per vertex: (bit, culprit)
    atrail: list[int] = []  # assigned vertices, in assignment order
    rtrail: list[tuple[int, int]] = []  # (vertex, removed bit)
    pending: list[int] = []  # FIFO of forced (singleton-domain) vertices
    state = {"nodes": 0, "props": 0, "count": 0, "witness": None, "jump": 0}

    def culprits(v: int) -> int:
        out = 0
        for _bit, x in rem[v]:
            out |= (1 << x) if decision[x] else reason[x]
        return out

    def assign(v: int, bit: int, forced: bool) -> bool:
        if forced:
            reason[v] = culprits(v)
        color[v] = bit
        atrail.append(v)
        for u in adj[v]:
            if color[u] < 0 and dom[u] & bit:
                dom[u] &= ~bit
                rtrail.append((u, bit))
                rem[u].append((bit, v))
                state["props"] += 1
                if dom[u] == 0:
                    state["jump"] = culprits(u)
                    return False
                if dom[u] & (dom[u] - 1) == 0:
                    pending.append(u)
        return True

    def run_queue() -> bool:
        head = 0
        while head < len(pending):
            u = pending[head]
            head += 1
            if color[u] < 0 and not assign(u, dom[u], True):
                return False
        return True

    def leaf() -> int:
        state["count"] += 1
        if mode == MODE_DECIDE:
            state["witness"] = tuple(color)
            return _FOUND
        if mode == MODE_ENUM:
            on_solution(tuple(color))
        return _NONE

    def undo(amark: int, rmark: int) -> None:
        pending.clear()
        while len(rtrail) > rmark:
            u, b = rtrail.pop()
            dom[u] |= b
            rem[u].pop()
        while len(atrail) > amark:
            w = atrail.pop()
            color[w] = -1
            decision[w] = False

    def search() -> int:
        if len(atrail) == n:
            return leaf()
        best, best_size = -1, 65
        for v in range(n):
            if color[v] < 0:
                size = dom[v].bit_count()
                if size < best_size:
                    best, best_size = v, size
        v = best
        vbit = 1 << v
        # Conflict set of this node: starts from the decisions that already
        # pruned v's domain (a completion could otherwise revive a pruned
        # color), then absorbs the refutation of every color tried below.
        accum = culprits(v)
        mask = dom[v]
        while mask:
            bit = mask & -mask
            mask ^= bit
            if state["nodes"] >= budget:
                return _BUDGET
            state["nodes"] += 1
            amark, rmark = len(atrail), len(rtrail)
            pending.clear()
            decision[v] = True
            ok = assign(v, bit, False) and run_queue()
            if ok:
                r = search()
                if r != _NONE:
                    return r
            undo(amark, rmark)
            # state["jump"] holds the set of decisions the refutation of
            # this value depended on; if v is not among them, the remaining
            # values fail identically and the conflict belongs to an
            # ancestor (decide mode only -- counting must visit everything).
            if mode == MODE_DECIDE and not state["jump"] & vbit:
                return _NONE
            accum |= state["jump"] & ~vbit
        state["jump"] = accum
        return _NONE

    if any(d == 0 for d in dom):
        return (UNSAT, None, 0, 0, 0)
    for v in range(n):
        if dom[v] & (dom[v] - 1) == 0:
            pending.append(v)
    if not run_queue():
        return (UNSAT, None, 0, state["props"], 0)
    pending.clear()
    code = search()
    if code == _BUDGET:
        return (EXHAUSTED, None, state["nodes"], state["props"], state["count"])
    status = SAT if state["count"] > 0 else UNSAT
    return (status, state["witness"], state["nodes"], state["props"], state["count"])


def hamilton_cycle(n, adj, budget):
    """Search for a Hamiltonian cycle through vertex 0.

    Returns (status, cycle, nodes): status 1 with the vertex sequence if a
    cycle was found, 0 if the pruned search space was exhausted without one,
    2 if the node budget ran out.
    """
    if n < 3:
        return (_NONE, None, 0)
    adjset = [set(nbrs) for nbrs in adj]
    if any(len(nbrs) < 2 for nbrs in adj):
        return (_NONE, None, 0)
    visited = [False] * n
    visited[0] = True
    path = [0]
    state = {"nodes": 0}
    scratch = [0] * n

    def unvisited_connected() -> bool:
        first = -1
        remaining = 0
        for v in range(n):
            if not visited[v]:
                remaining += 1
                if first < 0:
                    first = v
        if remaining == 0:
            return True
        seen = [False] * n
        seen[first] = True
        scratch[0] = first
        head, tail = 0, 1
        reached = 1
        while head < tail:
            u = scratch[head]
            head += 1
            for w in adj[u]:
                if not visited[w] and not seen[w]:
                    seen[w] = True
                    scratch[tail] = w
                    tail += 1
                    reached += 1
        return reached == remaining

    def extend(u: int) -> int:
        if len(path) == n:
            return _FOUND if 0 in adjset[u] else _NONE
        if not unvisited_connected():
            return _NONE
        if not any(not visited[w] for w in adj[u]):
            return _NONE
        if not any(not visited[w] for w in adj[0]):
            return _NONE
        forced = -1
        nforced = 0
        for w in range(n):
            if visited[w]:
                continue
            avail = 0
            for x in adj[w]:
                if not visited[x]:
                    avail += 1
            if u in adjset[w]:
                avail += 1
            if u != 0 and 0 in adjset[w]:
                avail += 1
            if avail < 2:
                return _NONE
            if avail == 2 and u != 0 and u in adjset[w]:
                nforced += 1
                if nforced >= 2:
                    return _NONE
                forced = w
        candidates = [forced] if nforced == 1 else [w for w in adj[u] if not visited[w]]
        for w in candidates:
            if state["nodes"] >= budget:
                return _BUDGET
            state["nodes"] += 1
            visited[w] = True
            path.append(w)
            r = extend(w)
            if r != _NONE:
                return r
            visited[w] = False
            path.pop()
        return _NONE

    code = extend(0)
    if code == _FOUND:
        return (_FOUND, list(path), state["nodes"])
    if code == _BUDGET:
        return (_BUDGET, None, state["nodes"])
    return (_NONE, None, state["nodes"])

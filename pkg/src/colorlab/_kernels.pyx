# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled search kernels.

Twin of ``colorlab._kernels_py``: same algorithms, same tie-breaking, same
node and propagation accounting, so results are bit-for-bit interchangeable.
Keep the two files in lockstep; the parity tests compare the backends on a
randomized corpus and on the structured graphs used elsewhere in the package.

Conflict sets are stored as fixed-width bit set rows (one row = ``words``
64-bit words over vertex indices) instead of Python integers; this changes
nothing observable.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND_NAME = "cython"

UNSAT, SAT, EXHAUSTED = 0, 1, 2
_NONE, _FOUND, _BUDGET = 0, 1, 2

MODE_DECIDE, MODE_COUNT, MODE_ENUM = 0, 1, 2

cdef int C_NONE = 0
cdef int C_FOUND = 1
cdef int C_BUDGET = 2

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef class _ColorState:
    """Mutable state for one ``solve_colors`` run."""

    cdef int n, mode, words
    cdef long long budget, nodes, props, count
    cdef int* adj_data          # CSR adjacency
    cdef int* adj_off
    cdef unsigned long long* dom
    cdef unsigned long long* colorbit   # 0 = unassigned, else the chosen bit
    cdef unsigned char* decision        # 1 while the vertex is a decision
    cdef unsigned long long* reason     # n rows: decisions a forced vertex rests on
    cdef unsigned long long* accum      # n+1 rows: per-depth conflict accumulators
    cdef unsigned long long* jump       # 1 row: conflict set handed upward
    cdef int* rem_culprit       # n stacks of <=64 removal culprits
    cdef int* rem_top
    cdef int* atrail            # assigned vertices, in assignment order
    cdef int atop
    cdef int* rvert             # removal trail: vertex ...
    cdef unsigned long long* rbit       # ... and removed bit
    cdef int rtop
    cdef int* pending           # FIFO of forced (singleton-domain) vertices
    cdef int phead, ptail
    cdef object on_solution
    cdef tuple witness

    def __cinit__(self, int n, adj, domains, long long budget, int mode, on_solution):
        cdef int i, j
        cdef long long total = 0
        self.n = n
        self.mode = mode
        self.words = (n + 63) >> 6 if n else 1
        self.budget = budget
        self.nodes = 0
        self.props = 0
        self.count = 0
        self.on_solution = on_solution
        self.witness = None
        for nbrs in adj:
            total += len(nbrs)
        self.adj_off = <int*> malloc((n + 1) * sizeof(int))
        self.adj_data = <int*> malloc((total if total > 0 else 1) * sizeof(int))
        self.dom = <unsigned long long*> malloc((n if n else 1) * sizeof(unsigned long long))
        self.colorbit = <unsigned long long*> malloc((n if n else 1) * sizeof(unsigned long long))
        self.decision = <unsigned char*> malloc(n if n else 1)
        self.reason = <unsigned long long*> malloc(
            <size_t> (n if n else 1) * self.words * sizeof(unsigned long long))
        self.accum = <unsigned long long*> malloc(
            <size_t> (n + 1) * self.words * sizeof(unsigned long long))
        self.jump = <unsigned long long*> malloc(self.words * sizeof(unsigned long long))
        self.rem_culprit = <int*> malloc(<size_t> (n if n else 1) * 64 * sizeof(int))
        self.rem_top = <int*> malloc((n if n else 1) * sizeof(int))
        self.atrail = <int*> malloc((n if n else 1) * sizeof(int))
        self.rvert = <int*> malloc((64 * n if n else 1) * sizeof(int))
        self.rbit = <unsigned long long*> malloc((64 * n if n else 1) * sizeof(unsigned long long))
        self.pending = <int*> malloc((n if n else 1) * sizeof(int))
        if (self.adj_off == NULL or self.adj_data == NULL or self.dom == NULL
                or self.colorbit == NULL or self.decision == NULL or self.reason == NULL
                or self.accum == NULL or self.jump == NULL or self.rem_culprit == NULL
                or self.rem_top == NULL or self.atrail == NULL or self.rvert == NULL
                or self.rbit == NULL or self.pending == NULL):
            raise MemoryError()
        j = 0
        for i in range(n):
            self.adj_off[i] = j
            for w in adj[i]:
                self.adj_data[j] = w
                j += 1
        self.adj_off[n] = j
        for i in range(n):
            self.dom[i] = domains[i]
            self.colorbit[i] = 0
            self.decision[i] = 0
            self.rem_top[i] = 0
        self.atop = 0
        self.rtop = 0
        self.phead = 0
        self.ptail = 0

    def __dealloc__(self):
        free(self.adj_off)
        free(self.adj_data)
        free(self.dom)
        free(self.colorbit)
        free(self.decision)
        free(self.reason)
        free(self.accum)
        free(self.jump)
        free(self.rem_culprit)
        free(self.rem_top)
        free(self.atrail)
        free(self.rvert)
        free(self.rbit)
        free(self.pending)

    cdef void culprits_into(self, unsigned long long* row, int v):
        """Flatten the active removals of v into a set of decision vertices."""
        cdef int w, t, c
        for w in range(self.words):
            row[w] = 0
        for t in range(self.rem_top[v]):
            c = self.rem_culprit[<size_t> v * 64 + t]
            if self.decision[c]:
                row[c >> 6] |= (<unsigned long long> 1) << (c & 63)
            else:
                for w in range(self.words):
                    row[w] |= self.reason[<size_t> c * self.words + w]

    cdef bint assign(self, int v, unsigned long long bit, bint forced) except? -1:
        cdef int k, u
        if forced:
            self.culprits_into(self.reason + <size_t> v * self.words, v)
        self.colorbit[v] = bit
        self.atrail[self.atop] = v
        self.atop += 1
        for k in range(self.adj_off[v], self.adj_off[v + 1]):
            u = self.adj_data[k]
            if self.colorbit[u] == 0 and (self.dom[u] & bit) != 0:
                self.dom[u] &= ~bit
                self.rvert[self.rtop] = u
                self.rbit[self.rtop] = bit
                self.rtop += 1
                self.rem_culprit[<size_t> u * 64 + self.rem_top[u]] = v
                self.rem_top[u] += 1
                self.props += 1
                if self.dom[u] == 0:
                    self.culprits_into(self.jump, u)
                    return False
                if (self.dom[u] & (self.dom[u] - 1)) == 0:
                    self.pending[self.ptail] = u
                    self.ptail += 1
        return True

    cdef bint run_queue(self) except? -1:
        cdef int u
        while self.phead < self.ptail:
            u = self.pending[self.phead]
            self.phead += 1
            if self.colorbit[u] == 0 and not self.assign(u, self.dom[u], True):
                return False
        return True

    cdef int leaf(self) except? -1:
        cdef int v
        self.count += 1
        if self.mode == MODE_DECIDE:
            self.witness = tuple(self.colorbit[v] for v in range(self.n))
            return C_FOUND
        if self.mode == MODE_ENUM:
            self.on_solution(tuple(self.colorbit[v] for v in range(self.n)))
        return C_NONE

    cdef void undo(self, int amark, int rmark):
        cdef int u, w
        self.phead = 0
        self.ptail = 0
        while self.rtop > rmark:
            self.rtop -= 1
            u = self.rvert[self.rtop]
            self.dom[u] |= self.rbit[self.rtop]
            self.rem_top[u] -= 1
        while self.atop > amark:
            self.atop -= 1
            w = self.atrail[self.atop]
            self.colorbit[w] = 0
            self.decision[w] = 0

    cdef int search(self, int depth) except? -1:
        cdef int v, w, best, best_size, size, r
        cdef int amark, rmark, vword
        cdef bint ok
        cdef unsigned long long mask, bit, vmask
        cdef unsigned long long* arow
        if self.atop == self.n:
            return self.leaf()
        best = -1
        best_size = 65
        for v in range(self.n):
            if self.colorbit[v] == 0:
                size = __builtin_popcountll(self.dom[v])
                if size < best_size:
                    best = v
                    best_size = size
        v = best
        vword = v >> 6
        vmask = (<unsigned long long> 1) << (v & 63)
        arow = self.accum + <size_t> depth * self.words
        # Seed with the decisions that already pruned v's domain; see the
        # reference implementation for why this is required for soundness.
        self.culprits_into(arow, v)
        mask = self.dom[v]
        while mask != 0:
            bit = mask & (~mask + 1)
            mask ^= bit
            if self.nodes >= self.budget:
                return C_BUDGET
            self.nodes += 1
            amark = self.atop
            rmark = self.rtop
            self.phead = 0
            self.ptail = 0
            self.decision[v] = 1
            ok = self.assign(v, bit, False)
            if ok:
                ok = self.run_queue()
            if ok:
                r = self.search(depth + 1)
                if r != C_NONE:
                    return r
            self.undo(amark, rmark)
            if self.mode == MODE_DECIDE and (self.jump[vword] & vmask) == 0:
                return C_NONE
            for w in range(self.words):
                arow[w] |= self.jump[w]
            arow[vword] &= ~vmask
        for w in range(self.words):
            self.jump[w] = arow[w]
        return C_NONE


def solve_colors(int n, adj, domains, long long budget, int mode, on_solution=None):
    """Run the list-coloring search on an indexed instance.

    Drop-in replacement for ``colorlab._kernels_py.solve_colors``; see that
    module for the contract.  Returns (status, witness, nodes, propagations,
    count).
    """
    cdef _ColorState st
    cdef int v, code
    for v in range(n):
        if domains[v] == 0:
            return (UNSAT, None, 0, 0, 0)
    st = _ColorState(n, adj, domains, budget, mode, on_solution)
    for v in range(n):
        if (st.dom[v] & (st.dom[v] - 1)) == 0:
            st.pending[st.ptail] = v
            st.ptail += 1
    if not st.run_queue():
        return (UNSAT, None, 0, st.props, 0)
    st.phead = 0
    st.ptail = 0
    code = st.search(0)
    if code == C_BUDGET:
        return (EXHAUSTED, None, st.nodes, st.props, st.count)
    status = SAT if st.count > 0 else UNSAT
    return (status, st.witness, st.nodes, st.props, st.count)


cdef class _HamiltonState:
    """Mutable state for one ``hamilton_cycle`` run."""

    cdef int n
    cdef long long budget, nodes
    cdef int* adj_data
    cdef int* adj_off
    cdef unsigned char* matrix      # n*n adjacency lookups
    cdef unsigned char* visited
    cdef int* path
    cdef int plen
    cdef int* scratch               # BFS queue for the connectivity prune
    cdef unsigned char* seen
    cdef int* cands                 # per-depth candidate buffers

    def __cinit__(self, int n, adj, long long budget):
        cdef int i, j
        cdef long long total = 0
        self.n = n
        self.budget = budget
        self.nodes = 0
        for nbrs in adj:
            total += len(nbrs)
        self.adj_off = <int*> malloc((n + 1) * sizeof(int))
        self.adj_data = <int*> malloc((total if total > 0 else 1) * sizeof(int))
        self.matrix = <unsigned char*> malloc(<size_t> n * n if n else 1)
        self.visited = <unsigned char*> malloc(n if n else 1)
        self.path = <int*> malloc((n if n else 1) * sizeof(int))
        self.scratch = <int*> malloc((n if n else 1) * sizeof(int))
        self.seen = <unsigned char*> malloc(n if n else 1)
        self.cands = <int*> malloc((<size_t> n * n if n else 1) * sizeof(int))
        if (self.adj_off == NULL or self.adj_data == NULL or self.matrix == NULL
                or self.visited == NULL or self.path == NULL or self.scratch == NULL
                or self.seen == NULL or self.cands == NULL):
            raise MemoryError()
        memset(self.matrix, 0, <size_t> n * n)
        memset(self.visited, 0, n)
        j = 0
        for i in range(n):
            self.adj_off[i] = j
            for w in adj[i]:
                self.adj_data[j] = w
                self.matrix[<size_t> i * n + <int> w] = 1
                j += 1
        self.adj_off[n] = j
        self.plen = 0

    def __dealloc__(self):
        free(self.adj_off)
        free(self.adj_data)
        free(self.matrix)
        free(self.visited)
        free(self.path)
        free(self.scratch)
        free(self.seen)
        free(self.cands)

    cdef bint unvisited_connected(self) except? -1:
        cdef int first = -1
        cdef int v, u, w, k, head, tail, reached, remaining
        remaining = 0
        for v in range(self.n):
            if not self.visited[v]:
                remaining += 1
                if first < 0:
                    first = v
        if remaining == 0:
            return True
        memset(self.seen, 0, self.n)
        self.seen[first] = 1
        self.scratch[0] = first
        head = 0
        tail = 1
        reached = 1
        while head < tail:
            u = self.scratch[head]
            head += 1
            for k in range(self.adj_off[u], self.adj_off[u + 1]):
                w = self.adj_data[k]
                if not self.visited[w] and not self.seen[w]:
                    self.seen[w] = 1
                    self.scratch[tail] = w
                    tail += 1
                    reached += 1
        return reached == remaining

    cdef int extend(self, int u) except? -1:
        cdef int k, w, x, j, avail, nforced, forced, ncand, base, r
        cdef bint any_unvisited
        if self.plen == self.n:
            return C_FOUND if self.matrix[<size_t> u * self.n + 0] else C_NONE
        if not self.unvisited_connected():
            return C_NONE
        any_unvisited = False
        for k in range(self.adj_off[u], self.adj_off[u + 1]):
            if not self.visited[self.adj_data[k]]:
                any_unvisited = True
                break
        if not any_unvisited:
            return C_NONE
        any_unvisited = False
        for k in range(self.adj_off[0], self.adj_off[1]):
            if not self.visited[self.adj_data[k]]:
                any_unvisited = True
                break
        if not any_unvisited:
            return C_NONE
        forced = -1
        nforced = 0
        for w in range(self.n):
            if self.visited[w]:
                continue
            avail = 0
            for k in range(self.adj_off[w], self.adj_off[w + 1]):
                x = self.adj_data[k]
                if not self.visited[x]:
                    avail += 1
            if self.matrix[<size_t> w * self.n + u]:
                avail += 1
            if u != 0 and self.matrix[<size_t> w * self.n + 0]:
                avail += 1
            if avail < 2:
                return C_NONE
            if avail == 2 and u != 0 and self.matrix[<size_t> w * self.n + u]:
                nforced += 1
                if nforced >= 2:
                    return C_NONE
                forced = w
        base = self.plen * self.n
        if nforced == 1:
            self.cands[base] = forced
            ncand = 1
        else:
            ncand = 0
            for k in range(self.adj_off[u], self.adj_off[u + 1]):
                w = self.adj_data[k]
                if not self.visited[w]:
                    self.cands[base + ncand] = w
                    ncand += 1
        for j in range(ncand):
            w = self.cands[base + j]
            if self.nodes >= self.budget:
                return C_BUDGET
            self.nodes += 1
            self.visited[w] = 1
            self.path[self.plen] = w
            self.plen += 1
            r = self.extend(w)
            if r != C_NONE:
                return r
            self.plen -= 1
            self.visited[w] = 0
        return C_NONE


def hamilton_cycle(int n, adj, long long budget):
    """Search for a Hamiltonian cycle through vertex 0.

    Drop-in replacement for ``colorlab._kernels_py.hamilton_cycle``; returns
    (status, cycle, nodes) with the same statuses and visit order.
    """
    cdef _HamiltonState st
    cdef int j, code
    if n < 3:
        return (_NONE, None, 0)
    for nbrs in adj:
        if len(nbrs) < 2:
            return (_NONE, None, 0)
    st = _HamiltonState(n, adj, budget)
    st.visited[0] = 1
    st.path[0] = 0
    st.plen = 1
    code = st.extend(0)
    if code == C_FOUND:
        return (_FOUND, [st.path[j] for j in range(st.n)], st.nodes)
    if code == C_BUDGET:
        return (_BUDGET, None, st.nodes)
    return (_NONE, None, st.nodes)

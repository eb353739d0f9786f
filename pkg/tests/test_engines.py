"""Backend parity: the compiled kernel and the pure-Python reference must
agree bit-for-bit — same statuses, witnesses, node and propagation counts —
on coloring search in all three modes and on Hamilton search."""

import pytest

from colorlab.build import canonical_lists, gadget, mirzakhani, wheel4, wheel_lists
from colorlab.choose import SplitMix64
from colorlab.engine import (
    MODE_COUNT,
    MODE_DECIDE,
    MODE_ENUM,
    available_backends,
)
from colorlab.solve import _indexed

BACKENDS = available_backends()

pytestmark = pytest.mark.skipif(
    len(BACKENDS) < 2, reason="only one kernel backend available"
)


def both(fn):
    results = [fn(BACKENDS[name]) for name in sorted(BACKENDS)]
    assert results[0] == results[1], "backends disagree"
    return results[0]


def random_indexed(seed, max_n=10):
    rng = SplitMix64(seed)
    n = 1 + rng.below(max_n)
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.below(100) < 40:
                adj[i].append(j)
                adj[j].append(i)
    domains = [0] * n
    for i in range(n):
        bits = rng.below(31) + 1  # nonempty subset of 5 colors
        domains[i] = bits
    return n, adj, domains


def test_theorem_instance_parity():
    order, adj, domains = _indexed(mirzakhani(), canonical_lists())
    res = both(lambda k: k.solve_colors(len(order), adj, domains, 10**7, MODE_DECIDE))
    status, witness, nodes, props, found = res
    assert status == 0  # UNSAT
    assert witness is None


def test_wheel_modes_parity():
    order, adj, domains = _indexed(wheel4(), wheel_lists())
    n = len(order)
    both(lambda k: k.solve_colors(n, adj, domains, 10**6, MODE_DECIDE))
    both(lambda k: k.solve_colors(n, adj, domains, 10**6, MODE_COUNT))

    def run_enum(kernel):
        sols = []
        out = kernel.solve_colors(n, adj, domains, 10**6, MODE_ENUM, sols.append)
        return out, sols

    both(run_enum)


def test_gadget_count_parity():
    g, _ = gadget()
    lists = canonical_lists().restrict(g.vertices)
    order, adj, domains = _indexed(g, lists)
    res = both(lambda k: k.solve_colors(len(order), adj, domains, 10**7, MODE_COUNT))
    assert res[4] > 0


def test_random_instance_parity():
    for seed in range(150):
        n, adj, domains = random_indexed(seed)
        for mode in (MODE_DECIDE, MODE_COUNT):
            a = BACKENDS["python"].solve_colors(n, adj, domains, 10**5, mode)
            b = BACKENDS["cython"].solve_colors(n, adj, domains, 10**5, mode)
            assert a == b, f"seed {seed} mode {mode}: {a} != {b}"


def test_tiny_budget_parity():
    order, adj, domains = _indexed(mirzakhani(), canonical_lists())
    for budget in (1, 2, 7, 50, 509):
        res = both(
            lambda k: k.solve_colors(len(order), adj, domains, budget, MODE_DECIDE)
        )
        assert res[0] in (0, 2)


def test_hamilton_parity():
    m = mirzakhani()
    order = list(m.vertices)
    pos = {v: i for i, v in enumerate(order)}
    adj = [[pos[u] for u in m.adj[v]] for v in order]
    res = both(lambda k: k.hamilton_cycle(m.n, adj, 10**8))
    status, cycle, nodes = res
    assert status == 1 and len(cycle) == m.n


def test_hamilton_random_parity():
    for seed in range(80):
        rng = SplitMix64(seed)
        n = 3 + rng.below(9)
        adj = [[] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.below(100) < 45:
                    adj[i].append(j)
                    adj[j].append(i)
        a = BACKENDS["python"].hamilton_cycle(n, adj, 10**6)
        b = BACKENDS["cython"].hamilton_cycle(n, adj, 10**6)
        assert a == b, f"seed {seed}: {a} != {b}"

"""Choosability: witness checks, exhaustive search, random probes."""

import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from colorlab.build import canonical_lists, make_lists, mirzakhani, uniform_lists
from colorlab.choose import (
    SplitMix64,
    choosability_exhaustive,
    default_pool,
    random_probe,
    verify_not_choosable,
)
from colorlab.graph import GraphError, make_graph, plain
from colorlab.solve import BudgetExhausted


def k3():
    vs = [plain(i) for i in range(3)]
    return make_graph(vs, list(itertools.combinations(vs, 2)))


def c4():
    vs = [plain(i) for i in range(4)]
    return make_graph(vs, [(vs[i], vs[(i + 1) % 4]) for i in range(4)])


def edge():
    return make_graph([plain(0), plain(1)], [(plain(0), plain(1))])


# ------------------------------------------------------------ witness mode


def test_witness_confirmed_on_canonical_lists():
    verdict = verify_not_choosable(mirzakhani(), canonical_lists(), 4)
    assert verdict.kind == "WitnessConfirmed"
    assert verdict.nodes > 0


def test_witness_refuted_wrong_list_size():
    verdict = verify_not_choosable(mirzakhani(), uniform_lists(mirzakhani(), (1, 2, 3)), 4)
    assert verdict.kind == "WitnessRefuted"
    assert "3 colors, expected 4" in verdict.reason


def test_witness_refuted_by_coloring():
    g = mirzakhani()
    verdict = verify_not_choosable(g, uniform_lists(g, (1, 2, 3, 4)), 4)
    assert verdict.kind == "WitnessRefuted"
    assert verdict.coloring is not None
    assert "coloring" in verdict.reason


def test_witness_budget_exhaustion_raises():
    with pytest.raises(BudgetExhausted):
        verify_not_choosable(mirzakhani(), canonical_lists(), 4, budget=3)


# --------------------------------------------------------- exhaustive mode


def test_k3_not_2_choosable_least_witness():
    verdict = choosability_exhaustive(k3(), 2, range(1, 7))
    assert verdict.kind == "NotChoosable"
    # the least bad assignment: {1,2} everywhere
    assert all(verdict.assignment.list_of(v) == (1, 2) for v in k3().vertices)
    assert verdict.examined == 1


def test_c4_is_2_choosable():
    verdict = choosability_exhaustive(c4(), 2, range(1, 9))
    assert verdict.kind == "Choosable"
    assert verdict.examined > 1


def test_single_edge_not_1_choosable():
    verdict = choosability_exhaustive(edge(), 1, {1, 2})
    assert verdict.kind == "NotChoosable"
    lists = verdict.assignment
    assert lists.list_of(plain(0)) == (1,) and lists.list_of(plain(1)) == (1,)


def test_exhaustive_pool_too_small():
    with pytest.raises(GraphError, match="pool"):
        choosability_exhaustive(edge(), 3, {1, 2})


def test_exhaustive_budget_exhaustion_verdict():
    verdict = choosability_exhaustive(k3(), 2, range(1, 7), budget=1)
    assert verdict.kind == "Exhausted"
    assert verdict.examined >= 1


def test_exhaustive_arbitrary_pool_labels():
    # the pool need not be 1..n; canonical forms map onto its sorted colors
    verdict = choosability_exhaustive(edge(), 1, {10, 20})
    assert verdict.kind == "NotChoosable"
    assert verdict.assignment.list_of(plain(0)) == (10,)


def test_monotonicity_in_k():
    # C4 is 2-choosable, so it is 3-choosable as well (same pool)
    pool = range(1, 7)
    assert choosability_exhaustive(c4(), 2, pool).kind == "Choosable"
    assert choosability_exhaustive(c4(), 3, pool).kind == "Choosable"


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10**9), st.integers(1, 2), st.integers(2, 4))
def test_symmetry_pruning_never_changes_the_verdict(seed, k, pool_size):
    """Canonicalization is sound: same verdict with and without it."""
    rng = SplitMix64(seed)
    n = 1 + rng.below(4)
    vs = [plain(i) for i in range(n)]
    edges = [
        (vs[i], vs[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.below(100) < 50
    ]
    g = make_graph(vs, edges)
    pool = range(1, pool_size + 1)
    if pool_size < k:
        return
    a = choosability_exhaustive(g, k, pool, symmetry=True)
    b = choosability_exhaustive(g, k, pool, symmetry=False)
    assert a.kind == b.kind
    if a.kind == "NotChoosable":
        # both return the lexicographically least bad assignment
        assert a.assignment.lists == b.assignment.lists


# --------------------------------------------------------------- probing


def test_probe_deterministic_and_json_shape():
    g = mirzakhani()
    a = random_probe(g, 4, 25, seed=7)
    b = random_probe(g, 4, 25, seed=7)
    assert a.to_json() == b.to_json()
    payload = json.loads(a.to_json())
    assert set(payload) == {"graph", "k", "trials", "successes", "seed", "pool"}
    assert payload["trials"] == 25
    assert payload["pool"] == list(default_pool(4))


def test_probe_forced_failure():
    # pool {1,2} with k=2 always deals {1,2} to every vertex: K3 blocks it
    report = random_probe(k3(), 2, 10, seed=0, pool=(1, 2))
    assert report.successes == 0


def test_probe_forced_success():
    report = random_probe(c4(), 2, 10, seed=0, pool=(1, 2))
    assert report.successes == 10


def test_probe_seed_changes_draws():
    g = mirzakhani()
    a = random_probe(g, 4, 10, seed=1)
    b = random_probe(g, 4, 10, seed=2)
    assert a.seed != b.seed  # reports always differ in the seed field


def test_probe_abort_on_exhaustion():
    with pytest.raises(BudgetExhausted, match="trial"):
        random_probe(mirzakhani(), 4, 5, seed=0, budget=2)


# ----------------------------------------------------------------- PRNG


def test_splitmix64_reference_vector():
    # first outputs for seed 0 from the published reference implementation
    rng = SplitMix64(0)
    assert rng.next() == 0xE220A8397B1DCDAF
    assert rng.next() == 0x6E789E6AA1B965F4


def test_splitmix64_below_bounds():
    rng = SplitMix64(123)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) <= set(range(7))
    assert set(draws) == set(range(7))  # all residues appear


def test_splitmix64_sample_covers_all_subsets():
    rng = SplitMix64(5)
    seen = {rng.sample((1, 2, 3, 4), 2) for _ in range(500)}
    assert seen == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}

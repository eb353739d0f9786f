#!/usr/bin/env python3
"""Compare the compiled search kernel against the pure-Python fallback.

Both backends implement the same twin contract (identical node counts,
witnesses, and propagation counts), so this measures constant-factor speed
only.  Run from a checkout with the extension built:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from colorlab.build import canonical_lists, gadget, mirzakhani
from colorlab.engine import MODE_COUNT, MODE_DECIDE, available_backends
from colorlab.solve import _indexed  # same instance encoding the solver uses


def _bench(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="take the best of N runs")
    args = parser.parse_args()

    backends = available_backends()
    if len(backends) < 2:
        print(f"only one backend available ({', '.join(backends)}); nothing to compare")

    m = mirzakhani()
    lists = canonical_lists()
    morder, madj, mdomains = _indexed(m, lists)

    gg, _ = gadget()
    glists = canonical_lists().restrict(gg.vertices)
    gorder, gadj, gdomains = _indexed(gg, glists)

    order = list(m.vertices)
    pos = {v: i for i, v in enumerate(order)}
    hadj = [[pos[u] for u in m.adj[v]] for v in order]

    cases = [
        (
            "theorem UNSAT (63 vertices)",
            lambda k: k.solve_colors(len(morder), madj, mdomains, 10**7, MODE_DECIDE),
        ),
        (
            "gadget count (17 vertices)",
            lambda k: k.solve_colors(len(gorder), gadj, gdomains, 10**7, MODE_COUNT),
        ),
        (
            "Hamilton cycle (63 vertices)",
            lambda k: k.hamilton_cycle(m.n, hadj, 10**8),
        ),
    ]

    print(f"{'case':<30} " + " ".join(f"{name:>12}" for name in sorted(backends)))
    for label, run in cases:
        cols = []
        results = {}
        for name in sorted(backends):
            kernel = backends[name]
            results[name] = run(kernel)[:1]
            cols.append(f"{_bench(lambda: run(kernel), args.repeat) * 1e3:>10.2f}ms")
        tag = "" if len(set(map(str, results.values()))) <= 1 else "  MISMATCH!"
        print(f"{label:<30} " + " ".join(cols) + tag)


if __name__ == "__main__":
    main()

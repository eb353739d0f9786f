"""Command-line front end.

Exit codes: 0 = success / claims pass; 1 = claims fail, or UNSAT where a
coloring was asked for; 2 = usage or input errors; 3 = a node budget ran
out before an answer was reached.  All outputs are deterministic for fixed
arguments, and every report carries the budgets and seeds it was run with.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from colorlab import graphio
from colorlab.build import (
    ListAssignment,
    canonical_layout,
    canonical_lists,
    gadget,
    mirzakhani,
    uniform_lists,
    wheel4,
    wheel_lists,
)
from colorlab.choose import (
    choosability_exhaustive,
    default_pool,
    random_probe,
    verify_not_choosable,
)
from colorlab.graph import Graph, GraphError, delete_vertices, is_connected
from colorlab.proof import forcing_families, gadget_lemma, theorem_replay
from colorlab.solve import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    count,
    decide,
    to_cnf,
)
from colorlab.verify import (
    DEFAULT_HAMILTON_BUDGET,
    apex_embed,
    audit,
    check_hamiltonian_cycle,
    check_matching,
    cut_certificate,
    face_census,
    hamilton,
    perfect_matching,
    rotation_from_layout,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _parse_pool(text: str) -> tuple[int, ...]:
    """Parse a color pool given as 'a..b' (inclusive)."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"pool must look like 'a..b', got {text!r}")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"pool bounds must be integers: {text!r}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty pool {text!r}")
    return tuple(range(a, b + 1))


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".col") or text.lstrip().startswith(("c", "p ")):
        g = graphio.graph_from_dimacs(text)
        # DIMACS carries no coordinates; recover the standard drawing when
        # the vertex ids are structured.
        return canonical_layout(g)
    return graphio.graph_from_json(text)


def _load_lists(path: str) -> ListAssignment:
    with open(path, "r", encoding="utf-8") as fh:
        return graphio.lists_from_json(fh.read())


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _cmd_build(args: argparse.Namespace) -> int:
    if args.target == "mirzakhani":
        g = mirzakhani()
        lists = canonical_lists()
    elif args.target == "wheel4":
        g = wheel4()
        lists = wheel_lists()
    else:
        g, _ = gadget()
        lists = canonical_lists().restrict(g.vertices)
    if args.out:
        _emit(graphio.graph_to_json(g), args.out)
    if args.lists:
        _emit(graphio.lists_to_json(lists), args.lists)
    if not args.out and not args.lists:
        print(f"{args.target}: {g.n} vertices, {g.m} edges")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.lists:
        lists = _load_lists(args.lists)
    elif args.k is not None:
        lists = uniform_lists(g, tuple(range(1, args.k + 1)))
    else:
        print("solve: provide --lists or --k", file=sys.stderr)
        return EXIT_USAGE
    if args.count:
        res = count(g, lists, budget=args.budget)
        _emit(res.to_json(), args.out)
        return EXIT_BUDGET if res.status == "EXHAUSTED" else EXIT_OK
    res = decide(g, lists, budget=args.budget)
    _emit(res.to_json(), args.out)
    if res.status == "EXHAUSTED":
        return EXIT_BUDGET
    return EXIT_OK if res.sat else EXIT_FAIL


def _cmd_choosability(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.witness:
        lists = _load_lists(args.witness)
        verdict = verify_not_choosable(g, lists, args.k, budget=args.budget)
        payload = {"verdict": verdict.kind, "nodes": verdict.nodes}
        if verdict.reason:
            payload["reason"] = verdict.reason
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
        return EXIT_OK if verdict.kind == "WitnessConfirmed" else EXIT_FAIL
    if args.probe:
        pool = args.pool if args.pool else default_pool(args.k)
        report = random_probe(
            g, args.k, args.trials, args.seed, pool=pool, budget=args.budget
        )
        _emit(report.to_json(), args.out)
        return EXIT_OK
    pool = args.pool if args.pool else default_pool(args.k)
    verdict = choosability_exhaustive(g, args.k, pool, budget=args.budget)
    payload = {
        "verdict": verdict.kind,
        "examined": verdict.examined,
        "nodes": verdict.nodes,
        "pool": list(pool),
        "k": args.k,
    }
    if verdict.assignment is not None:
        payload["bad_assignment"] = {
            str(v): list(l) for v, l in sorted(verdict.assignment.lists.items())
        }
    if verdict.reason:
        payload["reason"] = verdict.reason
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    if verdict.kind == "Exhausted":
        return EXIT_BUDGET
    return EXIT_OK if verdict.kind == "Choosable" else EXIT_FAIL


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    picked = [
        name
        for name, flag in (
            ("planarity", args.planarity),
            ("hamilton", args.hamilton),
            ("cut", args.cut),
            ("matching", args.matching),
        )
        if flag
    ]
    if not picked:
        picked = ["planarity", "hamilton", "cut", "matching"]
    apexes = [v for v in g.vertices if v.kind == "apex"]
    inner = delete_vertices(g, apexes) if apexes else g
    results: dict[str, dict] = {}
    budget_hit = False

    if "planarity" in picked:
        try:
            rot = apex_embed(g) if apexes else rotation_from_layout(g)
            census = face_census(rot)
            results["planarity"] = {
                "euler": census.euler,
                "faces": census.f,
                "connected": is_connected(g),
                "pass": census.euler == 2 and is_connected(g),
            }
        except GraphError as exc:
            results["planarity"] = {"error": str(exc), "pass": False}

    if "hamilton" in picked:
        res = hamilton(g, budget=args.hamilton_budget)
        entry = {"status": res.status, "nodes": res.nodes, "pass": False}
        if res.status == "FOUND":
            problems = check_hamiltonian_cycle(g, res.cycle)
            entry["cycle"] = [str(v) for v in res.cycle]
            entry["replay"] = problems or "valid"
            entry["pass"] = not problems
        elif res.status == "EXHAUSTED":
            budget_hit = True
        results["hamilton"] = entry

    if "cut" in picked:
        # The construction's canonical cut: on the apex-deleted graph,
        # delete the degree-7 vertices and count components.
        s = [v for v in inner.vertices if inner.degree(v) == 7]
        if not s:
            results["cut"] = {"error": "no degree-7 vertices to cut", "pass": False}
        else:
            cert = cut_certificate(inner, s)
            results["cut"] = {
                "cut_size": len(cert.cut),
                "components_after": cert.components_after,
                "non_hamiltonian": cert.non_hamiltonian,
                "pass": cert.non_hamiltonian,
            }

    if "matching" in picked:
        res = perfect_matching(inner)
        if res.matching is None:
            results["matching"] = {"reason": res.reason, "pass": False}
        else:
            problems = check_matching(inner, res.matching)
            results["matching"] = {
                "size": res.size,
                "matching": [f"{u} -- {v}" for u, v in res.matching],
                "replay": problems or "valid",
                "pass": not problems,
            }

    _emit(json.dumps(results, indent=2, sort_keys=True), args.out)
    if budget_hit:
        return EXIT_BUDGET
    return EXIT_OK if all(r.get("pass") for r in results.values()) else EXIT_FAIL


def _cmd_prove(args: argparse.Namespace) -> int:
    if args.section is not None:
        lemma = gadget_lemma(args.section, budget=args.budget)
        payload = {
            "section": lemma.section,
            "passed": lemma.passed,
            "reduced": {"status": lemma.reduced_status, "nodes": lemma.reduced_nodes},
            "unreduced": {
                "status": lemma.unreduced_status,
                "nodes": lemma.unreduced_nodes,
            },
        }
        if lemma.reason:
            payload["reason"] = lemma.reason
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
        if "EXHAUSTED" in (lemma.reduced_status, lemma.unreduced_status):
            return EXIT_BUDGET
        return EXIT_OK if lemma.passed else EXIT_FAIL
    if args.families:
        fam = forcing_families(budget=args.budget)
        payload = {
            "passed": fam.passed,
            "examined": fam.examined,
            "patterns": [list(p) for p in fam.patterns],
            "hub_list": list(fam.hub_list),
            "hub_blocked": fam.hub_blocked,
            "outside_example": list(fam.outside_example) if fam.outside_example else None,
        }
        if fam.reason:
            payload["reason"] = fam.reason
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
        if fam.reason.startswith("enumeration exhausted"):
            return EXIT_BUDGET
        return EXIT_OK if fam.passed else EXIT_FAIL
    cert = theorem_replay(budget=args.budget)
    _emit(cert.to_json() if args.json else cert.transcript(), args.out)
    return EXIT_OK if cert.certified else EXIT_FAIL


def _cmd_audit(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph) if args.graph else None
    lists = _load_lists(args.lists) if args.lists else None
    report = audit(
        graph=g,
        lists=lists,
        solve_budget=args.budget,
        hamilton_budget=args.hamilton_budget,
    )
    _emit(report.to_json(), args.out)
    return EXIT_OK if report.all_pass else EXIT_FAIL


def _cmd_export(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.format == "json":
        _emit(graphio.graph_to_json(g), args.out)
    elif args.format == "dimacs":
        _emit(graphio.graph_to_dimacs(g), args.out)
    elif args.format == "dot":
        _emit(graphio.graph_to_dot(g), args.out)
    else:  # cnf
        if not args.lists:
            print("export --format cnf needs --lists", file=sys.stderr)
            return EXIT_USAGE
        doc = to_cnf(g, _load_lists(args.lists))
        _emit(graphio.cnf_to_dimacs(doc), args.out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorlab",
        description=(
            "Exact list-coloring laboratory: build the Mirzakhani graph, "
            "solve list-coloring instances, and verify its certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a graph and its list assignment")
    p.add_argument("target", choices=["mirzakhani", "wheel4", "gadget"])
    p.add_argument("--out", help="write the graph as JSON")
    p.add_argument("--lists", help="write the canonical lists as JSON")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("solve", help="decide or count proper list colorings")
    p.add_argument("--graph", required=True, help="graph file (.json or .col)")
    p.add_argument("--lists", help="list assignment (JSON)")
    p.add_argument("--k", type=_positive, help="use uniform lists 1..k instead")
    p.add_argument("--count", action="store_true", help="count all colorings")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--out", help="write the result here instead of stdout")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("choosability", help="witness check, exhaustive, or probe")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=_positive, required=True, help="list size k")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--witness", help="lists JSON claimed to block every coloring")
    mode.add_argument(
        "--probe", action="store_true", help="random trials instead of exhaustion"
    )
    p.add_argument("--pool", type=_parse_pool, help="color pool a..b (default 1..2k)")
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--seed", type=_nonnegative, default=0)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_choosability)

    p = sub.add_parser("verify", help="structural certificates")
    p.add_argument("--graph", required=True)
    p.add_argument("--planarity", action="store_true")
    p.add_argument("--hamilton", action="store_true")
    p.add_argument("--cut", action="store_true")
    p.add_argument("--matching", action="store_true")
    p.add_argument("--hamilton-budget", type=_positive, default=DEFAULT_HAMILTON_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("prove", help="replay the non-4-choosability argument")
    p.add_argument("--section", type=int, choices=[1, 2, 3, 4], help="one gadget lemma")
    p.add_argument(
        "--families", action="store_true", help="the three-family forcing analysis"
    )
    p.add_argument("--json", action="store_true", help="JSON instead of a transcript")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_prove)

    p = sub.add_parser("audit", help="re-check every headline claim")
    p.add_argument("--graph", help="audit this graph instead of the built-in build")
    p.add_argument("--lists", help="audit these lists instead of the canonical ones")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--hamilton-budget", type=_positive, default=DEFAULT_HAMILTON_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("export", help="convert a graph to another format")
    p.add_argument("--graph", required=True)
    p.add_argument(
        "--format", required=True, choices=["json", "dimacs", "dot", "cnf"]
    )
    p.add_argument("--lists", help="lists JSON (needed for cnf)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

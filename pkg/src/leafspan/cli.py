"""Command-line interface.

Three subcommands:

  check          verdicts for one graph (graph6 or edge list input)
  verify-lemmas  identity, bound, quotient, and monotonicity batteries
  sweep          corpus sweep to CSV: exhaustive n <= 7, seeded random above

Exit codes: 0 success; 1 falsification or check failure; 2 input error;
3 budget exhaustion encountered; 4 disconnected input graph.

The sweep CSV is schema-versioned by its first line (# leafspan-sweep-v1)
and is byte-identical for identical inputs, seed, and version.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Sequence

from . import __version__, trees
from .extremal import (
    COMMON_BOUND_NAMES,
    ExtremalParams,
    build_extremal,
    canonical_partition,
    char_poly,
    check_bounds,
    largest_root,
)
from .graph import Graph, is_connected
from .graphio import EdgeListError, Graph6Error, format_graph6, parse_edge_list, parse_graph6
from .sampling import connected_graph_masks, graph_from_edge_mask, seeded_corpus
from .spectra import BASIC_KINDS, MatrixKind, build_matrix, check_quotient_radius, spectral_radius
from .structural import ConditionSpec, check_condition
from .verify import (
    ALL_THEOREMS,
    FalsificationWarning,
    TheoremId,
    evaluate_all,
    lemma_suite,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_DISCONNECTED = 4

SWEEP_SCHEMA = "# leafspan-sweep-v1"
SWEEP_COLUMNS = (
    "n,graph6,t,goal,param,condition,edge_count,distance_radius,"
    "distance_signless_radius,adjacency_radius,signless_radius,oracle,agree,falsification"
)

#: Deviation allowed between closed-form roots and direct eigensolves in
#: verify-lemmas, and between quotient and full radii.
AGREEMENT_TOL = 1e-8

_ALPHA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)

_BOUND_NAME_KIND = {
    "distance_radius_lower": MatrixKind.DISTANCE,
    "distance_signless_lower": MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN,
    "distance_signless_upper": MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN,
    "adjacency_radius_lower": MatrixKind.ADJACENCY,
    "signless_radius_lower": MatrixKind.SIGNLESS_LAPLACIAN,
}


class InputError(Exception):
    """Bad user input that maps to exit code 2."""


class DisconnectedError(Exception):
    """Connected-graph requirement violated; maps to exit code 4."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leafspan",
        description=(
            "Verify sufficient conditions for a connected graph to contain a "
            "spanning tree whose leaves are pairwise at distance at least four."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="evaluate the conditions on one graph")
    src = p_check.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", metavar="STRING", help="graph6 string")
    src.add_argument("--g6-file", metavar="PATH", help="file with one graph6 string")
    src.add_argument("--edges", metavar="PATH", help="edge-list file ('u v' per line)")
    p_check.add_argument("--t", type=int, default=1, help="minimum-degree parameter (default 1)")
    p_check.add_argument(
        "--theorems",
        default="all",
        metavar="LIST",
        help="comma-separated condition names, or 'all' (default): "
        + ",".join(th.value for th in ALL_THEOREMS),
    )
    p_check.add_argument(
        "--oracle",
        choices=("on", "off"),
        default="on",
        help="run the exhaustive tree search to confirm verdicts (default on)",
    )
    p_check.add_argument(
        "--d",
        type=int,
        default=4,
        help="leaf-distance goal for the oracle search (default 4, the value "
        "the guarantees assert; falsification is only flagged for goals <= 4)",
    )
    p_check.add_argument("--budget", type=int, default=None, help="oracle branch budget")
    p_check.add_argument("--json", metavar="PATH", help="write the report here instead of stdout")
    p_check.set_defaults(func=cmd_check)

    p_lem = sub.add_parser(
        "verify-lemmas", help="run the identity, bound, quotient, and monotonicity batteries"
    )
    p_lem.add_argument(
        "--kinds",
        default="all",
        metavar="LIST",
        help="comma-separated matrix kinds, or 'all' (default): "
        + ",".join(k.value for k in MatrixKind),
    )
    p_lem.add_argument("--seed", type=int, default=0, help="seed for monotonicity trials")
    p_lem.add_argument(
        "--samples", type=int, default=200, help="monotonicity trial count (default 200)"
    )
    p_lem.add_argument("--json", metavar="PATH", help="write the report here instead of stdout")
    p_lem.set_defaults(func=cmd_verify_lemmas)

    p_sweep = sub.add_parser("sweep", help="sweep a graph corpus and emit CSV rows")
    p_sweep.add_argument("--n-min", type=int, default=5, help="smallest order (default 5)")
    p_sweep.add_argument("--n-max", type=int, default=6, help="largest order (default 6)")
    p_sweep.add_argument("--t", type=int, default=1, help="minimum-degree parameter (default 1)")
    goal = p_sweep.add_mutually_exclusive_group()
    goal.add_argument(
        "--d", type=int, default=None, help="leaf-distance goal (default mode, d=4)"
    )
    goal.add_argument(
        "--k", type=int, default=None, help="leaf-degree goal: sweep the equivalence instead"
    )
    p_sweep.add_argument("--seed", type=int, default=0, help="seed for the random corpora")
    p_sweep.add_argument(
        "--samples",
        type=int,
        default=100,
        help="random graphs per order above 7 (default 100)",
    )
    p_sweep.add_argument(
        "--oracle",
        choices=("on", "off"),
        default="on",
        help="run the exhaustive tree search per row (default on)",
    )
    p_sweep.add_argument("--budget", type=int, default=None, help="oracle branch budget")
    p_sweep.add_argument(
        "--workers",
        type=int,
        default=1,
        help="threads computing rows (default 1); output is byte-identical "
        "for any worker count",
    )
    p_sweep.add_argument("--csv", metavar="PATH", help="write rows here instead of stdout")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def _load_graph(args: argparse.Namespace) -> Graph:
    try:
        if args.g6 is not None:
            return parse_graph6(args.g6)
        if args.g6_file is not None:
            with open(args.g6_file, "r", encoding="ascii") as fh:
                return parse_graph6(fh.read())
        with open(args.edges, "r", encoding="ascii") as fh:
            return parse_edge_list(fh.read())
    except (Graph6Error, EdgeListError, OSError, UnicodeDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _parse_theorems(text: str) -> tuple[TheoremId, ...]:
    if text.strip().lower() == "all":
        return ALL_THEOREMS
    out = []
    for name in text.split(","):
        name = name.strip()
        try:
            out.append(TheoremId(name))
        except ValueError as exc:
            raise InputError(
                f"unknown condition {name!r}; valid: "
                + ", ".join(th.value for th in ALL_THEOREMS)
            ) from exc
    if not out:
        raise InputError("empty condition list")
    return tuple(out)


def _parse_kinds(text: str) -> tuple[MatrixKind, ...]:
    if text.strip().lower() == "all":
        return tuple(MatrixKind)
    out = []
    for name in text.split(","):
        name = name.strip()
        try:
            out.append(MatrixKind(name))
        except ValueError as exc:
            raise InputError(
                f"unknown matrix kind {name!r}; valid: " + ", ".join(k.value for k in MatrixKind)
            ) from exc
    if not out:
        raise InputError("empty kind list")
    return tuple(out)


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if not is_connected(g):
        raise DisconnectedError("input graph is disconnected; the conditions do not apply")
    if args.t < 1:
        raise InputError(f"--t must be at least 1, got {args.t}")
    if args.d < 1:
        raise InputError(f"--d must be at least 1, got {args.d}")
    theorems = _parse_theorems(args.theorems)
    verdicts = [v for v in evaluate_all(g, args.t) if v.theorem in theorems]

    oracle_found: bool | None = None
    budget_exhausted = False
    if args.oracle == "on":
        try:
            cert = trees.find_spanning_tree_leaf_distance(g, args.d, args.budget)
            oracle_found = cert is not None
        except trees.BudgetExhausted:
            budget_exhausted = True
        if oracle_found is not None:
            confirmed = []
            for v in verdicts:
                if v.guarantee and not oracle_found and args.d <= 4:
                    warnings.warn(
                        f"FALSIFICATION: {v.theorem.value} granted a guarantee but "
                        f"no spanning tree with leaf distance >= {args.d} exists",
                        FalsificationWarning,
                        stacklevel=2,
                    )
                confirmed.append(replace(v, oracle_confirmed=oracle_found))
            verdicts = confirmed

    falsifications = sum(
        1
        for v in verdicts
        if v.guarantee and v.oracle_confirmed is False and args.d <= 4
    )
    report = {
        "n": g.n,
        "edge_count": g.edge_count(),
        "t": args.t,
        "oracle": args.oracle,
        "oracle_goal": args.d,
        "oracle_budget_exhausted": budget_exhausted,
        "verdicts": [v.to_json_dict() for v in verdicts],
        "falsifications": falsifications,
    }
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.json)
    if falsifications:
        return EXIT_FAILURE
    if budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def _check_root_agreement(kinds: Sequence[MatrixKind]) -> dict:
    instances = 0
    worst = 0.0
    failures = []
    for t in (1, 2, 3):
        for n in range(2 * t + 1, 41):
            params = ExtremalParams(n, t)
            h = build_extremal(params)
            for kind in kinds:
                if kind not in BASIC_KINDS:
                    continue
                root = largest_root(char_poly(params, kind))
                direct = spectral_radius(build_matrix(h, kind))
                dev = abs(root - direct)
                instances += 1
                worst = max(worst, dev)
                if dev > AGREEMENT_TOL:
                    failures.append(f"n={n} t={t} {kind.value}: deviation {dev:.3e}")
    return {
        "name": "threshold_root_agreement",
        "instances": instances,
        "worst_deviation": worst,
        "failures": failures,
        "pass": not failures,
    }


def _check_two_class_agreement(kinds: Sequence[MatrixKind]) -> dict:
    instances = 0
    worst = 0.0
    failures = []
    for s in range(1, 11):
        params = ExtremalParams(2 * s, s)
        h = build_extremal(params)
        for kind in kinds:
            if kind not in BASIC_KINDS:
                continue
            root = largest_root(char_poly(params, kind))
            direct = spectral_radius(build_matrix(h, kind))
            dev = abs(root - direct)
            instances += 1
            worst = max(worst, dev)
            if dev > AGREEMENT_TOL:
                failures.append(f"s={s} {kind.value}: deviation {dev:.3e}")
    return {
        "name": "two_class_root_agreement",
        "instances": instances,
        "worst_deviation": worst,
        "failures": failures,
        "pass": not failures,
    }


def _check_anchors(kinds: Sequence[MatrixKind]) -> dict:
    instances = 0
    failures = []
    for t in (1, 2, 3):
        for n in range(2 * t + 1, 41):
            params = ExtremalParams(n, t)
            if MatrixKind.ADJACENCY in kinds:
                instances += 1
                got = char_poly(params, MatrixKind.ADJACENCY)(n - t - 1)
                if got != -(t**3):
                    failures.append(f"adjacency anchor n={n} t={t}: {got}")
            if MatrixKind.SIGNLESS_LAPLACIAN in kinds:
                instances += 1
                got = char_poly(params, MatrixKind.SIGNLESS_LAPLACIAN)(2 * n - 2 * t - 2)
                if got != 2 * t * t * (t + 1 - n):
                    failures.append(f"signless anchor n={n} t={t}: {got}")
    return {
        "name": "exact_anchor_identities",
        "instances": instances,
        "failures": failures,
        "pass": not failures,
    }


def _check_closed_form_bounds(kinds: Sequence[MatrixKind]) -> dict:
    wanted = {name for name in COMMON_BOUND_NAMES if _BOUND_NAME_KIND[name] in kinds}
    instances = 0
    worst = float("inf")
    failures = []
    for t in (1, 2, 3, 4):
        for n in range(2 * t + 1, 61):
            report = check_bounds(ExtremalParams(n, t))
            for clause in report.checks:
                if clause.name not in wanted or not clause.applicable:
                    continue
                instances += 1
                worst = min(worst, clause.margin)
                if not clause.holds:
                    failures.append(f"{clause.name} n={n} t={t}: margin {clause.margin:.3e}")
    return {
        "name": "closed_form_bounds",
        "instances": instances,
        "worst_margin": None if instances == 0 else worst,
        "failures": failures,
        "pass": not failures,
    }


def _check_quotient_identity(kinds: Sequence[MatrixKind]) -> dict:
    instances = 0
    failures = []
    for t in (1, 2, 3):
        for n in range(2 * t + 1, 21):
            params = ExtremalParams(n, t)
            h = build_extremal(params)
            partition = canonical_partition(params)
            for kind in kinds:
                alphas = _ALPHA_GRID if kind is MatrixKind.A_ALPHA else (None,)
                for alpha in alphas:
                    instances += 1
                    m = build_matrix(h, kind, alpha)
                    if not check_quotient_radius(m, partition, tol=AGREEMENT_TOL):
                        failures.append(f"n={n} t={t} {kind.value} alpha={alpha}")
    return {
        "name": "quotient_radius_identity",
        "instances": instances,
        "failures": failures,
        "pass": not failures,
    }


def cmd_verify_lemmas(args: argparse.Namespace) -> int:
    if args.samples < 1:
        raise InputError(f"--samples must be at least 1, got {args.samples}")
    kinds = _parse_kinds(args.kinds)
    checks = [
        _check_root_agreement(kinds),
        _check_two_class_agreement(kinds),
        _check_anchors(kinds),
        _check_closed_form_bounds(kinds),
        _check_quotient_identity(kinds),
    ]
    if any(kind in BASIC_KINDS for kind in kinds):
        suite = lemma_suite(args.seed, args.samples)
        checks.append(
            {
                "name": "monotonicity_trials",
                "instances": suite.trials,
                "min_margins": suite.min_margins,
                "failures": list(suite.failures),
                "pass": suite.passed,
            }
        )
    passed = all(c["pass"] for c in checks)
    report = {"kinds": [k.value for k in kinds], "checks": checks, "passed": passed}
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.json)
    return EXIT_OK if passed else EXIT_FAILURE


def _sweep_corpus(args: argparse.Namespace, n: int, min_deg: int):
    if n <= 7:
        for mask in connected_graph_masks(n):
            yield graph_from_edge_mask(n, int(mask))
    else:
        yield from seeded_corpus(args.seed, n, args.samples, min_deg)


def _sweep_row(
    g: Graph,
    n: int,
    t: int,
    goal: str,
    param: int,
    spec: ConditionSpec,
    oracle_on: bool,
    budget: int | None,
) -> tuple[str, int, int]:
    """One CSV row plus its falsification and inconclusive counts.

    Pure in its inputs, so rows may be computed concurrently; the caller
    merges them back in input order.
    """
    cond = check_condition(g, spec) is None
    verdicts = evaluate_all(g, t)
    flags = {v.theorem: (1 if v.guarantee else 0) for v in verdicts}
    oracle = ""
    agree = ""
    fals = 0
    inconclusive = 0
    if oracle_on:
        try:
            if goal == "degree":
                cert = trees.find_spanning_tree_leaf_degree(g, param, budget)
            else:
                cert = trees.find_spanning_tree_leaf_distance(g, param, budget)
            found = cert is not None
            oracle = "1" if found else "0"
        except trees.BudgetExhausted:
            inconclusive = 1
            oracle = "inconclusive"
            found = None
        if found is not None:
            if goal == "degree":
                # the condition is equivalent to tree existence, except in
                # the lone degenerate case n = 3, k = 1 where no tree of the
                # class exists at that order; the agree column still reports
                # the raw comparison
                agree = "1" if cond == found else "0"
                if cond != found and not (n == 3 and param == 1):
                    fals = 1
            else:
                # sufficiency: a proved statement only at goals <= 4, and
                # only when the order can host such a tree at all (a tree
                # with leaf distance >= param needs param + 1 vertices, so
                # absence below that is trivial)
                if not found and param <= 4 and n >= param + 1:
                    if cond or any(flags.values()):
                        fals = 1
    row = ",".join(
        [
            str(n),
            format_graph6(g),
            str(t),
            goal,
            str(param),
            "1" if cond else "0",
            str(flags[TheoremId.EDGE_COUNT]),
            str(flags[TheoremId.DISTANCE_RADIUS]),
            str(flags[TheoremId.DISTANCE_SIGNLESS_RADIUS]),
            str(flags[TheoremId.ADJACENCY_RADIUS]),
            str(flags[TheoremId.SIGNLESS_RADIUS]),
            oracle,
            agree,
            str(fals),
        ]
    )
    return row, fals, inconclusive


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.t < 1:
        raise InputError(f"--t must be at least 1, got {args.t}")
    if not 2 <= args.n_min <= args.n_max:
        raise InputError("need 2 <= --n-min <= --n-max")
    if args.samples < 1:
        raise InputError(f"--samples must be at least 1, got {args.samples}")
    if args.workers < 1:
        raise InputError(f"--workers must be at least 1, got {args.workers}")
    if args.k is not None:
        if args.k < 1:
            raise InputError(f"--k must be at least 1, got {args.k}")
        goal = "degree"
        param = args.k
        spec = ConditionSpec.for_leaf_degree(args.k)
    else:
        d = 4 if args.d is None else args.d
        if d < 3:
            raise InputError(f"--d must be at least 3, got {d}")
        goal = "distance"
        param = d
        spec = ConditionSpec.for_leaf_distance(d)

    lines = [SWEEP_SCHEMA, SWEEP_COLUMNS]
    rows = 0
    falsifications = 0
    inconclusive = 0
    for n in range(args.n_min, args.n_max + 1):
        corpus = _sweep_corpus(args, n, max(args.t, 1))

        def work(g: Graph, n: int = n) -> tuple[str, int, int]:
            return _sweep_row(
                g, n, args.t, goal, param, spec, args.oracle == "on", args.budget
            )

        if args.workers > 1:
            # rows are computed out of order but merged back in input order,
            # so the CSV stays byte-identical for any worker count
            with ThreadPoolExecutor(max_workers=args.workers) as pool:
                results = list(pool.map(work, corpus))
        else:
            results = map(work, corpus)
        for row, fals, inc in results:
            rows += 1
            falsifications += fals
            inconclusive += inc
            lines.append(row)
    lines.append(f"# rows={rows} falsifications={falsifications} inconclusive={inconclusive}")
    _emit("\n".join(lines) + "\n", args.csv)
    if falsifications:
        return EXIT_FAILURE
    if inconclusive:
        return EXIT_BUDGET
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Sufficient-condition verdicts for leaf-distance-4 spanning trees.

Five independent conditions on a connected graph G with minimum degree at
least t each guarantee a spanning tree whose leaves are pairwise at distance
at least four. One counts edges against an exact rational bound; the other
four compare a spectral radius of G against the same radius of the extremal
graph on (n, t):

    edge_count                |E(G)|  >  edge_bound(n, t)      for n >= 5
    distance_radius           mu(G)   <= mu(H)                 for n >= 7t+2
    distance_signless_radius  eta(G)  <= eta(H)                for n >= 9t+3
    adjacency_radius          lam(G)  >= lam(H)                for n >= 5t+2
    signless_radius           q(G)    >= q(H)                  for n >= 7t+1

Directions differ by design: the distance-based conditions are upper bounds,
the adjacency-based ones lower bounds. Margins are always oriented so that
positive means the condition holds strictly. Spectral comparisons admit
equality within SLACK (the extremal graph itself satisfies each condition
with exact equality, so the comparison must not exclude it); the edge count
is compared exactly in rational arithmetic.
"""
from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from . import trees
from .extremal import ExtremalParams, build_extremal, char_poly, largest_root
from .graph import Graph, from_edges, is_connected, min_degree
from .sampling import random_connected_graph
from .spectra import MatrixKind, build_matrix, spectral_radius

#: Absolute slack admitted in floating spectral comparisons (both sides are
#: computed to 1e-10, so true equality lands well inside it).
SLACK = 1e-8

#: Maximum allowed disagreement between the closed-form threshold root and a
#: direct eigensolve on the extremal graph.
THRESHOLD_CROSS_TOL = 1e-8

#: Margins at or below this are monotonicity violations in lemma_suite.
MONOTONICITY_SLACK = 1e-10

#: Eigensolver tolerance used inside lemma_suite, kept two orders below
#: MONOTONICITY_SLACK so solver error cannot fake or mask a violation.
LEMMA_TOL = 1e-12


class TheoremId(str, Enum):
    """The five sufficient conditions."""

    EDGE_COUNT = "edge_count"
    DISTANCE_RADIUS = "distance_radius"
    DISTANCE_SIGNLESS_RADIUS = "distance_signless_radius"
    ADJACENCY_RADIUS = "adjacency_radius"
    SIGNLESS_RADIUS = "signless_radius"


ALL_THEOREMS: tuple[TheoremId, ...] = tuple(TheoremId)

_SPECTRAL_KIND = {
    TheoremId.DISTANCE_RADIUS: MatrixKind.DISTANCE,
    TheoremId.DISTANCE_SIGNLESS_RADIUS: MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN,
    TheoremId.ADJACENCY_RADIUS: MatrixKind.ADJACENCY,
    TheoremId.SIGNLESS_RADIUS: MatrixKind.SIGNLESS_LAPLACIAN,
}

#: Conditions where the graph's radius must stay at or BELOW the threshold.
_UPPER_BOUND_CONDITIONS = frozenset(
    {TheoremId.DISTANCE_RADIUS, TheoremId.DISTANCE_SIGNLESS_RADIUS}
)


def min_admissible_order(theorem: TheoremId, t: int) -> int:
    """Smallest order the condition is stated for, given t."""
    theorem = TheoremId(theorem)
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if theorem is TheoremId.EDGE_COUNT:
        return 5
    if theorem is TheoremId.DISTANCE_RADIUS:
        return 7 * t + 2
    if theorem is TheoremId.DISTANCE_SIGNLESS_RADIUS:
        return 9 * t + 3
    if theorem is TheoremId.ADJACENCY_RADIUS:
        return 5 * t + 2
    return 7 * t + 1


class FalsificationWarning(UserWarning):
    """A granted guarantee whose graph provably has no qualifying tree.

    This must never fire; it would contradict a proved statement, so any
    occurrence points at a bug in this package.
    """


@dataclass(frozen=True)
class Verdict:
    """Outcome of one condition on one graph, with per-clause breakdown.

    margin is oriented so positive means the numeric condition holds
    strictly; guarantee requires every hypothesis clause plus the condition.
    oracle_confirmed stays None until oracle_confirm runs (or when its
    search budget ran out).
    """

    theorem: TheoremId
    t: int
    n: int
    order_ok: bool
    connected: bool
    delta_ok: bool
    condition_value: float | None
    threshold: float | None
    margin: float | None
    guarantee: bool
    oracle_confirmed: bool | None = None

    @property
    def hypotheses_met(self) -> bool:
        return self.order_ok and self.connected and self.delta_ok

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "t": self.t,
            "n": self.n,
            "order_ok": self.order_ok,
            "connected": self.connected,
            "delta_ok": self.delta_ok,
            "condition_value": self.condition_value,
            "threshold": self.threshold,
            "margin": self.margin,
            "guarantee": self.guarantee,
            "oracle_confirmed": self.oracle_confirmed,
        }


def edge_bound(n: int, t: int) -> Fraction:
    """Exact edge-count threshold; the condition is |E(G)| strictly above it.

    Two regimes: C(n-t, 2) + 3t^2/2 - t + 1/2 when n = 5 or n >= 6t+1, and
    C(n-t, 2) + 3t^2/2 + t/2 when 6 <= n <= 6t. n = 5 always uses the first
    form, even when t >= 2 would also place it under the second range's
    umbrella. Together the regimes tile all n >= 5.
    """
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if n < 5:
        raise ValueError(f"edge bound is stated for n >= 5, got {n}")
    base = Fraction((n - t) * (n - t - 1), 2) + Fraction(3 * t * t, 2)
    if n == 5 or n >= 6 * t + 1:
        return base - t + Fraction(1, 2)
    return base + Fraction(t, 2)


@lru_cache(maxsize=None)
def _threshold_root(n: int, t: int, kind: MatrixKind) -> float:
    """Spectral threshold for (n, t): the extremal graph's radius.

    Computed from the closed-form characteristic polynomial and
    cross-checked against a direct eigensolve of the built graph; a
    disagreement beyond THRESHOLD_CROSS_TOL raises rather than returning a
    silently wrong threshold.
    """
    params = ExtremalParams(n, t)
    root = largest_root(char_poly(params, kind))
    direct = spectral_radius(build_matrix(build_extremal(params), kind))
    if abs(root - direct) > THRESHOLD_CROSS_TOL:
        raise RuntimeError(
            f"threshold cross-check failed for n={n}, t={t}, {kind.value}: "
            f"polynomial root {root!r} vs direct radius {direct!r}"
        )
    return root


def evaluate(g: Graph, t: int, theorem: TheoremId | str) -> Verdict:
    """Verdict of one condition on g at parameter t.

    Rejects disconnected input: every condition presumes connectivity, and
    the distance matrices do not even exist without it.
    """
    theorem = TheoremId(theorem)
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if not is_connected(g):
        raise ValueError("verdicts are only defined for connected graphs")
    n = g.n
    delta_ok = min_degree(g) >= t
    order_ok = n >= min_admissible_order(theorem, t)

    condition_value: float | None
    threshold: float | None
    margin: float | None
    if theorem is TheoremId.EDGE_COUNT:
        edges = g.edge_count()
        condition_value = float(edges)
        if n >= 5:
            bound = edge_bound(n, t)
            threshold = float(bound)
            margin = float(Fraction(edges) - bound)  # exact: halves only
            condition_ok = Fraction(edges) > bound
        else:
            threshold = None
            margin = None
            condition_ok = False
    else:
        kind = _SPECTRAL_KIND[theorem]
        condition_value = spectral_radius(build_matrix(g, kind))
        if n >= 2 * t + 1:
            threshold = _threshold_root(n, t, kind)
            if theorem in _UPPER_BOUND_CONDITIONS:
                margin = threshold - condition_value
            else:
                margin = condition_value - threshold
            condition_ok = margin >= -SLACK
        else:
            threshold = None
            margin = None
            condition_ok = False

    return Verdict(
        theorem=theorem,
        t=t,
        n=n,
        order_ok=order_ok,
        connected=True,
        delta_ok=delta_ok,
        condition_value=condition_value,
        threshold=threshold,
        margin=margin,
        guarantee=bool(order_ok and delta_ok and condition_ok),
    )


def evaluate_all(g: Graph, t: int) -> tuple[Verdict, ...]:
    """One verdict per condition, in ALL_THEOREMS order."""
    return tuple(evaluate(g, t, theorem) for theorem in ALL_THEOREMS)


def _strength(v: Verdict) -> tuple:
    margin = v.margin if v.margin is not None else -math.inf
    return (v.guarantee, margin)


def evaluate_auto(g: Graph) -> tuple[Verdict, ...]:
    """Strongest verdict per condition over all admissible t <= min degree.

    Strength prefers a granted guarantee, then the larger margin; ties keep
    the smaller t. Raises when no t is admissible (minimum degree 0).
    """
    delta = min_degree(g)
    if delta < 1:
        raise ValueError("no admissible t: the graph has an isolated vertex")
    best: dict[TheoremId, Verdict] = {}
    for t in range(1, delta + 1):
        for v in evaluate_all(g, t):
            cur = best.get(v.theorem)
            if cur is None or _strength(v) > _strength(cur):
                best[v.theorem] = v
    return tuple(best[theorem] for theorem in ALL_THEOREMS)


def oracle_confirm(verdict: Verdict, g: Graph, budget: int | None = None) -> Verdict:
    """Bind the verdict to an exhaustive leaf-distance-4 tree search on g.

    Sets oracle_confirmed to whether a qualifying spanning tree exists. A
    granted guarantee with a proven "none" is impossible if this package is
    correct; it is reported loudly as a FalsificationWarning and surfaces in
    the returned verdict as guarantee=True, oracle_confirmed=False. Budget
    exhaustion leaves oracle_confirmed unset.
    """
    if g.n != verdict.n:
        raise ValueError("verdict was not produced from this graph")
    try:
        cert = trees.find_spanning_tree_leaf_distance(g, 4, budget)
    except trees.BudgetExhausted:
        return verdict
    found = cert is not None
    if verdict.guarantee and not found:
        warnings.warn(
            f"FALSIFICATION: {verdict.theorem.value} granted a guarantee at "
            f"n={verdict.n}, t={verdict.t} but exhaustive search proves no "
            "spanning tree with leaf distance >= 4 exists",
            FalsificationWarning,
            stacklevel=2,
        )
    return replace(verdict, oracle_confirmed=found)


def is_falsification(verdict: Verdict) -> bool:
    """True for the impossible combination guarantee=True, oracle says none."""
    return bool(verdict.guarantee) and verdict.oracle_confirmed is False


# --- Monotonicity suite -----------------------------------------------------

#: relation name -> (matrix kind, +1 if deleting an edge must INCREASE the
#: radius, -1 if it must decrease it).
MONOTONICITY_RELATIONS = {
    "distance_radius_up_on_edge_deletion": (MatrixKind.DISTANCE, +1),
    "distance_signless_up_on_edge_deletion": (MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN, +1),
    "adjacency_radius_down_on_edge_deletion": (MatrixKind.ADJACENCY, -1),
    "signless_radius_down_on_edge_deletion": (MatrixKind.SIGNLESS_LAPLACIAN, -1),
}


@dataclass(frozen=True)
class LemmaSuiteReport:
    """Outcome of the seeded monotonicity trials."""

    seed: int
    trials: int
    violations: int
    min_margins: dict[str, float]
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "violations": self.violations,
            "min_margins": dict(self.min_margins),
            "failures": list(self.failures),
            "passed": self.passed,
        }


def _delete_edge(g: Graph, u: int, v: int) -> Graph:
    return from_edges(g.n, [e for e in g.edges() if e != (min(u, v), max(u, v))])


def lemma_suite(seed: int, trials: int, n_lo: int = 5, n_hi: int = 12) -> LemmaSuiteReport:
    """Strict monotonicity of all four radii under single-edge deletion.

    Each trial draws a random connected graph, deletes one random non-bridge
    edge (so the smaller graph stays connected and its distance matrices
    exist), and checks: both distance-based radii strictly increase, the
    adjacency and signless radii strictly decrease. Margins at or below
    MONOTONICITY_SLACK count as violations. Reports the minimum margin seen
    per relation.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if not 2 <= n_lo <= n_hi:
        raise ValueError("need 2 <= n_lo <= n_hi")
    rng = random.Random(seed)
    min_margins = {name: math.inf for name in MONOTONICITY_RELATIONS}
    violations = 0
    failures: list[str] = []
    for trial in range(trials):
        while True:
            n = rng.randrange(n_lo, n_hi + 1)
            g = random_connected_graph(rng, n, 1)
            removable = [
                (u, v) for u, v in g.edges() if is_connected(_delete_edge(g, u, v))
            ]
            if removable:
                break
        u, v = removable[rng.randrange(len(removable))]
        smaller = _delete_edge(g, u, v)
        for name, (kind, direction) in MONOTONICITY_RELATIONS.items():
            before = spectral_radius(build_matrix(g, kind), tol=LEMMA_TOL)
            after = spectral_radius(build_matrix(smaller, kind), tol=LEMMA_TOL)
            margin = direction * (after - before)
            if margin < min_margins[name]:
                min_margins[name] = margin
            if margin <= MONOTONICITY_SLACK:
                violations += 1
                failures.append(
                    f"trial {trial}: {name} margin {margin!r} on n={n} "
                    f"after deleting edge ({u}, {v})"
                )
    return LemmaSuiteReport(
        seed=seed,
        trials=trials,
        violations=violations,
        min_margins=min_margins,
        failures=tuple(failures),
    )

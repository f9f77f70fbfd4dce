"""The extremal family K_t v (K_{n-2t} u t*K_1) and its spectra.

For n >= 2t+1 the graph is the join of a t-clique with the disjoint union of
an (n-2t)-clique and t isolated vertices; at the degenerate order n = 2t the
middle clique vanishes and the family is K_t v t*K_1. Characteristic
polynomials of the equitable quotients come out with integer coefficients,
kept exact here so threshold roots can be isolated and evaluated without
floating error in the coefficients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, complete, edgeless, join, union
from .spectra import MatrixKind

COMMON_BOUND_NAMES = (
    "distance_radius_lower",
    "distance_signless_lower",
    "distance_signless_upper",
    "adjacency_radius_lower",
    "signless_radius_lower",
)


@dataclass(frozen=True)
class ExtremalParams:
    """Order n and clique parameter t, requiring t >= 1 and n >= 2t."""

    n: int
    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"t must be at least 1, got {self.t}")
        if self.n < 2 * self.t:
            raise ValueError(f"order {self.n} too small for t={self.t}; need n >= 2t")


def build_extremal(params: ExtremalParams) -> Graph:
    """Vertices 0..t-1 form the dominating clique, then the middle clique,
    then the t independent vertices last."""
    n, t = params.n, params.t
    if n == 2 * t:
        return join(complete(t), edgeless(t))
    return join(complete(t), union(complete(n - 2 * t), edgeless(t)))


def canonical_partition(params: ExtremalParams) -> tuple[tuple[int, ...], ...]:
    """Class sizes (t, n-2t, t), or (t, t) at the degenerate order."""
    n, t = params.n, params.t
    if n == 2 * t:
        return (tuple(range(t)), tuple(range(t, 2 * t)))
    return (
        tuple(range(t)),
        tuple(range(t, n - t)),
        tuple(range(n - t, n)),
    )


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial with exact integer coefficients, highest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2 or self.coeffs[0] != 1:
            raise ValueError("expected a monic polynomial of degree >= 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Horner evaluation; exact when x is an int or Fraction."""
        acc = self.coeffs[0]
        for c in self.coeffs[1:]:
            acc = acc * x + c
        return acc


def char_poly(params: ExtremalParams, kind: MatrixKind | str) -> IntPolynomial:
    """Characteristic polynomial of the canonical quotient for the given kind.

    Cubic for n >= 2t+1, quadratic at n = 2t (the two-class family with
    s = t). The a_alpha kind has no integer-coefficient family and is
    rejected.
    """
    kind = MatrixKind(kind)
    if kind is MatrixKind.A_ALPHA:
        raise ValueError("char_poly is not defined for a_alpha")
    n, t = params.n, params.t
    if n == 2 * t:
        s = t
        if kind is MatrixKind.DISTANCE:
            return IntPolynomial((1, -3 * (s - 1), s * s - 4 * s + 2))
        if kind is MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN:
            return IntPolynomial((1, -(8 * s - 6), 14 * s * s - 22 * s + 8))
        if kind is MatrixKind.ADJACENCY:
            return IntPolynomial((1, -(s - 1), -s * s))
        return IntPolynomial((1, -(4 * s - 2), 2 * s * s - 2 * s))
    if kind is MatrixKind.DISTANCE:
        return IntPolynomial(
            (
                1,
                -(n + t - 4),
                -(2 * n * t + 3 * n - 5 * t * t + t - 5),
                n * t * t - 2 * n * t - 2 * n + 5 * t * t - 2 * t**3 + 2,
            )
        )
    if kind is MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN:
        return IntPolynomial(
            (
                1,
                -(5 * n + t - 8),
                8 * n * n - n * t - 26 * n + 8 * t * t - 4 * t + 20,
                -4 * n**3
                + 2 * n * n * t
                + 20 * n * n
                - 8 * n * t * t
                - 2 * n * t
                - 32 * n
                - 2 * t**3
                + 18 * t * t
                - 4 * t
                + 16,
            )
        )
    if kind is MatrixKind.ADJACENCY:
        return IntPolynomial(
            (
                1,
                -n + t + 2,
                t + 1 - n - t * t,
                n * t * t - 2 * t**3 - t * t,
            )
        )
    return IntPolynomial(
        (
            1,
            t - 3 * n + 4,
            2 * n * n + n * t - 6 * n - 4 * t * t + 4,
            -2 * n * n * t + 4 * n * t * t + 6 * n * t - 2 * t**3 - 6 * t * t - 4 * t,
        )
    )


def _bisect_increasing(f, lo: float, hi: float) -> float:
    # invariant: f(lo) <= 0 < f(hi), f increasing on [lo, hi]
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if f(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def largest_root(poly: IntPolynomial, lower_hint: float = 0.0) -> float:
    """Largest real root at or above lower_hint, to within 1e-12.

    Bracketed between the hint and the coefficient bound 1 + max|c_i|; the
    rightmost sign change is isolated exactly via the critical points, so
    closely spaced root pairs cannot be skipped. Raises when no sign change
    exists at or above the hint.
    """
    cs = [float(c) for c in poly.coeffs]
    f = poly.__call__
    upper = 1.0 + max(abs(c) for c in cs[1:])
    if poly.degree == 2:
        a, b = cs[1], cs[2]
        disc = a * a - 4.0 * b
        if disc < 0:
            raise ValueError("no sign change found in bracket: no real roots")
        r = 0.5 * (-a + math.sqrt(disc))
        if r < lower_hint:
            raise ValueError("no sign change found in bracket: largest root below hint")
        return r
    if poly.degree != 3:
        raise ValueError(f"unsupported degree {poly.degree}")
    a = cs[1]
    b = cs[2]
    disc = a * a - 3.0 * b
    if disc >= 0:
        crit_hi = (-a + math.sqrt(disc)) / 3.0
        crit_lo = (-a - math.sqrt(disc)) / 3.0
        lo = max(lower_hint, crit_hi)
        if f(lo) <= 0:
            return _bisect_increasing(f, lo, upper)
        # on [crit_hi, inf) the polynomial is positive, so the largest real
        # root, if any at or above the hint, sits left of the local maximum
        if lower_hint < crit_lo and f(lower_hint) <= 0:
            return _bisect_increasing(f, lower_hint, crit_lo)
        raise ValueError("no sign change found in bracket")
    if f(lower_hint) > 0:
        raise ValueError("no sign change found in bracket")
    return _bisect_increasing(f, lower_hint, upper)


@dataclass(frozen=True)
class BoundCheck:
    """One closed-form bound on a quotient root, with its margin."""

    name: str
    applicable: bool
    holds: bool | None
    margin: float | None


@dataclass(frozen=True)
class BoundsReport:
    params: ExtremalParams
    checks: tuple[BoundCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.applicable)


def check_bounds(params: ExtremalParams) -> BoundsReport:
    """Closed-form root bounds for the three-class family (n >= 2t+1).

    distance_radius_lower:      mu  > n + 3t/2 - 1      for n >= 5t+1
    distance_signless_lower:    eta > 2n + 5t - 2       for n >= 9t+3
    distance_signless_upper:    eta < 3n - 3t - 5       for n >= 9t+3
    adjacency_radius_lower:     lam > n - t - 1         always
    signless_radius_lower:      q   > 2n - 2t - 2       for n >= t+2
    """
    n, t = params.n, params.t
    if n < 2 * t + 1:
        raise ValueError("bounds are stated for the three-class family, n >= 2t+1")
    mu = largest_root(char_poly(params, MatrixKind.DISTANCE))
    eta = largest_root(char_poly(params, MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN))
    lam = largest_root(char_poly(params, MatrixKind.ADJACENCY))
    q = largest_root(char_poly(params, MatrixKind.SIGNLESS_LAPLACIAN))

    def clause(name: str, applicable: bool, margin: float | None) -> BoundCheck:
        if not applicable:
            return BoundCheck(name, False, None, None)
        return BoundCheck(name, True, margin > 0, margin)

    checks = (
        clause("distance_radius_lower", n >= 5 * t + 1, mu - (n + 1.5 * t - 1)),
        clause("distance_signless_lower", n >= 9 * t + 3, eta - (2 * n + 5 * t - 2)),
        clause("distance_signless_upper", n >= 9 * t + 3, (3 * n - 3 * t - 5) - eta),
        clause("adjacency_radius_lower", True, lam - (n - t - 1)),
        clause("signless_radius_lower", n >= t + 2, q - (2 * n - 2 * t - 2)),
    )
    return BoundsReport(params=params, checks=checks)

"""Graph matrices, spectral radii, and equitable quotient checks.

spectral_radius carries a residual contract: the returned value rho comes
with an internally computed vector x satisfying
||M x - rho x||_inf <= tol * max(1, rho). The solver is a shifted power
iteration; it is deliberately not a dense eigensolver so that dense
eigendecompositions remain available as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from . import _kernels
from .graph import Graph, bfs_distances

DEFAULT_TOL = 1e-10
EQUITABLE_TOL = 1e-12
MAX_POWER_ITERATIONS = 2_000_000


class ConvergenceError(RuntimeError):
    """Power iteration failed to meet the residual bound within budget."""


class MatrixKind(str, Enum):
    ADJACENCY = "adjacency"
    SIGNLESS_LAPLACIAN = "signless_laplacian"
    DISTANCE = "distance"
    DISTANCE_SIGNLESS_LAPLACIAN = "distance_signless_laplacian"
    A_ALPHA = "a_alpha"


#: The four parameter-free kinds.
BASIC_KINDS = (
    MatrixKind.ADJACENCY,
    MatrixKind.SIGNLESS_LAPLACIAN,
    MatrixKind.DISTANCE,
    MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN,
)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges():
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def build_matrix(g: Graph, kind: MatrixKind | str, alpha: float | None = None) -> np.ndarray:
    """Construct the requested graph matrix as a dense float64 array.

    Distance-based kinds require a connected graph. The a_alpha kind is
    alpha*D + (1-alpha)*A and is the only one accepting the alpha parameter,
    with alpha in [0, 1].
    """
    kind = MatrixKind(kind)
    if kind is MatrixKind.A_ALPHA:
        if alpha is None:
            raise ValueError("a_alpha requires the alpha parameter")
        if not 0.0 <= alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    elif alpha is not None:
        raise ValueError(f"alpha is only meaningful for a_alpha, not {kind.value}")

    if kind is MatrixKind.ADJACENCY:
        return adjacency_matrix(g)
    if kind is MatrixKind.SIGNLESS_LAPLACIAN:
        a = adjacency_matrix(g)
        return np.diag(a.sum(axis=1)) + a
    if kind is MatrixKind.DISTANCE:
        return bfs_distances(g).astype(np.float64)
    if kind is MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN:
        d = bfs_distances(g).astype(np.float64)
        return np.diag(d.sum(axis=1)) + d
    a = adjacency_matrix(g)
    return alpha * np.diag(a.sum(axis=1)) + (1.0 - alpha) * a


def spectral_radius(m: np.ndarray, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of a symmetric nonnegative matrix within tol."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix must be symmetric")
    if m.min() < 0:
        raise ValueError("matrix must be entrywise nonnegative")
    return _dominant_radius(m, tol)


def _dominant_radius(m: np.ndarray, tol: float) -> float:
    """Perron root of a nonnegative matrix; no symmetry requirement."""
    m = np.ascontiguousarray(m, dtype=np.float64)
    rho, iters = _kernels.power_radius(m, tol, MAX_POWER_ITERATIONS)
    if iters < 0:
        raise ConvergenceError(
            f"power iteration did not reach tol={tol} within {MAX_POWER_ITERATIONS} iterations"
        )
    return float(rho)


def _validate_partition(n: int, partition: Sequence[Sequence[int]]) -> list[list[int]]:
    classes = [list(c) for c in partition]
    if not classes or any(not c for c in classes):
        raise ValueError("partition classes must be nonempty")
    seen: set[int] = set()
    for c in classes:
        for v in c:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"vertex {v} appears in two classes")
            seen.add(v)
    if len(seen) != n:
        raise ValueError("partition does not cover all vertices")
    return classes


@dataclass(frozen=True)
class QuotientResult:
    """Quotient matrix of a partition plus its equitability diagnosis."""

    matrix: np.ndarray
    equitable: bool
    max_deviation: float


def quotient(m: np.ndarray, partition: Sequence[Sequence[int]]) -> QuotientResult:
    """Quotient b_ij = (block row sum)/|C_i|; equitable iff every row of
    block (i, j) has the same sum, within EQUITABLE_TOL."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    classes = _validate_partition(m.shape[0], partition)
    k = len(classes)
    b = np.zeros((k, k), dtype=np.float64)
    deviation = 0.0
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            rows = m[np.ix_(ci, cj)].sum(axis=1)
            b[i, j] = rows.sum() / len(ci)
            deviation = max(deviation, float(np.abs(rows - b[i, j]).max()))
    return QuotientResult(matrix=b, equitable=deviation <= EQUITABLE_TOL, max_deviation=deviation)


def check_quotient_radius(
    m: np.ndarray,
    partition: Sequence[Sequence[int]],
    tol: float = 1e-8,
) -> bool:
    """True when the quotient's Perron root matches the full radius.

    The partition must be equitable; a non-equitable partition is rejected
    because the identity only holds in the equitable case.
    """
    q = quotient(m, partition)
    if not q.equitable:
        raise ValueError(
            f"partition is not equitable (max row-sum deviation {q.max_deviation:.3e})"
        )
    rho_quotient = _dominant_radius(q.matrix, DEFAULT_TOL)
    rho_full = spectral_radius(np.asarray(m, dtype=np.float64))
    return abs(rho_quotient - rho_full) <= tol

"""Isolated-vertex deletion conditions and violation witnesses.

A condition (num, den) asks that den * i(G-S) < num * |S| for every nonempty
vertex subset S, where i(G-S) counts the vertices outside S whose neighbors
all lie inside S. Passing the (k+1, 1) condition is equivalent to the
existence of a spanning tree in which no vertex touches more than k leaves;
passing (2, d-2) is sufficient for a spanning tree whose leaves are pairwise
at distance at least d.

Both statements carry small-order provisos, because a tree of the target
class must be realizable at the given order at all. No 3-vertex tree has
leaf degree below 2 (the path's middle vertex touches both leaves), so the
leaf-degree equivalence fails in exactly one degenerate case: the triangle
with k = 1 passes the condition yet has no qualifying spanning tree. It
holds everywhere else on n >= 2. Likewise a tree with leaf distance >= d
needs at least d + 1 vertices, so the distance implication is claimed only
for n > d.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .graph import Graph, VertexSet, is_connected


@dataclass(frozen=True)
class ConditionSpec:
    """The condition den * i(G-S) < num * |S| for all nonempty S."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num < 1 or self.den < 1:
            raise ValueError("num and den must be positive integers")

    @classmethod
    def for_leaf_degree(cls, k: int) -> "ConditionSpec":
        """Condition equivalent to a spanning tree with leaf degree <= k.

        The equivalence holds for every connected graph on n >= 2 vertices
        except the lone degenerate case n = 3, k = 1 (see module notes).
        """
        if k < 1:
            raise ValueError(f"leaf degree bound must be at least 1, got {k}")
        return cls(num=k + 1, den=1)

    @classmethod
    def for_leaf_distance(cls, d: int) -> "ConditionSpec":
        """Condition sufficient for a spanning tree with leaf distance >= d."""
        if d < 3:
            raise ValueError(f"leaf distance target must be at least 3, got {d}")
        return cls(num=2, den=d - 2)

    def describe(self) -> str:
        return f"{self.den}*i(G-S) < {self.num}*|S|"


@dataclass(frozen=True)
class ViolationWitness:
    """A nonempty S with den * i(G-S) >= num * |S|, plus the isolated set."""

    s: VertexSet
    isolated: VertexSet
    i_count: int
    s_count: int


def isolated_count(g: Graph, s: VertexSet) -> int:
    """Number of vertices outside s with all neighbors inside s."""
    full = (1 << g.n) - 1
    if s < 0 or s & ~full:
        raise ValueError("vertex set references vertices outside the graph")
    return isolated_set(g, s).bit_count()


def isolated_set(g: Graph, s: VertexSet) -> VertexSet:
    """Bitmask of the vertices isolated by removing s."""
    full = (1 << g.n) - 1
    rest = full & ~s
    iso = 0
    for v in range(g.n):
        if (rest >> v) & 1 and (g.adj[v] & rest) == 0:
            iso |= 1 << v
    return iso


def check_condition(
    g: Graph, spec: ConditionSpec, exhaustive: bool = False
) -> ViolationWitness | None:
    """None when the condition holds for every nonempty S; otherwise the
    first violation in deterministic search order.

    The default search walks independent sets I in increasing bitmask order
    and tests S = N(I): any violating S keeps its isolated vertices I
    pairwise nonadjacent, and N(I), a subset of S, violates at least as
    strongly, so the reduction misses nothing. With exhaustive=True every
    nonempty subset is tested directly in increasing bitmask order (a
    cross-check path; exponentially slower).
    """
    if g.n < 2:
        raise ValueError("condition is defined for graphs on at least 2 vertices")
    if not is_connected(g):
        raise ValueError("condition requires a connected graph")
    adj = _kernels.adj_int64(g)
    search = _kernels.violation_search_all if exhaustive else _kernels.violation_search
    found, s, iso = search(g.n, adj, spec.num, spec.den)
    if not found:
        return None
    s = int(s)
    iso = int(iso)
    witness = ViolationWitness(
        s=s, isolated=iso, i_count=iso.bit_count(), s_count=s.bit_count()
    )
    _replay(g, spec, witness)
    return witness


def _replay(g: Graph, spec: ConditionSpec, w: ViolationWitness) -> None:
    """Re-derive the witness arithmetic independently of the search kernel."""
    if w.s == 0:
        raise RuntimeError("witness replay failed: empty removal set")
    iso = isolated_set(g, w.s)
    if iso != w.isolated or iso.bit_count() != w.i_count:
        raise RuntimeError("witness replay failed: isolated set mismatch")
    if spec.den * w.i_count < spec.num * w.s_count:
        raise RuntimeError("witness replay failed: inequality does not hold")

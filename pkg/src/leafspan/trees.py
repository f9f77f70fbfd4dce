"""Spanning-tree certificates, leaf metrics, and exhaustive searches.

A tree is encoded as a parent array: exactly one root carries the sentinel
-1. The leaf distance of a tree is the minimum tree distance between any two
leaves (infinity when the tree has fewer than two leaves, which happens only
at order 1); the leaf degree is the maximum, over vertices, of the number of
adjacent leaves.

The searches are complete: a "none" answer means no spanning tree of the
host graph meets the goal. Exceeding the branch budget raises
BudgetExhausted instead, never "none".
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from typing import Sequence

from . import _kernels
from .graph import Graph, is_connected
from .extremal import ExtremalParams, build_extremal

#: Branch-node budget for the spanning-tree searches, overridable per call or
#: via the LEAFSPAN_BUDGET environment variable.
DEFAULT_BUDGET = 100_000_000


class BudgetExhausted(RuntimeError):
    """The search hit its branch budget before reaching an answer."""

    def __init__(self, nodes: int, budget: int) -> None:
        super().__init__(f"search explored {nodes} branch nodes, budget {budget}")
        self.nodes = nodes
        self.budget = budget


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        if budget < 1:
            raise ValueError("budget must be positive")
        return budget
    env = os.environ.get("LEAFSPAN_BUDGET")
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ValueError(f"LEAFSPAN_BUDGET must be an integer, got {env!r}") from exc
        if value < 1:
            raise ValueError("LEAFSPAN_BUDGET must be positive")
        return value
    return DEFAULT_BUDGET


def _validate_parent(parent: Sequence[int]) -> tuple[int, ...]:
    n = len(parent)
    if n < 1:
        raise ValueError("parent array must be nonempty")
    parent = tuple(int(p) for p in parent)
    roots = [v for v, p in enumerate(parent) if p == -1]
    if len(roots) != 1:
        raise ValueError(f"tree must have exactly one root, found {len(roots)}")
    for v, p in enumerate(parent):
        if p != -1 and not 0 <= p < n:
            raise ValueError(f"parent of vertex {v} out of range: {p}")
        if p == v:
            raise ValueError(f"vertex {v} is its own parent")
    # Walking to the root must terminate from every vertex; a cycle would
    # revisit a vertex before reaching the root.
    state = [0] * n  # 0 unseen, 1 on current walk, 2 settled
    for v in range(n):
        path = []
        u = v
        while state[u] == 0 and parent[u] != -1:
            state[u] = 1
            path.append(u)
            u = parent[u]
        if state[u] == 1:
            raise ValueError("parent array contains a cycle")
        for w in path:
            state[w] = 2
        state[u] = 2
    return parent


def _tree_degrees(parent: Sequence[int]) -> list[int]:
    deg = [0] * len(parent)
    for v, p in enumerate(parent):
        if p != -1:
            deg[v] += 1
            deg[p] += 1
    return deg


def _tree_children(parent: Sequence[int]) -> list[list[int]]:
    kids: list[list[int]] = [[] for _ in parent]
    for v, p in enumerate(parent):
        if p != -1:
            kids[p].append(v)
    return kids


def leaf_distance(tree: "TreeCert | Sequence[int]") -> int | float:
    """Minimum tree distance between two leaves, recomputed from scratch;
    math.inf when the tree has fewer than two leaves."""
    parent = _validate_parent(tree.parent if isinstance(tree, TreeCert) else tree)
    n = len(parent)
    deg = _tree_degrees(parent)
    leaves = [v for v in range(n) if deg[v] == 1]
    if len(leaves) < 2:
        return math.inf
    kids = _tree_children(parent)
    best = math.inf
    for i, a in enumerate(leaves):
        # BFS over the tree from leaf a
        dist = [-1] * n
        dist[a] = 0
        queue = [a]
        while queue:
            nxt = []
            for u in queue:
                nbrs = kids[u] + ([parent[u]] if parent[u] != -1 else [])
                for w in nbrs:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            queue = nxt
        for b in leaves[i + 1 :]:
            if dist[b] < best:
                best = dist[b]
    return int(best)


def leaf_degree(tree: "TreeCert | Sequence[int]") -> int:
    """Maximum over vertices of the number of adjacent leaves."""
    parent = _validate_parent(tree.parent if isinstance(tree, TreeCert) else tree)
    n = len(parent)
    deg = _tree_degrees(parent)
    kids = _tree_children(parent)
    best = 0
    for v in range(n):
        c = sum(1 for u in kids[v] if deg[u] == 1)
        if parent[v] != -1 and deg[parent[v]] == 1:
            c += 1
        if c > best:
            best = c
    return best


@dataclass(frozen=True)
class TreeCert:
    """A spanning tree with its two leaf metrics, recomputed at build time."""

    parent: tuple[int, ...]
    leaf_distance: int | float
    leaf_degree: int

    @classmethod
    def from_parent(cls, g: Graph, parent: Sequence[int]) -> "TreeCert":
        """Validate the encoding against the host graph and compute metrics."""
        parent = _validate_parent(parent)
        if len(parent) != g.n:
            raise ValueError(f"parent length {len(parent)} does not match order {g.n}")
        for v, p in enumerate(parent):
            if p != -1 and not g.has_edge(v, p):
                raise ValueError(f"tree edge ({p}, {v}) is not an edge of the host graph")
        return cls(
            parent=parent,
            leaf_distance=leaf_distance(parent),
            leaf_degree=leaf_degree(parent),
        )

    def to_json_dict(self) -> dict:
        ld = self.leaf_distance
        return {
            "parent": list(self.parent),
            "leaf_distance": "inf" if ld == math.inf else int(ld),
            "leaf_degree": int(self.leaf_degree),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _search(g: Graph, mode: int, param: int, budget: int | None) -> TreeCert | None:
    if g.n < 2:
        raise ValueError("search is defined for graphs on at least 2 vertices")
    if not is_connected(g):
        raise ValueError("search requires a connected graph")
    limit = _resolve_budget(budget)
    adj = _kernels.adj_int64(g)
    status, parent, nodes = _kernels.tree_search(g.n, adj, mode, param, limit)
    if status < 0:
        raise BudgetExhausted(int(nodes), limit)
    if status == 0:
        return None
    return TreeCert.from_parent(g, tuple(int(p) for p in parent))


def find_spanning_tree_leaf_distance(
    g: Graph, d: int, budget: int | None = None
) -> TreeCert | None:
    """A spanning tree with leaf distance >= d, or None proven by exhaustion.

    Deterministic: branching follows lexicographic edge order, so the same
    input always yields the same certificate.
    """
    if d < 1:
        raise ValueError(f"distance target must be at least 1, got {d}")
    cert = _search(g, 0, d, budget)
    if cert is not None and not cert.leaf_distance >= d:
        raise RuntimeError("internal error: search returned a tree below the distance goal")
    return cert


def find_spanning_tree_leaf_degree(g: Graph, k: int, budget: int | None = None) -> TreeCert | None:
    """A spanning tree with leaf degree <= k, or None proven by exhaustion."""
    if k < 1:
        raise ValueError(f"leaf degree bound must be at least 1, got {k}")
    cert = _search(g, 1, k, budget)
    if cert is not None and not cert.leaf_degree <= k:
        raise RuntimeError("internal error: search returned a tree above the degree goal")
    return cert


def hamilton_path_extremal(params: ExtremalParams) -> TreeCert:
    """Explicit Hamilton path of the extremal graph, as a tree certificate.

    The path alternates isolated-class and clique-class vertices, then runs
    through the middle clique: with classes ordered as in build_extremal,
    the visit order is n-t, 0, n-t+1, 1, ..., n-1, t-1, t, t+1, ..., n-t-1.
    Its leaf distance is n-1, which is at least 4 on the accepted range.
    """
    n, t = params.n, params.t
    if n < max(5, 2 * t):
        raise ValueError(f"Hamilton path construction needs n >= max(5, 2t), got n={n}, t={t}")
    order: list[int] = []
    for i in range(1, t + 1):
        order.append(n - t - 1 + i)
        order.append(i - 1)
    for j in range(1, n - 2 * t + 1):
        order.append(t - 1 + j)
    parent = [-1] * n
    for prev, cur in zip(order, order[1:]):
        parent[cur] = prev
    return TreeCert.from_parent(build_extremal(params), parent)

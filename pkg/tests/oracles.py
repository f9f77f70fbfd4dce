"""Independent test oracles.

Everything here recomputes results from first principles using only numpy
and the standard library, deliberately avoiding the package's kernels and
search code, so the two sides of every comparison fail independently.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from leafspan import Graph, from_edges


# --- small named graphs ------------------------------------------------------

def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    return from_edges(n, [(0, i) for i in range(1, n)])


# --- spectra -----------------------------------------------------------------

def eig_radius(m: np.ndarray) -> float:
    """Largest real eigenvalue via LAPACK, the package's eigensolver avoided."""
    m = np.asarray(m, dtype=np.float64)
    if np.array_equal(m, m.T):
        return float(np.linalg.eigvalsh(m)[-1])
    return float(np.max(np.linalg.eigvals(m).real))


def floyd_warshall(g: Graph) -> np.ndarray:
    """All-pairs distances by dynamic programming, or None-free inf check."""
    n = g.n
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for u, v in g.edges():
        dist[u, v] = 1.0
        dist[v, u] = 1.0
    for k in range(n):
        dist = np.minimum(dist, dist[:, k : k + 1] + dist[k : k + 1, :])
    return dist


# --- structural conditions ---------------------------------------------------

def brute_isolated_count(g: Graph, s_vertices: set[int]) -> int:
    count = 0
    for v in range(g.n):
        if v in s_vertices:
            continue
        neighbors = {u for u in range(g.n) if g.has_edge(u, v)}
        if neighbors <= s_vertices:
            count += 1
    return count


def brute_condition_holds(g: Graph, num: int, den: int) -> bool:
    """den * i(G-S) < num * |S| for every nonempty S, by full enumeration."""
    vertices = list(range(g.n))
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(vertices, size):
            s = set(combo)
            if Fraction(den) * brute_isolated_count(g, s) >= Fraction(num) * size:
                return False
    return True


# --- spanning trees ----------------------------------------------------------

class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def all_spanning_trees(g: Graph):
    """Every spanning tree, as a tuple of edges, via (n-1)-subset filtering."""
    edges = list(g.edges())
    n = g.n
    if n == 1:
        yield ()
        return
    for subset in itertools.combinations(edges, n - 1):
        uf = _UnionFind(n)
        if all(uf.union(u, v) for u, v in subset):
            yield subset


def tree_metrics(n: int, edges) -> tuple[float, int]:
    """(leaf distance, leaf degree) of a tree given by its edge set."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    leaves = [v for v in range(n) if len(adj[v]) == 1]
    leaf_deg = max(
        (sum(1 for u in adj[v] if len(adj[u]) == 1) for v in range(n)), default=0
    )
    if len(leaves) < 2:
        return float("inf"), leaf_deg
    best = float("inf")
    for i, a in enumerate(leaves):
        dist = [-1] * n
        dist[a] = 0
        queue = [a]
        while queue:
            nxt = []
            for u in queue:
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            queue = nxt
        for b in leaves[i + 1 :]:
            best = min(best, dist[b])
    return best, leaf_deg


def exists_tree_leaf_distance(g: Graph, d: int) -> bool:
    return any(tree_metrics(g.n, t)[0] >= d for t in all_spanning_trees(g))


def exists_tree_leaf_degree(g: Graph, k: int) -> bool:
    return any(tree_metrics(g.n, t)[1] <= k for t in all_spanning_trees(g))

"""Immutable bitset graph representation and basic operations.

Vertices are 0..n-1. Adjacency rows are arbitrary-width Python int bitmasks
(bit v of adj[u] set means uv is an edge), so orders beyond 64 work
transparently; the enumeration kernels additionally require n <= 62 and
enforce that where they are used. A hard cap of MAX_VERTICES keeps dense
matrix construction practical.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 4096

# A vertex set is an int bitmask over 0..n-1.
VertexSet = int


def vertex_mask(vertices: Iterable[int]) -> VertexSet:
    """Build a bitmask from an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_vertices(mask: VertexSet) -> list[int]:
    """List the vertex indices present in a bitmask, ascending."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adjacency as a tuple of int bitmasks."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"order must be in [1, {MAX_VERTICES}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u} references vertices >= {self.n}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from an edge iterable."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete(n: int) -> Graph:
    """K_n."""
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def edgeless(n: int) -> Graph:
    """n isolated vertices."""
    return Graph(n, (0,) * n)


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertex i of g2 becomes vertex g1.n + i."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise ValueError(f"combined order {n} exceeds representation limit {MAX_VERTICES}")
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(n, tuple(adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    g = union(g1, g2)
    m1 = (1 << g1.n) - 1
    m2 = ((1 << g.n) - 1) ^ m1
    adj = [row | m2 if v < g1.n else row | m1 for v, row in enumerate(g.adj)]
    return Graph(g.n, tuple(adj))


def reachable_from(g: Graph, start: int) -> VertexSet:
    """Bitmask of vertices reachable from start."""
    reach = 1 << start
    frontier = reach
    while frontier:
        nxt = 0
        for v in mask_vertices(frontier):
            nxt |= g.adj[v]
        nxt &= ~reach
        reach |= nxt
        frontier = nxt
    return reach


def is_connected(g: Graph) -> bool:
    """Breadth-first search from vertex 0."""
    return reachable_from(g, 0) == (1 << g.n) - 1


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def bfs_distances(g: Graph) -> np.ndarray:
    """All-pairs shortest path distances of a connected graph.

    Returns an (n, n) int64 array with zero diagonal, symmetric, and
    satisfying the triangle inequality. Raises on disconnected input.
    """
    n = g.n
    dist = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        reach = 1 << s
        frontier = reach
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in mask_vertices(frontier):
                nxt |= g.adj[v]
            nxt &= ~reach
            for v in mask_vertices(nxt):
                dist[s, v] = d
            reach |= nxt
            frontier = nxt
        if reach != (1 << n) - 1:
            raise ValueError("graph is disconnected; distances undefined")
    return dist


def transmissions(dist: np.ndarray) -> np.ndarray:
    """Row sums of a distance matrix (total distance from each vertex)."""
    return dist.sum(axis=1)

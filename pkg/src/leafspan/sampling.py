"""Deterministic graph corpora: exhaustive small orders and seeded samples.

Exhaustive corpora enumerate edge bitmasks of labeled graphs (column-major
upper triangle, the same bit order as the graph6 body) and keep the
connected ones; no isomorphism reduction is attempted, so iteration order is
simply ascending mask value. Random corpora draw Erdos-Renyi graphs with the
edge probability itself drawn per graph from a small palette, then rejection
sample for connectivity and a minimum-degree floor. All randomness flows
through an explicit random.Random instance, so equal seeds give identical
corpora across platforms.
"""
from __future__ import annotations

import random
from typing import Iterator

import numpy as np

from . import _kernels
from .graph import Graph, from_edges, is_connected, min_degree

#: Edge probabilities sampled per graph, covering sparse through dense.
EDGE_PROBABILITIES = (0.3, 0.5, 0.7)

#: Largest order for exhaustive enumeration (2^21 masks at n = 7).
EXHAUSTIVE_MAX_ORDER = 7

#: Attempts before random_connected_graph gives up.
MAX_REJECTIONS = 100_000


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph from a column-major upper-triangle edge bitmask."""
    if n < 1:
        raise ValueError("order must be positive")
    m = n * (n - 1) // 2
    if mask < 0 or mask >> m:
        raise ValueError(f"edge mask out of range for order {n}")
    edges = []
    e = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> e) & 1:
                edges.append((i, j))
            e += 1
    return from_edges(n, edges)


def connected_graph_masks(n: int) -> np.ndarray:
    """Edge masks of every connected labeled graph on n vertices, ascending."""
    if not 1 <= n <= EXHAUSTIVE_MAX_ORDER:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_MAX_ORDER}")
    return _kernels.connected_masks(n)


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on n vertices, ascending edge-mask order."""
    for mask in connected_graph_masks(n):
        yield graph_from_edge_mask(n, int(mask))


def random_connected_graph(rng: random.Random, n: int, min_deg: int = 1) -> Graph:
    """One connected graph on n vertices with minimum degree >= min_deg.

    Draws an edge probability from EDGE_PROBABILITIES, samples every pair in
    column-major order, and rejects until both constraints hold.
    """
    if n < 2:
        raise ValueError("sampling needs at least 2 vertices")
    if min_deg < 0 or min_deg > n - 1:
        raise ValueError(f"minimum degree {min_deg} impossible at order {n}")
    for _ in range(MAX_REJECTIONS):
        p = rng.choice(EDGE_PROBABILITIES)
        edges = []
        for j in range(1, n):
            for i in range(j):
                if rng.random() < p:
                    edges.append((i, j))
        if not edges:
            continue
        g = from_edges(n, edges)
        if is_connected(g) and min_degree(g) >= min_deg:
            return g
    raise RuntimeError(
        f"no connected graph with minimum degree >= {min_deg} found at order {n} "
        f"after {MAX_REJECTIONS} draws"
    )


def seeded_corpus(seed: int, n: int, count: int, min_deg: int = 1) -> list[Graph]:
    """A reproducible list of `count` random connected graphs on n vertices.

    The generator is seeded from (seed, n) by integer arithmetic only, so the
    corpus for each order is independent of which other orders are drawn.
    """
    rng = random.Random(seed * 1_000_003 + n)
    return [random_connected_graph(rng, n, min_deg) for _ in range(count)]

"""Shared corpus caches for the test suite."""
from __future__ import annotations

from functools import lru_cache

from leafspan import Graph, connected_graph_masks, graph_from_edge_mask


@lru_cache(maxsize=None)
def connected_corpus(n: int) -> tuple[Graph, ...]:
    """Every connected labeled graph on n vertices, ascending mask order."""
    return tuple(
        graph_from_edge_mask(n, int(mask)) for mask in connected_graph_masks(n)
    )

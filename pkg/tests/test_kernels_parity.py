"""Compiled kernels against their own Python source, input for input.

Every kernel is written once and either compiled or run as plain Python
(LEAFSPAN_JIT selects the path at import). When the compiled path is active,
each dispatcher still carries its Python source as .py_func; these tests pin
the two to identical outputs, so flipping the environment flag can never
change results.
"""
from __future__ import annotations

import numpy as np
import pytest

from leafspan import USING_JIT, complete
from leafspan import _kernels
from oracles import cycle_graph, star_graph

pytestmark = pytest.mark.skipif(
    not USING_JIT, reason="compiled path inactive; nothing to compare against"
)


def test_popcount_parity():
    for x in (0, 1, 7, 2**20 + 5, 2**40 - 1, 0x5A5A5A5A5A5A):
        assert _kernels.popcount(x) == _kernels.popcount.py_func(x)


def test_adj_from_mask_parity():
    n = 5
    for mask in (0, 1, 0b1010101010, (1 << (n * (n - 1) // 2)) - 1):
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        _kernels.adj_from_mask(n, mask, a)
        _kernels.adj_from_mask.py_func(n, mask, b)
        assert np.array_equal(a, b)


def test_connected_masks_parity():
    jit = _kernels.connected_masks(4)
    py = _kernels.connected_masks.py_func(4)
    assert len(jit) == 38
    assert np.array_equal(np.asarray(jit), np.asarray(py))


def test_bfs_all_pairs_parity():
    for g in (cycle_graph(6), star_graph(5), complete(4)):
        adj = _kernels.adj_int64(g)
        d1, f1 = _kernels.bfs_all_pairs(g.n, adj)
        d2, f2 = _kernels.bfs_all_pairs.py_func(g.n, adj)
        assert f1 == f2
        assert np.array_equal(np.asarray(d1), np.asarray(d2))


def test_power_radius_parity():
    g = cycle_graph(7)
    adj = np.zeros((7, 7))
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1.0
    r1, it1 = _kernels.power_radius(adj, 1e-10, 10**6)
    r2, it2 = _kernels.power_radius.py_func(adj, 1e-10, 10**6)
    assert r1 == r2 and it1 == it2  # same float ops in the same order


def test_violation_search_parity():
    for g in (star_graph(5), complete(5), cycle_graph(6)):
        adj = _kernels.adj_int64(g)
        for num, den in ((1, 1), (2, 1), (3, 2)):
            jit = _kernels.violation_search(g.n, adj, num, den)
            py = _kernels.violation_search.py_func(g.n, adj, num, den)
            assert jit == py
            jit_all = _kernels.violation_search_all(g.n, adj, num, den)
            py_all = _kernels.violation_search_all.py_func(g.n, adj, num, den)
            assert jit_all == py_all


def test_isolated_mask_parity():
    g = star_graph(6)
    adj = _kernels.adj_int64(g)
    for s in (0b1, 0b11, 0b101010):
        assert _kernels.isolated_mask(g.n, adj, s) == _kernels.isolated_mask.py_func(
            g.n, adj, s
        )


def test_tree_search_parity():
    cases = [
        (cycle_graph(5), 0, 4),
        (cycle_graph(4), 1, 1),
        (star_graph(5), 0, 4),
        (complete(5), 1, 1),
    ]
    for g, mode, param in cases:
        adj = _kernels.adj_int64(g)
        s1, p1, n1 = _kernels.tree_search(g.n, adj, mode, param, 10**6)
        s2, p2, n2 = _kernels.tree_search.py_func(g.n, adj, mode, param, 10**6)
        assert s1 == s2 and n1 == n2
        assert np.array_equal(np.asarray(p1), np.asarray(p2))


def test_batch_kernels_parity():
    masks = _kernels.connected_masks(4)
    c1, t1 = _kernels.batch_leaf_degree(4, masks, 1, 10**6)
    c2, t2 = _kernels.batch_leaf_degree.py_func(4, masks, 1, 10**6)
    assert np.array_equal(np.asarray(c1), np.asarray(c2))
    assert np.array_equal(np.asarray(t1), np.asarray(t2))
    c1, t1 = _kernels.batch_leaf_distance(4, masks, 2, 1, 3, 10**6)
    c2, t2 = _kernels.batch_leaf_distance.py_func(4, masks, 2, 1, 3, 10**6)
    assert np.array_equal(np.asarray(c1), np.asarray(c2))
    assert np.array_equal(np.asarray(t1), np.asarray(t2))
    a1 = _kernels.batch_condition_agreement(4, masks, 2, 1)
    a2 = _kernels.batch_condition_agreement.py_func(4, masks, 2, 1)
    assert np.array_equal(np.asarray(a1), np.asarray(a2))

"""Spanning-tree search, leaf metrics, certificates, budget handling."""
from __future__ import annotations

import json
import math
import random

import pytest

from leafspan import (
    BudgetExhausted,
    ExtremalParams,
    TreeCert,
    build_extremal,
    complete,
    find_spanning_tree_leaf_degree,
    find_spanning_tree_leaf_distance,
    from_edges,
    hamilton_path_extremal,
    leaf_degree,
    leaf_distance,
)
from conftest import connected_corpus
from oracles import (
    cycle_graph,
    exists_tree_leaf_degree,
    exists_tree_leaf_distance,
    path_graph,
    star_graph,
)
from leafspan.sampling import random_connected_graph


# ---------------------------------------------------------------- metrics


def test_leaf_metrics_on_explicit_trees():
    assert leaf_distance((-1, 0, 1, 2, 3)) == 4  # path on 5
    assert leaf_degree((-1, 0, 1, 2, 3)) == 1
    assert leaf_distance((-1, 0, 0, 0, 0)) == 2  # star
    assert leaf_degree((-1, 0, 0, 0, 0)) == 4
    assert leaf_distance((-1, 0)) == 1  # single edge
    assert leaf_degree((-1, 0)) == 1
    spider = (-1, 0, 0, 0, 1, 2, 3)  # three legs of length two
    assert leaf_distance(spider) == 4
    assert leaf_degree(spider) == 1
    broom = (-1, 0, 1, 1)
    assert leaf_distance(broom) == 2
    assert leaf_degree(broom) == 3
    assert leaf_distance((-1,)) == math.inf  # lone vertex: fewer than 2 leaves
    assert leaf_degree((-1,)) == 0


@pytest.mark.parametrize(
    "parent",
    [
        (),  # empty
        (0,),  # no root
        (-1, -1, 0),  # two roots
        (-1, 2, 3, 1),  # cycle off the root
        (-1, 5),  # parent out of range
        (-1, 1),  # self-parent
        (-2, 0),  # invalid sentinel
    ],
)
def test_invalid_parent_encodings_raise(parent):
    with pytest.raises(ValueError):
        leaf_distance(parent)


def test_tree_cert_validates_host_edges():
    p3 = path_graph(3)
    cert = TreeCert.from_parent(p3, (-1, 0, 1))
    assert cert.leaf_distance == 2 and cert.leaf_degree == 2
    with pytest.raises(ValueError):
        TreeCert.from_parent(p3, (-1, 0, 0))  # (0, 2) is not a host edge
    with pytest.raises(ValueError):
        TreeCert.from_parent(p3, (-1, 0))  # wrong length


def test_tree_cert_json():
    cert = find_spanning_tree_leaf_distance(cycle_graph(5), 4)
    assert cert is not None
    payload = cert.to_json_dict()
    assert payload == {"parent": [-1, 0, 1, 2, 0], "leaf_distance": 4, "leaf_degree": 1}
    assert json.loads(cert.to_json()) == payload
    lone = TreeCert.from_parent(complete(1), (-1,))
    assert lone.to_json_dict() == {"parent": [-1], "leaf_distance": "inf", "leaf_degree": 0}


# ---------------------------------------------------------------- search


def test_search_first_trees_are_deterministic():
    c4 = cycle_graph(4)
    assert find_spanning_tree_leaf_distance(c4, 3).parent == (-1, 0, 1, 0)
    assert find_spanning_tree_leaf_degree(c4, 1).parent == (-1, 0, 1, 0)
    cert = find_spanning_tree_leaf_distance(cycle_graph(5), 4)
    assert cert.parent == (-1, 0, 1, 2, 0)
    assert cert.leaf_distance == 4 and cert.leaf_degree == 1


def test_search_exhaustion_proves_absence():
    star = star_graph(5)  # its only spanning tree is itself
    assert find_spanning_tree_leaf_distance(star, 4) is None
    assert find_spanning_tree_leaf_degree(star, 1) is None
    found = find_spanning_tree_leaf_degree(star, 4)
    assert found is not None and found.leaf_degree == 4


def test_search_positive_examples():
    assert find_spanning_tree_leaf_degree(path_graph(6), 1).parent == (-1, 0, 1, 2, 3, 4)
    assert find_spanning_tree_leaf_degree(complete(4), 1).parent == (-1, 0, 0, 1)
    for n, t in ((5, 1), (7, 2), (6, 3)):
        h = build_extremal(ExtremalParams(n, t))
        cert = find_spanning_tree_leaf_distance(h, 4)
        assert cert is not None and cert.leaf_distance >= 4


def test_search_input_validation():
    with pytest.raises(ValueError):
        find_spanning_tree_leaf_distance(cycle_graph(4), 0)
    with pytest.raises(ValueError):
        find_spanning_tree_leaf_degree(cycle_graph(4), 0)
    with pytest.raises(ValueError):
        find_spanning_tree_leaf_distance(from_edges(4, [(0, 1), (2, 3)]), 4)
    with pytest.raises(ValueError):
        find_spanning_tree_leaf_distance(complete(1), 1)


def test_budget_exhaustion():
    with pytest.raises(BudgetExhausted) as exc:
        find_spanning_tree_leaf_distance(complete(6), 4, budget=1)
    assert exc.value.budget == 1 and exc.value.nodes >= 1


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("LEAFSPAN_BUDGET", "1")
    with pytest.raises(BudgetExhausted) as exc:
        find_spanning_tree_leaf_degree(complete(6), 1)
    assert exc.value.budget == 1
    # an explicit argument wins over the environment
    assert find_spanning_tree_leaf_degree(complete(6), 1, budget=10**6) is not None
    monkeypatch.setenv("LEAFSPAN_BUDGET", "zero")
    with pytest.raises(ValueError):
        find_spanning_tree_leaf_degree(complete(6), 1)


# ---------------------------------------------------------------- oracle


def test_search_agrees_with_bruteforce_exhaustively():
    for n in range(3, 6):
        for g in connected_corpus(n):
            for d in (3, 4):
                found = find_spanning_tree_leaf_distance(g, d)
                assert (found is not None) == exists_tree_leaf_distance(g, d)
                if found is not None:
                    assert found.leaf_distance >= d
            for k in (1, 2):
                found = find_spanning_tree_leaf_degree(g, k)
                assert (found is not None) == exists_tree_leaf_degree(g, k)
                if found is not None:
                    assert found.leaf_degree <= k


def test_search_agrees_with_bruteforce_sampled():
    rng = random.Random(424242)
    for n in (6, 7):
        for _ in range(25):
            g = random_connected_graph(rng, n, 1)
            found = find_spanning_tree_leaf_distance(g, 4)
            assert (found is not None) == exists_tree_leaf_distance(g, 4)
            found = find_spanning_tree_leaf_degree(g, 1)
            assert (found is not None) == exists_tree_leaf_degree(g, 1)


def test_distance3_equals_degree1_on_small_graphs():
    """For n >= 3 the two goals admit exactly the same hosts."""
    for n in range(3, 6):
        for g in connected_corpus(n):
            d3 = find_spanning_tree_leaf_distance(g, 3) is not None
            k1 = find_spanning_tree_leaf_degree(g, 1) is not None
            assert d3 == k1


# ---------------------------------------------------------------- paths


def test_hamilton_path_on_extremal_examples():
    cert = hamilton_path_extremal(ExtremalParams(5, 1))
    assert cert.parent == (4, 0, 1, 2, -1)
    assert cert.leaf_distance == 4 and cert.leaf_degree == 1


def test_hamilton_path_grid():
    for t in range(1, 6):
        for n in range(max(5, 2 * t), 31):
            cert = hamilton_path_extremal(ExtremalParams(n, t))
            assert cert.leaf_distance == n - 1
            assert cert.leaf_degree == 1


def test_hamilton_path_rejects_small_orders():
    with pytest.raises(ValueError):
        hamilton_path_extremal(ExtremalParams(4, 2))

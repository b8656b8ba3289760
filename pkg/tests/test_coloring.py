import pytest
from hypothesis import given, settings

from conftest import graph_with_coloring, graphs
from ectarget.coloring import (
    exact_acyclic_coloring,
    exact_star_coloring,
    greedy_star_coloring,
    verify_acyclic,
    verify_star,
)
from ectarget.graphs import Graph, GuardExceeded, VertexColoring
from helpers import clique, cycle, path, stacked_triangulation, star_ok_by_components


def test_verify_acyclic_rejects_bicolored_cycle():
    assert not verify_acyclic(cycle(4), VertexColoring(2, [1, 2, 1, 2]))


def test_verify_acyclic_accepts_three_colored_c4():
    assert verify_acyclic(cycle(4), VertexColoring(3, [1, 2, 1, 3]))


def test_verify_acyclic_rejects_improper():
    assert not verify_acyclic(clique(3), VertexColoring(2, [1, 1, 2]))


def test_verify_star_rejects_bicolored_p4():
    assert not verify_star(path(4), VertexColoring(2, [1, 2, 1, 2]))


def test_verify_star_accepts_three_colored_p4():
    col = VertexColoring(3, [1, 2, 3, 1])
    assert verify_star(path(4), col)
    assert star_ok_by_components(path(4), col)


def test_verify_star_accepts_rainbow_triangle():
    assert verify_star(clique(3), VertexColoring(3, [1, 2, 3]))


def test_exact_star_p4_needs_three_colors():
    assert exact_star_coloring(path(4), 2) is None
    col = exact_star_coloring(path(4), 3)
    assert col is not None
    assert verify_star(path(4), col)


def test_exact_star_k4_uses_all_colors():
    col = exact_star_coloring(clique(4), 4)
    assert col is not None
    assert sorted(col.assign) == [1, 2, 3, 4]


def test_exact_star_monotone_in_budget():
    for g in [path(4), cycle(4), cycle(5), clique(4), stacked_triangulation(8, 3)]:
        for c in range(2, 5):
            if exact_star_coloring(g, c) is None:
                assert exact_star_coloring(g, c - 1) is None


def test_exact_acyclic_c4():
    assert exact_acyclic_coloring(cycle(4), 2) is None
    col = exact_acyclic_coloring(cycle(4), 3)
    assert col is not None
    assert verify_acyclic(cycle(4), col)


def test_exact_acyclic_tree_two_colors():
    tree = Graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    col = exact_acyclic_coloring(tree, 2)
    assert col is not None
    assert col.palette <= 2
    assert verify_acyclic(tree, col)


def test_exact_searches_are_guarded():
    big = Graph(21)
    with pytest.raises(GuardExceeded):
        exact_star_coloring(big, 3)
    with pytest.raises(GuardExceeded):
        exact_acyclic_coloring(big, 3)


def test_greedy_star_edgeless():
    assert greedy_star_coloring(Graph(5)).palette == 1


def test_greedy_star_clique():
    assert greedy_star_coloring(clique(5)).palette == 5


def test_greedy_star_large_planar_verifies():
    g = stacked_triangulation(50, seed=7)
    col = greedy_star_coloring(g, seed=7)
    assert verify_star(g, col)
    assert star_ok_by_components(g, col)


def test_greedy_star_deterministic_per_seed():
    g = stacked_triangulation(30, seed=1)
    assert greedy_star_coloring(g, seed=5) == greedy_star_coloring(g, seed=5)


@given(graphs(max_n=9))
@settings(max_examples=150)
def test_greedy_star_always_verifies(g):
    col = greedy_star_coloring(g, seed=0)
    assert verify_star(g, col)


@given(graphs(max_n=8))
@settings(max_examples=80)
def test_star_colorings_are_acyclic(g):
    col = greedy_star_coloring(g, seed=1)
    assert verify_star(g, col)
    assert verify_acyclic(g, col)


@given(graph_with_coloring(max_n=8))
@settings(max_examples=250)
def test_star_verifier_agrees_with_component_characterization(pair):
    g, col = pair
    assert verify_star(g, col) == star_ok_by_components(g, col)

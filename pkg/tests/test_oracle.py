import itertools
import random

import pytest

from intervalcanon.canonizer import intersection_graph
from intervalcanon.graph_core import Graph, apply_permutation
from intervalcanon.oracle import (
    MAX_BRUTE_N,
    OracleLimitError,
    bron_kerbosch,
    brute_canonical,
    brute_is_interval,
    brute_isomorphic,
    brute_possible_ends,
    enumerate_graphs,
    interval_graphs,
    is_chordal,
    random_graph,
    random_interval_graph,
    random_permutation,
)

from conftest import FIVE_VERTEX, complete, cycle, path


def test_enumeration_counts(all_graphs_upto6):
    # unlabelled graphs on n vertices
    assert [len(all_graphs_upto6[n]) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_interval_counts(interval_graphs_upto6):
    # unlabelled interval graphs on n vertices
    assert [len(interval_graphs_upto6[n]) for n in range(1, 7)] == [1, 2, 4, 10, 27, 92]
    assert len(interval_graphs(7)) == 369


def test_brute_canonical_invariant(rng):
    for seed in range(30):
        g = random_graph(6, seed)
        h = apply_permutation(g, random_permutation(6, rng))
        assert brute_canonical(g).bits == brute_canonical(h).bits


def test_brute_canonical_limit():
    with pytest.raises(OracleLimitError):
        brute_canonical(Graph(MAX_BRUTE_N + 1, tuple(frozenset() for _ in range(MAX_BRUTE_N + 1))))


def test_brute_isomorphic():
    assert brute_isomorphic(path(4), Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)]))
    assert not brute_isomorphic(path(4), Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert not brute_isomorphic(path(3), path(4))


def test_bron_kerbosch_variants_agree():
    for seed in range(100):
        g = random_graph(12, seed)
        assert bron_kerbosch(g).member_sets == bron_kerbosch(g, pivot=False).member_sets
    assert bron_kerbosch(cycle(5)).member_sets == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_brute_is_interval_witness():
    ok, intervals = brute_is_interval(intersection_graph(FIVE_VERTEX))
    assert ok and intersection_graph(intervals) == intersection_graph(FIVE_VERTEX)
    assert brute_is_interval(cycle(4)) == (False, None)
    assert brute_is_interval(Graph(0, ()))[0]


def test_is_chordal():
    assert is_chordal(complete(4))
    assert not is_chordal(cycle(4))
    assert is_chordal(Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]))


def test_possible_ends_of_path():
    assert brute_possible_ends(path(4)) == {frozenset({0, 1}), frozenset({2, 3})}
    assert brute_possible_ends(complete(3)) == {frozenset({0, 1, 2})}


def test_random_interval_graph_is_reproducible():
    a = random_interval_graph(30, 0)
    assert a == random_interval_graph(30, 0)
    g, intervals = a
    assert g.m == 312
    assert intervals[:3] == [(46, 51), (16, 26), (25, 31)]
    assert intersection_graph(intervals) == g


def test_random_interval_graph_density_profile():
    densities = []
    for seed in range(100):
        g, _ = random_interval_graph(30, seed)
        densities.append(g.m / (30 * 29 / 2))
    assert min(densities) == pytest.approx(0.5264, abs=1e-4)
    assert max(densities) == pytest.approx(0.8506, abs=1e-4)
    assert sum(densities) / 100 == pytest.approx(0.6760, abs=1e-4)


def test_max_coordinate_bounds_points():
    _, intervals = random_interval_graph(20, 4, max_coordinate=5)
    assert all(1 <= a <= b <= 5 for a, b in intervals)


def test_random_permutation():
    pi = random_permutation(10, random.Random(0))
    assert sorted(pi) == list(range(10))


def test_enumeration_limit():
    with pytest.raises(OracleLimitError):
        list(enumerate_graphs(8))


def test_brute_isomorphic_agrees_with_brute_canonical_up_to_5(rng):
    graphs = [g for n in range(1, 6) for g in enumerate_graphs(n)]
    graphs += [apply_permutation(g, random_permutation(g.n, rng)) for g in graphs]
    forms = [brute_canonical(g) for g in graphs]
    for i, j in itertools.combinations(range(len(graphs)), 2):
        same = forms[i].n == forms[j].n and forms[i].bits == forms[j].bits
        assert brute_isomorphic(graphs[i], graphs[j]) == same


def test_four_clique_possible_ends(four_clique):
    # M, C and X: the pendants p1 and p2 are twins, so C can open a layout too
    assert brute_possible_ends(four_clique) == {frozenset({0, 3}), frozenset({1, 3}), frozenset({2, 4})}


def test_five_vertex_arrangement(five_vertex):
    ok, intervals = brute_is_interval(five_vertex)
    assert ok
    assert intervals == [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)] or intervals == [(3, 3), (2, 3), (1, 3), (1, 2), (1, 1)]

import itertools

import pytest

from intervalcanon.cliques import candidate_max_cliques
from intervalcanon.end_order import (
    ModuleError,
    Status,
    compute_prec,
    incomparability_classes,
    module_mask,
    module_vertices,
    prec_from_masks,
)
from intervalcanon.graph_core import Graph, apply_permutation, set_to_mask
from intervalcanon.oracle import brute_possible_ends, random_interval_graph, random_permutation


def naive_closure(sets, root):
    """Fixed point by repeated full sweeps, no worklist."""
    k = len(sets)
    rel = {(root, c) for c in range(k) if c != root}
    changed = True
    while changed:
        changed = False
        for c, d, e in itertools.product(range(k), repeat=3):
            if (c, d) in rel:
                continue
            if (e, d) in rel and (sets[e] & sets[c]) - sets[d]:
                rel.add((c, d))
                changed = True
            elif (c, e) in rel and (sets[e] & sets[d]) - sets[c]:
                rel.add((c, d))
                changed = True
    return rel


def test_five_vertex_middle_root_violates(five_vertex):
    fam = candidate_max_cliques(five_vertex)
    assert classify_root(fam, 1) is Status.ASYMMETRY_VIOLATED


def test_five_vertex_end_root(five_vertex):
    fam = candidate_max_cliques(five_vertex)
    pr = compute_prec(fam, 0)
    assert pr.status is Status.WEAK_ORDER
    assert pr.pairs() == {(0, 1), (0, 2), (1, 2)}
    assert incomparability_classes(pr).blocks == ((0,), (1,), (2,))


def classify_root(fam, root):
    return compute_prec(fam, root).status


def test_four_clique_total_order(four_clique):
    fam = candidate_max_cliques(four_clique)
    # ids: 0 = M {p1, l}, 1 = C {p2, l}, 2 = X {p4, r}, 3 = D {l, r}
    assert fam.member_sets == [(0, 3), (1, 3), (2, 4), (3, 4)]
    pr = compute_prec(fam, 0)
    assert pr.pairs() == {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 2)}
    assert incomparability_classes(pr).blocks == ((0,), (1,), (3,), (2,))
    # p1 and p2 are twin pendants on l, so C is an end as well as M and X
    ends = {c for c in range(len(fam)) if classify_root(fam, c) is Status.WEAK_ORDER}
    assert ends == {0, 1, 2}


def test_rel_matrix_matches_pairs(four_clique):
    pr = compute_prec(candidate_max_cliques(four_clique), 0)
    assert {(c, d) for c in range(pr.k) for d in range(pr.k) if pr.rel[c][d]} == pr.pairs()


def test_module_example(module_graph):
    fam = candidate_max_cliques(module_graph)
    assert fam.member_sets == [(0, 1), (1, 2, 3, 4), (1, 2, 4, 5), (1, 2, 5, 6), (2, 7)]
    pr = compute_prec(fam, 0)
    assert pr.status is Status.WEAK_ORDER
    blocks = incomparability_classes(pr).blocks
    assert blocks == ((0,), (1, 2, 3), (4,))
    assert module_vertices(module_graph, fam, blocks[1]) == (3, 4, 5, 6)
    for singleton in (blocks[0], blocks[2]):
        # a one-clique block holds exactly its span-1 vertices
        got = module_vertices(module_graph, fam, singleton)
        assert all(sum(v in c for c in fam) == 1 for v in got)


def test_closure_matches_naive_on_small_graphs(interval_graphs_upto6):
    for gs in interval_graphs_upto6.values():
        for g in gs:
            fam = candidate_max_cliques(g)
            sets = [set(c.members) for c in fam]
            for root in range(len(fam)):
                naive = naive_closure(sets, root)
                full = compute_prec(fam, root, early_exit=False)
                assert full.pairs() == naive
                asym = all((d, c) not in naive for c, d in naive)
                assert (full.status is Status.WEAK_ORDER) == asym
                assert compute_prec(fam, root).status is full.status


def test_weak_order_roots_are_the_possible_ends(interval_graphs_upto6):
    for gs in interval_graphs_upto6.values():
        for g in gs:
            fam = candidate_max_cliques(g)
            got = {frozenset(c.members) for c in fam if classify_root(fam, c.id) is Status.WEAK_ORDER}
            assert got == brute_possible_ends(g)


def test_relation_is_permutation_equivariant(rng):
    for seed in range(40):
        g, _ = random_interval_graph(14, seed)
        pi = random_permutation(g.n, rng)
        h = apply_permutation(g, pi)
        fg, fh = candidate_max_cliques(g), candidate_max_cliques(h)
        image = {c.mask: set_to_mask(pi[v] for v in c.members) for c in fg}
        to_h = {c.id: next(d.id for d in fh if d.mask == image[c.mask]) for c in fg}
        for root in range(len(fg)):
            a = compute_prec(fg, root, early_exit=False)
            b = compute_prec(fh, to_h[root], early_exit=False)
            assert a.status is b.status
            assert {(to_h[c], to_h[d]) for c, d in a.pairs()} == b.pairs()


def test_blocks_are_ordered_and_modules_hold():
    for seed in range(150):
        g, _ = random_interval_graph(20, seed, max_coordinate=15)
        fam = candidate_max_cliques(g)
        for root in range(len(fam)):
            pr = compute_prec(fam, root)
            if pr.status is not Status.WEAK_ORDER:
                continue
            blocks = incomparability_classes(pr).blocks
            pos = incomparability_classes(pr).position()
            for c, d in pr.pairs():
                assert pos[c] < pos[d]
            for b in blocks:
                module_vertices(g, fam, b)


def test_root_out_of_range():
    with pytest.raises(ValueError):
        prec_from_masks([0b1], 1)


def test_incomparability_needs_weak_order(five_vertex):
    pr = compute_prec(candidate_max_cliques(five_vertex), 1)
    with pytest.raises(ValueError):
        incomparability_classes(pr)


def test_module_error_on_uneven_block():
    # a non-maximal extra clique {c} makes c span 2 while still lying outside
    # the block, so the span and set-difference formulas disagree
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    masks = [0b011, 0b110, 0b100]
    with pytest.raises(ModuleError):
        module_mask(g, masks, [0, 1], 0b111)

from itertools import combinations

import pytest

from homvec import (
    GuardError,
    ValidationError,
    count_hom,
    disjoint_union,
    enumerate_graphs,
    fractional_pair,
    make_graph,
    standard_graph,
    wl_equivalent,
    wl_refine,
)


def _class_sizes(partition):
    counts = {}
    for c in partition.colors.values():
        counts[c] = counts.get(c, 0) + 1
    return sorted(counts.values())


def test_regular_graphs_stay_monochromatic():
    g3, _ = fractional_pair(3)
    assert _class_sizes(wl_refine(g3, 1)) == [6]
    assert _class_sizes(wl_refine(standard_graph("cycle", 5), 1)) == [5]


def test_refinement_splits_by_degree():
    g = disjoint_union(standard_graph("clique", 2), standard_graph("independent", 1))
    assert _class_sizes(wl_refine(g, 1)) == [1, 2]


def test_signature_is_relabeling_invariant():
    g = make_graph(4, [(0, 1), (1, 2)])
    h = make_graph(4, [(3, 2), (2, 1)])
    assert wl_refine(g, 1).signature == wl_refine(h, 1).signature
    assert wl_refine(g, 2).signature == wl_refine(h, 2).signature


def test_tuple_partition_shape():
    g = standard_graph("path", 3)
    part = wl_refine(g, 2)
    assert part.k == 2
    assert len(part.colors) == 9
    assert all(len(t) == 2 for t in part.colors)
    # diagonal tuples never share a color with proper pairs
    diag = {part.colors[(v, v)] for v in range(3)}
    off = {part.colors[t] for t in part.colors if t[0] != t[1]}
    assert not diag & off


def test_stability_one_more_round_is_fixed():
    from homvec.wl import _canonical_ids

    g = standard_graph("path", 4)
    part = wl_refine(g, 1)
    colors = [part.colors[v] for v in range(g.n)]
    sigs = [
        (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v])))
        for v in range(g.n)
    ]
    assert _canonical_ids(sigs) == colors


def test_pair_equivalence_at_dimension_one_but_not_two():
    for n in (3, 4):
        g, h = fractional_pair(n)
        assert wl_equivalent(g, h, 1)
    g3, h3 = fractional_pair(3)
    assert not wl_equivalent(g3, h3, 2)
    # triangle counts are the certificate that dimension 2 must separate
    assert count_hom(standard_graph("cycle", 3), g3) != count_hom(standard_graph("cycle", 3), h3)


def test_different_sizes_never_equivalent():
    assert not wl_equivalent(standard_graph("clique", 3), standard_graph("clique", 4), 1)


def test_dimension_two_separates_all_small_types():
    # the smallest pair that dimension 2 cannot separate has 16 vertices,
    # so on these sizes equivalence must coincide with isomorphism
    graphs = enumerate_graphs(5)
    for g, h in combinations(graphs, 2):
        assert not wl_equivalent(g, h, 2)


def test_equivalence_sound_on_relabeled_copies():
    import random

    rng = random.Random(5)
    for g in enumerate_graphs(5)[::3]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        copy = make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        for k in (1, 2):
            assert wl_equivalent(g, copy, k)


def test_dimension_three_runs_on_small_graphs():
    g = standard_graph("cycle", 4)
    h = disjoint_union(standard_graph("clique", 2), standard_graph("clique", 2))
    assert not wl_equivalent(g, h, 3)
    assert wl_equivalent(g, g, 3)


def test_guards():
    with pytest.raises(ValidationError):
        wl_refine(standard_graph("clique", 3), 4)
    with pytest.raises(GuardError):
        wl_refine(standard_graph("clique", 25), 3)

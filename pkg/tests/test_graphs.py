import math
import random

import pytest

from homvec import (
    ValidationError,
    add_edge,
    chromatic_pair,
    components,
    contains_clique_subgraph,
    contract,
    disjoint_union,
    empty_graph,
    fractional_pair,
    girth,
    independent_sets,
    is_bipartite,
    is_connected,
    is_isomorphic,
    kneser_graph,
    make_graph,
    n_fold_union,
    standard_graph,
    tensor_product,
)
from oracles import brute_girth, brute_is_isomorphic


def test_make_graph_normalizes():
    g = make_graph(3, [(0, 1), (1, 0), (1, 2), (0, 2)])
    assert g.m == 3
    dup = make_graph(3, [(0, 1), (0, 1)])
    assert dup.m == 1


def test_make_graph_rejects_bad_input():
    with pytest.raises(ValidationError):
        make_graph(3, [(0, 0)])
    with pytest.raises(ValidationError):
        make_graph(2, [(0, 5)])
    with pytest.raises(ValidationError):
        make_graph(-1, [])


@pytest.mark.parametrize("kind,n,edges", [
    ("clique", 4, 6),
    ("cycle", 5, 5),
    ("cycle", 3, 3),
    ("path", 4, 3),
    ("independent", 3, 0),
])
def test_standard_graph_sizes(kind, n, edges):
    g = standard_graph(kind, n)
    assert g.n == n and g.m == edges


def test_degenerate_cycles():
    assert standard_graph("cycle", 1) == standard_graph("independent", 1)
    assert standard_graph("cycle", 2) == standard_graph("clique", 2)


def test_standard_graph_rejects_zero():
    for kind in ("clique", "cycle", "path", "independent"):
        with pytest.raises(ValidationError):
            standard_graph(kind, 0)


def test_kneser_petersen():
    g = kneser_graph(5, 2)
    assert g.n == 10 and g.m == 15
    assert set(g.degrees()) == {3}
    assert girth(g) == 5 == brute_girth(g)


def test_kneser_small():
    assert is_isomorphic(kneser_graph(2, 1), standard_graph("clique", 2))
    matching = kneser_graph(4, 2)
    assert matching.n == 6 and matching.m == 3
    assert set(matching.degrees()) == {1}
    with pytest.raises(ValidationError):
        kneser_graph(3, 2)


def test_fractional_pair_structure():
    g3, h3 = fractional_pair(3)
    assert is_isomorphic(h3, standard_graph("cycle", 6))
    assert brute_is_isomorphic(h3, standard_graph("cycle", 6))
    assert (g3.n, g3.m) == (6, 6) == (h3.n, h3.m)
    g4, h4 = fractional_pair(4)
    for g in (g4, h4):
        assert g.n == 8 and g.m == 12 and set(g.degrees()) == {3}
    with pytest.raises(ValidationError):
        fractional_pair(2)


def test_chromatic_pair_structure():
    x1, x2 = chromatic_pair()
    assert x1.n == x2.n == 4 and x1.m == x2.m == 2
    assert sorted(x1.degrees()) == [0, 1, 1, 2]
    comps = components(x2)
    assert len(comps) == 2 and all(c.m == 1 for c in comps)
    assert not is_isomorphic(x1, x2)


def test_unions():
    k2 = standard_graph("clique", 2)
    x2 = chromatic_pair()[1]
    assert is_isomorphic(disjoint_union(k2, k2), x2)
    assert n_fold_union(k2, 0) == empty_graph()
    c4 = standard_graph("cycle", 4)
    both = disjoint_union(c4, c4)
    assert both.n == 8 and both.m == 8


def test_union_commutative_associative_up_to_iso():
    rng = random.Random(7)
    pool = [standard_graph("cycle", 3), standard_graph("path", 3), standard_graph("clique", 2)]
    for _ in range(5):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert is_isomorphic(disjoint_union(a, b), disjoint_union(b, a))
        assert is_isomorphic(
            disjoint_union(disjoint_union(a, b), c),
            disjoint_union(a, disjoint_union(b, c)),
        )


def test_tensor_product():
    k3 = standard_graph("clique", 3)
    k2 = standard_graph("clique", 2)
    assert is_isomorphic(tensor_product(k3, k2), standard_graph("cycle", 6))
    g = standard_graph("path", 3)
    assert tensor_product(g, standard_graph("independent", 1)).m == 0
    doubled = tensor_product(standard_graph("cycle", 4), k2)
    assert doubled.n == 8 and is_bipartite(doubled)


def test_tensor_projections_are_homomorphisms():
    from homvec import enumerate_graphs

    for g in enumerate_graphs(4):
        for h in enumerate_graphs(4):
            prod = tensor_product(g, h)
            for (u, v) in prod.edges:
                gu, ga = divmod(u, h.n)
                gv, gb = divmod(v, h.n)
                assert g.has_edge(gu, gv)
                assert h.has_edge(ga, gb)


def test_contract_and_add_edge():
    p3 = standard_graph("path", 3)
    assert is_isomorphic(contract(p3, 0, 2), standard_graph("clique", 2))
    i2 = standard_graph("independent", 2)
    assert add_edge(i2, 0, 1) == standard_graph("clique", 2)
    assert contract(i2, 0, 1) == standard_graph("independent", 1)
    with pytest.raises(ValidationError):
        contract(standard_graph("clique", 2), 0, 1)
    with pytest.raises(ValidationError):
        contract(i2, 1, 1)
    # |V| drops by one, |E| grows by one
    g = standard_graph("cycle", 5)
    assert contract(g, 0, 2).n == g.n - 1
    assert add_edge(g, 0, 2).m == g.m + 1


def test_predicates():
    assert not is_bipartite(standard_graph("cycle", 7))
    assert is_bipartite(standard_graph("cycle", 6))
    assert is_connected(standard_graph("path", 5))
    assert not is_connected(disjoint_union(standard_graph("clique", 2), standard_graph("clique", 2)))
    assert girth(standard_graph("path", 4)) == math.inf
    assert girth(standard_graph("cycle", 4)) == 4

    g3, h3 = fractional_pair(3)
    assert contains_clique_subgraph(g3, 3)
    assert not contains_clique_subgraph(h3, 3)
    assert contains_clique_subgraph(standard_graph("independent", 2), 1)


def test_girth_matches_oracle_on_small_graphs():
    from homvec import enumerate_graphs

    for g in enumerate_graphs(5):
        assert girth(g) == brute_girth(g)


def test_components_relabeled():
    g = make_graph(5, [(0, 3), (1, 4)])
    comps = components(g)
    assert [c.n for c in comps] == [2, 2, 1]
    assert all(c.edges == ((0, 1),) for c in comps[:2])


def test_independent_sets_of_five_ring():
    sets = independent_sets(standard_graph("cycle", 5))
    assert len(sets) == 11  # empty, 5 singletons, 5 pairs
    assert sets[0] == ()
    assert sum(1 for s in sets if len(s) == 2) == 5


def test_independent_sets_against_subset_filter():
    from itertools import combinations as subsets

    from homvec import enumerate_graphs

    for g in enumerate_graphs(5)[::4]:
        expected = set()
        for size in range(g.n + 1):
            for verts in subsets(range(g.n), size):
                if all(not g.has_edge(a, b) for a, b in subsets(verts, 2)):
                    expected.add(verts)
        assert set(independent_sets(g)) == expected

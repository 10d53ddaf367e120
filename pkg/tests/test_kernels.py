"""Differential tests: compiled kernel vs pure twin vs brute force."""

import random

import pytest

from homvec import kernels, make_graph
from homvec.homcount import _search_order
from homvec.kernels import MODE_HOM, MODE_INJ, MODE_ISO, MODE_SUR, pure
from oracles import brute_aut, brute_hom, brute_inj, brute_sur


def _random_graph(rng, max_n=5):
    n = rng.randrange(0, max_n + 1)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45]
    return make_graph(n, edges)


def _pure_count(g, h, mode, find_one=False):
    return pure.count_maps(g.n, g.masks, _search_order(g), h.n, h.masks, mode, find_one)


def test_pure_kernel_matches_bruteforce():
    rng = random.Random(17)
    for _ in range(120):
        g = _random_graph(rng, 4)
        h = _random_graph(rng, 4)
        assert _pure_count(g, h, MODE_HOM) == brute_hom(g, h)
        assert _pure_count(g, h, MODE_INJ) == brute_inj(g, h)
        assert _pure_count(g, h, MODE_SUR) == brute_sur(g, h)
        assert _pure_count(g, g, MODE_ISO) == brute_aut(g)


@pytest.mark.skipif(kernels.compiled is None, reason="compiled kernel not built")
def test_compiled_kernel_matches_pure():
    rng = random.Random(29)
    for _ in range(200):
        g = _random_graph(rng, 5)
        h = _random_graph(rng, 5)
        order = _search_order(g)
        for mode in (MODE_HOM, MODE_INJ, MODE_SUR, MODE_ISO):
            want = pure.count_maps(g.n, g.masks, order, h.n, h.masks, mode)
            got = kernels.compiled.count_maps(g.n, list(g.masks), order, h.n, list(h.masks), mode)
            assert got == want, (g.edges, h.edges, mode)
        exists_pure = pure.count_maps(g.n, g.masks, order, h.n, h.masks, MODE_HOM, True)
        exists_c = kernels.compiled.count_maps(g.n, list(g.masks), order, h.n, list(h.masks), MODE_HOM, True)
        assert exists_pure == exists_c


def test_dispatch_bounds():
    assert not kernels.fits_compiled(100, 100, MODE_HOM, 10) or kernels.compiled is None
    if kernels.compiled is not None:
        assert kernels.fits_compiled(5, 5, MODE_HOM, 10)
        assert not kernels.fits_compiled(70, 5, MODE_HOM, 10)
        assert not kernels.fits_compiled(4, 4, MODE_SUR, 100)


def test_iter_maps_yields_every_homomorphism():
    rng = random.Random(31)
    for _ in range(40):
        g = _random_graph(rng, 4)
        h = _random_graph(rng, 4)
        images = list(kernels.iter_maps(g.n, g.masks, _search_order(g), h.n, h.masks))
        assert len(images) == brute_hom(g, h)
        assert len(set(images)) == len(images)

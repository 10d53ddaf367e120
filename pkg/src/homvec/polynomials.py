"""The four graph polynomials, each with an independent cross-check route.

chromatic_polynomial     addition-contraction recursion to clique base cases,
                         memoized on canonical codes; cross-checkable against
                         interpolation through clique-coloring counts.
characteristic_polynomial  Newton's identities over the exact power sums
                         tr(A^k), which are shared with the cycle fast path.
cluster_expansion_polynomial  direct edge-subset enumeration with union-find;
                         specializes to the chromatic polynomial at y = -1 and
                         matches weighted counts into looped cliques.
independence_polynomial  direct independent-set enumeration; matches weighted
                         counts into the two-vertex looped target.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import guards
from .algebra import Polynomial, falling_factorial, poly_interpolate
from .canon import canonical_form
from .errors import ValidationError
from .graphs import Graph, add_edge, components, contract, independent_sets
from .homcount import adjacency_power_traces, count_hom

_chromatic_memo: dict[bytes, Polynomial] = {}


def chromatic_polynomial(g: Graph) -> Polynomial:
    """Monic degree-|V| polynomial counting proper colorings."""
    if g.n == 0:
        raise ValidationError("chromatic polynomial needs at least one vertex")
    guards.check("chromatic-polynomial", g.n, guards.CHROMATIC_MAX)
    out = Polynomial.constant(1)
    for piece in components(g):
        out = out * _chromatic_connected(piece)
    return out


def _chromatic_connected(g: Graph) -> Polynomial:
    code = canonical_form(g)
    hit = _chromatic_memo.get(code)
    if hit is not None:
        return hit
    pair = _best_nonadjacent_pair(g)
    if pair is None:
        result = falling_factorial(g.n)
    else:
        u, v = pair
        result = chromatic_polynomial(add_edge(g, u, v)) + chromatic_polynomial(contract(g, u, v))
    _chromatic_memo[code] = result
    return result


def _best_nonadjacent_pair(g: Graph):
    """Non-adjacent pair with the most common neighbors (ties lexicographic);
    contracting such pairs drives the recursion toward cliques fastest and
    keeps the memoized subproblem count small on sparse graphs."""
    masks = g.masks
    best = None
    best_shared = -1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (masks[u] >> v) & 1:
                continue
            shared = bin(masks[u] & masks[v]).count("1")
            if shared > best_shared:
                best_shared = shared
                best = (u, v)
    return best


def chromatic_by_interpolation(g: Graph) -> Polynomial:
    """Reconstruction through the coloring counts hom(g, K_k), k = 0..|V|
    (the independent route used to cross-check the recursion)."""
    if g.n == 0:
        raise ValidationError("chromatic polynomial needs at least one vertex")
    from .graphs import standard_graph

    points = [(0, 0)]
    for k in range(1, g.n + 1):
        points.append((k, count_hom(g, standard_graph("clique", k))))
    return poly_interpolate(points, g.n)


def characteristic_polynomial(g: Graph) -> Polynomial:
    """det(xI - A) via Newton's identities on the traces of adjacency powers;
    the rational elementary symmetric functions must come out integral."""
    guards.check("characteristic-polynomial", g.n, guards.CHARPOLY_MAX)
    n = g.n
    power_sums = adjacency_power_traces(g, n)
    elementary = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * elementary[k - i] * power_sums[i - 1]
        elementary.append(acc / k)
    coeffs = {}
    for k in range(n + 1):
        c = (-1) ** k * elementary[k]
        if c.denominator != 1:
            raise AssertionError(f"non-integer characteristic coefficient {c}")
        if c:
            coeffs[(n - k,)] = c
    return Polynomial(1, coeffs)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.groups = n

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            self.groups -= 1


def cluster_expansion_polynomial(g: Graph) -> Polynomial:
    """Sum over edge subsets A of x^(components of (V, A)) * y^|A|."""
    guards.check("cluster-expansion", g.m, guards.CEP_MAX_EDGES)
    coeffs = {}
    edges = g.edges
    for size in range(g.m + 1):
        for subset in combinations(edges, size):
            uf = _UnionFind(g.n)
            for u, v in subset:
                uf.union(u, v)
            key = (uf.groups, size)
            coeffs[key] = coeffs.get(key, 0) + 1
    return Polynomial(2, coeffs)


def independence_polynomial(g: Graph) -> Polynomial:
    """Sum over independent sets U of x^|U| * y^(|V| - |U|)."""
    coeffs = {}
    for s in independent_sets(g, limit=guards.scaled(guards.MAX_INDEPENDENT_SETS)):
        key = (len(s), g.n - len(s))
        coeffs[key] = coeffs.get(key, 0) + 1
    return Polynomial(2, coeffs)

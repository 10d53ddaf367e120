"""Homomorphism counting: hom / inj / sur / aut, existence, semiring-weighted
counts, tree and cycle fast paths, and the surjection-injection decomposition
identity used to cross-validate all of them.

Backtracking runs over a BFS order rooted at a maximum-degree vertex of each
component, with candidate images pruned by adjacency-mask intersection.  hom
factors over the components of the left graph; inj/sur/aut are global.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

import numpy as np

from . import guards, kernels
from .algebra import SemiringSpec
from .errors import ValidationError
from .graphs import Graph, components
from .weighted import WeightedGraph

_CACHE = 1 << 16


def _search_order(g: Graph):
    """BFS order from a maximum-degree vertex of each component (ties by
    index); components end up contiguous."""
    adjacency = g.adjacency
    seen = [False] * g.n
    order = []
    for s in sorted(range(g.n), key=lambda v: (-len(adjacency[v]), v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _count(g: Graph, h: Graph, mode: int, find_one=False) -> int:
    return kernels.count_maps(
        g.n, g.masks, _search_order(g), h.n, h.masks, mode, find_one, m_h=h.m
    )


@lru_cache(maxsize=_CACHE)
def count_hom(g: Graph, h: Graph) -> int:
    """Number of homomorphisms g -> h; the empty pattern has exactly one."""
    if g.n == 0:
        return 1
    total = 1
    for piece in components(g):
        part = _count(piece, h, kernels.MODE_HOM)
        if part == 0:
            return 0
        total *= part
    return total


@lru_cache(maxsize=_CACHE)
def count_inj(g: Graph, h: Graph) -> int:
    return _count(g, h, kernels.MODE_INJ)


@lru_cache(maxsize=_CACHE)
def count_sur(g: Graph, h: Graph) -> int:
    """Homomorphisms g -> h whose image equals h: vertex- and edge-onto."""
    if g.n == 0:
        return 1 if h.n == 0 else 0
    return _count(g, h, kernels.MODE_SUR)


@lru_cache(maxsize=_CACHE)
def count_aut(g: Graph) -> int:
    """Automorphisms: bijections g -> g preserving edges and non-edges (not
    the same as injective endomorphisms, which need not reflect non-edges)."""
    return _count(g, g, kernels.MODE_ISO)


def hom_exists(g: Graph, h: Graph) -> bool:
    """Boolean-semiring count with unit weights: is there any homomorphism?"""
    if g.n == 0:
        return True
    return all(_count(piece, h, kernels.MODE_HOM, find_one=True) for piece in components(g))


def isomorphism_exists(g: Graph, h: Graph) -> bool:
    return _count(g, h, kernels.MODE_ISO, find_one=True) > 0


# ---------------------------------------------------------------------------
# weighted counts over a semiring
# ---------------------------------------------------------------------------

def count_hom_weighted(g: Graph, target: WeightedGraph, semiring: SemiringSpec):
    """Sum over homomorphisms into the looped shape of `target` of the product
    of image vertex weights (one per pattern vertex) and image edge weights
    (one per pattern edge; edges may land on loops).

    The empty pattern contributes the semiring one (empty product).
    """
    weights = list(target.vertex_weights.values())
    weights += list(target.edge_weights.values())
    weights += list(target.loop_weights.values())
    for w in weights:
        if not semiring.contains(w):
            raise ValidationError(f"weight {w!r} outside the {semiring.name} carrier")
    if g.n == 0:
        return semiring.one
    masks = target.masks_with_loops()
    total = semiring.zero
    for image in kernels.iter_maps(g.n, g.masks, _search_order(g), target.n, masks):
        term = semiring.one
        for v in range(g.n):
            term = semiring.mul(term, target.vertex_weights[image[v]])
        for u, v in g.edges:
            term = semiring.mul(term, target.image_edge_weight(image[u], image[v]))
        total = semiring.add(total, term)
    return total


# ---------------------------------------------------------------------------
# fast paths
# ---------------------------------------------------------------------------

def count_hom_tree_dp(tree: Graph, g: Graph) -> int:
    """hom(tree, g) by rooted dynamic programming in O(|V(tree)| * |V(g)|^2).

    dp[v][u] counts homomorphisms of the subtree at v sending v to u; a parent
    multiplies, per child, the sums of the child's row over the neighbors of
    its own image.
    """
    if not (tree.n >= 1 and tree.m == tree.n - 1 and len(components(tree)) == 1):
        raise ValidationError("pattern must be a tree (connected and acyclic)")
    if g.n == 0:
        return 0
    adjacency = tree.adjacency
    parent = [-1] * tree.n
    order = [0]
    seen = [False] * tree.n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
                queue.append(w)

    rows = [None] * tree.n
    for v in reversed(order):
        row = [1] * g.n
        for w in adjacency[v]:
            if parent[w] == v:
                child = rows[w]
                sums = [0] * g.n
                for a, b in g.edges:
                    sums[a] += child[b]
                    sums[b] += child[a]
                row = [r * s for r, s in zip(row, sums)]
        rows[v] = row
    return sum(rows[0])


def adjacency_power_traces(g: Graph, kmax: int):
    """Exact [tr(A^1), ..., tr(A^kmax)].  Powers up to ceil(kmax/2) are built
    in int64 while walk-count bounds guarantee no overflow, switching to
    Python-int matrices beyond; each trace combines two half powers."""
    n = g.n
    if n == 0 or kmax == 0:
        return [0] * kmax
    cap = 1 << 62

    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        adj[u, v] = 1
        adj[v, u] = 1

    half = (kmax + 1) // 2
    powers = [None, adj]  # powers[m] = A^m; entries bounded by n^(m-1)
    for m in range(2, half + 1):
        prev = powers[m - 1]
        bound = n ** (m - 2) * n  # accumulated product bound for the matmul
        if prev.dtype == object or bound * n >= cap:
            prev = prev.astype(object)
            powers.append(prev @ adj.astype(object))
        else:
            powers.append(prev @ adj)

    traces = []
    for k in range(1, kmax + 1):
        a = k // 2
        b = k - a
        if a == 0:
            traces.append(int(np.trace(powers[b])))
        else:
            left = powers[a].astype(object)
            right = powers[b].astype(object)
            traces.append(int((left * right.T).sum()))
    return traces


def count_hom_cycle(k: int, g: Graph) -> int:
    """hom(C_k, g): the degenerate cycles give |V| and 2|E|; k >= 3 counts
    closed k-walks, i.e. tr(A^k)."""
    if k < 1:
        raise ValidationError(f"cycle length must be positive, got {k}")
    if k == 1:
        return g.n
    if k == 2:
        return 2 * g.m
    return adjacency_power_traces(g, k)[k - 1]


# ---------------------------------------------------------------------------
# the decomposition identity
# ---------------------------------------------------------------------------

def decomposition_check(d: Graph, g: Graph):
    """Return (hom(d,g), sum over isomorphism types e of
    sur(d,e)*inj(e,g)/aut(e)); every division must be exact."""
    from .canon import enumerate_graphs

    guards.check("decomposition", max(d.n, g.n), guards.DECOMPOSITION_MAX)
    if d.n == 0:
        return 1, 1
    lhs = count_hom(d, g)
    rhs = 0
    for e in enumerate_graphs(d.n):
        s = count_sur(d, e)
        if s == 0:
            continue
        term = s * count_inj(e, g)
        autos = count_aut(e)
        if term % autos:
            raise AssertionError(
                f"decomposition term {term} not divisible by aut={autos}; counting bug"
            )
        rhs += term // autos
    return lhs, rhs

"""Canonical forms, isomorphism, isomorphism-type enumeration, treewidth.

The canonical code of a graph is the graph6 encoding of a canonically
relabeled copy.  The relabeling is found by iterated color refinement with
individualization: refine to a stable vertex coloring, branch on one
representative per twin class inside the first non-singleton cell, and take
the lexicographically minimal upper-triangular adjacency bit string over the
discrete colorings reached.  Twin pruning (vertices with identical open or
closed neighborhoods) keeps cliques, stars and other highly symmetric graphs
from exploding the branch count.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from . import guards
from .graphs import Graph, components


def _canonical_ids(signatures):
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _refine(n, adjacency, colors):
    """Stable vertex refinement; color ids are signature-sorted each round."""
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in adjacency[v])))
            for v in range(n)
        ]
        new = _canonical_ids(sigs)
        if new == colors:
            return colors
        colors = new


def _twin_representatives(cell, masks):
    """One vertex per twin class of `cell`; twin swaps are automorphisms, so
    dropping the rest cannot change the minimal code."""
    by_open = {}
    for v in sorted(cell):
        by_open.setdefault(masks[v], v)
    reps = sorted(by_open.values())
    by_closed = {}
    for v in reps:
        by_closed.setdefault(masks[v] | (1 << v), v)
    return sorted(by_closed.values())


def _code_bits(g, perm):
    """Upper-triangular adjacency bits in column order under `perm`, packed
    MSB-first into an int with a leading sentinel bit."""
    masks = g.masks
    code = 1
    for j in range(1, g.n):
        pj = perm[j]
        for i in range(j):
            code = (code << 1) | ((masks[perm[i]] >> pj) & 1)
    return code


def _canonical_perm(g: Graph):
    n = g.n
    if n == 0:
        return ()
    adjacency = g.adjacency
    masks = g.masks
    best = [None, None]  # (code, perm)

    def search(colors):
        colors = _refine(n, adjacency, colors)
        cell_of = {}
        for v in range(n):
            cell_of.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cell_of):
            if len(cell_of[c]) > 1:
                target = cell_of[c]
                break
        if target is None:
            perm = sorted(range(n), key=colors.__getitem__)
            code = _code_bits(g, perm)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, perm
            return
        for v in _twin_representatives(target, masks):
            branched = [2 * c + 1 for c in colors]
            branched[v] = 2 * colors[v]
            search(branched)

    search([0] * n)
    return tuple(best[1])


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte code: graph6 of the canonical relabeling."""
    if g._code is None:
        from .formats import write_graph6

        perm = _canonical_perm(g)
        position = {v: i for i, v in enumerate(perm)}
        edges = [(position[u], position[v]) for u, v in g.edges]
        g._code = write_graph6(Graph(g.n, edges)).encode("ascii")
    return g._code


def canonical_representative(g: Graph) -> Graph:
    """The canonically labeled copy of g (decoding its canonical code)."""
    from .formats import parse_graph6

    return parse_graph6(canonical_form(g).decode("ascii"))


def graph_sort_key(g: Graph):
    """Deterministic isomorphism-type order: vertices, edges, canonical code."""
    return (g.n, g.m, canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    from . import homcount

    return homcount.isomorphism_exists(g, h)


# ---------------------------------------------------------------------------
# enumeration of isomorphism types
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _graph_types_exactly(n: int):
    if n == 1:
        return (canonical_representative(Graph(1)),)
    reps = {}
    for base in _graph_types_exactly(n - 1):
        base_edges = list(base.edges)
        for mask in range(1 << (n - 1)):
            edges = base_edges + [(v, n - 1) for v in range(n - 1) if (mask >> v) & 1]
            g = Graph(n, edges)
            code = canonical_form(g)
            if code not in reps:
                reps[code] = canonical_representative(g)
    return tuple(sorted(reps.values(), key=graph_sort_key))


def enumerate_graphs(n: int):
    """One canonical representative of every isomorphism type on 1..n vertices,
    in (vertex count, edge count, canonical code) order."""
    guards.check("enumerate-graphs", n, guards.ENUM_GRAPHS_MAX)
    out = []
    for k in range(1, n + 1):
        out.extend(_graph_types_exactly(k))
    return out


@lru_cache(maxsize=None)
def _tree_types_exactly(n: int):
    if n == 1:
        return (canonical_representative(Graph(1)),)
    reps = {}
    for base in _tree_types_exactly(n - 1):
        for v in range(n - 1):
            g = Graph(n, list(base.edges) + [(v, n - 1)])
            code = canonical_form(g)
            if code not in reps:
                reps[code] = canonical_representative(g)
    return tuple(sorted(reps.values(), key=graph_sort_key))


def enumerate_trees(n: int):
    """One representative per unlabeled tree on 1..n vertices (every tree on k
    vertices arises from one on k-1 by attaching a leaf)."""
    guards.check("enumerate-trees", n, guards.ENUM_TREES_MAX)
    out = []
    for k in range(1, n + 1):
        out.extend(_tree_types_exactly(k))
    return out


def enumerate_treewidth_le(width: int, n: int):
    guards.check("enumerate-graphs", n, guards.ENUM_GRAPHS_MAX)
    guards.check("treewidth", n, guards.TREEWIDTH_MAX)
    return [g for g in enumerate_graphs(n) if treewidth(g) <= width]


# ---------------------------------------------------------------------------
# exact treewidth by dynamic programming over elimination sets
# ---------------------------------------------------------------------------

def treewidth(g: Graph) -> int:
    """Exact treewidth via subset DP over elimination orders: eliminating the
    vertices of S in the best order costs max over a last vertex v of the
    number of vertices outside S reachable from v through S."""
    guards.check("treewidth", g.n, guards.TREEWIDTH_MAX)
    if g.n == 0:
        return 0
    return max(_treewidth_connected(c) for c in components(g))


def _treewidth_connected(g: Graph) -> int:
    n = g.n
    if n == 1:
        return 0
    adjacency = g.adjacency
    full = (1 << n) - 1

    def reach_degree(inside, v):
        # vertices outside inside|{v} reachable from v via paths inside `inside`
        seen = 1 << v
        queue = deque([v])
        out = 0
        while queue:
            x = queue.popleft()
            for w in adjacency[x]:
                bit = 1 << w
                if seen & bit:
                    continue
                seen |= bit
                if (inside >> w) & 1:
                    queue.append(w)
                else:
                    out += 1
        return out

    best = {0: -1}
    for size in range(1, n + 1):
        nxt = {}
        for s, cost in best.items():
            for v in range(n):
                bit = 1 << v
                if s & bit:
                    continue
                t = s | bit
                c = max(cost, reach_degree(s, v))
                if c < nxt.get(t, n):
                    nxt[t] = c
        best = nxt
    return best[full]

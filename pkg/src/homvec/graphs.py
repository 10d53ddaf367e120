"""Finite simple undirected graphs: representation, generators, operations.

Vertices are integers 0..n-1.  Graphs are immutable; adjacency views are
computed lazily and cached.  All generators are deterministic.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations

from .errors import ValidationError


class Graph:
    """A simple undirected graph on vertices 0..n-1 (no loops, no multi-edges)."""

    __slots__ = ("n", "edges", "_adj", "_masks", "_code")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u},{v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(normalized))
        self._adj = None
        self._masks = None
        self._code = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self):
        """Tuple of sorted neighbor tuples."""
        if self._adj is None:
            lists = [[] for _ in range(self.n)]
            for u, v in self.edges:
                lists[u].append(v)
                lists[v].append(u)
            self._adj = tuple(tuple(sorted(l)) for l in lists)
        return self._adj

    @property
    def masks(self):
        """Tuple of adjacency bitmasks (bit v of masks[u] set iff u~v)."""
        if self._masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._masks = tuple(masks)
        return self._masks

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def degrees(self):
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def make_graph(n: int, edges) -> Graph:
    """Build a normalized graph; duplicate pairs collapse, loops are rejected."""
    return Graph(n, edges)


def empty_graph() -> Graph:
    return Graph(0)


def standard_graph(kind: str, n: int) -> Graph:
    """Named families: clique, cycle, path, independent (n >= 1).

    The one- and two-vertex cycles degenerate to the single-vertex and
    single-edge graphs.
    """
    if n < 1:
        raise ValidationError(f"{kind} requires n >= 1, got {n}")
    if kind == "independent":
        return Graph(n)
    if kind == "clique":
        return Graph(n, combinations(range(n), 2))
    if kind == "path":
        return Graph(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n == 1:
            return Graph(1)
        if n == 2:
            return Graph(2, [(0, 1)])
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    raise ValidationError(f"unknown graph kind {kind!r}")


def kneser_graph(a: int, b: int) -> Graph:
    """Vertices are the b-subsets of {1..a} in lexicographic order; edges join
    disjoint subsets.  Requires a >= 2b."""
    if b < 1 or a < 2 * b:
        raise ValidationError(f"Kneser graph requires a >= 2b >= 2, got a={a}, b={b}")
    subsets = list(combinations(range(1, a + 1), b))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for s, t in combinations(subsets, 2):
        if not set(s) & set(t):
            edges.append((index[s], index[t]))
    return Graph(len(subsets), edges)


def fractional_pair(n: int):
    """The regular pair (G_n, H_n): G_n is two disjoint n-cliques; H_n drops one
    edge from each clique and rewires the four endpoints across the copies.

    All clique edges are equivalent under automorphisms, so the dropped edge is
    fixed to the lexicographically first one in each copy.
    """
    if n < 3:
        raise ValidationError(f"pair construction requires n >= 3, got {n}")
    first = standard_graph("clique", n)
    g = disjoint_union(first, first)
    edges = set(g.edges)
    a1, a2 = 0, 1
    b1, b2 = n, n + 1
    edges.discard((a1, a2))
    edges.discard((b1, b2))
    edges.add((a1, b1))
    edges.add((a2, b2))
    return g, Graph(2 * n, edges)


def chromatic_pair():
    """The smallest chromatically equivalent non-isomorphic pair: an isolated
    vertex plus a 3-vertex path, versus two disjoint edges."""
    x1 = Graph(4, [(1, 2), (2, 3)])
    x2 = Graph(4, [(0, 1), (2, 3)])
    return x1, x2


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, list(g.edges) + shifted)


def n_fold_union(g: Graph, times: int) -> Graph:
    if times < 0:
        raise ValidationError(f"fold count must be non-negative, got {times}")
    out = empty_graph()
    for _ in range(times):
        out = disjoint_union(out, g)
    return out


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Categorical product: (u,a)~(v,b) iff u~v in g and a~b in h.
    Vertex (u,a) gets index u*|V(h)| + a."""
    edges = []
    for u, v in g.edges:
        for a, b in h.edges:
            edges.append((u * h.n + a, v * h.n + b))
            edges.append((u * h.n + b, v * h.n + a))
    return Graph(g.n * h.n, edges)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ValidationError("cannot add a loop")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValidationError(f"vertex out of range: ({u},{v})")
    return Graph(g.n, list(g.edges) + [(u, v)])


def contract(g: Graph, u: int, v: int) -> Graph:
    """Merge the non-adjacent vertices u and v, unioning their neighborhoods.

    The merged vertex keeps label min(u,v); labels above max(u,v) shift down.
    """
    if u == v:
        raise ValidationError("cannot contract a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValidationError(f"vertex out of range: ({u},{v})")
    if u > v:
        u, v = v, u
    if (u, v) in g.edges:
        raise ValidationError(f"vertices {u},{v} are adjacent; only non-adjacent pairs contract")

    def relabel(w):
        if w == v:
            return u
        return w - 1 if w > v else w

    edges = set()
    for a, b in g.edges:
        a2, b2 = relabel(a), relabel(b)
        if a2 != b2:
            edges.add((a2, b2) if a2 < b2 else (b2, a2))
    return Graph(g.n - 1, edges)


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------

def components(g: Graph):
    """Connected components as relabeled graphs (vertex order preserved)."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        verts = []
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            verts.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        verts.sort()
        index = {v: i for i, v in enumerate(verts)}
        vset = set(verts)
        edges = [(index[a], index[b]) for a, b in g.edges if a in vset]
        out.append(Graph(len(verts), edges))
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def girth(g: Graph):
    """Length of a shortest cycle, or math.inf for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] >= best - 1:
                break
            for w in g.adjacency[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w and parent[w] != v:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def contains_clique_subgraph(g: Graph, k: int) -> bool:
    """True iff some k vertices are pairwise adjacent (k=1: any vertex)."""
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1
    candidates = [v for v in range(g.n) if len(g.adjacency[v]) >= k - 1]
    masks = g.masks
    for combo in combinations(candidates, k):
        if all((masks[a] >> b) & 1 for a, b in combinations(combo, 2)):
            return True
    return False


def independent_sets(g: Graph, limit: int | None = None):
    """All independent sets (including the empty set), each as a sorted tuple,
    ordered by (size, elements).  Raises GuardError past `limit` sets."""
    from .errors import GuardError

    masks = g.masks
    out = []

    def grow(start, chosen, blocked):
        out.append(chosen)
        if limit is not None and len(out) > limit:
            raise GuardError("independent-sets", f"more than {limit} independent sets")
        for v in range(start, g.n):
            if not (blocked >> v) & 1:
                grow(v + 1, chosen + (v,), blocked | masks[v] | (1 << v))

    grow(0, (), 0)
    out.sort(key=lambda s: (len(s), s))
    return out

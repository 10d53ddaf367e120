"""Weighted graphs: loops allowed, exact rational weights on vertices, edges
and loops.  Plain graphs lift with unit weights."""

from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError
from .graphs import Graph


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ValidationError(f"weight must be rational, got {x!r}")


class WeightedGraph:
    """Undirected graph with loops and one rational weight per vertex, per
    edge and per loop."""

    __slots__ = ("n", "edges", "loops", "vertex_weights", "edge_weights", "loop_weights")

    def __init__(self, n, edges, loops, vertex_weights, edge_weights, loop_weights):
        if n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {n}")
        norm_edges = set()
        for u, v in edges:
            if u == v:
                raise ValidationError("loops go in the loops field, not edges")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u},{v}) out of range")
            norm_edges.add((u, v) if u < v else (v, u))
        loops = set(loops)
        for v in loops:
            if not 0 <= v < n:
                raise ValidationError(f"loop vertex {v} out of range")
        self.n = n
        self.edges = tuple(sorted(norm_edges))
        self.loops = tuple(sorted(loops))

        vw = {v: _as_fraction(w) for v, w in dict(vertex_weights).items()}
        ew = {}
        for key, w in dict(edge_weights).items():
            u, v = key
            ew[(u, v) if u < v else (v, u)] = _as_fraction(w)
        lw = {v: _as_fraction(w) for v, w in dict(loop_weights).items()}
        if set(vw) != set(range(n)):
            raise ValidationError("every vertex needs exactly one weight")
        if set(ew) != set(self.edges):
            raise ValidationError("every edge needs exactly one weight")
        if set(lw) != set(self.loops):
            raise ValidationError("every loop needs exactly one weight")
        self.vertex_weights = vw
        self.edge_weights = ew
        self.loop_weights = lw

    def masks_with_loops(self):
        """Adjacency bitmasks of the underlying looped shape (loop = self bit)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        for v in self.loops:
            masks[v] |= 1 << v
        return tuple(masks)

    def image_edge_weight(self, a, b) -> Fraction:
        """Weight of the image of an edge mapped onto (a, b); a == b hits a loop."""
        if a == b:
            return self.loop_weights[a]
        return self.edge_weights[(a, b) if a < b else (b, a)]

    def __eq__(self, other):
        return (
            isinstance(other, WeightedGraph)
            and self.n == other.n
            and self.edges == other.edges
            and self.loops == other.loops
            and self.vertex_weights == other.vertex_weights
            and self.edge_weights == other.edge_weights
            and self.loop_weights == other.loop_weights
        )

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, edges={list(self.edges)}, loops={list(self.loops)})"


def lift_graph(g: Graph) -> WeightedGraph:
    """View a plain graph as a weighted graph with weight 1 everywhere."""
    one = Fraction(1)
    return WeightedGraph(
        g.n,
        g.edges,
        (),
        {v: one for v in range(g.n)},
        {e: one for e in g.edges},
        {},
    )


def weighted_clique(k: int, y) -> WeightedGraph:
    """Clique on k vertices with a loop at every vertex: vertex weight 1, loop
    weight 1+y, plain edge weight 1."""
    if k < 1:
        raise ValidationError(f"clique size must be positive, got {k}")
    y = _as_fraction(y)
    one = Fraction(1)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    return WeightedGraph(
        k,
        edges,
        range(k),
        {v: one for v in range(k)},
        {e: one for e in edges},
        {v: 1 + y for v in range(k)},
    )


def lollipop(x, y) -> WeightedGraph:
    """Two vertices a=0 (weight x) and b=1 (weight y), edge (a,b) and loop at b
    both weighted 1."""
    one = Fraction(1)
    return WeightedGraph(
        2,
        [(0, 1)],
        [1],
        {0: _as_fraction(x), 1: _as_fraction(y)},
        {(0, 1): one},
        {1: one},
    )

"""Color refinement: 1-dimensional vertex refinement and k-dimensional tuple
refinement (k = 2, 3).

1-dimensional: start monochromatic, split classes by the multiset of neighbor
colors, iterate to a fixpoint.  k-dimensional: color all k-tuples by their
ordered atomic type (equality and adjacency pattern), then refine each tuple
by the multiset, over all vertices w, of the joint k-vector of colors of the
tuples obtained by substituting w at each coordinate.  This is the variant
whose (k-1)-dimensional equivalence matches k-variable counting logic.

Color ids are renamed canonically (signature-sorted) every round, so stable
colorings of isomorphic graphs coincide.  Two graphs are compared by running
the refinement on their disjoint union: both sides then share one color space.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import guards
from .errors import ValidationError
from .graphs import Graph, disjoint_union


@dataclass(frozen=True)
class ColorPartition:
    """A stable coloring (one more round changes nothing) plus a canonical
    histogram signature, invariant under vertex relabeling."""

    k: int
    colors: dict        # vertex -> color (k=1) or k-tuple -> color
    signature: tuple    # sorted ((color, count), ...)


def _canonical_ids(signatures):
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _histogram(colors):
    counts = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    return tuple(sorted(counts.items()))


def _refine_vertices(g: Graph):
    adjacency = g.adjacency
    colors = [0] * g.n
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in adjacency[v])))
            for v in range(g.n)
        ]
        new = _canonical_ids(sigs)
        if new == colors:
            return colors
        colors = new


def _atomic_type(t, masks):
    k = len(t)
    same = tuple(1 if t[i] == t[j] else 0 for i in range(k) for j in range(i + 1, k))
    adj = tuple((masks[t[i]] >> t[j]) & 1 for i in range(k) for j in range(i + 1, k))
    return (same, adj)


def _refine_tuples(g: Graph, k: int):
    masks = g.masks
    tuples = list(product(range(g.n), repeat=k))
    index = {t: i for i, t in enumerate(tuples)}
    colors = _canonical_ids([_atomic_type(t, masks) for t in tuples])
    verts = range(g.n)
    while True:
        sigs = []
        for t in tuples:
            substituted = []
            for w in verts:
                joint = tuple(
                    colors[index[t[:i] + (w,) + t[i + 1:]]] for i in range(k)
                )
                substituted.append(joint)
            sigs.append((colors[index[t]], tuple(sorted(substituted))))
        new = _canonical_ids(sigs)
        if new == colors:
            return tuples, colors
        colors = new


def _check_guard(n: int, k: int):
    if not 1 <= k <= guards.WL_MAX_K:
        raise ValidationError(f"refinement dimension must be 1..{guards.WL_MAX_K}, got {k}")
    guards.check("wl-tuples", n**k, guards.WL_MAX_TUPLES)


def wl_refine(g: Graph, k: int) -> ColorPartition:
    _check_guard(g.n, k)
    if k == 1:
        colors = _refine_vertices(g)
        mapping = {v: colors[v] for v in range(g.n)}
        return ColorPartition(1, mapping, _histogram(colors))
    tuples, colors = _refine_tuples(g, k)
    mapping = dict(zip(tuples, colors))
    return ColorPartition(k, mapping, _histogram(colors))


def wl_equivalent(g: Graph, h: Graph, k: int) -> bool:
    """Stable color histograms agree, computed on the disjoint union and
    restricted to tuples lying entirely on one side."""
    union = disjoint_union(g, h)
    _check_guard(union.n, k)
    if k == 1:
        colors = _refine_vertices(union)
        left = _histogram(colors[: g.n])
        right = _histogram(colors[g.n:])
        return left == right
    tuples, colors = _refine_tuples(union, k)
    left = _histogram(c for t, c in zip(tuples, colors) if all(v < g.n for v in t))
    right = _histogram(c for t, c in zip(tuples, colors) if all(v >= g.n for v in t))
    return left == right

"""Restricted left/right homomorphism vectors over graph classes, the first
distinguisher search, and the injective/surjective closure machinery.

A class is either a named family together with a vertex bound, or an explicit
finite list; expansion always yields the canonical (vertices, edges, code)
ordering, so vector comparisons are positional.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import (
    canonical_form,
    enumerate_graphs,
    enumerate_trees,
    enumerate_treewidth_le,
    graph_sort_key,
    is_isomorphic,
)
from .errors import ValidationError
from .graphs import Graph, components, standard_graph
from .homcount import count_hom, count_hom_cycle, count_hom_tree_dp, count_inj, count_sur

NAMED_CLASSES = ("all", "trees", "cycles", "paths", "cliques", "independents")


@dataclass(frozen=True)
class ClassSpec:
    """A finite, deterministically ordered restriction of a graph class."""

    kind: str                     # named family, "treewidth_le", or "explicit"
    bound: int = 0                # max vertices for named families
    width: int = 0                # treewidth cap for kind="treewidth_le"
    members: tuple = ()           # explicit members

    @staticmethod
    def named(kind: str, bound: int) -> "ClassSpec":
        if kind not in NAMED_CLASSES:
            raise ValidationError(f"unknown class {kind!r}; known: {NAMED_CLASSES}")
        if bound < 1:
            raise ValidationError(f"class bound must be positive, got {bound}")
        return ClassSpec(kind=kind, bound=bound)

    @staticmethod
    def treewidth(width: int, bound: int) -> "ClassSpec":
        if width < 0 or bound < 1:
            raise ValidationError("treewidth class needs width >= 0 and bound >= 1")
        return ClassSpec(kind="treewidth_le", bound=bound, width=width)

    @staticmethod
    def explicit(graphs) -> "ClassSpec":
        return ClassSpec(kind="explicit", members=tuple(graphs))

    def expand(self):
        if self.kind == "all":
            return list(enumerate_graphs(self.bound))
        if self.kind == "trees":
            return list(enumerate_trees(self.bound))
        if self.kind == "treewidth_le":
            return enumerate_treewidth_le(self.width, self.bound)
        if self.kind in ("cycles", "paths", "cliques", "independents"):
            singular = {"cycles": "cycle", "paths": "path", "cliques": "clique", "independents": "independent"}
            family = [standard_graph(singular[self.kind], n) for n in range(1, self.bound + 1)]
            return sorted(family, key=graph_sort_key)
        if self.kind == "explicit":
            seen = {}
            for g in self.members:
                seen.setdefault(canonical_form(g), g)
            return sorted(seen.values(), key=graph_sort_key)
        raise ValidationError(f"unknown class kind {self.kind!r}")


@dataclass(frozen=True)
class HomVector:
    """Counts against every member of an expanded class, in class order."""

    side: str                     # "left" or "right"
    anchor: bytes                 # canonical code of the profiled graph
    entries: tuple                # ((member canonical code, count), ...)

    def counts(self):
        return tuple(c for _, c in self.entries)

    def csv(self) -> str:
        lines = ["member_graph6,count"]
        for code, count in self.entries:
            lines.append(f"{code.decode('ascii')},{count}")
        return "\n".join(lines) + "\n"


def _is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(components(g)) == 1


def _cycle_length(g: Graph):
    """Length if g is a cycle (including the degenerate one- and two-vertex
    cycles), else None."""
    if g.n == 1 and g.m == 0:
        return 1
    if g.n == 2 and g.m == 1:
        return 2
    if g.n >= 3 and g.m == g.n and len(components(g)) == 1 and all(d == 2 for d in g.degrees()):
        return g.n
    return None


def _left_count(member: Graph, g: Graph) -> int:
    length = _cycle_length(member)
    if length is not None:
        return count_hom_cycle(length, g)
    if _is_tree(member):
        return count_hom_tree_dp(member, g)
    return count_hom(member, g)


def left_vector(g: Graph, spec: ClassSpec) -> HomVector:
    """Counts hom(F, g) for F over the class; trees and cycles take their
    dynamic-programming and trace fast paths."""
    anchor = canonical_form(g)
    entries = tuple((canonical_form(f), _left_count(f, g)) for f in spec.expand())
    return HomVector("left", anchor, entries)


def right_vector(g: Graph, spec: ClassSpec) -> HomVector:
    anchor = canonical_form(g)
    entries = tuple((canonical_form(f), count_hom(g, f)) for f in spec.expand())
    return HomVector("right", anchor, entries)


def first_distinguisher(g: Graph, h: Graph, side: str, spec: ClassSpec):
    """First class member (in canonical order) whose count differs between g
    and h, or None when the bounded class cannot tell them apart."""
    if side not in ("left", "right"):
        raise ValidationError(f"side must be left or right, got {side!r}")
    for member in spec.expand():
        if side == "left":
            a, b = _left_count(member, g), _left_count(member, h)
        else:
            a, b = count_hom(g, member), count_hom(h, member)
        if a != b:
            return member
    return None


# ---------------------------------------------------------------------------
# Inj / Sur / Ext closures of finite classes
# ---------------------------------------------------------------------------

def inj_closure_member(member_list, g: Graph) -> bool:
    """g injects into some member."""
    return any(count_inj(g, f) > 0 for f in member_list)


def sur_closure_member(member_list, g: Graph) -> bool:
    """Some member surjects onto g."""
    return any(count_sur(f, g) > 0 for f in member_list)


def ext_member(member_list, g: Graph) -> bool:
    return inj_closure_member(member_list, g) and sur_closure_member(member_list, g)


def ext_closed_check(spec: ClassSpec) -> bool:
    """Bounded verification that the extension closure adds nothing: every
    graph within the bound lying in the closure is isomorphic to a member."""
    members = spec.expand()
    if not members:
        return True
    bound = spec.bound if spec.kind != "explicit" else max(g.n for g in members)
    for g in enumerate_graphs(bound):
        if ext_member(members, g) and not any(is_isomorphic(g, f) for f in members):
            return False
    return True

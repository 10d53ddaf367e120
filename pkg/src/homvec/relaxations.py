"""Isomorphism relaxations and graph parameters.

Fractional isomorphism has two independent deciders here: vertex refinement
(wl_equivalent with k=1) and exact feasibility of the doubly stochastic
similarity system AX = XB, Xe = e, e^T X = e^T over the rationals.
Cospectrality is equality of characteristic polynomials; chromatic
equivalence is equality of chromatic polynomials; homomorphic equivalence is
two-way existence.  The fractional chromatic and clique numbers are the exact
optima of the independent-set covering LP and its dual, each solved on its
own.
"""

from __future__ import annotations

from fractions import Fraction

from . import guards
from .errors import ValidationError
from .graphs import Graph, contains_clique_subgraph, independent_sets, kneser_graph, standard_graph
from .homcount import hom_exists
from .lp import LpProgram, dualize, make_program, solve_lp
from .polynomials import characteristic_polynomial, chromatic_polynomial
from .wl import wl_equivalent


def fractional_isomorphism_lp(g: Graph, h: Graph):
    """A non-negative rational doubly stochastic X with A_g X = X A_h, or None.

    Graphs of different orders are immediately non-equivalent (the system has
    no square X).  Any returned matrix is re-verified exactly.
    """
    if g.n != h.n:
        return None
    n = g.n
    if n == 0:
        return ()
    a = g.masks
    b = h.masks

    def var(u, v):
        return u * n + v

    rows = []
    zero = [Fraction(0)] * (n * n)
    # (A X)_{ij} - (X B)_{ij} = 0
    for i in range(n):
        for j in range(n):
            coeffs = list(zero)
            for u in range(n):
                if (a[i] >> u) & 1:
                    coeffs[var(u, j)] += 1
            for v in range(n):
                if (b[v] >> j) & 1:
                    coeffs[var(i, v)] -= 1
            rows.append((coeffs, "=", 0))
    for i in range(n):
        coeffs = list(zero)
        for v in range(n):
            coeffs[var(i, v)] = 1
        rows.append((coeffs, "=", 1))
    for j in range(n):
        coeffs = list(zero)
        for u in range(n):
            coeffs[var(u, j)] = 1
        rows.append((coeffs, "=", 1))

    solution = solve_lp(make_program("feasibility", [0] * (n * n), rows))
    if solution.status != "optimal":
        return None
    x = solution.assignment
    matrix = tuple(tuple(x[var(u, v)] for v in range(n)) for u in range(n))
    _verify_fractional_certificate(g, h, matrix)
    return matrix


def _verify_fractional_certificate(g, h, x):
    n = g.n
    for row in x:
        if any(v < 0 for v in row) or sum(row) != 1:
            raise AssertionError("certificate is not row-stochastic")
    for j in range(n):
        if sum(x[u][j] for u in range(n)) != 1:
            raise AssertionError("certificate is not column-stochastic")
    a = g.masks
    b = h.masks
    for i in range(n):
        for j in range(n):
            lhs = sum(x[u][j] for u in range(n) if (a[i] >> u) & 1)
            rhs = sum(x[i][v] for v in range(n) if (b[v] >> j) & 1)
            if lhs != rhs:
                raise AssertionError("certificate does not intertwine the adjacencies")


def fractionally_isomorphic(g: Graph, h: Graph) -> bool:
    """Refinement-side decider (the LP decider is the cross-check)."""
    return g.n == h.n and wl_equivalent(g, h, 1)


def cospectral(g: Graph, h: Graph) -> bool:
    return characteristic_polynomial(g) == characteristic_polynomial(h)


def chromatically_equivalent(g: Graph, h: Graph) -> bool:
    return chromatic_polynomial(g) == chromatic_polynomial(h)


def hom_equivalent(g: Graph, h: Graph) -> bool:
    return hom_exists(g, h) and hom_exists(h, g)


def chromatic_number(g: Graph) -> int:
    """Least k with a homomorphism into the k-clique."""
    if g.n == 0:
        raise ValidationError("chromatic number needs at least one vertex")
    for k in range(1, g.n + 1):
        if hom_exists(g, standard_graph("clique", k)):
            return k
    raise AssertionError("unreachable: every graph maps into a clique of its own order")


def clique_number(g: Graph) -> int:
    """Largest k with a k-clique subgraph."""
    if g.n == 0:
        raise ValidationError("clique number needs at least one vertex")
    for k in range(g.n, 0, -1):
        if contains_clique_subgraph(g, k):
            return k
    raise AssertionError("unreachable: a single vertex is a 1-clique")


def _covering_program(g: Graph) -> LpProgram:
    sets = independent_sets(g, limit=guards.scaled(guards.MAX_INDEPENDENT_SETS))
    rows = []
    for v in range(g.n):
        coeffs = [1 if v in s else 0 for s in sets]
        rows.append((coeffs, ">=", 1))
    return make_program("min", [1] * len(sets), rows)


def fractional_chromatic_number(g: Graph) -> Fraction:
    """Exact optimum of the fractional covering LP over all independent sets."""
    if g.n == 0:
        raise ValidationError("fractional chromatic number needs at least one vertex")
    solution = solve_lp(_covering_program(g))
    if solution.status != "optimal":
        raise AssertionError("covering program is always feasible and bounded")
    return solution.value


def fractional_clique_number(g: Graph) -> Fraction:
    """Exact optimum of the dual packing LP, solved independently."""
    if g.n == 0:
        raise ValidationError("fractional clique number needs at least one vertex")
    solution = solve_lp(dualize(_covering_program(g)))
    if solution.status != "optimal":
        raise AssertionError("packing program is always feasible and bounded")
    return solution.value


def kneser_colorable(g: Graph, a: int, b: int) -> bool:
    """Is there a homomorphism into the Kneser graph with parameters (a, b)?"""
    return hom_exists(g, kneser_graph(a, b))


# ---------------------------------------------------------------------------
# relation dispatch and CSV reports
# ---------------------------------------------------------------------------

def decide_relation(g: Graph, h: Graph, relation: str) -> bool:
    """Decide one of the named equivalences: iso, fraciso, wl:k, cospectral,
    chromeq, homeq."""
    from .canon import is_isomorphic

    if relation == "iso":
        return is_isomorphic(g, h)
    if relation == "fraciso":
        return fractional_isomorphism_lp(g, h) is not None
    if relation.startswith("wl:"):
        try:
            k = int(relation[3:])
        except ValueError:
            raise ValidationError(f"bad refinement dimension in {relation!r}") from None
        return wl_equivalent(g, h, k)
    if relation == "cospectral":
        return cospectral(g, h)
    if relation == "chromeq":
        return chromatically_equivalent(g, h)
    if relation == "homeq":
        return hom_equivalent(g, h)
    raise ValidationError(f"unknown relation {relation!r}")


def equivalence_report(pairs, relation: str) -> str:
    """CSV verdicts, one row per pair: g6_left, g6_right, relation, verdict."""
    from .formats import write_graph6

    lines = ["g6_left,g6_right,relation,verdict"]
    for g, h in pairs:
        verdict = "equivalent" if decide_relation(g, h, relation) else "distinguished"
        lines.append(f"{write_graph6(g)},{write_graph6(h)},{relation},{verdict}")
    return "\n".join(lines) + "\n"


def parameter_report(graphs) -> str:
    """CSV parameters, one row per graph: g6, chi, omega, chi_f (as p/q)."""
    from .formats import write_graph6

    lines = ["g6,chi,omega,chi_f"]
    for g in graphs:
        chi_f = fractional_chromatic_number(g)
        frac = str(chi_f.numerator) if chi_f.denominator == 1 else f"{chi_f.numerator}/{chi_f.denominator}"
        lines.append(f"{write_graph6(g)},{chromatic_number(g)},{clique_number(g)},{frac}")
    return "\n".join(lines) + "\n"

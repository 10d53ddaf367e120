"""Acceptance suites: every exit criterion as an executable check list.

Each suite returns CheckResult items; everything is exact, so every check is
an equality or implication with zero tolerance.  The CLI `suite` command and
tests/test_acceptance.py both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial, semiring_instance
from .canon import enumerate_graphs
from .graphs import (
    Graph,
    chromatic_pair,
    components,
    disjoint_union,
    fractional_pair,
    is_bipartite,
    make_graph,
    n_fold_union,
    standard_graph,
    tensor_product,
)
from .homcount import (
    count_hom,
    count_hom_cycle,
    count_hom_tree_dp,
    count_hom_weighted,
    decomposition_check,
    hom_exists,
)
from .polynomials import (
    characteristic_polynomial,
    chromatic_by_interpolation,
    chromatic_polynomial,
    cluster_expansion_polynomial,
    independence_polynomial,
)
from .relaxations import (
    chromatic_number,
    clique_number,
    fractional_chromatic_number,
    fractional_clique_number,
    fractional_isomorphism_lp,
    kneser_colorable,
)
from .vectors import ClassSpec, first_distinguisher
from .weighted import lollipop, weighted_clique
from .wl import wl_equivalent


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _all_pairs(graphs):
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            yield graphs[i], graphs[j]


# -- 1 ----------------------------------------------------------------------

def suite_decomposition():
    """hom(d,g) equals the surjection/injection split over isomorphism types,
    with every division exact, for all ordered pairs on <= 4 vertices."""
    types = enumerate_graphs(4)
    bad = 0
    for d in types:
        for g in types:
            lhs, rhs = decomposition_check(d, g)
            if lhs != rhs:
                bad += 1
    return [CheckResult("split-identity-all-pairs", bad == 0, f"{len(types)**2} ordered pairs, {bad} mismatches")]


# -- 2 ----------------------------------------------------------------------

def suite_distinguishers():
    """Every non-isomorphic pair on <= 5 vertices has a left and a right
    distinguisher of <= 5 vertices."""
    spec = ClassSpec.named("all", 5)
    graphs = enumerate_graphs(5)
    missing_left = missing_right = 0
    total = 0
    for g, h in _all_pairs(graphs):
        total += 1
        if first_distinguisher(g, h, "left", spec) is None:
            missing_left += 1
        if first_distinguisher(g, h, "right", spec) is None:
            missing_right += 1
    return [
        CheckResult("left-distinguisher-exists", missing_left == 0, f"{total} pairs, {missing_left} missing"),
        CheckResult("right-distinguisher-exists", missing_right == 0, f"{total} pairs, {missing_right} missing"),
    ]


# -- 3 ----------------------------------------------------------------------

def suite_fractional_isomorphism():
    checks = []
    for n in (3, 4):
        g, h = fractional_pair(n)
        checks.append(CheckResult(f"refinement-equivalent-n{n}", wl_equivalent(g, h, 1)))
        checks.append(CheckResult(f"lp-feasible-n{n}", fractional_isomorphism_lp(g, h) is not None))
    g3, h3 = fractional_pair(3)
    checks.append(CheckResult("dimension-2-separates", not wl_equivalent(g3, h3, 2)))

    graphs = enumerate_graphs(5)
    disagreements = 0
    total = 0
    for g, h in _all_pairs(graphs):
        if g.n != h.n:
            continue
        total += 1
        by_refinement = wl_equivalent(g, h, 1)
        by_lp = fractional_isomorphism_lp(g, h) is not None
        if by_refinement != by_lp:
            disagreements += 1
    checks.append(
        CheckResult("deciders-agree", disagreements == 0, f"{total} equal-order pairs, {disagreements} disagreements")
    )
    return checks


# -- 4 ----------------------------------------------------------------------

def suite_clique_thresholds():
    """The rigid/rewired pair maps into d exactly when d contains a clique of
    size n (respectively n-1), for all d on <= 6 vertices."""
    from .graphs import contains_clique_subgraph

    checks = []
    targets = enumerate_graphs(6)
    for n in (3, 4):
        g, h = fractional_pair(n)
        bad_g = sum(
            1 for d in targets if hom_exists(g, d) != contains_clique_subgraph(d, n)
        )
        bad_h = sum(
            1 for d in targets if hom_exists(h, d) != contains_clique_subgraph(d, n - 1)
        )
        checks.append(CheckResult(f"intact-pair-threshold-n{n}", bad_g == 0, f"{len(targets)} targets, {bad_g} bad"))
        checks.append(CheckResult(f"rewired-pair-threshold-n{n}", bad_h == 0, f"{len(targets)} targets, {bad_h} bad"))
    return checks


# -- 5 ----------------------------------------------------------------------

def suite_cospectrality():
    checks = []
    square_plus_point = disjoint_union(standard_graph("cycle", 4), standard_graph("independent", 1))
    star = make_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    expected = Polynomial(1, {(5,): 1, (3,): -4})
    p1 = characteristic_polynomial(square_plus_point)
    p2 = characteristic_polynomial(star)
    checks.append(CheckResult("classic-pair-char-poly", p1 == expected and p2 == expected, str(p1)))
    vec1 = [count_hom_cycle(k, square_plus_point) for k in range(1, 6)]
    vec2 = [count_hom_cycle(k, star) for k in range(1, 6)]
    checks.append(CheckResult("classic-pair-cycle-counts", vec1 == vec2, f"{vec1}"))

    graphs = enumerate_graphs(5)
    mismatched = 0
    wl_violations = 0
    total = 0
    for g, h in _all_pairs(graphs):
        total += 1
        kmax = max(g.n, h.n)
        same_spectrum = characteristic_polynomial(g) == characteristic_polynomial(h)
        same_cycles = all(count_hom_cycle(k, g) == count_hom_cycle(k, h) for k in range(1, kmax + 1))
        if same_spectrum != same_cycles:
            mismatched += 1
        if wl_equivalent(g, h, 2) and not same_spectrum:
            wl_violations += 1
    checks.append(CheckResult("spectrum-iff-cycle-counts", mismatched == 0, f"{total} pairs"))
    checks.append(CheckResult("dimension-2-refines-spectrum", wl_violations == 0, f"{total} pairs"))
    return checks


# -- 6 ----------------------------------------------------------------------

def suite_chromatic_polynomial():
    checks = []
    x = Polynomial.variable()
    one = Polynomial.constant(1)

    ok = all(
        chromatic_polynomial(standard_graph("independent", n)) == x**n for n in range(1, 7)
    )
    checks.append(CheckResult("independent-sets", ok))

    from .algebra import falling_factorial

    ok = all(
        chromatic_polynomial(standard_graph("clique", n)) == falling_factorial(n) for n in range(1, 7)
    )
    checks.append(CheckResult("cliques", ok))

    ok = True
    for n in range(3, 9):
        expected = (x - one) ** n + ((-1) ** n) * (x - one)
        ok = ok and chromatic_polynomial(standard_graph("cycle", n)) == expected
    checks.append(CheckResult("cycles-3-to-8", ok))

    x1, x2 = chromatic_pair()
    expected = (x**2) * (x - one) ** 2
    checks.append(
        CheckResult(
            "equivalent-pair",
            chromatic_polynomial(x1) == expected and chromatic_polynomial(x2) == expected,
        )
    )

    ring8 = standard_graph("cycle", 8)
    two_rings = n_fold_union(standard_graph("cycle", 4), 2)
    closed8 = (x - one) ** 8 + (x - one)
    closed44 = ((x - one) ** 4 + (x - one)) ** 2
    checks.append(
        CheckResult(
            "ring-split-differs",
            chromatic_polynomial(ring8) == closed8
            and chromatic_polynomial(two_rings) == closed44
            and closed8 != closed44,
        )
    )

    graphs = enumerate_graphs(5)
    bad_eval = 0
    bad_interp = 0
    for g in graphs:
        poly = chromatic_polynomial(g)
        for k in range(0, 6):
            target = standard_graph("clique", k) if k else Graph(0)
            if poly.eval(k) != count_hom(g, target):
                bad_eval += 1
        if poly != chromatic_by_interpolation(g):
            bad_interp += 1
    checks.append(CheckResult("matches-clique-counts", bad_eval == 0, f"{len(graphs)} graphs, k<=5"))
    checks.append(CheckResult("recursion-matches-interpolation", bad_interp == 0))
    return checks


# -- 7 ----------------------------------------------------------------------

def _is_point_edge_union(g: Graph):
    """Decompose g as m isolated vertices plus n disjoint edges, else None."""
    m = n = 0
    for piece in components(g):
        if piece.n == 1:
            m += 1
        elif piece.n == 2 and piece.m == 1:
            n += 1
        else:
            return None
    return m, n


def suite_hom_dominance():
    checks = []
    x1, x2 = chromatic_pair()
    graphs = enumerate_graphs(6)
    bad_order = 0
    bad_equality = 0
    for f in graphs:
        a = count_hom(f, x1)
        b = count_hom(f, x2)
        if a < b:
            bad_order += 1
        should_tie = (not is_bipartite(f)) or _is_point_edge_union(f) is not None
        if (a == b) != should_tie:
            bad_equality += 1
    checks.append(CheckResult("first-profile-dominates", bad_order == 0, f"{len(graphs)} patterns"))
    checks.append(CheckResult("equality-exactly-characterized", bad_equality == 0))

    ring8 = standard_graph("cycle", 8)
    two_rings = n_fold_union(standard_graph("cycle", 4), 2)
    point = standard_graph("independent", 1)
    edge = standard_graph("clique", 2)
    bad_product = 0
    for m in range(4):
        for n in range(4 - m):
            if m + n == 0:
                continue
            f = disjoint_union(n_fold_union(point, m), n_fold_union(edge, n))
            expected = 8**m * 16**n
            if not (count_hom(f, ring8) == count_hom(f, two_rings) == expected):
                bad_product += 1
    checks.append(CheckResult("point-edge-power-law", bad_product == 0, "8^m*16^n over m+n<=3"))
    return checks


# -- 8 ----------------------------------------------------------------------

def suite_semiring_identities():
    checks = []
    rationals = semiring_instance("rationals")
    rng = random.Random(1897)

    bad_chromatic = 0
    for g in enumerate_graphs(5):
        cep = cluster_expansion_polynomial(g)
        chrom = chromatic_polynomial(g)
        for k in range(1, 5):
            if cep.eval(k, -1) != chrom.eval(k):
                bad_chromatic += 1
    checks.append(CheckResult("cluster-expansion-at-minus-one", bad_chromatic == 0, "k=1..4, graphs<=5"))

    bad_clique = 0
    for g in enumerate_graphs(4):
        cep = cluster_expansion_polynomial(g)
        for _ in range(3):
            k = rng.randrange(1, 5)
            y = Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
            if cep.eval(k, y) != count_hom_weighted(g, weighted_clique(k, y), rationals):
                bad_clique += 1
    checks.append(CheckResult("cluster-expansion-vs-weighted-clique", bad_clique == 0, "3 points per graph"))

    bad_lollipop = 0
    for g in enumerate_graphs(5):
        ipoly = independence_polynomial(g)
        for _ in range(3):
            xv = Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
            yv = Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
            if ipoly.eval(xv, yv) != count_hom_weighted(g, lollipop(xv, yv), rationals):
                bad_lollipop += 1
    checks.append(CheckResult("independence-vs-weighted-lollipop", bad_lollipop == 0, "3 points per graph"))
    return checks


# -- 9 ----------------------------------------------------------------------

def suite_fractional_parameters():
    checks = []
    five_ring = standard_graph("cycle", 5)
    seven_ring = standard_graph("cycle", 7)
    checks.append(CheckResult("five-ring-value", fractional_chromatic_number(five_ring) == Fraction(5, 2)))
    checks.append(CheckResult("seven-ring-value", fractional_chromatic_number(seven_ring) == Fraction(7, 3)))

    graphs = enumerate_graphs(6)
    duality_gap = 0
    ordering = 0
    for g in graphs:
        chi_f = fractional_chromatic_number(g)
        omega_f = fractional_clique_number(g)
        if chi_f != omega_f:
            duality_gap += 1
        if not (clique_number(g) <= chi_f <= chromatic_number(g)):
            ordering += 1
    checks.append(CheckResult("packing-equals-covering", duality_gap == 0, f"{len(graphs)} graphs"))
    checks.append(CheckResult("between-clique-and-chromatic", ordering == 0))
    strict = clique_number(five_ring) < fractional_chromatic_number(five_ring) < chromatic_number(five_ring)
    checks.append(CheckResult("strict-on-five-ring", strict))
    checks.append(CheckResult("kneser-5-2-colorable", kneser_colorable(five_ring, 5, 2)))
    checks.append(CheckResult("kneser-2-1-not-colorable", not kneser_colorable(five_ring, 2, 1)))
    return checks


# -- 10 ---------------------------------------------------------------------

def suite_boolean_vectors():
    checks = []
    bad_cycles = 0
    for l in range(1, 5):
        for m in range(1, 5):
            expected = m <= l
            got = hom_exists(standard_graph("cycle", 2 * l + 1), standard_graph("cycle", 2 * m + 1))
            if got != expected:
                bad_cycles += 1
    checks.append(CheckResult("odd-cycle-order", bad_cycles == 0, "l,m <= 4"))

    edge = standard_graph("clique", 2)
    bad_gadgets = 0
    total = 0
    for d in enumerate_graphs(5):
        if d.m == 0:
            continue
        total += 1
        f = tensor_product(d, edge)
        if not (is_bipartite(f) and hom_exists(f, d)):
            bad_gadgets += 1
    checks.append(CheckResult("doubled-gadget", bad_gadgets == 0, f"{total} non-independent targets"))
    return checks


# -- 11 ---------------------------------------------------------------------

def _random_tree(n, rng):
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return make_graph(n, edges)


def _random_graph(n, p, rng):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return make_graph(n, edges)


def suite_fast_paths():
    # timing details stay off stdout so suite output is byte-identical per run
    checks = []
    rng = random.Random(424242)
    tree = _random_tree(20, rng)
    big = _random_graph(200, 0.1, rng)
    started = time.perf_counter()
    value = count_hom_tree_dp(tree, big)
    elapsed = time.perf_counter() - started
    checks.append(
        CheckResult(
            "tree-dp-under-a-second",
            elapsed < 1.0,
            f"20-vertex tree into 200-vertex target, count has {len(str(value))} digits",
        )
    )

    bad = 0
    for _ in range(12):
        small_tree = _random_tree(rng.randrange(2, 7), rng)
        target = _random_graph(rng.randrange(1, 6), 0.5, rng)
        if count_hom_tree_dp(small_tree, target) != count_hom(small_tree, target):
            bad += 1
    checks.append(CheckResult("tree-dp-matches-general-path", bad == 0, "12 downscaled instances"))

    walker = _random_graph(100, 0.3, rng)
    started = time.perf_counter()
    values = [count_hom_cycle(k, walker) for k in range(1, 13)]
    elapsed = time.perf_counter() - started
    checks.append(CheckResult("cycle-trace-under-a-second", elapsed < 1.0, "k<=12, 100-vertex target"))
    assert len(values) == 12
    return checks


SUITES = {
    "decomposition": suite_decomposition,
    "distinguishers": suite_distinguishers,
    "fractional-isomorphism": suite_fractional_isomorphism,
    "clique-thresholds": suite_clique_thresholds,
    "cospectrality": suite_cospectrality,
    "chromatic-polynomial": suite_chromatic_polynomial,
    "hom-dominance": suite_hom_dominance,
    "semiring-identities": suite_semiring_identities,
    "fractional-parameters": suite_fractional_parameters,
    "boolean-vectors": suite_boolean_vectors,
    "fast-paths": suite_fast_paths,
}


def run_suite(name: str, stream=None) -> bool:
    import sys

    stream = stream or sys.stdout
    if name == "all":
        ok = True
        for key in SUITES:
            ok = run_suite(key, stream) and ok
        return ok
    if name not in SUITES:
        raise KeyError(name)
    try:
        results = SUITES[name]()
    except Exception as exc:  # a crash is a failed suite, not a crashed runner
        stream.write(f"FAIL {name}: exception {type(exc).__name__}: {exc}\n")
        return False
    ok = True
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        suffix = f" ({r.detail})" if r.detail else ""
        stream.write(f"{status} {name}:{r.name}{suffix}\n")
        ok = ok and r.ok
    return ok

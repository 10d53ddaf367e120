"""homvec: exact homomorphism counting and graph isomorphism relaxations.

Everything is exact: counts are arbitrary-precision integers, weights and LP
data are rationals, polynomial identities hold coefficient-for-coefficient.
The counting kernel is compiled (Cython) when built, with a pure-Python twin
selected automatically otherwise; see homvec.kernels.BACKEND.
"""

from .algebra import Polynomial, SemiringSpec, poly_eval, poly_interpolate, semiring_from_tables, semiring_instance
from .canon import (
    canonical_form,
    canonical_representative,
    enumerate_graphs,
    enumerate_trees,
    enumerate_treewidth_le,
    graph_sort_key,
    is_isomorphic,
    treewidth,
)
from .errors import FormatError, GuardError, ValidationError
from .formats import parse_graph6, parse_weighted_json, write_graph6, write_weighted_json
from .graphs import (
    Graph,
    add_edge,
    chromatic_pair,
    components,
    contains_clique_subgraph,
    contract,
    disjoint_union,
    empty_graph,
    fractional_pair,
    girth,
    independent_sets,
    is_bipartite,
    is_connected,
    kneser_graph,
    make_graph,
    n_fold_union,
    standard_graph,
    tensor_product,
)
from .homcount import (
    count_aut,
    count_hom,
    count_hom_cycle,
    count_hom_tree_dp,
    count_hom_weighted,
    count_inj,
    count_sur,
    decomposition_check,
    hom_exists,
)
from .lp import LpProgram, LpSolution, dualize, lp_text, make_program, solve_lp
from .polynomials import (
    characteristic_polynomial,
    chromatic_by_interpolation,
    chromatic_polynomial,
    cluster_expansion_polynomial,
    independence_polynomial,
)
from .relaxations import (
    chromatic_number,
    chromatically_equivalent,
    clique_number,
    cospectral,
    decide_relation,
    equivalence_report,
    fractional_chromatic_number,
    fractional_clique_number,
    fractional_isomorphism_lp,
    fractionally_isomorphic,
    hom_equivalent,
    kneser_colorable,
    parameter_report,
)
from .vectors import (
    ClassSpec,
    HomVector,
    ext_closed_check,
    ext_member,
    first_distinguisher,
    inj_closure_member,
    left_vector,
    right_vector,
    sur_closure_member,
)
from .weighted import WeightedGraph, lift_graph, lollipop, weighted_clique
from .wl import ColorPartition, wl_equivalent, wl_refine

__version__ = "0.1.0"

"""Command-line surface.

Graphs are given as graph6 literals or @path file references; a referenced
file holding JSON is parsed as a weighted graph.  All output is exact
(decimal integers, p/q rationals) and deterministic.  Exit codes: 0 success
or equivalent, 1 distinguished or failed suite, 2 usage/parse error, 3 guard
overflow.
"""

from __future__ import annotations

import argparse
import sys

from . import suites
from .canon import canonical_form
from .errors import FormatError, GuardError, ValidationError
from .formats import parse_graph6, parse_weighted_json
from .graphs import Graph
from .homcount import count_aut, count_hom, count_hom_weighted, count_inj, count_sur, hom_exists
from .polynomials import (
    characteristic_polynomial,
    chromatic_polynomial,
    cluster_expansion_polynomial,
    independence_polynomial,
)
from .relaxations import (
    chromatic_number,
    clique_number,
    decide_relation,
    fractional_chromatic_number,
    fractional_clique_number,
)
from .algebra import semiring_instance
from .vectors import ClassSpec, first_distinguisher, left_vector, right_vector
from .weighted import WeightedGraph


def _load_graph(token: str):
    if token.startswith("@"):
        with open(token[1:], "r", encoding="ascii") as handle:
            text = handle.read()
        if text.lstrip().startswith("{"):
            return parse_weighted_json(text)
        return parse_graph6(text.strip())
    return parse_graph6(token)


def _require_plain(value, what) -> Graph:
    if isinstance(value, WeightedGraph):
        raise ValidationError(f"{what} must be a plain graph, got a weighted graph")
    return value


def _fraction_text(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_class(token: str, bound: int) -> ClassSpec:
    if token.startswith("tw<="):
        return ClassSpec.treewidth(int(token[4:]), bound)
    return ClassSpec.named(token, bound)


def cmd_count(args) -> int:
    left = _load_graph(args.left)
    if args.mode == "aut":
        print(count_aut(_require_plain(left, "--left")))
        return 0
    if args.right is None:
        raise ValidationError(f"mode {args.mode} needs --right")
    right = _load_graph(args.right)
    left = _require_plain(left, "--left")
    if isinstance(right, WeightedGraph):
        if args.mode != "hom":
            raise ValidationError("weighted targets only support --mode hom")
        value = count_hom_weighted(left, right, semiring_instance("rationals"))
        print(_fraction_text(value))
        return 0
    if args.mode == "hom":
        print(count_hom(left, right))
    elif args.mode == "inj":
        print(count_inj(left, right))
    elif args.mode == "sur":
        print(count_sur(left, right))
    elif args.mode == "exists":
        print("true" if hom_exists(left, right) else "false")
    return 0


def cmd_vector(args) -> int:
    g = _require_plain(_load_graph(args.graph), "graph")
    spec = _parse_class(getattr(args, "klass"), args.bound)
    vec = left_vector(g, spec) if args.side == "left" else right_vector(g, spec)
    sys.stdout.write(vec.csv())
    return 0


def cmd_test(args) -> int:
    g = _require_plain(_load_graph(args.first), "first graph")
    h = _require_plain(_load_graph(args.second), "second graph")
    relation = args.relation
    if decide_relation(g, h, relation):
        print("equivalent")
        return 0
    print("distinguished")
    if relation == "iso":
        spec = ClassSpec.named("all", max(g.n, h.n))
        witness = first_distinguisher(g, h, "left", spec)
        if witness is not None:
            code = canonical_form(witness).decode("ascii")
            print(f"{code},{count_hom(witness, g)},{count_hom(witness, h)}")
    return 1


def cmd_poly(args) -> int:
    g = _require_plain(_load_graph(args.graph), "graph")
    which = {
        "chromatic": chromatic_polynomial,
        "characteristic": characteristic_polynomial,
        "cep": cluster_expansion_polynomial,
        "independence": independence_polynomial,
    }[args.which]
    print(which(g).text())
    return 0


def cmd_param(args) -> int:
    g = _require_plain(_load_graph(args.graph), "graph")
    if args.which == "chi":
        print(chromatic_number(g))
    elif args.which == "omega":
        print(clique_number(g))
    elif args.which == "chif":
        print(_fraction_text(fractional_chromatic_number(g)))
    elif args.which == "omegaf":
        print(_fraction_text(fractional_clique_number(g)))
    return 0


def cmd_suite(args) -> int:
    try:
        ok = suites.run_suite(args.name)
    except KeyError:
        names = ", ".join(sorted(suites.SUITES) + ["all"])
        raise ValidationError(f"unknown suite {args.name!r}; known: {names}") from None
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homvec", description="Exact homomorphism counting toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count maps between two graphs")
    p.add_argument("--mode", required=True, choices=("hom", "inj", "sur", "aut", "exists"))
    p.add_argument("--left", required=True, help="graph6 literal or @file")
    p.add_argument("--right", help="graph6 literal or @file (weighted JSON allowed for hom)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("vector", help="restricted homomorphism vector as CSV")
    p.add_argument("--side", required=True, choices=("left", "right"))
    p.add_argument("--class", dest="klass", required=True,
                   help="trees|cycles|paths|cliques|independents|all|tw<=w")
    p.add_argument("--bound", type=int, required=True, help="max member vertices")
    p.add_argument("graph", help="graph6 literal or @file")
    p.set_defaults(func=cmd_vector)

    p = sub.add_parser("test", help="decide an equivalence relation on two graphs")
    p.add_argument("--relation", required=True,
                   help="iso|fraciso|wl:k|cospectral|chromeq|homeq")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("poly", help="print a graph polynomial")
    p.add_argument("--which", required=True, choices=("chromatic", "characteristic", "cep", "independence"))
    p.add_argument("graph")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("param", help="print a coloring/clique parameter")
    p.add_argument("--which", required=True, choices=("chi", "omega", "chif", "omegaf"))
    p.add_argument("graph")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("suite", help="run an acceptance suite")
    p.add_argument("--name", required=True, help="suite name or 'all'")
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

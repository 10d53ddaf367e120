"""Desk-scale resource guards.

Every exhaustive operation is capped.  The caps can be rescaled globally
through the HOMVEC_GUARD_SCALE environment variable (a rational multiplier
such as "2" or "3/2"); structural format limits are never rescaled.
"""

import os
from fractions import Fraction

from .errors import GuardError

ENUM_GRAPHS_MAX = 8        # all-graph enumeration, vertices
ENUM_TREES_MAX = 12        # tree enumeration, vertices
TREEWIDTH_MAX = 10         # exact treewidth, vertices
DECOMPOSITION_MAX = 5      # decomposition identity, vertices per graph
WL_MAX_K = 3               # refinement dimension (structural, not scaled)
WL_MAX_TUPLES = 8000       # |V|^k tuple space
CHROMATIC_MAX = 12         # chromatic polynomial, vertices
CHARPOLY_MAX = 16          # characteristic polynomial, vertices
CEP_MAX_EDGES = 20         # cluster expansion, edges (2^|E| subsets)
MAX_INDEPENDENT_SETS = 1 << 15
GRAPH6_MAX_N = 62          # single-byte graph6 size (format limit, not scaled)

_ENV = "HOMVEC_GUARD_SCALE"


def scale() -> Fraction:
    raw = os.environ.get(_ENV)
    if raw is None:
        return Fraction(1)
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{_ENV} must be a rational number, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{_ENV} must be positive, got {raw!r}")
    return value


def scaled(limit: int) -> int:
    return int(limit * scale())


def check(guard: str, value: int, limit: int) -> None:
    """Raise GuardError naming `guard` if `value` exceeds the scaled limit."""
    bound = scaled(limit)
    if value > bound:
        raise GuardError(guard, f"requested {value}, limit {bound}")

"""Exact rational linear programming: dense-tableau simplex over Fractions
with a two-phase start and Bland anti-cycling.

Pivoting uses the most-negative reduced cost by default and switches to
Bland's rule after a run of degenerate pivots, which guarantees termination
while keeping typical pivot counts low.  Optimal assignments are re-checked
against every original constraint before being returned; there is no
tolerance anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError

RELATIONS = ("<=", "=", ">=")

_DEGENERATE_LIMIT = 24


@dataclass(frozen=True)
class LpProgram:
    sense: str            # "max", "min" or "feasibility"
    objective: tuple      # objective coefficients (all zero for feasibility)
    rows: tuple           # ((coeffs, relation, rhs), ...)
    lower_bounds: tuple = ()   # per-variable lower bounds, default all zero

    def __post_init__(self):
        if self.sense not in ("max", "min", "feasibility"):
            raise ValidationError(f"bad sense {self.sense!r}")
        n = len(self.objective)
        for coeffs, rel, _ in self.rows:
            if len(coeffs) != n:
                raise ValidationError("ragged constraint matrix")
            if rel not in RELATIONS:
                raise ValidationError(f"bad relation {rel!r}")
        if self.lower_bounds and len(self.lower_bounds) != n:
            raise ValidationError("lower_bounds length mismatch")

    @property
    def n_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    status: str           # "optimal", "infeasible" or "unbounded"
    value: Fraction | None
    assignment: tuple


def make_program(sense, objective, rows, lower_bounds=None) -> LpProgram:
    objective = tuple(Fraction(c) for c in objective)
    packed = tuple(
        (tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs))
        for coeffs, rel, rhs in rows
    )
    lbs = tuple(Fraction(b) for b in (lower_bounds or ()))
    return LpProgram(sense, objective, packed, lbs)


def _satisfies(program: LpProgram, x) -> bool:
    for coeffs, rel, rhs in program.rows:
        lhs = sum(c * v for c, v in zip(coeffs, x))
        if rel == "<=" and lhs > rhs:
            return False
        if rel == ">=" and lhs < rhs:
            return False
        if rel == "=" and lhs != rhs:
            return False
    lbs = program.lower_bounds or (Fraction(0),) * program.n_vars
    return all(v >= b for v, b in zip(x, lbs))


class _Tableau:
    """Row-0 is the objective row (maximization); basis[i] is the basic
    variable of constraint row i+1."""

    def __init__(self, rows, rhs, n_total):
        self.m = len(rows)
        self.n = n_total
        self.rows = rows          # list of lists of Fractions, length n_total
        self.rhs = rhs            # list of Fractions, length m
        self.obj = [Fraction(0)] * n_total
        self.obj_rhs = Fraction(0)
        self.basis = [0] * self.m

    def price_out(self):
        # make reduced costs of basic columns zero
        for i, b in enumerate(self.basis):
            c = self.obj[b]
            if c:
                self._add_row_to_obj(i, -c)

    def _add_row_to_obj(self, i, factor):
        row = self.rows[i]
        obj = self.obj
        for j in range(self.n):
            if row[j]:
                obj[j] += factor * row[j]
        self.obj_rhs += factor * self.rhs[i]

    def pivot(self, i, j):
        row = self.rows[i]
        inv = Fraction(1) / row[j]
        if inv != 1:
            self.rows[i] = row = [c * inv for c in row]
            self.rhs[i] *= inv
        for r in range(self.m):
            if r == i:
                continue
            factor = self.rows[r][j]
            if factor:
                target = self.rows[r]
                self.rows[r] = [a - factor * b for a, b in zip(target, row)]
                self.rhs[r] -= factor * self.rhs[i]
        factor = self.obj[j]
        if factor:
            self.obj = [a - factor * b for a, b in zip(self.obj, row)]
            self.obj_rhs -= factor * self.rhs[i]
        self.basis[i] = j

    def optimize(self, allowed):
        """Maximize; returns 'optimal' or 'unbounded'.  `allowed[j]` marks
        columns eligible to enter."""
        degenerate_run = 0
        while True:
            use_bland = degenerate_run >= _DEGENERATE_LIMIT
            enter = -1
            best = Fraction(0)
            for j in range(self.n):
                if not allowed[j]:
                    continue
                c = self.obj[j]
                if c < 0:
                    if use_bland:
                        enter = j
                        break
                    if c < best:
                        best = c
                        enter = j
            if enter == -1:
                return "optimal"
            leave = -1
            ratio = None
            for i in range(self.m):
                a = self.rows[i][enter]
                if a > 0:
                    r = self.rhs[i] / a
                    if ratio is None or r < ratio or (r == ratio and self.basis[i] < self.basis[leave]):
                        ratio = r
                        leave = i
            if leave == -1:
                return "unbounded"
            degenerate_run = degenerate_run + 1 if ratio == 0 else 0
            self.pivot(leave, enter)


def solve_lp(program: LpProgram) -> LpSolution:
    """Exact two-phase simplex.  The returned assignment of an optimal solve
    satisfies every constraint exactly."""
    n = program.n_vars
    lbs = list(program.lower_bounds) if program.lower_bounds else [Fraction(0)] * n

    # shift to x = x' + lb with x' >= 0
    rows = []
    for coeffs, rel, rhs in program.rows:
        shift = sum(c * b for c, b in zip(coeffs, lbs))
        rows.append((list(coeffs), rel, rhs - shift))

    maximize = program.sense != "min"
    obj = [Fraction(c) if maximize else -Fraction(c) for c in program.objective]
    obj_shift = sum(c * b for c, b in zip(program.objective, lbs))

    # structural columns + one slack/surplus per inequality + artificials
    n_slack = sum(1 for _, rel, _ in rows if rel != "=")
    total = n + n_slack
    tab_rows = []
    rhs_col = []
    slack_at = 0
    artificial_of = []
    for coeffs, rel, rhs in rows:
        row = [Fraction(0)] * total
        row[:n] = [Fraction(c) for c in coeffs]
        if rel != "=":
            row[n + slack_at] = Fraction(1 if rel == "<=" else -1)
            slack_at += 1
        if rhs < 0:
            row = [-c for c in row]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        tab_rows.append(row)
        rhs_col.append(rhs)
        # a +1 slack with rhs >= 0 can start basic; all other rows need an
        # artificial variable
        artificial_of.append(None if rel == "<=" else True)

    # attach artificial columns
    art_cols = []
    for i, flag in enumerate(artificial_of):
        if flag:
            art_cols.append(i)
    full = total + len(art_cols)
    for i, row in enumerate(tab_rows):
        row.extend([Fraction(0)] * len(art_cols))
    for a, i in enumerate(art_cols):
        tab_rows[i][total + a] = Fraction(1)

    tab = _Tableau(tab_rows, rhs_col, full)

    # initial basis: slacks where ready, artificials elsewhere
    art_iter = 0
    slack_col_of_row = {}
    col = n
    for i, (coeffs, rel, rhs) in enumerate(rows):
        if rel != "=":
            slack_col_of_row[i] = col
            col += 1
    for i, flag in enumerate(artificial_of):
        if flag:
            tab.basis[i] = total + art_iter
            art_iter += 1
        else:
            tab.basis[i] = slack_col_of_row[i]

    allowed = [True] * full

    if art_cols:
        # phase 1: maximize -(sum of artificials)
        tab.obj = [Fraction(0)] * full
        for a in range(len(art_cols)):
            tab.obj[total + a] = Fraction(1)
        tab.obj_rhs = Fraction(0)
        tab.price_out()
        tab.optimize(allowed)
        if tab.obj_rhs != 0:
            return LpSolution("infeasible", None, ())
        # drive surviving artificials out of the basis
        for i in range(tab.m):
            if tab.basis[i] >= total:
                pivot_col = next((j for j in range(total) if tab.rows[i][j] != 0), None)
                if pivot_col is None:
                    continue  # redundant row
                tab.pivot(i, pivot_col)
        for a in range(len(art_cols)):
            allowed[total + a] = False

    # phase 2
    tab.obj = [-c for c in obj] + [Fraction(0)] * (full - n)
    tab.obj_rhs = Fraction(0)
    tab.price_out()
    status = tab.optimize(allowed)
    if status == "unbounded":
        return LpSolution("unbounded", None, ())

    assignment = [Fraction(0)] * n
    for i, b in enumerate(tab.basis):
        if b < n:
            assignment[b] = tab.rhs[i]
    x = tuple(v + b for v, b in zip(assignment, lbs))
    value = sum(c * v for c, v in zip(program.objective, x))
    if not _satisfies(program, x):
        raise AssertionError("simplex returned an assignment violating a constraint")
    return LpSolution("optimal", value, x)


def dualize(program: LpProgram) -> LpProgram:
    """Textbook dual of a standard-form program: min c.x over Ax >= b, x >= 0
    becomes max b.y over A^T y <= c, y >= 0, and conversely."""
    if program.lower_bounds and any(b != 0 for b in program.lower_bounds):
        raise ValidationError("dualize expects default lower bounds")
    rels = {rel for _, rel, _ in program.rows}
    if program.sense == "min" and rels <= {">="}:
        out_sense, out_rel = "max", "<="
    elif program.sense == "max" and rels <= {"<="}:
        out_sense, out_rel = "min", ">="
    else:
        raise ValidationError("dualize expects min with all >= rows or max with all <= rows")
    m = len(program.rows)
    n = program.n_vars
    objective = tuple(rhs for _, _, rhs in program.rows)
    rows = []
    for j in range(n):
        coeffs = tuple(program.rows[i][0][j] for i in range(m))
        rows.append((coeffs, out_rel, program.objective[j]))
    return LpProgram(out_sense, objective, tuple(rows))


def lp_text(program: LpProgram) -> str:
    """Plain-text dump (debugging aid)."""

    def frac(x):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    head = "feasibility" if program.sense == "feasibility" else (
        f"{program.sense} " + " + ".join(f"{frac(c)}*x{j}" for j, c in enumerate(program.objective) if c)
    )
    lines = [head or "feasibility"]
    for coeffs, rel, rhs in program.rows:
        lhs = " + ".join(f"{frac(c)}*x{j}" for j, c in enumerate(coeffs) if c) or "0"
        lines.append(f"{lhs} {rel} {frac(rhs)}")
    return "\n".join(lines) + "\n"

"""Exact arithmetic substrate: semirings and sparse rational polynomials.

Counts are plain Python integers (arbitrary precision); rationals are
fractions.Fraction, always in lowest terms with positive denominator.
Polynomials are univariate or bivariate with exact rational coefficients,
stored sparsely by exponent tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import ValidationError


# ---------------------------------------------------------------------------
# semirings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemiringSpec:
    """A commutative-addition semiring: (carrier, add, mul, zero, one).

    `contains` tests carrier membership, `eq` is the carrier equality, and
    `sample` draws a carrier element from a random.Random (used by the law
    checks in the test suite).
    """

    name: str
    add: Callable
    mul: Callable
    zero: object
    one: object
    eq: Callable = field(default=lambda a, b: a == b)
    contains: Callable = field(default=lambda x: True)
    sample: Callable | None = None

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def product(self, items):
        acc = self.one
        for x in items:
            acc = self.mul(acc, x)
        return acc


def _is_natural(x) -> bool:
    if isinstance(x, int):
        return x >= 0
    if isinstance(x, Fraction):
        return x.denominator == 1 and x >= 0
    return False


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def _bool_add(a, b):
    return 1 if (a == 1 or b == 1) else 0


def _bool_mul(a, b):
    return 1 if (a == 1 and b == 1) else 0


_INSTANCES = {
    "naturals": SemiringSpec(
        name="naturals",
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        zero=0,
        one=1,
        contains=_is_natural,
        sample=lambda rng: rng.randrange(0, 20),
    ),
    "boolean": SemiringSpec(
        name="boolean",
        add=_bool_add,
        mul=_bool_mul,
        zero=0,
        one=1,
        contains=lambda x: x == 0 or x == 1,
        sample=lambda rng: rng.randrange(0, 2),
    ),
    "rationals": SemiringSpec(
        name="rationals",
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        zero=Fraction(0),
        one=Fraction(1),
        contains=_is_rational,
        sample=lambda rng: Fraction(rng.randrange(-12, 13), rng.randrange(1, 8)),
    ),
}


def semiring_instance(name: str) -> SemiringSpec:
    try:
        return _INSTANCES[name]
    except KeyError:
        raise ValidationError(f"unknown semiring {name!r}; known: {sorted(_INSTANCES)}") from None


def semiring_from_tables(elements, add_table, mul_table, zero, one, name="custom") -> SemiringSpec:
    """Finite semiring given by operation tables (dict-of-dicts or dict on
    pairs).  The semiring laws are checked exhaustively on construction."""
    elems = list(elements)

    def lookup(table, a, b):
        if (a, b) in table:
            return table[(a, b)]
        return table[a][b]

    add = lambda a, b: lookup(add_table, a, b)
    mul = lambda a, b: lookup(mul_table, a, b)
    for a in elems:
        if add(a, zero) != a or add(zero, a) != a:
            raise ValidationError(f"zero is not an additive identity at {a!r}")
        if mul(a, one) != a or mul(one, a) != a:
            raise ValidationError(f"one is not a multiplicative identity at {a!r}")
        if mul(a, zero) != zero or mul(zero, a) != zero:
            raise ValidationError(f"zero does not annihilate at {a!r}")
        for b in elems:
            if add(a, b) != add(b, a):
                raise ValidationError(f"addition not commutative at {a!r},{b!r}")
            for c in elems:
                if add(add(a, b), c) != add(a, add(b, c)):
                    raise ValidationError("addition not associative")
                if mul(mul(a, b), c) != mul(a, mul(b, c)):
                    raise ValidationError("multiplication not associative")
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                    raise ValidationError("left distributivity fails")
                if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
                    raise ValidationError("right distributivity fails")
    return SemiringSpec(
        name=name,
        add=add,
        mul=mul,
        zero=zero,
        one=one,
        contains=lambda x: x in elems,
        sample=lambda rng: rng.choice(elems),
    )


# ---------------------------------------------------------------------------
# exact polynomials
# ---------------------------------------------------------------------------

_VARS = ("x", "y")


class Polynomial:
    """Sparse exact polynomial in one or two variables.

    Coefficients are Fractions; zero coefficients are never stored.  The text
    form lists terms in ascending (graded-lex for two variables) order.
    """

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity: int, coeffs=None):
        if arity not in (1, 2):
            raise ValidationError(f"arity must be 1 or 2, got {arity}")
        self.arity = arity
        cleaned = {}
        for expo, c in (coeffs or {}).items():
            expo = tuple(expo)
            if len(expo) != arity or any(e < 0 for e in expo):
                raise ValidationError(f"bad exponent {expo} for arity {arity}")
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                cleaned[expo] = c
        self.coeffs = cleaned

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(value, arity=1) -> "Polynomial":
        return Polynomial(arity, {(0,) * arity: Fraction(value)})

    @staticmethod
    def variable(index=0, arity=1) -> "Polynomial":
        expo = [0] * arity
        expo[index] = 1
        return Polynomial(arity, {tuple(expo): Fraction(1)})

    @staticmethod
    def monomial(expo, coeff=1) -> "Polynomial":
        expo = tuple(expo)
        return Polynomial(len(expo), {expo: Fraction(coeff)})

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.arity != other.arity:
            raise ValidationError("polynomial arity mismatch")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.arity)
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(self.arity, out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.arity)
        return self + (other * -1)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.arity)
        self._check(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.arity, out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int):
        if k < 0:
            raise ValidationError("negative power")
        out = Polynomial.constant(1, self.arity)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.arity == other.arity
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.arity, tuple(sorted(self.coeffs.items()))))

    # -- queries ------------------------------------------------------------

    def degree(self) -> int:
        if not self.coeffs:
            return 0
        return max(sum(e) for e in self.coeffs)

    def coefficient(self, expo) -> Fraction:
        return self.coeffs.get(tuple(expo), Fraction(0))

    def eval(self, *point) -> Fraction:
        if len(point) != self.arity:
            raise ValidationError(f"expected {self.arity} coordinates, got {len(point)}")
        point = tuple(Fraction(p) for p in point)
        total = Fraction(0)
        for expo, c in self.coeffs.items():
            term = c
            for p, e in zip(point, expo):
                term *= p**e
            total += term
        return total

    # -- printing -----------------------------------------------------------

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        if self.arity == 1:
            ordered = sorted(self.coeffs)
        else:
            ordered = sorted(self.coeffs, key=lambda e: (sum(e), -e[0]))
        pieces = []
        for expo in ordered:
            c = self.coeffs[expo]
            factors = []
            for var, e in zip(_VARS, expo):
                if e == 1:
                    factors.append(var)
                elif e > 1:
                    factors.append(f"{var}^{e}")
            mag = abs(c)
            mag_str = _fraction_text(mag)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([mag_str] + factors)
            else:
                body = mag_str
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    __str__ = text

    def __repr__(self):
        return f"Polynomial({self.text()!r})"


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def poly_eval(p: Polynomial, *point) -> Fraction:
    return p.eval(*point)


def poly_interpolate(points, degree: int) -> Polynomial:
    """Unique interpolant of degree <= `degree` through degree+1 points with
    distinct abscissae (Newton's divided differences, exact)."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if len(pts) != degree + 1:
        raise ValidationError(f"need exactly {degree + 1} points, got {len(pts)}")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValidationError("duplicate abscissae")
    coeffs = [y for _, y in pts]
    for level in range(1, len(pts)):
        for i in range(len(pts) - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])
    result = Polynomial.constant(0)
    basis = Polynomial.constant(1)
    x = Polynomial.variable()
    for i, c in enumerate(coeffs):
        result = result + basis * c
        basis = basis * (x - Polynomial.constant(xs[i]))
    return result


def falling_factorial(n: int) -> Polynomial:
    """x(x-1)...(x-n+1); the empty product for n=0."""
    x = Polynomial.variable()
    out = Polynomial.constant(1)
    for i in range(n):
        out = out * (x - Polynomial.constant(i))
    return out

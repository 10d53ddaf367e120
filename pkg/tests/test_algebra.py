import math
import random
from fractions import Fraction

import pytest

from homvec import (
    Polynomial,
    ValidationError,
    poly_eval,
    poly_interpolate,
    semiring_from_tables,
    semiring_instance,
    standard_graph,
)
from homvec.algebra import falling_factorial
from oracles import brute_coloring_count


def test_named_instances():
    booleans = semiring_instance("boolean")
    assert booleans.add(1, 1) == 1
    assert booleans.mul(1, 0) == 0
    naturals = semiring_instance("naturals")
    assert naturals.mul(3, 4) == 12
    rationals = semiring_instance("rationals")
    assert rationals.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    with pytest.raises(ValidationError):
        semiring_instance("tropical")


def test_carrier_membership():
    assert semiring_instance("naturals").contains(Fraction(3))
    assert not semiring_instance("naturals").contains(Fraction(1, 2))
    assert not semiring_instance("boolean").contains(2)
    assert semiring_instance("rationals").contains(Fraction(-7, 3))


@pytest.mark.parametrize("name", ["naturals", "boolean", "rationals"])
def test_semiring_laws_on_samples(name):
    ring = semiring_instance(name)
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(100):
        a, b, c = (ring.sample(rng) for _ in range(3))
        assert ring.eq(ring.add(a, b), ring.add(b, a))
        assert ring.eq(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)))
        assert ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)))
        assert ring.eq(ring.add(a, ring.zero), a)
        assert ring.eq(ring.mul(a, ring.one), a)
        assert ring.eq(ring.mul(a, ring.zero), ring.zero)
        assert ring.eq(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)))


def test_custom_table_semiring():
    # GF(2) as a table: xor / and
    elems = (0, 1)
    add = {(a, b): a ^ b for a in elems for b in elems}
    mul = {(a, b): a & b for a in elems for b in elems}
    ring = semiring_from_tables(elems, add, mul, 0, 1)
    assert ring.add(1, 1) == 0
    assert ring.mul(1, 1) == 1

    bad_add = dict(add)
    bad_add[(0, 1)] = 0  # breaks commutativity with (1,0) -> 1
    with pytest.raises(ValidationError):
        semiring_from_tables(elems, bad_add, mul, 0, 1)


def test_fraction_arithmetic_against_cross_multiplication():
    rng = random.Random(99)
    for _ in range(1000):
        a, b = rng.randrange(-50, 51), rng.randrange(1, 40)
        c, d = rng.randrange(-50, 51), rng.randrange(1, 40)
        total = Fraction(a, b) + Fraction(c, d)
        assert total == Fraction(a * d + c * b, b * d)
        assert math.gcd(total.numerator, total.denominator) == 1
        assert total.denominator > 0
        prod = Fraction(a, b) * Fraction(c, d)
        assert prod == Fraction(a * c, b * d)


def test_polynomial_basics():
    x = Polynomial.variable()
    p = (x - 1) ** 2
    assert p.eval(3) == 4
    assert p.coefficient((2,)) == 1
    assert p.text() == "1 - 2*x + x^2"
    zero = p - p
    assert zero.text() == "0" and not zero.coeffs

    two_var = Polynomial(2, {(2, 0): 1, (1, 1): 1})
    assert two_var.text() == "x^2 + x*y"
    assert two_var.eval(2, 3) == 10
    with pytest.raises(ValidationError):
        two_var.eval(2)

    # evaluation at the all-zero point picks out the constant term
    mixed = Polynomial(1, {(0,): Fraction(7, 2), (3,): 5})
    assert mixed.eval(0) == Fraction(7, 2)
    assert (two_var + 4).eval(0, 0) == 4


def test_chromatic_value_of_triangle():
    chrom = falling_factorial(3)
    assert poly_eval(chrom, 3) == 6 == brute_coloring_count(standard_graph("clique", 3), 3)


def test_interpolation_reconstructs_path_coloring_polynomial():
    p3 = standard_graph("path", 3)
    points = [(k, brute_coloring_count(p3, k)) for k in range(4)]
    assert points == [(0, 0), (1, 0), (2, 2), (3, 12)]
    poly = poly_interpolate(points, 3)
    x = Polynomial.variable()
    assert poly == x * (x - 1) ** 2


def test_interpolation_line_and_validation():
    line = poly_interpolate([(0, 1), (2, 5)], 1)
    assert line == Polynomial(1, {(0,): 1, (1,): 2})
    with pytest.raises(ValidationError):
        poly_interpolate([(0, 0), (0, 1)], 1)
    with pytest.raises(ValidationError):
        poly_interpolate([(0, 0), (1, 1), (2, 2)], 1)


def test_interpolation_hits_eight_ring_closed_form():
    x = Polynomial.variable()
    closed = (x - 1) ** 8 + (x - 1)
    points = [(k, closed.eval(k)) for k in range(9)]
    assert poly_interpolate(points, 8) == closed


def test_interpolation_round_trip_random():
    rng = random.Random(3)
    for _ in range(20):
        degree = rng.randrange(0, 5)
        points = []
        xs = rng.sample(range(-10, 11), degree + 1)
        for xv in xs:
            points.append((Fraction(xv), Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))))
        poly = poly_interpolate(points, degree)
        for xv, yv in points:
            assert poly.eval(xv) == yv


def test_text_rational_coefficients():
    p = Polynomial(1, {(0,): Fraction(1, 2), (1,): Fraction(-3, 4)})
    assert p.text() == "1/2 - 3/4*x"

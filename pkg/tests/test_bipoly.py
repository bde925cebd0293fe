import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lojex.bipoly import (
    BiPoly,
    UniPoly,
    partial_derivative,
    specialize,
    sturm_chain,
    sturm_real_root_count,
    uni_gcd,
)
from lojex.parse import parse_polynomial as P
from oracles import grid_root_count, random_separated_poly

X, Y = BiPoly.var(1), BiPoly.var(2)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
bipolys = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 5)), rationals, max_size=6
).map(BiPoly)
unipolys = st.lists(rationals, max_size=7).map(UniPoly)


def test_addition_cancels():
    assert (X + Y) + (X - Y) == BiPoly({(1, 0): 2})


def test_zero_absorbs():
    assert ((X + Y) * BiPoly.zero()).is_zero()
    assert ((X + Y) * 0).is_zero()


def test_product_expands():
    f = Y * (X**5 + X * Y**12 + Y**15)
    assert f == BiPoly({(5, 1): 1, (1, 13): 1, (0, 16): 1})


def test_invariants_no_zero_coefficients():
    p = BiPoly({(1, 0): 1, (0, 1): 0, (2, 2): Fraction(0)})
    assert p.terms == {(1, 0): 1}
    assert BiPoly({}).is_zero()
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): 1})


def test_coefficients_exact():
    assert BiPoly({(1, 0): "0.5"}).coeff(1, 0) == Fraction(1, 2)
    with pytest.raises(TypeError):
        BiPoly({(1, 0): 0.5})


@pytest.mark.parametrize(
    "text, axis, expected",
    [
        ("x^3 + x*y^6 + y^9", 1, {(2, 0): 3, (0, 6): 1}),
        ("x^3", 2, {}),
        ("x^3 - x*y^6 + y^9", 1, {(2, 0): 3, (0, 6): -1}),
    ],
)
def test_partial_derivative(text, axis, expected):
    assert partial_derivative(P(text), axis) == BiPoly(expected)


def test_partial_derivative_by_term_oracle():
    # term-by-term: d/dx c x^a y^b = a c x^(a-1) y^b
    p = P("x^3 - x*y^6 + y^9")
    manual = BiPoly()
    for (a, b), c in p.items():
        if a:
            manual = manual + BiPoly.monomial(a - 1, b, a * c)
    assert p.derivative(1) == manual


@pytest.mark.parametrize(
    "text, axis, value, coeffs",
    [
        ("3x^2 + y^6", 2, 1, [1, 0, 3]),
        ("3x^2 - y^6", 2, -1, [-1, 0, 3]),
        ("x*y", 1, 0, []),
    ],
)
def test_specialize(text, axis, value, coeffs):
    assert specialize(P(text), axis, value) == UniPoly(coeffs)


def test_specialize_matches_evaluation():
    p = P("x^3 - 2x*y^6 + 1/3y^9 + x^2y")
    s = p.specialize(2, Fraction(-2, 3))
    for u in (Fraction(0), Fraction(5, 7), Fraction(-3)):
        assert s(u) == p.evaluate(u, Fraction(-2, 3))


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ([-1, 0, 1], [-1, 1], [-1, 1]),
        ([-1, 0, 3], [9, -6], [1]),
        ([0, 0, 0, 1], [0, 0, 1], [0, 0, 1]),
    ],
)
def test_gcd_examples(p, q, expected):
    assert uni_gcd(UniPoly(p), UniPoly(q)) == UniPoly(expected)


def test_gcd_of_zeros():
    with pytest.raises(ValueError, match="gcd undefined"):
        uni_gcd(UniPoly([]), UniPoly([]))
    assert uni_gcd(UniPoly([2, 4]), UniPoly([])) == UniPoly([Fraction(1, 2), 1])


@pytest.mark.parametrize(
    "coeffs, n",
    [([1, 0, 1], 0), ([-1, 0, 1], 2), ([1, 0, 0, 0, 5], 0), ([-1, 0, 3], 2)],
)
def test_sturm_examples(coeffs, n):
    assert sturm_real_root_count(UniPoly(coeffs)) == n


def test_sturm_counts_distinct_roots():
    p = UniPoly.from_roots([1, 1, 1, 2, -3, -3])
    assert sturm_real_root_count(p) == 3
    assert sturm_real_root_count(UniPoly([7])) == 0


def test_sturm_zero_polynomial():
    with pytest.raises(ValueError):
        sturm_real_root_count(UniPoly([]))


def test_sturm_chain_ends_before_zero_remainder():
    chain = sturm_chain(UniPoly([-1, 0, 0, 1]))
    assert all(q for q in chain)
    assert chain[-1].degree == 0


def test_sturm_against_grid_oracle():
    rng = random.Random(7)
    for _ in range(60):
        p = random_separated_poly(rng)
        assert sturm_real_root_count(p) == grid_root_count(p), p


@given(bipolys, bipolys, bipolys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * q == q * p
    assert (p + (-p)).is_zero()
    assert p - q == p + (-q)


@given(bipolys)
def test_mixed_partials_commute(p):
    assert p.derivative(1).derivative(2) == p.derivative(2).derivative(1)


@given(bipolys, st.integers(0, 4))
def test_power_is_repeated_product(p, n):
    expected = BiPoly.constant(1)
    for _ in range(n):
        expected = expected * p
    assert p**n == expected


@given(unipolys, unipolys)
def test_gcd_divides_both(p, q):
    if p.is_zero() and q.is_zero():
        return
    g = uni_gcd(p, q)
    assert g.leading == 1
    assert (p % g).is_zero() and (q % g).is_zero()
    if not p.is_zero() and not q.is_zero():
        assert g.degree <= min(p.degree, q.degree)


@given(unipolys, unipolys)
def test_division_identity(p, q):
    if q.is_zero():
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@settings(max_examples=50)
@given(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=1, max_size=6, unique=True))
def test_sturm_on_products_of_linear_factors(roots):
    assert sturm_real_root_count(UniPoly.from_roots(roots)) == len(roots)


def test_unipoly_format():
    assert UniPoly([-1, 0, 3]).format() == "3u^2 - 1"
    assert UniPoly([1, 0, 0, 0, -5]).format() == "-5u^4 + 1"
    assert UniPoly([]).format() == "0"
    assert UniPoly([Fraction(-1, 3), 0, 1]).format() == "u^2 - 1/3"

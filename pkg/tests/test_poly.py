"""Kernel tests: polynomials, normal forms, graded bases.

Derived expected values are computed with independent oracles (long division,
exhaustive enumeration, series coefficients) and frozen here.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kirwanlab.errors import CustomBasisNotABasis
from kirwanlab.exactcore import (
    QuotientRing,
    add,
    graded_basis,
    monomial,
    mul_raw,
    normal_form,
    product_of_linear_factors,
    ring_product,
    scale,
    sub,
    variable,
)


def ring_one_var(weights):
    """Q[t, x] / prod_a (x - j_a t)."""
    rel = product_of_linear_factors(2, 1, 0, weights)
    return QuotientRing(("t", "x"), {1: rel})


def cp13_ring():
    relations = {
        i + 1: product_of_linear_factors(4, i + 1, 0, [0, 2**i]) for i in range(3)
    }
    return QuotientRing(("t", "x0", "x1", "x2"), relations)


# Long-division oracle: x^2 divided by x^2 - 2tx leaves remainder 2tx.
def test_normal_form_one_division_step():
    ring = ring_one_var([0, 2])
    x2 = monomial((0, 2))
    assert normal_form(x2, ring) == {(1, 1): Fraction(2)}


def test_normal_form_fixes_t_powers():
    ring = ring_one_var([0, 2])
    t3 = monomial((3, 0))
    assert normal_form(t3, ring) == t3


def test_normal_form_below_leading_power_is_identity():
    ring = ring_one_var([1, 2, 5])
    x2 = monomial((0, 2))
    assert normal_form(x2, ring) == x2


def test_relations_reduce_to_zero():
    ring = ring_one_var([0, 2])
    assert normal_form(ring.relations[1], ring) == {}
    big = cp13_ring()
    for rel in big.relations.values():
        assert normal_form(rel, big) == {}


def test_ring_product_identity_and_division_oracle():
    ring = ring_one_var([0, 2])
    one = monomial((0, 0))
    beta = add(monomial((1, 1), 3), monomial((2, 0), Fraction(1, 2)))
    assert ring_product(one, beta, ring) == beta
    x = monomial((0, 1))
    assert ring_product(x, x, ring) == {(1, 1): Fraction(2)}


def test_relation_generator_multiplies_to_zero():
    ring = ring_one_var([1, 2, 5])
    f1 = sub(monomial((0, 1)), monomial((1, 0), 1))
    f2 = sub(monomial((0, 1)), monomial((1, 0), 2))
    f3 = sub(monomial((0, 1)), monomial((1, 0), 5))
    assert ring_product(ring_product(f1, f2, ring), f3, ring) == {}


def test_graded_basis_standard_cp13_degree4():
    # Exhaustive enumeration oracle: monomials t^a x0^e0 x1^e1 x2^e2 with
    # a + e0 + e1 + e2 = 2 and e_i <= 1, in the alphabet order.
    ring = cp13_ring()
    expected = [
        (2, 0, 0, 0),
        (1, 1, 0, 0),
        (1, 0, 1, 0),
        (1, 0, 0, 1),
        (0, 1, 1, 0),
        (0, 1, 0, 1),
        (0, 0, 1, 1),
    ]
    assert graded_basis(ring, 4) == expected


def test_graded_basis_custom_accepts_published_degree4_basis():
    ring = cp13_ring()
    custom = [
        (2, 0, 0, 0),
        (0, 2, 0, 0),
        (0, 1, 1, 0),
        (0, 1, 0, 1),
        (0, 0, 2, 0),
        (0, 0, 1, 1),
        (0, 0, 0, 2),
    ]
    assert graded_basis(ring, 4, custom) == custom


def test_graded_basis_degree_zero():
    ring = ring_one_var([0, 1])
    assert graded_basis(ring, 0) == [(0, 0)]


def test_graded_basis_custom_rejects_dependent_set():
    ring = cp13_ring()
    # x0^2 reduces to t*x0, so {t^2, x0^2, t*x0, ...} is dependent.
    custom = [
        (2, 0, 0, 0),
        (0, 2, 0, 0),
        (1, 1, 0, 0),
        (1, 0, 0, 1),
        (0, 1, 1, 0),
        (0, 1, 0, 1),
        (0, 0, 1, 1),
    ]
    with pytest.raises(CustomBasisNotABasis):
        graded_basis(ring, 4, custom)


def test_graded_basis_custom_rejects_wrong_cardinality():
    ring = ring_one_var([0, 1])
    # the degree-2 piece is two dimensional ({t, x}); one monomial is too few
    with pytest.raises(CustomBasisNotABasis):
        graded_basis(ring, 2, [(1, 0)])


def test_graded_basis_custom_rejects_wrong_degree():
    ring = ring_one_var([0, 1])
    with pytest.raises(CustomBasisNotABasis):
        graded_basis(ring, 2, [(2, 0), (0, 1)])


def poincare_dimension(ns, q):
    """Coefficient of s^(2q) in (1/(1-s^2)) * prod_i (1 + s^2 + ... + s^(2 n_i)).

    Independent series oracle for the size of the standard basis.
    """
    coeffs = [1] * (q + 1)  # 1/(1-s^2) in the s^2 variable
    for n in ns:
        new = [0] * (q + 1)
        for a in range(q + 1):
            for b in range(min(n, q - a) + 1):
                new[a + b] += coeffs[a]
        coeffs = new
    return coeffs[q]


@pytest.mark.parametrize("ns", [[1], [2], [1, 1], [2, 1], [1, 1, 1], [2, 2, 2]])
def test_standard_basis_matches_poincare_series(ns):
    nvars = len(ns) + 1
    relations = {}
    for i, n in enumerate(ns):
        weights = list(range(n + 1))
        relations[i + 1] = product_of_linear_factors(nvars, i + 1, 0, weights)
    ring = QuotientRing(tuple(["t"] + [f"x{i}" for i in range(len(ns))]), relations)
    for q in range(0, 8):
        assert len(ring.standard_basis(2 * q)) == poincare_dimension(ns, q)


# -- randomized algebra properties -------------------------------------------


def rand_poly(draw, nvars, max_exp=3, max_terms=4):
    terms = draw(
        st.lists(
            st.tuples(
                st.tuples(*[st.integers(0, max_exp) for _ in range(nvars)]),
                st.fractions(min_value=-20, max_value=20, max_denominator=6),
            ),
            max_size=max_terms,
        )
    )
    p = {}
    for mono, coeff in terms:
        p = add(p, monomial(mono, coeff) if coeff else {})
    return p


@st.composite
def cp13_polys(draw):
    return rand_poly(draw, 4)


@given(cp13_polys())
@settings(max_examples=120, deadline=None)
def test_normal_form_idempotent(p):
    ring = cp13_ring()
    once = normal_form(p, ring)
    assert normal_form(once, ring) == once


@given(cp13_polys(), cp13_polys())
@settings(max_examples=100, deadline=None)
def test_ring_product_commutative(a, b):
    ring = cp13_ring()
    assert ring_product(a, b, ring) == ring_product(b, a, ring)


@given(cp13_polys(), cp13_polys(), cp13_polys())
@settings(max_examples=60, deadline=None)
def test_ring_product_associative(a, b, c):
    ring = cp13_ring()
    left = ring_product(ring_product(a, b, ring), c, ring)
    right = ring_product(a, ring_product(b, c, ring), ring)
    assert left == right


@given(cp13_polys())
@settings(max_examples=60, deadline=None)
def test_normal_form_respects_ideal(p):
    # adding any relation multiple does not change the normal form
    ring = cp13_ring()
    noise = mul_raw(ring.relations[2], scale(p, Fraction(3, 7)))
    assert normal_form(add(p, noise), ring) == normal_form(p, ring)


def test_two_parameter_ring_rewrite():
    # u^2 -> (t1 + t2) u - t1 t2 in Q[t1,t2,u]/((u - t1)(u - t2))
    rel = mul_raw(
        sub(variable(3, 2), variable(3, 0)), sub(variable(3, 2), variable(3, 1))
    )
    ring = QuotientRing(("t1", "t2", "u"), {2: rel})
    u2 = monomial((0, 0, 2))
    expected = {
        (1, 0, 1): Fraction(1),
        (0, 1, 1): Fraction(1),
        (1, 1, 0): Fraction(-1),
    }
    assert normal_form(u2, ring) == expected

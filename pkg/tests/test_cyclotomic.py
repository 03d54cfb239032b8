import cmath
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from eqeuler.cyclotomic import Cyclotomic, cyclotomic_poly

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 12, 15]


@st.composite
def cyclotomics(draw, conductors=CONDUCTORS):
    e = draw(st.sampled_from(conductors))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=e))
    return Cyclotomic.from_powers(e, coeffs)


def close(a, b):
    return abs(a - b) < 1e-9


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)


def test_roots_of_unity():
    z = Cyclotomic.zeta(3)
    assert z ** 3 == 1
    assert 1 + z + z * z == 0
    i = Cyclotomic.zeta(4)
    assert i * i == -1
    assert Cyclotomic.zeta(6) == -(Cyclotomic.zeta(3) ** 2)


def test_rational_embedding_and_equality_across_conductors():
    assert Cyclotomic.rational(Fraction(1, 2)) == Fraction(1, 2)
    assert Cyclotomic.zeta(4).lift(12) == Cyclotomic.zeta(4)
    assert hash(Cyclotomic.zeta(4).lift(12)) == hash(Cyclotomic.zeta(4))
    assert Cyclotomic.zeta(12, 3) == Cyclotomic.zeta(4)


def test_non_rational_to_fraction_raises():
    with pytest.raises(ValueError):
        Cyclotomic.zeta(3).to_fraction()


@settings(max_examples=80, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_ring_operations_match_complex_numbers(a, b):
    assert close((a + b).to_complex(), a.to_complex() + b.to_complex())
    assert close((a - b).to_complex(), a.to_complex() - b.to_complex())
    assert close((a * b).to_complex(), a.to_complex() * b.to_complex())
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(cyclotomics())
def test_inverse_and_conjugate(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1
    assert close(a.conj().to_complex(), a.to_complex().conjugate())
    assert (a * a.conj()).conj() == a * a.conj()


@settings(max_examples=60, deadline=None)
@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(cyclotomics([5, 8, 12]))
def test_galois_action_is_a_ring_hom(a):
    e = a.e
    for k in range(1, e):
        if gcd(k, e) == 1:
            assert (a * a).galois(k) == a.galois(k) * a.galois(k)
            assert close(a.galois(k).to_complex(), sum(
                complex(c) * cmath.exp(2j * cmath.pi * k * j / e) for j, c in enumerate(a.coefficients())
            ))


@settings(max_examples=60, deadline=None)
@given(cyclotomics())
def test_json_round_trip(a):
    assert Cyclotomic.from_json(a.to_json()) == a
    for s in a.to_json()["coeffs"]:
        num, den = s.split("/")
        assert int(den) > 0


@settings(max_examples=60, deadline=None)
@given(cyclotomics())
def test_canonical_form_is_minimal(a):
    c = a.canonical()
    assert c == a
    assert a.e % c.e == 0

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinring.poly import Poly, parse_poly

VARS = ("x", "y", "~c1'", "B")


@st.composite
def polys(draw, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(sorted((v, e) for v, e in draw(st.dictionaries(st.sampled_from(VARS), st.integers(1, 3),
                                                                     max_size=3)).items()))
        terms[mono] = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 3)))
    return Poly(terms)


@given(polys(), polys())
def test_commutative(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polys(), polys(), polys())
def test_associative_and_distributive(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys())
def test_identities(p):
    assert p + Poly() == p
    assert p * Poly.const(1) == p
    assert (p - p).is_zero()


@given(polys())
def test_text_round_trip(p):
    assert parse_poly(p.to_str()) == p


@given(polys(), st.integers(-3, 3), st.integers(-3, 3))
def test_subs_is_a_homomorphism(p, a, b):
    m = {"x": a, "y": Poly.var("y") + b}
    q = Poly.var("x") * Poly.var("y") + 1
    assert (p * q).subs(m) == p.subs(m) * q.subs(m)


def test_parse_basics():
    assert parse_poly("(x + 1)^2") == Poly.var("x") * Poly.var("x") + Poly.var("x") * 2 + 1
    assert parse_poly("2*b'*~c1 - 1/2").terms[()] == Fraction(-1, 2)
    assert parse_poly("0").is_zero()


def test_parse_error():
    with pytest.raises(ValueError):
        parse_poly("x + * y")


def test_degree_and_homogeneity():
    p = parse_poly("x^2*y + y^3")
    assert p.degree() == 3
    assert p.is_homogeneous()
    assert not parse_poly("x + 1").is_homogeneous()

from hypothesis import given
from hypothesis import strategies as st

import pytest

from skeinring.coeff import (
    ProfileError, RingElem, fraction_eq, normal_form, parse_ringelem, ringelem_from_json, shift_T,
)
from skeinring.poly import parse_poly
from skeinring.profiles import get_profile


@st.composite
def ring_elems(draw):
    out = RingElem()
    for _ in range(draw(st.integers(0, 3))):
        h = draw(st.one_of(st.none(), st.integers(-4, 4)))
        n = draw(st.integers(0, 3))
        p = parse_poly(draw(st.sampled_from(["b", "-2*d*x", "1/3*B^2", "x + y", "c1'"])))
        out = out + RingElem({(h, n): p})
    return out


@given(ring_elems())
def test_text_round_trip(e):
    assert parse_ringelem(e.to_text()) == e


@given(ring_elems())
def test_json_round_trip(e):
    assert ringelem_from_json(e.to_json()) == e


@given(ring_elems(), st.integers(-3, 3), st.integers(-3, 3))
def test_shift_composes(e, a, b):
    if e.terms and all(h is None for h, _ in e.terms):
        return
    assert shift_T(shift_T(e, a), b) == shift_T(e, a + b)


def test_shift_requires_h():
    with pytest.raises(ProfileError):
        shift_T(RingElem.v(1), 1)


def test_h_values_follow_the_recurrence():
    P = get_profile("mutant")
    h = P.h_value
    for k in range(-4, 6):
        assert P.reduce(h(k) + parse_poly("b") * h(k - 2) + parse_poly("d") * h(k - 1)).is_zero()


def test_h_closed_forms():
    # h(2k+1) = (-b)^k x - k (-b)^(k-1) d y and friends, at small k
    P = get_profile("mutant")
    P_ = lambda s: P.reduce(parse_poly(s))
    assert P.h_value(3) == P_("-b*x - d*y")
    assert P.h_value(4) == P_("-b*y + b*d*x")
    assert P.h_value(0) == P_("-B*y - B*d*x")
    assert P.h_value(-1) == P_("d*y - B*x")


def test_power_h_rule():
    P = get_profile("mutant-a")
    assert P.h_value(3) == P.reduce(parse_poly("a^3"))
    assert P.h_value(-2) == P.reduce(parse_poly("A^2"))


def test_normal_form_rewrites_v():
    P = get_profile("homflypt")
    e = normal_form(RingElem.v(2), P)
    assert e == RingElem.v(1, P.reduce(P.v_rule))


def test_fraction_eq():
    P = get_profile("mutant")
    x, y = parse_poly("x"), parse_poly("y")
    u = RingElem.v(1, x * y)
    assert fraction_eq(u, x, RingElem.v(1, y * y), y, P)
    assert not fraction_eq(u, x, RingElem.v(1, x), y, P)
    with pytest.raises(ProfileError):
        fraction_eq(u, parse_poly("d"), u, 1, P)

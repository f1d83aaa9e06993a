from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from circleimage.numcore import GaussianRational as G, gq_abs_sq, gq_arith, gq_conj

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
gaussians = st.builds(G, rationals, rationals)


def test_arith_examples():
    assert gq_arith("add", G(1), G(0, 1)) == G(1, 1)
    assert gq_arith("mul", G(0, 1), G(0, 1)) == G(-1)
    assert gq_arith("div", G(1), G("1/2", "1/2")) == G(1, -1)
    assert gq_arith("sub", G(3, 2), G(1, 1)) == G(2, 1)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        gq_arith("div", G(1), G(0))


def test_unknown_op():
    with pytest.raises(ValueError):
        gq_arith("pow", G(1), G(1))


def test_conj_and_abs_sq():
    assert gq_conj(G(2, 3)) == G(2, -3)
    assert gq_conj(G(5)) == G(5)
    assert gq_abs_sq(G(3, 4)) == 25
    assert gq_abs_sq(G(0)) == 0
    assert gq_abs_sq(G("1/2", "1/2")) == Fraction(1, 2)


def test_lowest_terms():
    z = G("6/4", "-10/15")
    assert z.re == Fraction(3, 2) and z.re.denominator == 2
    assert z.im.denominator > 0


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == G(0)
    if b:
        assert (a / b) * b == a


@given(gaussians, gaussians)
def test_conj_is_homomorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a
    assert a.abs_sq() >= 0
    assert (a.abs_sq() == 0) == (a == G(0))


@given(gaussians)
def test_json_round_trip(a):
    assert G.from_json(a.to_json()) == a


def test_string_format():
    assert G("3/6", 2).to_json() == {"re": "1/2", "im": "2"}
    assert G.from_json({"re": "-7", "im": "0"}) == G(-7)
    with pytest.raises(ValueError):
        G.from_json({"re": 0.5, "im": "0"})


def test_immutable():
    z = G(1)
    with pytest.raises(AttributeError):
        z.re = Fraction(2)


def test_powers():
    i = G(0, 1)
    assert i ** 4 == G(1)
    assert i ** -1 == G(0, -1)
    assert G(2) ** 10 == G(1024)

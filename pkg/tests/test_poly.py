from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from circleimage.errors import DegenerateInputError, InputError, PoleError, RealizationError
from circleimage.numcore import GaussianRational as G
from circleimage.poly import (
    BivariatePolynomial,
    LaurentPolynomial,
    WWBAR,
    bivar_degrees,
    bivar_eval,
    circle_point,
    interpolate_coefficients,
    laurent_eval,
    normalize_orientation,
    substitute_real,
    wwbar_poly,
    xy_poly,
)

from conftest import random_laurent

QUADRATIC_H = xy_poly({(4, 0): 1, (2, 2): 2, (0, 4): 1, (3, 0): -4, (1, 2): -4, (2, 0): -5, (0, 2): -9})


def test_laurent_eval_examples(quadratic, joukowski):
    assert laurent_eval(quadratic, G(1)) == G(5)
    assert laurent_eval(joukowski, G(0, 1)) == G(0)
    with pytest.raises(PoleError):
        laurent_eval(joukowski, G(0))
    assert laurent_eval(quadratic, G(0)) == G(1)


def test_laurent_eval_matches_float(rng):
    for _ in range(20):
        p = random_laurent(rng)
        z = G(Fraction(rng.randint(1, 9), 7), Fraction(rng.randint(-9, 9), 5))
        assert abs(complex(laurent_eval(p, z)) - p.evaluate_float(complex(z))) < 1e-9 * (1 + abs(complex(laurent_eval(p, z))))


def test_m_n(joukowski):
    p = LaurentPolynomial({-3: 1, 2: 1})
    assert (p.m, p.n) == (3, 2)
    assert (joukowski.m, joukowski.n) == (1, 1)
    assert LaurentPolynomial({2: 1, 3: 1}).m == 0


def test_circle_point_examples():
    assert circle_point(0) == G(1)
    assert circle_point(1) == G(0, 1)
    assert circle_point(Fraction(1, 2)) == G("3/5", "4/5")


@given(st.fractions(max_denominator=1000))
def test_circle_point_on_circle(t):
    assert circle_point(t).abs_sq() == 1


def test_normalize_orientation(joukowski):
    p = LaurentPolynomial({2: 1, -3: 1})
    assert normalize_orientation(p) == LaurentPolynomial({3: 1, -2: 1})
    assert normalize_orientation(joukowski) is joukowski
    with pytest.raises(DegenerateInputError):
        normalize_orientation(LaurentPolynomial({0: 5}))


def test_normalize_preserves_image(rng):
    p = LaurentPolynomial({2: G(1, 2), -3: G(-1, 1), 1: 3})
    q = normalize_orientation(p)
    t = 2 * np.pi * np.arange(720) / 720
    a = np.sort_complex(p.evaluate_float(np.exp(1j * t)))
    b = np.sort_complex(q.evaluate_float(np.exp(-1j * t)))
    assert np.allclose(a, b)
    # and as point sets on the same grid: reflecting t -> -t is a permutation
    b2 = np.sort_complex(q.evaluate_float(np.exp(1j * t)))
    assert np.allclose(a, b2)


def test_normalize_is_reciprocal_substitution(rng):
    for _ in range(10):
        p = random_laurent(rng, max_n=4)
        flipped = LaurentPolynomial({-k: c for k, c in p.terms.items()})
        if flipped.m <= flipped.n:
            continue
        q = normalize_orientation(flipped)
        z = G(Fraction(rng.randint(1, 9), 4), Fraction(rng.randint(-9, 9), 3))
        assert laurent_eval(q, z) == laurent_eval(flipped, 1 / z)


def test_bivar_eval_examples():
    circ = xy_poly({(2, 0): 1, (0, 2): 1, (0, 0): -1})
    assert bivar_eval(circ, 1, 0) == G(0)
    assert bivar_eval(QUADRATIC_H, 5, 0) == G(0)
    line = xy_poly({(0, 2): -4})
    for x in (-3, Fraction(7, 2), 11):
        assert bivar_eval(line, x, 0) == G(0)


def test_bivar_eval_independent_variables():
    h = wwbar_poly({(1, 0): 1})
    assert bivar_eval(h, G(0, 1), G(5)) == G(0, 1)


def test_substitute_real_examples():
    assert substitute_real(wwbar_poly({(1, 1): 1, (0, 0): -1})) == xy_poly({(2, 0): 1, (0, 2): 1, (0, 0): -1})
    # (w - wbar)^2
    assert substitute_real(wwbar_poly({(2, 0): 1, (1, 1): -2, (0, 2): 1})) == xy_poly({(0, 2): -4})
    with pytest.raises(RealizationError):
        substitute_real(wwbar_poly({(1, 0): 1}))
    with pytest.raises(InputError):
        substitute_real(xy_poly({(1, 0): 1}))


def _hermitian(rng, d):
    # c_ij = conj(c_ji) makes h_C(w, conj w) real
    terms = {}
    for i in range(d + 1):
        for j in range(i, d + 1 - i):
            c = G(rng.randint(-5, 5), rng.randint(-5, 5) if i != j else 0)
            terms[(i, j)] = c
            terms[(j, i)] = c.conj()
    return wwbar_poly(terms)


def test_substitute_real_is_linear(rng):
    for _ in range(10):
        f, g = _hermitian(rng, 3), _hermitian(rng, 3)
        a, b = Fraction(rng.randint(-5, 5), 3), Fraction(rng.randint(-5, 5), 7)
        assert substitute_real(f * a + g * b) == substitute_real(f) * a + substitute_real(g) * b


def test_substitute_real_agrees_pointwise(rng):
    h = _hermitian(rng, 3)
    hr = substitute_real(h)
    x, y = Fraction(2, 3), Fraction(-5, 7)
    w = G(x, y)
    assert bivar_eval(hr, x, y) == bivar_eval(h, w, w.conj())
    assert hr.total_degree() == h.total_degree()


def test_bivar_degrees():
    assert bivar_degrees(QUADRATIC_H)[0] == 4
    assert bivar_degrees(xy_poly({(0, 2): -4}))[0] == 2
    assert bivar_degrees(wwbar_poly({(3, 1): 1})) == (4, 3, 1)
    with pytest.raises(InputError):
        bivar_degrees(xy_poly({}))


def test_xy_rejects_complex_coefficients():
    with pytest.raises(RealizationError):
        xy_poly({(1, 0): G(0, 1)})


def test_json_round_trip(rng):
    p = random_laurent(rng)
    assert LaurentPolynomial.from_json(p.to_json()) == p
    assert BivariatePolynomial.from_json(QUADRATIC_H.to_json()) == QUADRATIC_H
    hc = wwbar_poly({(1, 0): G(1, 2), (0, 1): G(1, -2)})
    assert BivariatePolynomial.from_json(hc.to_json()) == hc
    assert hc.to_json()["vars"] == ["w", "wbar"]


def test_json_errors():
    with pytest.raises(InputError):
        LaurentPolynomial.from_json({"terms": [{"k": "a", "re": "1"}]})
    with pytest.raises(DegenerateInputError):
        LaurentPolynomial.from_json({"terms": [{"k": 0, "re": "1", "im": "0"}]})
    with pytest.raises(InputError):
        LaurentPolynomial.from_json({"nope": []})


def test_str():
    assert str(QUADRATIC_H) == "x^4 + 2*x^2*y^2 + y^4 - 4*x^3 - 4*x*y^2 - 5*x^2 - 9*y^2"
    assert str(LaurentPolynomial({1: 1, -1: G(0, 1)})) == "z + i*z^-1"


def test_interpolate_coefficients():
    assert interpolate_coefficients([0, 1, 2], [1, 2, 5]) == [G(1), G(0), G(1)]
    with pytest.raises(InputError):
        interpolate_coefficients([1, 1], [0, 0])

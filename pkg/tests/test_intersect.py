from fractions import Fraction

import pytest
import sympy

from circleimage.errors import InputError
from circleimage.intersect import analyze_pair, common_factor, intersection_bound, resultant_in
from circleimage.numcore import GaussianRational as G
from circleimage.poly import LaurentPolynomial, xy_poly
from circleimage.resultant import compute_h

from conftest import random_laurent


def test_bound_values():
    assert intersection_bound(0, 1, 0, 1) == 2
    assert intersection_bound(1, 1, 1, 1) == 4
    assert intersection_bound(1, 2, 0, 1) == 4 * 2 - 2 * 1 * 1
    for n in range(1, 7):
        for s in range(1, 7):
            assert intersection_bound(0, n, 0, s) == 2 * n * s
    with pytest.raises(InputError):
        intersection_bound(2, 1, 0, 1)


def _to_sympy(h, x, y):
    return sum(sympy.Rational(c.re.numerator, c.re.denominator) * x**i * y**j for (i, j), c in h.terms.items())


def test_resultant_matches_sympy(rng):
    x, y = sympy.symbols("x y")
    for _ in range(4):
        h1 = compute_h(random_laurent(rng, max_n=1, height=4)).h
        h2 = compute_h(random_laurent(rng, max_n=2, height=4)).h
        got = resultant_in(h1, h2, "y")
        expected = sympy.Poly(sympy.resultant(_to_sympy(h1, x, y), _to_sympy(h2, x, y), y), x).all_coeffs()[::-1]
        assert got == [G(Fraction(int(c.p), int(c.q))) for c in expected]


def test_resultant_free_variable():
    assert resultant_in(xy_poly({(1, 0): 1}), xy_poly({(0, 1): 1}), "y") is None


def test_common_factor_basics(quadratic):
    h = compute_h(quadratic).h
    assert common_factor(h, h)
    assert common_factor(h, h * xy_poly({(1, 0): 1, (0, 0): 3}))
    assert not common_factor(h, xy_poly({(2, 0): 1, (0, 2): 1, (0, 0): -1}))
    # shared factor free of y
    assert common_factor(xy_poly({(1, 0): 1, (1, 1): 1}), xy_poly({(1, 0): 1, (0, 0): 0, (2, 0): 1}))
    with pytest.raises(InputError):
        common_factor(h, xy_poly({}))


def test_alpha_family_common_factor(joukowski):
    for alpha in (Fraction(1, 2), 1, Fraction(-3, 1)):
        q = joukowski + alpha
        rep = analyze_pair(joukowski, q)
        assert rep.common_factor
        assert rep.numeric_count is not None


def test_distinct_circles():
    rep = analyze_pair(LaurentPolynomial({1: 1}), LaurentPolynomial({1: 1, 0: Fraction(1, 2)}))
    assert not rep.common_factor
    assert rep.numeric_count == 2 <= rep.bound


def test_random_pairs_respect_bound(rng):
    checked = 0
    while checked < 8:
        p = random_laurent(rng, max_n=2, height=5)
        q = random_laurent(rng, max_n=2, height=5)
        rep = analyze_pair(p, q)  # raises if the bound is exceeded
        if not rep.common_factor:
            assert rep.numeric_count <= rep.bound
            checked += 1


def test_report_json(quadratic):
    out = analyze_pair(quadratic, LaurentPolynomial({1: 1}), numeric=False).to_json()
    assert out == {"m": 0, "n": 2, "r": 0, "s": 1, "bound": 4, "common_factor": False}


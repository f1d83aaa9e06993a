import random
import sys
from fractions import Fraction

import pytest

from circleimage.numcore import GaussianRational
from circleimage.poly import LaurentPolynomial


def random_rational(rng, height=10):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_gaussian(rng, height=10, nonzero=False):
    while True:
        z = GaussianRational(random_rational(rng, height), random_rational(rng, height))
        if z or not nonzero:
            return z


def random_laurent(rng, max_n=5, height=10, m=None, n=None, integer=False):
    """Normalized random Laurent polynomial with 0 <= m <= n <= max_n."""
    n = rng.randint(1, max_n) if n is None else n
    m = rng.randint(0, n) if m is None else m

    def coef(nonzero=False):
        if integer:
            while True:
                z = GaussianRational(rng.randint(-height, height), rng.randint(-height, height))
                if z or not nonzero:
                    return z
        return random_gaussian(rng, height, nonzero)

    terms = {k: coef() for k in range(-m, n + 1)}
    terms[n] = coef(nonzero=True)
    if m:
        terms[-m] = coef(nonzero=True)
    return LaurentPolynomial(terms)


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def quadratic():
    # z^2 + 3z + 1
    return LaurentPolynomial({2: 1, 1: 3, 0: 1})


@pytest.fixture
def joukowski():
    # z + 1/z
    return LaurentPolynomial({1: 1, -1: 1})


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])

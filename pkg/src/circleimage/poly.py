"""Sparse Laurent polynomials and bivariate polynomials over Q(i)."""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from .errors import DegenerateInputError, InputError, PoleError, RealizationError
from .numcore import ONE, ZERO, GaussianRational, to_rational

WWBAR = "WWbar"
XY = "XY"
_VAR_NAMES = {WWBAR: ("w", "wbar"), XY: ("x", "y")}


def _clean(terms: Mapping, key_check) -> Dict:
    out = {}
    for key, coef in terms.items():
        key_check(key)
        coef = GaussianRational.coerce(coef)
        if not coef.is_zero():
            out[key] = coef
    return out


def _check_int(k):
    if not isinstance(k, int) or isinstance(k, bool):
        raise InputError(f"exponent must be an integer, got {k!r}")


class LaurentPolynomial:
    """Finite sum of ``a_k z**k`` with integer (possibly negative) ``k``.

    ``m`` and ``n`` follow the usual convention: the polynomial spans
    exponents ``-m..n`` with both clamped at zero.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        object.__setattr__(self, "terms", _clean(terms or {}, _check_int))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def from_dense(cls, coeffs: Sequence, low: int = 0) -> "LaurentPolynomial":
        """Build from ascending coefficients starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @property
    def m(self) -> int:
        if not self.terms:
            return 0
        return -min(min(self.terms), 0)

    @property
    def n(self) -> int:
        if not self.terms:
            return 0
        return max(max(self.terms), 0)

    def coeff(self, k: int) -> GaussianRational:
        return self.terms.get(k, ZERO)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.terms)

    def dense(self) -> List[GaussianRational]:
        """Coefficients ``a_{-m}, ..., a_n`` in ascending order."""
        return [self.coeff(k) for k in range(-self.m, self.n + 1)]

    def __call__(self, z):
        if isinstance(z, (GaussianRational, int, Fraction)):
            return laurent_eval(self, GaussianRational.coerce(z))
        return self.evaluate_float(z)

    def evaluate_float(self, z):
        """Evaluate at complex float(s); accepts scalars or numpy arrays."""
        z = np.asarray(z, dtype=complex)
        total = np.zeros_like(z)
        for k, c in self.terms.items():
            total = total + complex(c) * z ** k
        return total if total.ndim else complex(total)

    def derivative_float(self, z):
        z = np.asarray(z, dtype=complex)
        total = np.zeros_like(z)
        for k, c in self.terms.items():
            if k:
                total = total + k * complex(c) * z ** (k - 1)
        return total if total.ndim else complex(total)

    def __add__(self, other):
        other = _as_laurent(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, ZERO) + c
        return LaurentPolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        terms: Dict[int, GaussianRational] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, ZERO) + c1 * c2
        return LaurentPolynomial(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            parts.append(_format_term(c, mono))
        return _join_terms(parts)

    def to_json(self) -> dict:
        return {"terms": [{"k": k, **self.terms[k].to_json()} for k in sorted(self.terms)]}

    @classmethod
    def from_json(cls, obj) -> "LaurentPolynomial":
        try:
            raw = obj["terms"]
            terms: Dict[int, GaussianRational] = {}
            for t in raw:
                k = t["k"]
                _check_int(k)
                terms[k] = terms.get(k, ZERO) + GaussianRational.from_json(t)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed Laurent polynomial JSON: {exc}") from exc
        p = cls(terms)
        if p.is_constant():
            raise DegenerateInputError("constant polynomials are not supported")
        return p


def _as_laurent(value) -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    return LaurentPolynomial({0: GaussianRational.coerce(value)})


def _format_term(c: GaussianRational, mono: str) -> str:
    if c.im == 0:
        coef = c.re
        if mono and coef == 1:
            return mono
        if mono and coef == -1:
            return "-" + mono
        text = str(coef)
    else:
        text = str(c)
        if c.re == 0 and mono:
            text = {1: "i", -1: "-i"}.get(c.im, f"{c.im}*i")
    return text + ("*" + mono if mono else "")


def _join_terms(parts: List[str]) -> str:
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


Z = LaurentPolynomial({1: 1})


def laurent_eval(p: LaurentPolynomial, z: GaussianRational) -> GaussianRational:
    """Exact value of ``p`` at ``z``."""
    z = GaussianRational.coerce(z)
    if z.is_zero():
        if p.m > 0:
            raise PoleError("evaluation at z = 0 with negative exponents")
        return p.coeff(0)
    total = ZERO
    # Horner on the positive and negative halves separately
    if p.n > 0:
        acc = ZERO
        for k in range(p.n, 0, -1):
            acc = acc * z + p.coeff(k)
        total = acc * z
    if p.m > 0:
        inv = ONE / z
        acc = ZERO
        for k in range(-p.m, 0):
            acc = acc * inv + p.coeff(k)
        total = total + acc * inv
    return total + p.coeff(0)


def circle_point(t) -> GaussianRational:
    """Rational point ``((1 - t^2) + 2t i) / (1 + t^2)`` on the unit circle."""
    t = to_rational(t)
    den = 1 + t * t
    return GaussianRational((1 - t * t) / den, 2 * t / den)


def normalize_orientation(p: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``p(1/z)`` when ``m > n``; the image of the circle is unchanged."""
    if p.is_constant():
        raise DegenerateInputError("constant polynomial has a one-point image")
    if p.m > p.n:
        return LaurentPolynomial({-k: c for k, c in p.terms.items()})
    return p


class BivariatePolynomial:
    """Polynomial in two independent variables, stored sparsely.

    ``tag`` is ``"WWbar"`` for h_C(w, wbar) or ``"XY"`` for the real h(x, y);
    XY polynomials must have real coefficients.
    """

    __slots__ = ("terms", "tag")

    def __init__(self, terms: Mapping[Tuple[int, int], object] | None = None, tag: str = XY):
        if tag not in _VAR_NAMES:
            raise InputError(f"unknown variable tag {tag!r}")
        clean = _clean(terms or {}, _check_pair)
        if tag == XY and any(not c.is_real() for c in clean.values()):
            raise RealizationError("XY polynomial with a non-real coefficient")
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "tag", tag)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePolynomial is immutable")

    @property
    def var_names(self) -> Tuple[str, str]:
        return _VAR_NAMES[self.tag]

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> GaussianRational:
        return self.terms.get((i, j), ZERO)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((key[var] for key in self.terms), default=-1)

    def homogeneous_part(self, degree: int) -> "BivariatePolynomial":
        return BivariatePolynomial(
            {k: c for k, c in self.terms.items() if k[0] + k[1] == degree}, self.tag
        )

    def __call__(self, u, v):
        return bivar_eval(self, u, v)

    def evaluate_float(self, u, v):
        """Evaluate at complex/real floats; numpy arrays broadcast."""
        u = np.asarray(u, dtype=complex)
        v = np.asarray(v, dtype=complex)
        total = np.zeros(np.broadcast(u, v).shape, dtype=complex)
        for (i, j), c in self.terms.items():
            total = total + complex(c) * u ** i * v ** j
        return total if total.ndim else complex(total)

    def evaluate_real(self, x, y):
        """Float evaluation for an XY polynomial at real points."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        total = np.zeros(np.broadcast(x, y).shape, dtype=float)
        for (i, j), c in self.terms.items():
            total = total + float(c.re) * x ** i * y ** j
        return total if total.ndim else float(total)

    def magnitude_real(self, x, y):
        """Sum of absolute term values; a natural scale for float residuals."""
        x = np.abs(np.asarray(x, dtype=float))
        y = np.abs(np.asarray(y, dtype=float))
        total = np.zeros(np.broadcast(x, y).shape, dtype=float)
        for (i, j), c in self.terms.items():
            total = total + abs(float(c.re)) * x ** i * y ** j
        return total if total.ndim else float(total)

    def __add__(self, other):
        other = self._same_ring(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, ZERO) + c
        return BivariatePolynomial(terms, self.tag)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.terms.items()}, self.tag)

    def __sub__(self, other):
        return self + (-self._same_ring(other))

    def __rsub__(self, other):
        return self._same_ring(other) - self

    def __mul__(self, other):
        other = self._same_ring(other)
        terms: Dict[Tuple[int, int], GaussianRational] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, ZERO) + c1 * c2
        return BivariatePolynomial(terms, self.tag)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = BivariatePolynomial({(0, 0): ONE}, self.tag)
        for _ in range(e):
            result = result * self
        return result

    def _same_ring(self, other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            if other.tag != self.tag:
                raise InputError(f"cannot combine {self.tag} with {other.tag}")
            return other
        return BivariatePolynomial({(0, 0): GaussianRational.coerce(other)}, self.tag)

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.tag == other.tag and self.terms == other.terms

    def __hash__(self):
        return hash((self.tag, frozenset(self.terms.items())))

    def __repr__(self):
        return f"BivariatePolynomial({self}, tag={self.tag!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        a, b = self.var_names
        parts = []
        # graded order, highest degree first
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            factors = [f"{a}^{i}" if i > 1 else a] * (i > 0) + [f"{b}^{j}" if j > 1 else b] * (j > 0)
            parts.append(_format_term(self.terms[(i, j)], "*".join(factors)))
        return _join_terms(parts)

    def to_json(self) -> dict:
        keys = sorted(self.terms)
        if self.tag == XY:
            terms = [{"i": i, "j": j, "c": str(self.terms[(i, j)].re)} for i, j in keys]
        else:
            terms = [{"i": i, "j": j, **self.terms[(i, j)].to_json()} for i, j in keys]
        return {"vars": list(self.var_names), "terms": terms}

    @classmethod
    def from_json(cls, obj) -> "BivariatePolynomial":
        try:
            names = tuple(obj.get("vars", ["x", "y"]))
            tag = {v: k for k, v in _VAR_NAMES.items()}[names]
            terms: Dict[Tuple[int, int], GaussianRational] = {}
            for t in obj["terms"]:
                key = (t["i"], t["j"])
                _check_pair(key)
                coef = GaussianRational.from_json(t["c"] if "c" in t else t)
                terms[key] = terms.get(key, ZERO) + coef
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed bivariate polynomial JSON: {exc}") from exc
        return cls(terms, tag)


def _check_pair(key):
    if (
        not isinstance(key, tuple)
        or len(key) != 2
        or any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in key)
    ):
        raise InputError(f"bivariate exponents must be a pair of naturals, got {key!r}")


def xy_poly(terms: Mapping[Tuple[int, int], object]) -> BivariatePolynomial:
    return BivariatePolynomial(terms, XY)


def wwbar_poly(terms: Mapping[Tuple[int, int], object]) -> BivariatePolynomial:
    return BivariatePolynomial(terms, WWBAR)


def bivar_eval(h: BivariatePolynomial, u, v) -> GaussianRational:
    """Exact ``sum c_ij u^i v^j``; ``u`` and ``v`` are independent."""
    u = GaussianRational.coerce(u)
    v = GaussianRational.coerce(v)
    du, dv = h.degree_in(0), h.degree_in(1)
    upow = _powers(u, du)
    vpow = _powers(v, dv)
    total = ZERO
    for (i, j), c in h.terms.items():
        total = total + c * upow[i] * vpow[j]
    return total


def _powers(x: GaussianRational, d: int) -> List[GaussianRational]:
    out = [ONE]
    for _ in range(max(d, 0)):
        out.append(out[-1] * x)
    return out


def substitute_real(hC: BivariatePolynomial) -> BivariatePolynomial:
    """Expand ``w -> x + iy``, ``wbar -> x - iy`` and check realness.

    Raises :class:`RealizationError` if any coefficient keeps a nonzero
    imaginary part.
    """
    if hC.tag != WWBAR:
        raise InputError("substitute_real expects a polynomial in (w, wbar)")
    d = max(hC.degree_in(0), hC.degree_in(1), 0)
    # (x + iy)^i and (x - iy)^j as coefficient lists indexed by the power of y
    plus = [_binomial_row(e, 1) for e in range(d + 1)]
    minus = [_binomial_row(e, -1) for e in range(d + 1)]
    out: Dict[Tuple[int, int], GaussianRational] = {}
    for (i, j), c in hC.terms.items():
        total_deg = i + j
        for a, ca in enumerate(plus[i]):
            for b, cb in enumerate(minus[j]):
                ypow = a + b
                key = (total_deg - ypow, ypow)
                out[key] = out.get(key, ZERO) + c * ca * cb
    bad = [k for k, c in out.items() if not c.is_real()]
    if bad:
        raise RealizationError(f"non-real coefficient at monomial(s) {sorted(bad)[:5]}")
    return BivariatePolynomial(out, XY)


def _binomial_row(e: int, sign: int) -> List[GaussianRational]:
    # coefficient of x^(e-a) y^a in (x + sign*i*y)^e
    unit = GaussianRational(0, sign)
    return [comb(e, a) * unit ** a for a in range(e + 1)]


def bivar_degrees(h: BivariatePolynomial) -> Tuple[int, int, int]:
    """(total degree, degree in first variable, degree in second variable)."""
    if h.is_zero():
        raise InputError("degree of the zero polynomial is undefined")
    return h.total_degree(), h.degree_in(0), h.degree_in(1)


def interpolate_coefficients(nodes: Sequence, values: Sequence) -> List[GaussianRational]:
    """Monomial coefficients of the unique polynomial of degree < len(nodes)
    through ``(nodes[i], values[i])``; exact Newton divided differences."""
    nodes = [GaussianRational.coerce(x) for x in nodes]
    values = [GaussianRational.coerce(y) for y in values]
    if len(nodes) != len(values):
        raise InputError("nodes and values differ in length")
    if len(set(nodes)) != len(nodes):
        raise InputError("interpolation nodes must be pairwise distinct")
    count = len(nodes)
    if count == 0:
        return []
    dd = list(values)
    for level in range(1, count):
        for i in range(count - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level])
    # expand the Newton form by Horner from the innermost factor outwards
    coeffs = [dd[-1]]
    for i in range(count - 2, -1, -1):
        shifted = [ZERO] + coeffs
        for j, c in enumerate(coeffs):
            shifted[j] = shifted[j] - nodes[i] * c
        shifted[0] = shifted[0] + dd[i]
        coeffs = shifted
    return coeffs


__all__ = [
    "LaurentPolynomial",
    "BivariatePolynomial",
    "WWBAR",
    "XY",
    "Z",
    "laurent_eval",
    "circle_point",
    "normalize_orientation",
    "bivar_eval",
    "substitute_real",
    "bivar_degrees",
    "interpolate_coefficients",
    "xy_poly",
    "wwbar_poly",
]

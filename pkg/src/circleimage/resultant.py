"""Implicitization of p(T) through the resultant of g(z) = z^m (p(z) - w)
and its reflection g*(z) = z^n conj(p(1/conj z) - w).

The determinant of the Sylvester-type matrix is a polynomial in the two
independent symbols w and wbar. It is recovered by exact evaluation at an
integer grid of (w, wbar) nodes followed by tensor-product interpolation;
each node determinant is a fraction-free Bareiss elimination over Z[i].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .errors import InputError, InternalConsistencyError
from .numcore import ONE, ZERO, GaussianRational
from .poly import (
    WWBAR,
    BivariatePolynomial,
    LaurentPolynomial,
    bivar_degrees,
    bivar_eval,
    substitute_real,
)


class SymbolicCoeff(NamedTuple):
    """``const + w_coef * w + wbar_coef * wbar`` (only -1/0 are used here)."""

    const: GaussianRational
    w_coef: int = 0
    wbar_coef: int = 0

    def at(self, u: GaussianRational, v: GaussianRational) -> GaussianRational:
        out = self.const
        if self.w_coef:
            out = out + self.w_coef * u
        if self.wbar_coef:
            out = out + self.wbar_coef * v
        return out

    def as_poly(self) -> BivariatePolynomial:
        return BivariatePolynomial(
            {(0, 0): self.const, (1, 0): self.w_coef, (0, 1): self.wbar_coef}, WWBAR
        )

    def __str__(self):
        parts = [] if self.const.is_zero() and (self.w_coef or self.wbar_coef) else [str(self.const)]
        if self.w_coef:
            parts.append("-w" if self.w_coef == -1 else f"{self.w_coef}*w")
        if self.wbar_coef:
            parts.append("-wbar" if self.wbar_coef == -1 else f"{self.wbar_coef}*wbar")
        return " ".join(parts)


def build_pair(p: LaurentPolynomial) -> Tuple[List[SymbolicCoeff], List[SymbolicCoeff]]:
    """Ascending coefficient lists of g and g*.

    g = (a_{-m}, ..., a_0 - w, ..., a_n) with -w at index m, and
    g* = (conj a_n, ..., conj a_0 - wbar, ..., conj a_{-m}) with -wbar at index n.
    """
    m, n = p.m, p.n
    if n < 1 or m > n:
        raise InputError(f"build_pair needs a normalized polynomial with 0 <= m <= n, n >= 1 (m={m}, n={n})")
    if p.coeff(n).is_zero() or (m > 0 and p.coeff(-m).is_zero()):
        raise InputError("extreme coefficients must be nonzero")
    g = [SymbolicCoeff(p.coeff(k), -1 if k == 0 else 0) for k in range(-m, n + 1)]
    gstar = [SymbolicCoeff(p.coeff(k).conj(), 0, -1 if k == 0 else 0) for k in range(n, -m - 1, -1)]
    return g, gstar


@dataclass(frozen=True)
class SylvesterMatrix:
    """Square matrix of size 2(m+n) whose entries are affine in (w, wbar).

    The top m+n rows are shifted copies of g, the bottom m+n rows shifted
    copies of g*, both laid out in ascending coefficient order.
    """

    rows: Tuple[Tuple[SymbolicCoeff, ...], ...]
    m: int
    n: int

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def from_polynomial(cls, p: LaurentPolynomial) -> "SylvesterMatrix":
        g, gstar = build_pair(p)
        return cls(sylvester_rows(g, gstar), p.m, p.n)

    def entry_poly(self, i: int, j: int) -> BivariatePolynomial:
        return self.rows[i][j].as_poly()

    def at(self, u, v) -> List[List[GaussianRational]]:
        """Scalar matrix at w = u, wbar = v."""
        u = GaussianRational.coerce(u)
        v = GaussianRational.coerce(v)
        return [[e.at(u, v) for e in row] for row in self.rows]

    def symbol_columns(self) -> Tuple[List[int], List[int]]:
        """Column indices (0-based) of every w entry and every wbar entry."""
        wcols, wbcols = [], []
        for row in self.rows:
            for j, e in enumerate(row):
                if e.w_coef:
                    wcols.append(j)
                if e.wbar_coef:
                    wbcols.append(j)
        return wcols, wbcols


_ZERO_ENTRY = SymbolicCoeff(ZERO)


def sylvester_rows(f: Sequence, g: Sequence) -> Tuple[Tuple, ...]:
    """Ascending-layout Sylvester rows: deg(g) shifts of f over deg(f) shifts of g."""
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    zero = _ZERO_ENTRY if f and isinstance(f[0], SymbolicCoeff) else ZERO
    rows = []
    for shift in range(dg):
        rows.append(tuple([zero] * shift + list(f) + [zero] * (size - shift - df - 1)))
    for shift in range(df):
        rows.append(tuple([zero] * shift + list(g) + [zero] * (size - shift - dg - 1)))
    return tuple(rows)


# --- scalar determinants ------------------------------------------------


def det_exact(matrix: Sequence[Sequence]) -> GaussianRational:
    """Exact determinant of a square matrix over Q(i).

    Rows are scaled to Gaussian integers and reduced with Bareiss'
    fraction-free elimination, so every intermediate is an exact
    Gaussian integer.
    """
    size = len(matrix)
    if size == 0:
        return ONE
    re_rows, im_rows, scale = _to_gaussian_integers(matrix)
    dr, di = _bareiss(re_rows, im_rows)
    return GaussianRational(Fraction(dr, scale), Fraction(di, scale))


def _to_gaussian_integers(matrix):
    scale = 1
    re_rows, im_rows = [], []
    for row in matrix:
        row = [GaussianRational.coerce(x) for x in row]
        den = 1
        for x in row:
            den = lcm(den, x.re.denominator, x.im.denominator)
        re_rows.append([x.re.numerator * (den // x.re.denominator) for x in row])
        im_rows.append([x.im.numerator * (den // x.im.denominator) for x in row])
        scale *= den
    return re_rows, im_rows, scale


def _bareiss(A: List[List[int]], B: List[List[int]]) -> Tuple[int, int]:
    """Determinant of A + iB (integer matrices, modified in place)."""
    size = len(A)
    sign = 1
    prev_r, prev_i = 1, 0
    for k in range(size - 1):
        if A[k][k] == 0 and B[k][k] == 0:
            for r in range(k + 1, size):
                if A[r][k] or B[r][k]:
                    A[k], A[r] = A[r], A[k]
                    B[k], B[r] = B[r], B[k]
                    sign = -sign
                    break
            else:
                return 0, 0
        pr, pi = A[k][k], B[k][k]
        norm = prev_r * prev_r + prev_i * prev_i
        Ak, Bk = A[k], B[k]
        for i in range(k + 1, size):
            Ai, Bi = A[i], B[i]
            qr, qi = Ai[k], Bi[k]
            for j in range(k + 1, size):
                # (pivot * a_ij - a_ik * a_kj) / prev
                xr = pr * Ai[j] - pi * Bi[j] - (qr * Ak[j] - qi * Bk[j])
                xi = pr * Bi[j] + pi * Ai[j] - (qr * Bk[j] + qi * Ak[j])
                Ai[j] = (xr * prev_r + xi * prev_i) // norm
                Bi[j] = (xi * prev_r - xr * prev_i) // norm
            Ai[k] = 0
            Bi[k] = 0
        prev_r, prev_i = pr, pi
    return sign * A[-1][-1], sign * B[-1][-1]


# --- interpolation ------------------------------------------------------


@lru_cache(maxsize=None)
def _inverse_vandermonde(d: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Inverse of V[a][i] = a**i for nodes a = 0..d, so coeffs = Vinv @ values."""
    count = d + 1
    aug = [[Fraction(a) ** i for i in range(count)] + [Fraction(int(a == r)) for r in range(count)] for a in range(count)]
    for col in range(count):
        piv = next(r for r in range(col, count) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(count):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    # aug right half is V^{-1} with V indexed [node][power]
    return tuple(tuple(aug[i][count:]) for i in range(count))


def interpolate_grid(values: Dict[Tuple[int, int], GaussianRational], du: int, dv: int, tag: str = WWBAR) -> BivariatePolynomial:
    """Polynomial with deg_u <= du, deg_v <= dv matching values at (a, b) in [0..du] x [0..dv]."""
    vu = _inverse_vandermonde(du)
    vv = _inverse_vandermonde(dv)
    partial: Dict[Tuple[int, int], Tuple[Fraction, Fraction]] = {}
    for a in range(du + 1):
        for j in range(dv + 1):
            sr = si = Fraction(0)
            for b in range(dv + 1):
                val = values[(a, b)]
                c = vv[j][b]
                if c and not val.is_zero():
                    sr += c * val.re
                    si += c * val.im
            partial[(a, j)] = (sr, si)
    terms = {}
    for i in range(du + 1):
        for j in range(dv + 1):
            sr = si = Fraction(0)
            for a in range(du + 1):
                c = vu[i][a]
                if c:
                    pr, pi = partial[(a, j)]
                    sr += c * pr
                    si += c * pi
            if sr or si:
                terms[(i, j)] = GaussianRational(sr, si)
    return BivariatePolynomial(terms, tag)


def resultant_det(M: SylvesterMatrix, self_check: bool = True) -> BivariatePolynomial:
    """Exact determinant of ``M`` as a polynomial in the independent (w, wbar).

    Per-variable degree is at most m+n, so (m+n+1)^2 integer nodes determine
    it. With ``self_check`` the result is compared against direct
    determinants at five nodes outside the interpolation grid.
    """
    d = M.m + M.n
    values = {}
    for a in range(d + 1):
        for b in range(d + 1):
            values[(a, b)] = det_exact(M.at(a, b))
    hC = interpolate_grid(values, d, d, WWBAR)
    if self_check:
        for k in range(5):
            u, v = d + 1 + k, 2 * d + 3 - k
            if bivar_eval(hC, u, v) != det_exact(M.at(u, v)):
                raise InternalConsistencyError(f"interpolated determinant disagrees at node ({u}, {v})")
    return hC


@dataclass(frozen=True)
class HResult:
    p: LaurentPolynomial
    hC: BivariatePolynomial
    h: BivariatePolynomial

    @property
    def m(self) -> int:
        return self.p.m

    @property
    def n(self) -> int:
        return self.p.n

    def degree_metadata(self) -> dict:
        total, dx, dy = bivar_degrees(self.h)
        _, dw, dwb = bivar_degrees(self.hC)
        return {
            "m": self.m,
            "n": self.n,
            "deg_h": total,
            "deg_h_x": dx,
            "deg_h_y": dy,
            "deg_hC_w": dw,
            "deg_hC_wbar": dwb,
        }


def compute_h(p: LaurentPolynomial, self_check: bool = True) -> HResult:
    """h_C(w, wbar) and its real form h(x, y), with the degree facts checked.

    Raises :class:`InternalConsistencyError` if deg h != 2n, if either
    per-variable degree of h_C differs from m+n, or (m > 0) if the pure
    w^{m+n} / wbar^{m+n} coefficients have the wrong modulus.
    """
    m, n = p.m, p.n
    if m > n:
        raise InputError("polynomial must be normalized (m <= n); see normalize_orientation")
    hC = resultant_det(SylvesterMatrix.from_polynomial(p), self_check=self_check)
    h = substitute_real(hC)
    if h.is_zero():
        raise InternalConsistencyError("resultant vanished identically")
    total, _, _ = bivar_degrees(h)
    _, dw, dwb = bivar_degrees(hC)
    if total != 2 * n:
        raise InternalConsistencyError(f"deg h = {total}, expected 2n = {2 * n}")
    if dw != m + n or dwb != m + n:
        raise InternalConsistencyError(f"per-variable degrees ({dw}, {dwb}) differ from m+n = {m + n}")
    if m > 0:
        expected = p.coeff(n).abs_sq() ** m * p.coeff(-m).abs_sq() ** n
        if hC.coeff(m + n, 0).abs_sq() != expected or hC.coeff(0, m + n).abs_sq() != expected:
            raise InternalConsistencyError("leading pure-power coefficient has the wrong modulus")
    return HResult(p, hC, h)


def leading_signs(result: HResult) -> Tuple[int, int]:
    """Observed signs (+1/-1) of the pure w^{m+n} and wbar^{m+n} coefficients
    relative to conj(a_n)^m conj(a_{-m})^n and a_{-m}^n a_n^m (m > 0 only)."""
    p, m, n = result.p, result.m, result.n
    if m == 0:
        raise InputError("defined for m > 0")
    ref_w = p.coeff(n).conj() ** m * p.coeff(-m).conj() ** n
    ref_wbar = p.coeff(-m) ** n * p.coeff(n) ** m
    sw = result.hC.coeff(m + n, 0) / ref_w
    swb = result.hC.coeff(0, m + n) / ref_wbar
    if sw not in (ONE, -ONE) or swb not in (ONE, -ONE):
        raise InternalConsistencyError("leading coefficient is not +/- the expected product")
    return int(sw.re), int(swb.re)

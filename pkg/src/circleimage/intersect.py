"""Bound on #(p(T) ∩ q(T)) and the common-factor guard it depends on."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .errors import InputError, InternalConsistencyError
from .numcore import ZERO, GaussianRational
from .numeric import count_intersections
from .poly import BivariatePolynomial, LaurentPolynomial, interpolate_coefficients, normalize_orientation
from .resultant import compute_h, det_exact, sylvester_rows


def intersection_bound(m: int, n: int, r: int, s: int) -> int:
    """4ns - 2(n-m)(s-r); reduces to 2ns for ordinary polynomials."""
    if not (0 <= m <= n and 0 <= r <= s and n >= 1 and s >= 1):
        raise InputError(f"need 0 <= m <= n, 0 <= r <= s, n, s >= 1 (got {m}, {n}, {r}, {s})")
    return 4 * n * s - 2 * (n - m) * (s - r)


def _specialize(h: BivariatePolynomial, var: int, value: int) -> List[GaussianRational]:
    """Coefficients in the remaining variable after fixing ``var`` := value.

    The list has the formal length deg_other(h) + 1, so a vanishing
    leading coefficient at this node is kept.
    """
    other = 1 - var
    d = h.degree_in(other)
    out = [ZERO] * (d + 1)
    for key, c in h.terms.items():
        out[key[other]] = out[key[other]] + c * Fraction(value) ** key[var]
    return out


def resultant_in(h1: BivariatePolynomial, h2: BivariatePolynomial, var: str = "y") -> Optional[List[GaussianRational]]:
    """Res_var(h1, h2) as ascending coefficients in the other variable.

    Returns None when either input is free of ``var`` (no Sylvester matrix).
    Computed by exact determinants at integer nodes plus interpolation.
    """
    if h1.tag != h2.tag:
        raise InputError("polynomials live in different rings")
    elim = {"y": 1, "x": 0, "wbar": 1, "w": 0}[var]
    keep = 1 - elim
    d1, d2 = h1.degree_in(elim), h2.degree_in(elim)
    if d1 <= 0 or d2 <= 0:
        return None
    bound = h1.total_degree() * h2.total_degree()
    nodes = list(range(bound + 1))
    values = [det_exact(sylvester_rows(_specialize(h1, keep, x0), _specialize(h2, keep, x0))) for x0 in nodes]
    coeffs = interpolate_coefficients(nodes, values)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def common_factor(h1: BivariatePolynomial, h2: BivariatePolynomial) -> bool:
    """True iff h1 and h2 share a nonconstant factor.

    Res_y vanishes identically exactly when there is a shared factor
    involving y; Res_x does the same for x, which also catches factors
    free of y.
    """
    if h1.is_zero() or h2.is_zero():
        raise InputError("common_factor needs nonzero polynomials")
    for var in ("y", "x"):
        res = resultant_in(h1, h2, var)
        if res is not None and not res:
            return True
    return False


@dataclass(frozen=True)
class BoundReport:
    m: int
    n: int
    r: int
    s: int
    bound: int
    common_factor: bool
    numeric_count: Optional[int] = None
    overlap_suspected: Optional[bool] = None

    def to_json(self) -> dict:
        out = {
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "s": self.s,
            "bound": self.bound,
            "common_factor": self.common_factor,
        }
        if self.numeric_count is not None:
            out["numeric_count"] = self.numeric_count
            out["overlap_suspected"] = self.overlap_suspected
        return out


def analyze_pair(
    p: LaurentPolynomial,
    q: LaurentPolynomial,
    numeric: bool = True,
    grid: int = 256,
    tol: float = 1e-9,
) -> BoundReport:
    p, q = normalize_orientation(p), normalize_orientation(q)
    hp, hq = compute_h(p).h, compute_h(q).h
    bound = intersection_bound(p.m, p.n, q.m, q.n)
    shared = common_factor(hp, hq)
    count = overlap = None
    if numeric:
        res = count_intersections(p, q, grid, tol)
        count, overlap = res.count, res.overlap_suspected
        if not shared and count > bound:
            raise InternalConsistencyError(f"counted {count} intersections, bound is {bound}")
    return BoundReport(p.m, p.n, q.m, q.n, bound, shared, count, overlap)


__all__ = ["intersection_bound", "resultant_in", "common_factor", "BoundReport", "analyze_pair"]

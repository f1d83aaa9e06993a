"""Is the gap V minus p(T) finite?

For m < n it always is. For m = n an unbounded zero set of
P(z) = p(z) - p(1/conj z) forces either a line image or a coincidence
between the zero lines of two homogeneous harmonic polynomials; both are
read off the coefficients of p.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .errors import InputError
from .numcore import GaussianRational
from .poly import BivariatePolynomial, LaurentPolynomial, XY


class Verdict(str, enum.Enum):
    FINITE_GAP = "FINITE_GAP"
    LINE_INFINITE_GAP = "LINE_INFINITE_GAP"
    CONDITION_B_UNDETERMINED = "CONDITION_B_UNDETERMINED"


class TopForm(str, enum.Enum):
    BOUNDED_CERTIFIED = "BOUNDED_CERTIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ConditionB:
    K: int
    matched_angle: Optional[float]
    min_angle_gap: float

    @property
    def holds(self) -> bool:
        return self.matched_angle is not None


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    eta_squared: Optional[GaussianRational] = None
    K: Optional[int] = None
    matched_angle: Optional[float] = None
    min_angle_gap: Optional[float] = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict.value}
        if self.eta_squared is not None:
            out["eta_squared"] = self.eta_squared.to_json()
        if self.K is not None:
            out["K"] = self.K
        if self.matched_angle is not None:
            out["matched_angle"] = self.matched_angle
        if self.min_angle_gap is not None:
            out["min_angle_gap"] = self.min_angle_gap
        return out


def _rotation_quotient(p: LaurentPolynomial, k: int) -> GaussianRational:
    return -p.coeff(-k).conj() / p.coeff(k)


def line_condition(p: LaurentPolynomial) -> Optional[GaussianRational]:
    """eta^2 with eta*a_k = -conj(eta*a_{-k}) for every k >= 1, if it exists.

    A returned value means p(T) lies in a line. Absent for m < n.
    """
    if p.m != p.n:
        return None
    eta_sq = None
    for k in range(1, p.n + 1):
        a, b = p.coeff(k), p.coeff(-k)
        if a.is_zero() and b.is_zero():
            continue
        if a.is_zero() or b.is_zero() or a.abs_sq() != b.abs_sq():
            return None
        q = _rotation_quotient(p, k)
        if eta_sq is None:
            eta_sq = q
        elif q != eta_sq:
            return None
    return eta_sq


def principal_eta(eta_sq: GaussianRational) -> complex:
    return cmath.sqrt(complex(eta_sq))


def condition_b(p: LaurentPolynomial, angle_tol: float = 1e-9) -> ConditionB:
    """Compare the zero lines of re(eta a_n z^n) and im(c_K z^K).

    ``c_k = eta a_k + conj(eta a_{-k})`` and K is the largest k < n with
    c_k != 0 (decided exactly through eta^2). Lines through the origin are
    compared modulo pi; the first coincidence within ``angle_tol`` is
    returned as ``matched_angle`` in [0, pi).
    """
    n = p.n
    if p.m != n:
        raise InputError("condition (b) applies only when m = n")
    if p.coeff(n).abs_sq() != p.coeff(-n).abs_sq():
        raise InputError("condition (b) needs |a_n| = |a_{-n}|")
    if line_condition(p) is not None:
        raise InputError("line case: condition (b) is not consulted")
    eta_sq = _rotation_quotient(p, n)
    # c_k = 0  <=>  eta^2 a_k + conj(a_{-k}) = 0
    K = max(k for k in range(1, n) if not (eta_sq * p.coeff(k) + p.coeff(-k).conj()).is_zero())
    eta = principal_eta(eta_sq)
    c_K = eta * complex(p.coeff(K)) + (eta * complex(p.coeff(-K))).conjugate()
    alpha = cmath.phase(eta * complex(p.coeff(n)))
    beta = cmath.phase(c_K)
    n_lines = [((math.pi / 2 - alpha + j * math.pi) / n) % math.pi for j in range(2 * n)]
    k_lines = [((-beta + l * math.pi) / K) % math.pi for l in range(2 * K)]
    best_gap = math.inf
    matched = None
    for a in n_lines:
        for b in k_lines:
            diff = abs(a - b) % math.pi
            gap = min(diff, math.pi - diff)
            best_gap = min(best_gap, gap)
            if matched is None and gap <= angle_tol:
                matched = a
    return ConditionB(K, matched, best_gap)


def classify(p: LaurentPolynomial, angle_tol: float = 1e-9) -> ClassificationReport:
    if p.m > p.n:
        raise InputError("polynomial must be normalized (m <= n)")
    if p.m < p.n:
        return ClassificationReport(Verdict.FINITE_GAP)
    eta_sq = line_condition(p)
    if eta_sq is not None:
        return ClassificationReport(Verdict.LINE_INFINITE_GAP, eta_squared=eta_sq)
    n = p.n
    if p.coeff(n).abs_sq() != p.coeff(-n).abs_sq():
        return ClassificationReport(Verdict.FINITE_GAP)
    eta_sq = _rotation_quotient(p, n)
    cb = condition_b(p, angle_tol)
    verdict = Verdict.CONDITION_B_UNDETERMINED if cb.holds else Verdict.FINITE_GAP
    return ClassificationReport(verdict, eta_sq, cb.K, cb.matched_angle, cb.min_angle_gap)


# --- boundedness certificate for V --------------------------------------


def _sturm_real_root_count(coeffs: List[Fraction]) -> int:
    """Number of distinct real roots of sum coeffs[i] s^i (exact)."""
    f = _trim(list(coeffs))
    if len(f) <= 1:
        return 0
    seq = [f, _trim([i * c for i, c in enumerate(f)][1:])]
    while len(seq[-1]) > 1:
        r = _poly_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])

    def changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def sign(x):
        return (x > 0) - (x < 0)

    at_pos = [sign(g[-1]) for g in seq]
    at_neg = [sign(g[-1]) * (-1) ** (len(g) - 1) for g in seq]
    return changes(at_neg) - changes(at_pos)


def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_rem(a, b):
    a = list(a)
    while len(a) >= len(b) and a:
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
        a = _trim(a)
    return a


def top_form_positive(h: BivariatePolynomial) -> TopForm:
    """Certify that the top homogeneous part of h has no real zero but the origin.

    That forces |h| -> infinity, hence V bounded. The certificate is exact:
    H(0, 1) != 0 plus a Sturm count showing H(1, s) has no real root.
    A float sweep of H on the unit circle rejects obvious sign changes first.
    """
    if h.tag != XY or h.is_zero():
        raise InputError("expects a nonzero polynomial in (x, y)")
    d = h.total_degree()
    if d == 0 or d % 2:
        return TopForm.INCONCLUSIVE
    top = h.homogeneous_part(d)
    theta = np.linspace(0, 2 * np.pi, 4 * d, endpoint=False)
    samples = top.evaluate_real(np.cos(theta), np.sin(theta))
    if not (np.all(samples > 0) or np.all(samples < 0)):
        return TopForm.INCONCLUSIVE
    # H(1, s) = sum c_{d-j, j} s^j and H(0, 1) = c_{0, d}
    coeffs = [top.coeff(d - j, j).re for j in range(d + 1)]
    if coeffs[d] == 0:
        return TopForm.INCONCLUSIVE
    if _sturm_real_root_count(coeffs) != 0:
        return TopForm.INCONCLUSIVE
    return TopForm.BOUNDED_CERTIFIED


def line_direction(p: LaurentPolynomial, eta_sq: GaussianRational) -> Tuple[complex, float]:
    """Unit direction of the line containing p(T), and the constant re(eta*p)."""
    eta = principal_eta(eta_sq)
    return 1j * eta.conjugate(), (eta * complex(p.coeff(0))).real

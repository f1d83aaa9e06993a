"""Floating-point side: roots, the root-product oracle, curve sampling,
gap-point search, intersection counting and implicit-curve contouring.

Everything here is approximate; exact statements live in ``resultant``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InputError
from .poly import BivariatePolynomial, LaurentPolynomial, XY

DEFAULT_DELTA = 1e-3
DEFAULT_SAMPLES = 4096


@dataclass(frozen=True)
class CurveSample:
    params: np.ndarray
    points: np.ndarray  # shape (N, 2)

    @property
    def complex_points(self) -> np.ndarray:
        return self.points[:, 0] + 1j * self.points[:, 1]


def roots(coeffs: Sequence[complex]) -> np.ndarray:
    """All complex roots of ``sum coeffs[i] z**i`` (ascending order).

    Eigenvalues of the companion matrix (numpy's QR-based solver).
    """
    c = np.asarray(coeffs, dtype=complex)
    if c.size < 2:
        raise InputError("need degree >= 1")
    if c[-1] == 0:
        raise InputError("leading coefficient must be nonzero")
    return np.roots(c[::-1])


def g_coefficients(p: LaurentPolynomial, w: complex) -> np.ndarray:
    """Ascending float coefficients of z^m (p(z) - w)."""
    c = np.array([complex(a) for a in p.dense()], dtype=complex)
    c[p.m] -= w
    return c


def res_zeros_oracle(p: LaurentPolynomial, w: complex) -> complex:
    """|a_n|^{2(m+n)} * prod_{i,j} (z_i conj(z_j) - 1) over the roots z_i of g.

    Same sign convention as :func:`circleimage.resultant.resultant_det`,
    i.e. the classical resultant times (-1)^{m+n}.
    """
    m, n = p.m, p.n
    if m == 0 and complex(p.coeff(0)) == complex(w):
        raise InputError("w = a_0 with m = 0: g* drops degree")
    z = roots(g_coefficients(p, w))
    prod = np.prod(np.outer(z, z.conj()) - 1.0)
    return complex(abs(complex(p.coeff(n))) ** (2 * (m + n)) * prod)


def sample_curve(p: LaurentPolynomial, N: int = 1024) -> CurveSample:
    if N < 16:
        raise InputError("need at least 16 samples")
    t = 2 * np.pi * np.arange(N) / N
    w = p.evaluate_float(np.exp(1j * t))
    return CurveSample(t, np.column_stack([w.real, w.imag]))


def h_residual(h: BivariatePolynomial, x, y):
    """|h(x, y)| relative to the sum of absolute term values (floor 1)."""
    val = np.abs(h.evaluate_real(x, y))
    scale = np.maximum(h.magnitude_real(x, y), 1.0)
    return val / scale


def distance_to_curve(p: LaurentPolynomial, w: complex, N: int = DEFAULT_SAMPLES) -> float:
    pts = sample_curve(p, N).complex_points
    return float(np.min(np.abs(pts - w)))


def verify_extra_point(
    p: LaurentPolynomial,
    h: BivariatePolynomial,
    w: complex,
    delta: float = DEFAULT_DELTA,
    N: int = DEFAULT_SAMPLES,
) -> bool:
    """True when w lies on V = {h = 0} but at least ``delta`` away from p(T)."""
    w = complex(w)
    if h_residual(h, w.real, w.imag) >= 1e-8:
        return False
    return distance_to_curve(p, w, N) > delta


# --- gap points via the reflection set E ----------------------------------


def _reflection_residual(p: LaurentPolynomial, z: np.ndarray):
    zr = 1 / z.conj()
    F = p.evaluate_float(z) - p.evaluate_float(zr)
    Fz = p.derivative_float(z)
    Fzb = p.derivative_float(zr) / z.conj() ** 2
    return F, Fz, Fzb


def find_gap_points(
    p: LaurentPolynomial,
    h: Optional[BivariatePolynomial] = None,
    delta: float = DEFAULT_DELTA,
    radii: int = 96,
    angles: int = 192,
) -> List[complex]:
    """Points of V away from p(T), found as p(z) for z in E inside the disk.

    E = {z : p(z) = p(1/conj z)}; off-circle solutions with |z| < 1 are
    located by Newton iteration on a polar grid. Only isolated solutions are
    recovered, so this is meaningful when the gap is finite.
    """
    r = np.geomspace(1e-3, 0.999, radii)
    th = 2 * np.pi * np.arange(angles) / angles
    R, TH = np.meshgrid(r, th, indexing="ij")
    Z = R * np.exp(1j * TH)
    F, _, _ = _reflection_residual(p, Z)
    A = np.abs(F)
    is_min = np.ones_like(A, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == dj == 0:
                continue
            shifted = np.roll(A, dj, axis=1)
            if di:
                shifted = np.roll(shifted, di, axis=0)
                edge = 0 if di == 1 else -1
                shifted[edge, :] = np.inf
            is_min &= A <= shifted
    z = Z[is_min]
    for _ in range(60):
        F, Fz, Fzb = _reflection_residual(p, z)
        dx = Fz + Fzb
        dy = 1j * (Fz - Fzb)
        J = np.stack([np.stack([dx.real, dy.real], -1), np.stack([dx.imag, dy.imag], -1)], -2)
        rhs = -np.stack([F.real, F.imag], -1)
        step = np.einsum("kij,kj->ki", np.linalg.pinv(J), rhs)
        z = z + step[:, 0] + 1j * step[:, 1]
        z = np.where(np.isfinite(z) & (np.abs(z) > 1e-9), z, 0.5)
    F, _, _ = _reflection_residual(p, z)
    scale = 1 + np.abs(p.evaluate_float(z))
    good = (np.abs(F) < 1e-9 * scale) & (np.abs(z) < 1 - 1e-6)
    candidates = p.evaluate_float(z[good]) if np.any(good) else np.array([], dtype=complex)
    found = _cluster(list(np.atleast_1d(candidates)), 1e-6)
    curve = sample_curve(p, DEFAULT_SAMPLES).complex_points
    out = []
    for w in found:
        if np.min(np.abs(curve - w)) <= delta:
            continue
        if h is not None and h_residual(h, w.real, w.imag) >= 1e-8:
            continue
        out.append(complex(w))
    return sorted(out, key=lambda c: (round(c.real, 9), round(c.imag, 9)))


def _cluster(points: List[complex], radius: float) -> List[complex]:
    reps: List[complex] = []
    for w in points:
        if all(abs(w - r) > radius for r in reps):
            reps.append(complex(w))
    return reps


# --- intersections of two circle images -------------------------------------


@dataclass
class IntersectionResult:
    count: int
    points: List[complex] = field(default_factory=list)
    overlap_suspected: bool = False

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "points": [[w.real, w.imag] for w in self.points],
            "overlap_suspected": self.overlap_suspected,
        }


def _lipschitz(p: LaurentPolynomial) -> float:
    return sum(abs(k) * abs(complex(c)) for k, c in p.terms.items())


def count_intersections(
    p: LaurentPolynomial, q: LaurentPolynomial, grid: int = 256, tol: float = 1e-9
) -> IntersectionResult:
    """Count points of p(T) ∩ q(T).

    Every node of the grid x grid parameter torus within the Lipschitz
    radius of a zero of d(s, t) = p(e^{is}) - q(e^{it}) is refined by
    Gauss-Newton; converged zeros are merged in image space within
    max(10*tol, sqrt(tol)).
    A one-dimensional family of zeros (>= grid/4 distinct parameter pairs)
    sets ``overlap_suspected``.
    """
    if grid < 64:
        raise InputError("grid must be at least 64")
    t = 2 * np.pi * np.arange(grid) / grid
    P = p.evaluate_float(np.exp(1j * t))
    Q = q.evaluate_float(np.exp(1j * t))
    D = np.abs(P[:, None] - Q[None, :])
    spacing = 2 * np.pi / grid
    threshold = (_lipschitz(p) + _lipschitz(q)) * spacing
    si, ti = np.nonzero(D < threshold)
    if si.size == 0:
        return IntersectionResult(0)
    s = t[si].astype(float)
    u = t[ti].astype(float)
    for _ in range(100):
        es, eu = np.exp(1j * s), np.exp(1j * u)
        F = p.evaluate_float(es) - q.evaluate_float(eu)
        ds = 1j * es * p.derivative_float(es)
        du = -1j * eu * q.derivative_float(eu)
        J = np.stack([np.stack([ds.real, du.real], -1), np.stack([ds.imag, du.imag], -1)], -2)
        step = np.einsum("kij,kj->ki", np.linalg.pinv(J), -np.stack([F.real, F.imag], -1))
        s = s + step[:, 0]
        u = u + step[:, 1]
        if np.all(np.abs(step) < 1e-15):
            break
    es, eu = np.exp(1j * s), np.exp(1j * u)
    F = np.abs(p.evaluate_float(es) - q.evaluate_float(eu))
    ok = F < tol
    s, u = np.mod(s[ok], 2 * np.pi), np.mod(u[ok], 2 * np.pi)
    distinct_params = {(round(a, 7) % round(2 * np.pi, 7), round(b, 7) % round(2 * np.pi, 7)) for a, b in zip(s, u)}
    overlap = len(distinct_params) >= grid // 4
    image = p.evaluate_float(np.exp(1j * s)) if s.size else np.array([], dtype=complex)
    # order by parameter so the output is deterministic
    order = np.lexsort((u, s))
    # tangential zeros are only located to about sqrt(tol)
    pts = _cluster([image[k] for k in order], max(10 * tol, np.sqrt(tol)))
    pts.sort(key=lambda c: (round(c.real, 9), round(c.imag, 9)))
    return IntersectionResult(len(pts), pts, overlap)


# --- marching squares ---------------------------------------------------------


# corners: 0=(i,j) 1=(i+1,j) 2=(i+1,j+1) 3=(i,j+1); edges: 0 bottom, 1 right, 2 top, 3 left
_EDGE_CORNERS = {0: (0, 1), 1: (1, 2), 2: (3, 2), 3: (0, 3)}
_CASES: Dict[int, List[Tuple[int, int]]] = {
    0: [], 15: [],
    1: [(3, 0)], 14: [(3, 0)],
    2: [(0, 1)], 13: [(0, 1)],
    3: [(3, 1)], 12: [(3, 1)],
    4: [(1, 2)], 11: [(1, 2)],
    6: [(0, 2)], 9: [(0, 2)],
    7: [(3, 2)], 8: [(3, 2)],
}


def contour(
    h: BivariatePolynomial, bbox: Tuple[float, float, float, float], resolution: int = 200
) -> List[np.ndarray]:
    """Polylines approximating {h = 0} inside ``bbox = (x0, y0, x1, y1)``.

    Nodes with h >= 0 count as inside, so a zero sitting exactly on a grid
    node still yields a (small) component.
    """
    if resolution < 32:
        raise InputError("resolution must be at least 32")
    if h.tag != XY:
        raise InputError("contour expects a polynomial in (x, y)")
    x0, y0, x1, y1 = bbox
    xs = np.linspace(x0, x1, resolution + 1)
    ys = np.linspace(y0, y1, resolution + 1)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    V = h.evaluate_real(X, Y)
    inside = V >= 0
    idx = (
        inside[:-1, :-1].astype(int)
        | inside[1:, :-1].astype(int) << 1
        | inside[1:, 1:].astype(int) << 2
        | inside[:-1, 1:].astype(int) << 3
    )
    segments = []
    for i, j in zip(*np.nonzero((idx != 0) & (idx != 15))):
        case = int(idx[i, j])
        corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
        if case in (5, 10):
            cx, cy = (xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2
            center_in = h.evaluate_real(cx, cy) >= 0
            # corners 0 and 2 share a state in case 5; join them through the centre if it matches
            if (case == 5) == bool(center_in):
                pairs = [(3, 2), (0, 1)]
            else:
                pairs = [(3, 0), (1, 2)]
        else:
            pairs = _CASES[case]
        for e0, e1 in pairs:
            segments.append((_edge_point(e0, corners, xs, ys, V), _edge_point(e1, corners, xs, ys, V)))
    return _join_segments(segments)


def _edge_point(edge, corners, xs, ys, V):
    a, b = _EDGE_CORNERS[edge]
    (ia, ja), (ib, jb) = corners[a], corners[b]
    va, vb = V[ia, ja], V[ib, jb]
    t = 0.5 if va == vb else min(max(va / (va - vb), 0.0), 1.0)
    key = ("e", min(ia, ib), min(ja, jb), ia != ib)
    return key, (xs[ia] + t * (xs[ib] - xs[ia]), ys[ja] + t * (ys[jb] - ys[ja]))


def _join_segments(segments) -> List[np.ndarray]:
    adjacency: Dict[tuple, List[int]] = {}
    for k, (a, b) in enumerate(segments):
        adjacency.setdefault(a[0], []).append(k)
        adjacency.setdefault(b[0], []).append(k)
    used = [False] * len(segments)
    lines = []
    for start in range(len(segments)):
        if used[start]:
            continue
        used[start] = True
        a, b = segments[start]
        chain = [a, b]
        for forward in (True, False):
            while True:
                end = chain[-1] if forward else chain[0]
                nxt = next((k for k in adjacency[end[0]] if not used[k]), None)
                if nxt is None:
                    break
                used[nxt] = True
                c, d = segments[nxt]
                other = d if c[0] == end[0] else c
                if forward:
                    chain.append(other)
                else:
                    chain.insert(0, other)
        lines.append(np.array([pt for _, pt in chain], dtype=float))
    return lines


def is_closed(line: np.ndarray, tol: float = 1e-12) -> bool:
    return len(line) > 2 and bool(np.hypot(*(line[0] - line[-1])) <= tol)


def auto_bbox(p: LaurentPolynomial, N: int = 1024, pad: float = 0.25) -> Tuple[float, float, float, float]:
    pts = sample_curve(p, N).points
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = np.maximum(hi - lo, 1e-6)
    lo, hi = lo - pad * span, hi + pad * span
    return float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1])

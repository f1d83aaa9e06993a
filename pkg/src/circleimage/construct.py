"""Polynomials whose algebraic completion V has prescribed extra points.

Given anchors a_1..a_N strictly inside the unit disk, the polynomial
p = q + M r takes the value k at both a_k and its reflection 1/conj(a_k),
so k lies on V; for large M the circle image stays outside |w| <= N.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConstructionError, InputError
from .numcore import ONE, GaussianRational
from .poly import LaurentPolynomial, interpolate_coefficients


@dataclass(frozen=True)
class SingletonSpec:
    anchors: Tuple[GaussianRational, ...]
    values: Optional[Tuple[GaussianRational, ...]] = None

    def __post_init__(self):
        anchors = tuple(GaussianRational.coerce(a) for a in self.anchors)
        object.__setattr__(self, "anchors", anchors)
        if not anchors:
            raise InputError("at least one anchor is required")
        if len(set(anchors)) != len(anchors):
            raise InputError("anchors must be pairwise distinct")
        for a in anchors:
            if not 0 < a.abs_sq() < 1:
                raise InputError(f"anchor {a} must satisfy 0 < |a| < 1")
        if self.values is None:
            object.__setattr__(self, "values", tuple(GaussianRational(k) for k in range(1, len(anchors) + 1)))
        elif len(self.values) != len(anchors):
            raise InputError("one target value per anchor")
        else:
            object.__setattr__(self, "values", tuple(GaussianRational.coerce(v) for v in self.values))

    @property
    def nodes(self) -> List[GaussianRational]:
        return list(self.anchors) + [ONE / a.conj() for a in self.anchors]

    @classmethod
    def from_json(cls, obj) -> "SingletonSpec":
        try:
            anchors = [GaussianRational.from_json(a) for a in obj["anchors"]]
            values = obj.get("values")
            if values is not None:
                values = [GaussianRational.from_json(v) for v in values]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed anchors JSON: {exc}") from exc
        return cls(tuple(anchors), None if values is None else tuple(values))


def lagrange_interpolate(nodes: Sequence, values: Sequence) -> LaurentPolynomial:
    """Exact interpolating polynomial (m = 0) of degree < len(nodes)."""
    return LaurentPolynomial.from_dense(interpolate_coefficients(nodes, values))


def vanishing_polynomial(nodes: Sequence) -> LaurentPolynomial:
    r = LaurentPolynomial({0: 1})
    for a in nodes:
        r = r * LaurentPolynomial({1: 1, 0: -GaussianRational.coerce(a)})
    return r


def lipschitz_bound(p: LaurentPolynomial) -> float:
    """Upper bound for |d/dt p(e^{it})|."""
    return sum(abs(k) * abs(complex(c)) for k, c in p.terms.items())


def certified_min_modulus(p: LaurentPolynomial, grid: int = 4096) -> float:
    """Lower bound for min over the circle of |p|.

    Grid minimum minus the Lipschitz slack over half a grid step, with a
    relative allowance for float rounding.
    """
    t = 2 * np.pi * np.arange(grid) / grid
    vals = np.abs(p.evaluate_float(np.exp(1j * t)))
    slack = lipschitz_bound(p) * math.pi / grid
    return float(vals.min() - slack - 1e-12 * vals.max())


def build_singleton_example(spec: SingletonSpec, max_doublings: int = 60) -> Tuple[LaurentPolynomial, Fraction]:
    """Return (p, M) with p = q + M r and a certified min_T |p| > N.

    M doubles from 1 until the 1024-point grid minimum of |p| exceeds
    N + 1/2, then the bound is certified on a 4096-point grid (refined up to
    2^20 points if the Lipschitz slack is too coarse).
    """
    N = len(spec.anchors)
    nodes = spec.nodes
    q = lagrange_interpolate(nodes, list(spec.values) * 2)
    r = vanishing_polynomial(nodes)
    target = max(N, max(abs(complex(v)) for v in spec.values))
    M = Fraction(1)
    for _ in range(max_doublings):
        p = q + r * M
        if _grid_min(p, 1024) > target + 0.5:
            grid = 4096
            while grid <= 1 << 20:
                if certified_min_modulus(p, grid) > target:
                    return p, M
                grid *= 4
        M *= 2
    raise ConstructionError(f"no certified margin after {max_doublings} doublings of M")


def _grid_min(p: LaurentPolynomial, grid: int) -> float:
    t = 2 * np.pi * np.arange(grid) / grid
    return float(np.abs(p.evaluate_float(np.exp(1j * t))).min())

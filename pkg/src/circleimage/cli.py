"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 internal invariant violation,
4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .classify import classify
from .construct import SingletonSpec, build_singleton_example, certified_min_modulus
from .errors import ConstructionError, InputError, InternalConsistencyError
from .intersect import analyze_pair
from .numeric import auto_bbox, contour, count_intersections, find_gap_points, h_residual, is_closed, sample_curve
from .poly import LaurentPolynomial, bivar_eval, circle_point, laurent_eval, normalize_orientation
from .resultant import compute_h

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_VERIFY = 4


class VerificationFailure(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[str] = None
    output: Optional[str] = None
    samples: int = 1024
    rational: int = 20
    resolution: int = 200
    angle_tol: float = 1e-9
    tol: float = 1e-9
    delta: float = 1e-3
    grid: int = 256
    bbox: Optional[Tuple[float, float, float, float]] = None

    def __post_init__(self):
        for name in ("angle_tol", "tol", "delta"):
            if not getattr(self, name) > 0:
                raise InputError(f"--{name.replace('_', '-')} must be positive")
        if self.resolution < 32:
            raise InputError("--resolution must be at least 32")


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def load_polynomial(path: str) -> LaurentPolynomial:
    return normalize_orientation(LaurentPolynomial.from_json(_read_json(path)))


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _parse_bbox(text: str) -> Optional[Tuple[float, float, float, float]]:
    if text == "auto":
        return None
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad --bbox {text!r}") from exc
    if len(vals) != 4 or not (vals[0] < vals[2] and vals[1] < vals[3]):
        raise InputError("--bbox must be x0,y0,x1,y1 with x0 < x1, y0 < y1")
    return vals  # type: ignore[return-value]


# --- commands ---------------------------------------------------------------


def cmd_compute_h(cfg: RunConfig) -> int:
    p = load_polynomial(cfg.input)
    res = compute_h(p)
    _emit(
        _dump(
            {
                "p": p.to_json(),
                "hC": res.hC.to_json(),
                "h": res.h.to_json(),
                "h_text": str(res.h),
                "degrees": res.degree_metadata(),
            }
        ),
        cfg.output,
    )
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    p = load_polynomial(cfg.input)
    _emit(_dump(classify(p, cfg.angle_tol).to_json()), cfg.output)
    return EXIT_OK


def rational_parameters(count: int) -> List[Fraction]:
    """Deterministic distinct rationals spread around zero."""
    return [Fraction(2 * j - count, count + 1) for j in range(count)]


def cmd_verify(cfg: RunConfig) -> int:
    p = load_polynomial(cfg.input)
    res = compute_h(p)
    exact = 0
    for t in rational_parameters(cfg.rational):
        w = laurent_eval(p, circle_point(t))
        if bivar_eval(res.h, w.re, w.im).is_zero():
            exact += 1
    pts = sample_curve(p, cfg.samples).points
    residual = float(np.max(h_residual(res.h, pts[:, 0], pts[:, 1])))
    report = {
        "exact_zeros": exact,
        "rational_points": cfg.rational,
        "summary": f"{exact}/{cfg.rational} exact zeros",
        "samples": cfg.samples,
        "max_relative_residual": residual,
        "verdict": classify(p, cfg.angle_tol).verdict.value,
    }
    if report["verdict"] == "FINITE_GAP":
        report["gap_points"] = [[w.real, w.imag] for w in find_gap_points(p, res.h, cfg.delta)]
    _emit(_dump(report), cfg.output)
    if exact != cfg.rational or residual > 1e-8:
        raise VerificationFailure(report["summary"])
    return EXIT_OK


def cmd_bound(cfg: RunConfig, p_path: str, q_path: str) -> int:
    report = analyze_pair(load_polynomial(p_path), load_polynomial(q_path), grid=cfg.grid, tol=cfg.tol)
    _emit(_dump(report.to_json()), cfg.output)
    return EXIT_OK


def cmd_intersections(cfg: RunConfig, p_path: str, q_path: str) -> int:
    res = count_intersections(load_polynomial(p_path), load_polynomial(q_path), cfg.grid, cfg.tol)
    _emit(_dump(res.to_json()), cfg.output)
    return EXIT_OK


def cmd_construct(cfg: RunConfig) -> int:
    spec = SingletonSpec.from_json(_read_json(cfg.input))
    p, M = build_singleton_example(spec)
    _emit(
        _dump(
            {
                "polynomial": p.to_json(),
                "M": str(M),
                "certified_min_modulus": certified_min_modulus(p),
                "gap_values": [v.to_json() for v in spec.values],
            }
        ),
        cfg.output,
    )
    return EXIT_OK


def render_svg(p: LaurentPolynomial, cfg: RunConfig) -> str:
    res = compute_h(p)
    bbox = cfg.bbox or auto_bbox(p)
    x0, y0, x1, y1 = bbox
    width = 600
    height = max(1, int(round(width * (y1 - y0) / (x1 - x0))))

    def tx(pt):
        return (pt[0] - x0) / (x1 - x0) * width, (y1 - pt[1]) / (y1 - y0) * height

    def path(line, closed):
        coords = " ".join("%.3f,%.3f" % tx(pt) for pt in line)
        return f"M {coords}" + (" Z" if closed else "")

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f"<!-- circleimage {__version__} -->",
        f"<title>{p}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for line in contour(res.h, bbox, cfg.resolution):
        out.append(
            f'<path class="zero-set" d="{path(line, is_closed(line))}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>'
        )
    curve = sample_curve(p, cfg.samples).points
    out.append(f'<path class="circle-image" d="{path(curve, True)}" fill="none" stroke="#d62728" stroke-width="1" stroke-dasharray="4 2"/>')
    if classify(p, cfg.angle_tol).verdict.value == "FINITE_GAP":
        for w in find_gap_points(p, res.h, cfg.delta):
            cx, cy = tx((w.real, w.imag))
            out.append(f'<circle class="gap-point" cx="{cx:.3f}" cy="{cy:.3f}" r="4" fill="#2ca02c"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_plot(cfg: RunConfig) -> int:
    p = load_polynomial(cfg.input)
    _emit(render_svg(p, cfg), cfg.output)
    return EXIT_OK


# --- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circleimage", description="Algebraic completion of Laurent-polynomial images of the unit circle."
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_io(sp, needs_input=True):
        if needs_input:
            sp.add_argument("input", help="polynomial JSON file ('-' for stdin)")
        sp.add_argument("-o", "--output", help="write here instead of stdout")
        return sp

    with_io(sub.add_parser("compute-h", help="compute h_C(w, wbar) and h(x, y)"))
    sp = with_io(sub.add_parser("classify", help="is V minus p(T) finite?"))
    sp.add_argument("--angle-tol", type=float, default=1e-9)

    sp = with_io(sub.add_parser("verify", help="exact and float vanishing of h on p(T)"))
    sp.add_argument("--samples", type=int, default=1024)
    sp.add_argument("--rational", type=int, default=20)
    sp.add_argument("--delta", type=float, default=1e-3)
    sp.add_argument("--angle-tol", type=float, default=1e-9)

    for name, text in (("bound", "intersection bound and common-factor test"), ("intersections", "count p(T) ∩ q(T)")):
        sp = with_io(sub.add_parser(name, help=text), needs_input=False)
        sp.add_argument("--p", required=True)
        sp.add_argument("--q", required=True)
        sp.add_argument("--grid", type=int, default=256)
        sp.add_argument("--tol", type=float, default=1e-9)

    sp = with_io(sub.add_parser("construct", help="polynomial with gap points 1..N"), needs_input=False)
    sp.add_argument("--points", required=True, help='JSON file {"anchors": [{"re": ..., "im": ...}, ...]}')

    sp = with_io(sub.add_parser("plot", help="SVG of p(T) over the zero set of h"))
    sp.add_argument("--resolution", type=int, default=200)
    sp.add_argument("--bbox", default="auto", help="auto or x0,y0,x1,y1")
    sp.add_argument("--samples", type=int, default=1024)
    sp.add_argument("--delta", type=float, default=1e-3)
    sp.add_argument("--angle-tol", type=float, default=1e-9)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        kwargs = {
            k: v
            for k, v in vars(args).items()
            if k in RunConfig.__dataclass_fields__ and v is not None and k != "bbox"
        }
        if args.command == "construct":
            kwargs["input"] = args.points
        if getattr(args, "bbox", None):
            kwargs["bbox"] = _parse_bbox(args.bbox)
        cfg = RunConfig(**kwargs)
        if args.command == "compute-h":
            return cmd_compute_h(cfg)
        if args.command == "classify":
            return cmd_classify(cfg)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "bound":
            return cmd_bound(cfg, args.p, args.q)
        if args.command == "intersections":
            return cmd_intersections(cfg, args.p, args.q)
        if args.command == "construct":
            return cmd_construct(cfg)
        if args.command == "plot":
            return cmd_plot(cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InternalConsistencyError, ConstructionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    parser.error(f"unknown command {args.command}")
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands evaluate the special functions, dump coefficient and
quadrature tables, run the transform, heat flow, and translation on
grids, exercise the oscillator checks, and run the acceptance suite.
Numeric CSV output uses 17 significant digits so values round-trip
through text exactly.  Exit codes: 0 success, 1 verification failure,
2 argument or domain errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import oscillator as osc
from . import verify as verify_mod
from .core import MuParam, gamma_mu, gamma_mu_exact
from .efun import c_s_mu, e_mu
from .exact import IDENTITY_TAGS, verify_identity
from .heat import heat_apply_kernel, heat_gaussian, heat_odd_gaussian, heat_spectral_matrix
from .hermite import hermite_coeffs, hermite_eval
from .poly import fraction_str
from .quadrature import gauss_alpha_mu, gauss_hermite_mu
from .transform import (
    SpectralVector,
    expand,
    fourier_quadrature,
    phi_eval,
    synthesize,
)
from .translate import (
    translate_alpha,
    translate_gaussian_closed,
    translate_odd_gaussian_closed,
    translate_xi,
)

__all__ = ["main"]


def _fmt(v: float) -> str:
    return f"{float(v):.17g}"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _grid(args) -> np.ndarray:
    if args.num < 2:
        raise ValueError("--num must be at least 2")
    if not args.xmax > args.xmin:
        raise ValueError("--xmax must exceed --xmin")
    return np.linspace(args.xmin, args.xmax, args.num)


def _add_common(p: argparse.ArgumentParser, grid: bool = False) -> None:
    p.add_argument("--mu", type=MuParam.parse, required=True, help="deformation parameter, decimal or p/q")
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")
    if grid:
        p.add_argument("--xmin", type=float, default=-3.0)
        p.add_argument("--xmax", type=float, default=3.0)
        p.add_argument("--num", type=int, default=61, help="grid size")


def _cmd_eval(args) -> int:
    xs = np.asarray(args.x, dtype=float)
    if args.fn in ("hermite", "phi") and args.n is None:
        raise ValueError(f"--fn {args.fn} needs --n")
    if args.fn == "hermite":
        vals = hermite_eval(args.mu, args.n, xs)
    elif args.fn == "phi":
        vals = phi_eval(args.mu, args.n, xs)
    elif args.fn == "efun":
        vals = np.asarray([e_mu(args.mu, float(v)) for v in xs])
    elif args.fn == "cos-sin":
        pairs = [c_s_mu(args.mu, float(v)) for v in xs]
        lines = ["x,cos_part,sin_part"]
        lines += [f"{_fmt(v)},{_fmt(c)},{_fmt(s)}" for v, (c, s) in zip(xs, pairs)]
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    else:
        raise ValueError(f"unknown --fn {args.fn!r}")
    if len(xs) == 1:
        _emit(_fmt(vals if np.isscalar(vals) else np.asarray(vals).ravel()[0]) + "\n", args.out)
    else:
        lines = ["x,value"] + [f"{_fmt(v)},{_fmt(w)}" for v, w in zip(xs, np.asarray(vals))]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_gamma(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be nonnegative")
    if args.mu.exact is not None:
        val = gamma_mu_exact(args.mu.exact, args.n)
        _emit(fraction_str(val) + "\n", args.out)
    else:
        _emit(_fmt(gamma_mu(args.mu, args.n)) + "\n", args.out)
    return 0


def _cmd_table(args) -> int:
    if args.nmax < 0:
        raise ValueError("--nmax must be nonnegative")
    exact = args.mu.exact is not None
    lines = []
    for n in range(args.nmax + 1):
        poly = hermite_coeffs(args.mu, n, exact=exact)
        coeffs = [fraction_str(c) if exact else _fmt(c) for c in poly.coeffs]
        lines.append(",".join([str(n)] + coeffs))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_quad(args) -> int:
    if args.kind == "hermite":
        rule = gauss_hermite_mu(args.mu, args.n)
    else:
        rule = gauss_alpha_mu(args.mu, args.n)
    _emit(rule.to_csv(), args.out)
    return 0


def _cmd_transform(args) -> int:
    x = _grid(args)
    if args.family == "gaussian":
        f = lambda t: np.exp(-args.lam * t * t)
        sigma = args.lam
    elif args.family == "monomial":
        if args.n is None:
            raise ValueError("--family monomial needs --n")
        f = lambda t: t**args.n * np.exp(-args.lam * t * t)
        sigma = args.lam
    elif args.family == "hermite":
        if args.n is None:
            raise ValueError("--family hermite needs --n")
        f = lambda t: hermite_eval(args.mu, args.n, args.beta * t) * np.exp(-args.lam * args.lam * t * t)
        sigma = args.lam * args.lam
    elif args.family == "phi":
        if args.n is None:
            raise ValueError("--family phi needs --n")
        f = lambda t: phi_eval(args.mu, args.n, t)
        sigma = 0.5
    else:
        raise ValueError(f"unknown --family {args.family!r}")
    if args.sigma is not None:
        sigma = args.sigma
    vals = fourier_quadrature(args.mu, f, x, sigma=sigma, quad_n=args.quad_n, inverse=args.inverse)
    lines = ["x,re,im"] + [f"{_fmt(v)},{_fmt(w.real)},{_fmt(w.imag)}" for v, w in zip(x, vals)]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_heat(args) -> int:
    x = _grid(args)
    if not args.t >= 0:
        raise ValueError("--t must be nonnegative")
    if not args.alpha > 0:
        raise ValueError("--alpha must be positive")
    even = args.family == "even"
    if args.route == "closed":
        vals = heat_gaussian(args.mu, args.alpha, 0.0, args.t, x).real if even else heat_odd_gaussian(
            args.mu, args.alpha, args.t, x
        )
    elif args.route == "kernel":
        f = (lambda u: np.exp(-args.alpha * u * u)) if even else (lambda u: u * np.exp(-args.alpha * u * u))
        vals = heat_apply_kernel(args.mu, f, args.t, x)
    elif args.route == "spectral":
        f = (lambda u: np.exp(-args.alpha * u * u)) if even else (lambda u: u * np.exp(-args.alpha * u * u))
        coeffs = expand(args.mu, f, args.size - 1, sigma=args.alpha)
        flow = heat_spectral_matrix(args.mu, args.t, args.size)
        vals = synthesize(SpectralVector(args.mu.require_numeric(), flow @ np.asarray(coeffs.coeffs)), x).real
    else:
        raise ValueError(f"unknown --route {args.route!r}")
    lines = ["x,value"] + [f"{_fmt(v)},{_fmt(w)}" for v, w in zip(x, vals)]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_translate(args) -> int:
    x = _grid(args)
    if not args.lam > 0:
        raise ValueError("--lam must be positive")
    even = args.family == "even"
    f = (lambda u: np.exp(-args.lam * u * u)) if even else (lambda u: u * np.exp(-args.lam * u * u))
    if args.route == "closed":
        vals = (
            translate_gaussian_closed(args.mu, args.lam, x, args.y)
            if even
            else translate_odd_gaussian_closed(args.mu, args.lam, x, args.y)
        )
    elif args.route == "alpha":
        vals = np.asarray([translate_alpha(args.mu, f, float(v), args.y) for v in x])
    elif args.route == "xi":
        vals = np.asarray([translate_xi(args.mu, f, float(v), args.y) for v in x])
    else:
        raise ValueError(f"unknown --route {args.route!r}")
    lines = ["x,value"] + [f"{_fmt(v)},{_fmt(w)}" for v, w in zip(x, np.asarray(vals, dtype=float))]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_oscillator(args) -> int:
    rep = osc.build(args.mu, args.size)
    if args.check:
        table = {
            "structure": osc.check_structure,
            "equations_of_motion": osc.check_equations_of_motion,
            "commutation": osc.check_commutation,
            "ladder_powers": osc.check_ladder_powers,
            "rodrigues_operator": osc.check_rodrigues_operator,
            "rotation": osc.check_rotation,
            "representation": osc.check_representation,
        }
        if args.check not in table:
            raise ValueError(f"unknown --check {args.check!r}; known: {', '.join(sorted(table))}")
        reports = (table[args.check](rep),)
    else:
        reports = osc.run_all(rep, ladder_n_max=args.ladder_nmax, rodrigues_n_max=args.rodrigues_nmax)
    _emit(json.dumps([r.to_json() for r in reports], indent=2) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_verify(args) -> int:
    if args.mu is not None:
        nmax = args.nmax if args.nmax is not None else 20
        reports = []
        for tag in IDENTITY_TAGS:
            cap = min(nmax, 12) if tag in verify_mod.SERIES_TAGS else nmax
            rep = verify_identity(tag, args.mu, cap)
            reports.append(
                {
                    "suite": "exact",
                    "identity": tag,
                    "mu": str(args.mu.exact),
                    "n_max": cap,
                    "max_defect": 0.0 if rep.passed else None,
                    "pass": rep.passed,
                    "counterexample": rep.counterexample,
                }
            )
        _emit(json.dumps(reports, indent=2) + "\n", args.out)
        return 0 if all(r["pass"] for r in reports) else 1
    numbers = None
    if args.criteria:
        numbers = sorted({int(tok) for tok in args.criteria.split(",") if tok.strip()})
    results = verify_mod.run_acceptance(numbers)
    if args.json:
        _emit(json.dumps([r.to_json() for r in results], indent=2) + "\n", args.out)
    else:
        _emit("\n".join(r.line() for r in results) + "\n", args.out)
    return 0 if all(r.passed for r in results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="muhermite",
        description="Deformed Hermite calculus: evaluation, tables, transform, heat, translation, oscillator, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a special function at points")
    _add_common(p)
    p.add_argument("--fn", required=True, choices=("hermite", "phi", "efun", "cos-sin"))
    p.add_argument("--n", type=int, default=None, help="degree / index")
    p.add_argument("--x", type=float, nargs="+", required=True)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("gamma", help="generalized factorial")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_gamma)

    p = sub.add_parser("table", help="polynomial coefficient table (CSV rows: n, c0, c1, ...)")
    _add_common(p)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("quad", help="quadrature rule as CSV (node, weight)")
    _add_common(p)
    p.add_argument("--kind", choices=("hermite", "alpha"), default="hermite")
    p.add_argument("--n", type=int, required=True, help="node count")
    p.set_defaults(handler=_cmd_quad)

    p = sub.add_parser("transform", help="integral transform of a named family on a grid (CSV: x, re, im)")
    _add_common(p, grid=True)
    p.add_argument("--family", choices=("gaussian", "monomial", "hermite", "phi"), default="gaussian")
    p.add_argument("--lam", type=float, default=0.5, help="Gaussian rate (hermite family: rate is lam^2)")
    p.add_argument("--beta", type=float, default=1.0, help="hermite family argument scale")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--sigma", type=float, default=None, help="override the envelope rate")
    p.add_argument("--quad-n", type=int, default=96)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("heat", help="heat flow of a Gaussian family on a grid (CSV: x, value)")
    _add_common(p, grid=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--family", choices=("even", "odd"), default="even")
    p.add_argument("--route", choices=("closed", "kernel", "spectral"), default="closed")
    p.add_argument("--size", type=int, default=96, help="spectral basis size")
    p.set_defaults(handler=_cmd_heat)

    p = sub.add_parser("translate", help="generalized translation of a Gaussian family (CSV: x, value)")
    _add_common(p, grid=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--lam", type=float, default=0.5)
    p.add_argument("--family", choices=("even", "odd"), default="even")
    p.add_argument("--route", choices=("alpha", "xi", "closed"), default="alpha")
    p.set_defaults(handler=_cmd_translate)

    p = sub.add_parser("oscillator", help="run oscillator identity checks, JSON report")
    _add_common(p)
    p.add_argument("--size", type=int, default=32)
    p.add_argument("--check", default=None, help="run a single named check")
    p.add_argument("--ladder-nmax", type=int, default=3)
    p.add_argument("--rodrigues-nmax", type=int, default=8)
    p.set_defaults(handler=_cmd_oscillator)

    p = sub.add_parser("verify", help="acceptance suite; with --mu, the exact identity suite at that mu")
    p.add_argument("--mu", type=MuParam.parse, default=None, help="rational mu routes the exact kernel")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--criteria", default=None, help="comma-separated criterion numbers (default: all)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line entry point: ``qwortho <subcommand> [options]``.

Every subcommand writes a table (CSV with a header row, or JSON
``{"meta": ..., "data": [...]}``) to stdout or ``--output``.  Exit status is
0 on success, 1 on invalid input and 2 when ``verify`` finds a failing
criterion.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import acceptance
from .coin import hadamard, limit_params, make_coin, make_state
from .density import Asymmetric, GeneralJacobi, Symmetric, cdf_mu, density_mu
from .jacobi import jacobi_asym, jacobi_from_moments, jacobi_head_general
from .moments import moment_asym, moment_quadrature, moment_sequence
from .orthopoly import genfun_residual, monic_coeffs, orthogonality_residual
from .stieltjes import g_measure, invert, rho_closed
from .walk import distribution, evolve


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(v) -> str:
    """12 significant digits; ``%g`` switches to exponent form below 1e-4."""
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v) + 0.0:.12g}"


def _json_value(v):
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return None
    if isinstance(v, (int, np.integer)):
        return int(v)
    return float(fmt(v))


def parse_complex(text: str) -> complex:
    """``"re:im"`` or a plain real number."""
    text = text.strip()
    if ":" in text:
        re_, im_ = text.split(":", 1)
        return complex(float(re_), float(im_))
    return complex(float(text), 0.0)


def parse_coin(text: str):
    if text.strip().lower() == "hadamard":
        return hadamard()
    parts = [parse_complex(p) for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"coin needs 4 entries a,b,c,d; got {len(parts)}")
    return make_coin(*parts)


def parse_state(text: str):
    """Two ``re:im`` entries; rescaled to unit norm."""
    parts = [parse_complex(p) for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"state needs 2 entries alpha,beta; got {len(parts)}")
    norm = math.hypot(abs(parts[0]), abs(parts[1]))
    if norm == 0:
        raise ValueError("state must be nonzero")
    return make_state(parts[0] / norm, parts[1] / norm)


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(t) for t in text.split(","))


def _grid(args, lo, hi):
    lo = lo if args.min is None else args.min
    hi = hi if args.max is None else args.max
    if args.count < 2:
        raise ValueError("grid count must be at least 2")
    return np.linspace(lo, hi, args.count)


def _measure(args):
    """Symmetric/Asymmetric from --r/--c, or GeneralJacobi from --p/--tail."""
    if getattr(args, "p", None):
        if args.tail is None:
            raise ValueError("--p needs --tail")
        return GeneralJacobi(_floats(args.p), args.tail, args.q0, args.q)
    if args.r is None:
        raise ValueError("give --r (walk measure) or --p/--tail (general case)")
    return Symmetric(args.r) if args.c == 0 else Asymmetric(args.r, args.c)


def write_table(columns, rows, meta, args, out):
    if args.format == "json":
        data = [{c: _json_value(v) for c, v in zip(columns, row)} for row in rows]
        json.dump({"meta": meta, "data": data}, out, indent=1, sort_keys=False)
        out.write("\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([fmt(v) for v in row])


def cmd_simulate(args):
    coin = parse_coin(args.coin)
    state = parse_state(args.state)
    if args.steps < 0:
        raise ValueError("--steps must be non-negative")
    dist = distribution(evolve(coin, state, args.steps))
    rows = list(zip(dist.positions.tolist(), dist.probs))
    return ["x", "prob"], rows


def cmd_density(args):
    if args.coin:
        params = limit_params(parse_coin(args.coin), parse_state(args.state))
        spec = params.measure()
    else:
        spec = _measure(args)
    if isinstance(spec, GeneralJacobi):
        raise ValueError("density covers walk measures only; use 'stieltjes' for the general case")
    x = _grid(args, -spec.r, spec.r)
    rows = list(zip(x, density_mu(x, spec), cdf_mu(x, spec)))
    return ["x", "density", "cdf"], rows


def cmd_moments(args):
    spec = _measure(args)
    if isinstance(spec, GeneralJacobi):
        raise ValueError("moments cover walk measures only")
    rows = []
    for m in range(args.max_m + 1):
        closed = moment_asym(m, spec.r, spec.c)
        quad = moment_quadrature(m, spec)
        rows.append((m, closed, quad, abs(closed - quad)))
    return ["m", "closed_form", "quadrature", "abs_diff"], rows


def _closed_jacobi(r, c, levels):
    try:
        seq = jacobi_asym(r, c)
        return seq.beta_array(levels), seq.gamma_array(levels)
    except ValueError:
        b0, g0, b1, g1 = jacobi_head_general(r, c)
        betas = np.full(levels, np.nan)
        gammas = np.full(levels, np.nan)
        betas[:2], gammas[:2] = (b0, b1)[:levels], (g0, g1)[:levels]
        return betas, gammas


def cmd_jacobi(args):
    spec = _measure(args)
    if isinstance(spec, GeneralJacobi):
        raise ValueError("jacobi covers walk measures only")
    levels = args.levels
    if levels < 1:
        raise ValueError("--levels must be at least 1")
    bc, gc = _closed_jacobi(spec.r, spec.c, levels)
    rec = jacobi_from_moments(moment_sequence(2 * levels + 2, spec), levels)
    br, gr = rec.beta_array(levels), rec.gamma_array(levels)
    rows = []
    for n in range(levels):
        diff = max(abs(bc[n] - br[n]), abs(gc[n] - gr[n]))
        rows.append((n, bc[n], gc[n], br[n], gr[n], diff))
    return ["n", "beta_closed", "gamma_closed", "beta_recovered", "gamma_recovered", "abs_diff"], rows


def cmd_poly(args):
    spec = _measure(args)
    if isinstance(spec, GeneralJacobi):
        raise ValueError("poly covers walk measures only")
    seq = jacobi_asym(spec.r, spec.c)
    if args.what == "coeffs":
        polys = monic_coeffs(seq, args.degree)
        cols = ["n"] + [f"c{k}" for k in range(args.degree + 1)]
        rows = []
        for P in polys:
            coeffs = list(P.coeffs) + [0.0] * (args.degree - P.degree)
            rows.append([P.degree] + coeffs)
        return cols, rows
    if args.what == "orthogonality":
        rows = [
            (m, n, orthogonality_residual(seq, spec, m, n))
            for m in range(args.degree + 1)
            for n in range(args.degree + 1)
        ]
        return ["m", "n", "integral"], rows
    if spec.c != 0:
        raise ValueError("the generating function identity is for the symmetric measure (c = 0)")
    rows = [(N, genfun_residual(args.x, args.z, spec.r, N)) for N in range(10, args.terms + 1, 10)]
    return ["N", "residual"], rows


def _closed_density(spec):
    if isinstance(spec, GeneralJacobi):
        kind = "2asym" if (spec.head_beta or spec.tail_beta) else spec.n
        return lambda x: rho_closed(kind, spec, x), spec.support
    return lambda x: density_mu(x, spec), (-spec.r, spec.r)


def cmd_stieltjes(args):
    spec = _measure(args)
    dens, (lo, hi) = _closed_density(spec)
    if args.min is None and args.max is None:
        c, h = (lo + hi) / 2, (hi - lo) / 2
        x = c + 0.95 * h * np.linspace(-1, 1, args.count)
    else:
        x = _grid(args, lo, hi)
    rows = []
    for xi in x:
        closed = float(dens(xi))
        inv = invert(lambda z: g_measure(z, spec), xi, support=(lo, hi))
        rows.append((xi, closed, inv, abs(closed - inv)))
    return ["x", "rho_closed", "rho_inverted", "abs_diff"], rows


def cmd_transform(args):
    spec = _measure(args)
    if args.im <= 0:
        raise ValueError("--im must be positive")
    lo, hi = (-1.5, 1.5)
    z = _grid(args, lo, hi) + 1j * args.im
    G = g_measure(z, spec)
    rows = list(zip(z.real, z.imag, G.real, G.imag))
    return ["re_z", "im_z", "re_G", "im_G"], rows


COMMANDS = {
    "simulate": cmd_simulate,
    "density": cmd_density,
    "moments": cmd_moments,
    "jacobi": cmd_jacobi,
    "poly": cmd_poly,
    "stieltjes": cmd_stieltjes,
    "transform": cmd_transform,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qwortho", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, measure=True, grid=False):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", "-o", help="write here instead of stdout")
        if measure:
            p.add_argument("--r", type=float, help="walk measure radius, 0 < r < 1")
            p.add_argument("--c", type=float, default=0.0, help="tilt of (1 + c x) k(x : r)")
        if grid:
            p.add_argument("--min", type=float)
            p.add_argument("--max", type=float)
            p.add_argument("--count", type=int, default=41)

    def general(p):
        p.add_argument("--p", help="head gammas p0,p1,... of the general case")
        p.add_argument("--tail", type=float, help="tail gamma p")
        p.add_argument("--q0", type=float, default=0.0)
        p.add_argument("--q", type=float, default=0.0)

    p = sub.add_parser("simulate", help="exact walk distribution at time n")
    common(p, measure=False)
    p.add_argument("--coin", default="hadamard", help="'hadamard' or a,b,c,d as re:im")
    p.add_argument("--state", default="1:0,0:0", help="alpha,beta as re:im")
    p.add_argument("--steps", type=int, required=True)

    p = sub.add_parser("density", help="density and CDF of mu(r, c) or of a walk's weak limit")
    common(p, grid=True)
    p.add_argument("--coin", help="use the weak limit of this coin instead of --r/--c")
    p.add_argument("--state", default="1:0,0:0")

    p = sub.add_parser("moments", help="closed-form vs quadrature moments")
    common(p)
    p.add_argument("--max-m", type=int, default=20)

    p = sub.add_parser("jacobi", help="closed-form vs recovered Jacobi parameters")
    common(p)
    p.add_argument("--levels", type=int, default=6)

    p = sub.add_parser("poly", help="orthogonal polynomial tables")
    common(p)
    p.add_argument("--what", choices=("coeffs", "orthogonality", "genfun"), default="coeffs")
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--x", type=float, default=0.4)
    p.add_argument("--z", type=float, default=0.3)
    p.add_argument("--terms", type=int, default=40)

    p = sub.add_parser("stieltjes", help="closed densities vs Stieltjes inversion")
    common(p, grid=True)
    general(p)

    p = sub.add_parser("transform", help="Stieltjes transform along a horizontal line")
    common(p, grid=True)
    general(p)
    p.add_argument("--im", type=float, default=0.5)

    sub.add_parser("verify", help="run the acceptance criteria")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"qwortho: error: {exc}", file=stderr)
        return 1
    if args.command == "verify":
        results = acceptance.run_all(stream=stdout)
        return 0 if all(r.passed for r in results) else 2
    try:
        columns, rows = COMMANDS[args.command](args)
    except (ValueError, ArithmeticError, TypeError) as exc:
        print(f"qwortho: error: {exc}", file=stderr)
        return 1
    meta = {k: v for k, v in sorted(vars(args).items()) if k not in ("output", "format")}
    buf = io.StringIO()
    write_table(columns, rows, meta, args, buf)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        stdout.write(buf.getvalue())
    return 0


def main():
    sys.exit(run())

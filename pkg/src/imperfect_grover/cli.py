"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 numerical or degeneracy diagnostic,
3 I/O error.
"""

from __future__ import annotations

import argparse
import ast
import math
import operator
import sys

from .approx import ToleranceQuery, tolerated_delta
from .config import PhaseConfig, beta_for_qubits
from .errors import GroverError, SpectralDegenerate
from .probability import m_min_general, p_max_exact, success_probability
from .spectral import spectral_params
from .sweep import FIGURES, figure_rows, write_csv, write_plot_script
from . import verify

EXIT_USAGE, EXIT_NUMERIC, EXIT_IO = 1, 2, 3

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub,
           ast.Mult: operator.mul, ast.Div: operator.truediv}
_UNOPS = {ast.USub: operator.neg, ast.UAdd: operator.pos}


def parse_angle(text: str) -> float:
    """Parse radians such as ``0.25``, ``pi``, ``-pi/2`` or ``3*pi/4``."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
            return _UNOPS[type(node.op)](ev(node.operand))
        raise ValueError

    try:
        return ev(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _size_args(p):
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--n", type=int, help="number of qubits; beta = asin(2^(-n/2))")
    size.add_argument("--beta", type=parse_angle, help="overlap angle in radians")


def _phase_args(p):
    p.add_argument("--theta", type=parse_angle, default=math.pi,
                   help="rotation about the initial state (default pi)")
    ph = p.add_mutually_exclusive_group()
    ph.add_argument("--phi", type=parse_angle, help="rotation of the marked state (default theta)")
    ph.add_argument("--delta", type=parse_angle, help="phase error; phi = theta + delta")


def _config(args) -> PhaseConfig:
    theta = args.theta
    if args.phi is not None:
        phi = args.phi
    else:
        phi = theta + (args.delta or 0.0)
    if args.n is not None:
        if args.n < 0:
            raise _UsageError("--n must be non-negative")
        return PhaseConfig.from_qubits(args.n, phi, theta)
    try:
        return PhaseConfig(beta=args.beta, phi=phi, theta=theta)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


class _UsageError(Exception):
    pass


def _describe(cfg: PhaseConfig) -> str:
    size = f"n={cfg.n} " if cfg.n is not None else ""
    return f"{size}beta={cfg.beta:.12g} phi={cfg.phi:.12g} theta={cfg.theta:.12g} delta={cfg.delta:.6g}"


def cmd_prob(args) -> int:
    if args.m < 0:
        raise _UsageError("--m must be non-negative")
    cfg = _config(args)
    p = success_probability(cfg, args.m)
    print(_describe(cfg))
    print(f"P(m={args.m}) = {p:.15g}")
    try:
        sp = spectral_params(cfg)
        print(f"w = {sp.w:.15g}  x = {sp.x:.15g}")
    except SpectralDegenerate:
        print("w, x undefined (sin w = 0); probability is constant in m")
    best = p_max_exact(cfg)
    verdict = "is" if best.m == args.m else "is not"
    print(f"m={args.m} {verdict} the integer optimum (m*={best.m}, P={best.p:.15g})")
    return 0


def cmd_mmin(args) -> int:
    cfg = _config(args)
    print(_describe(cfg))
    mr = m_min_general(cfg)
    best = p_max_exact(cfg)
    print(f"m_real = {mr.m_real:.15g}  (a = {mr.a:.12g}, b = {mr.b:.12g})")
    print(f"m* = {best.m}  P(m*) = {best.p:.15g}")
    return 0


def cmd_figure(args) -> int:
    if args.id not in FIGURES:
        raise _UsageError("--id must be 1 or 2")
    rows = figure_rows(args.id, args.n_min, args.n_max, args.delta)
    if not rows:
        raise _UsageError("empty qubit range")
    out = args.out or f"figure{args.id}.csv"
    write_csv(rows, out)
    script = write_plot_script(out, rows[0].delta)
    print(f"wrote {len(rows)} rows to {out}")
    print(f"plot script: {script}")
    return 0


def cmd_tolerance(args) -> int:
    beta = beta_for_qubits(args.n) if args.n is not None else args.beta
    try:
        q = ToleranceQuery(p_target=args.p_target, theta=args.theta, beta=beta)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    d = tolerated_delta(q)
    print(f"p_target = {q.p_target:.12g}  theta = {q.theta:.12g}  beta = {q.beta:.12g}")
    print(f"delta_tol = {d:.15g}")
    if args.n is not None:
        long_scale = 2.0 / math.sqrt(2.0 ** args.n * q.p_target)
        print(f"2/sqrt(N p_target) = {long_scale:.15g}")
        print(f"ratio delta_tol / (2/sqrt(N p_target)) = {d / long_scale:.15g}")
    return 0


def cmd_verify(args) -> int:
    results = verify.run_all(seed=args.seed, trials=args.trials, inject_fault=args.inject_fault)
    for res in results:
        print(res.line())
    ok = all(r.passed for r in results)
    print("all checks passed" if ok else "verification FAILED")
    return 0 if ok else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="imperfect-grover",
                     description="Grover search with imperfect phase rotations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prob", help="success probability after m iterations")
    _size_args(p)
    _phase_args(p)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("mmin", help="optimal iteration count")
    _size_args(p)
    _phase_args(p)
    p.set_defaults(func=cmd_mmin)

    p = sub.add_parser("figure", help="peak-probability sweep over n (CSV + plot script)")
    p.add_argument("--id", type=int, required=True, choices=sorted(FIGURES))
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--delta", type=parse_angle, help="override the figure's phase error")
    p.add_argument("--out", help="CSV path (default figure<id>.csv)")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("tolerance", help="tolerated phase error for a target peak probability")
    p.add_argument("--p-target", type=float, required=True)
    p.add_argument("--theta", type=parse_angle, default=math.pi)
    _size_args(p)
    p.set_defaults(func=cmd_tolerance)

    p = sub.add_parser("verify", help="randomized cross-checks against brute-force oracles")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroverError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

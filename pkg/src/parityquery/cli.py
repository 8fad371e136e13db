"""Command-line verification gate.

Usage::

    parityquery parity  --f "+-+-"
    parityquery optimal --n 8
    parityquery bound   --n 9 --k 4 --trials 100 --seed 42
    parityquery fourier --n 6 --algo optimal
    parityquery iterate --f "+-+"

Results go to stdout as JSON (``--output text`` for a readable form),
diagnostics to stderr.

Exit codes:
    0: every check passed
    1: a verification check failed
    2: usage or input error
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .algorithm import random_algorithm
from .bound import degree_check, fourier_coefficients, impossibility_sweep
from .iterate import iterate_trace, lift, reduction_demo
from .numerics import SUM_TOL, make_rng
from .optimal import EXACT_TOL, build_optimal, verify_exactness
from .oracle import MAX_ENUMERATION_N, OracleDims, decode, encode, parity

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_SEED_MAX = 2**64 - 1
_PRINT_TOL = 1e-12


class UsageError(Exception):
    pass


def dumps(obj):
    """Compact JSON with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize {obj!r}")
        return format(obj, ".17g")
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _render_text(obj):
    lines = []
    for key, value in obj.items():
        if key == "coeffs":
            lines.append("coeffs:")
            lines.extend(f"  mask {c['mask']:>6d}  {c['value']:+.17g}" for c in value)
        elif key == "trace":
            lines.append("trace: " + " -> ".join(f"({x}, {r:+d})" for x, r in value))
        elif isinstance(value, float):
            lines.append(f"{key}: {value:.17g}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _function(text):
    try:
        return decode(text)
    except ValueError as exc:
        raise UsageError(f"bad --f: {exc}") from None


def _check_n(n, low=1):
    if n is None:
        raise UsageError("--n is required")
    if not low <= n <= MAX_ENUMERATION_N:
        raise UsageError(f"--n must lie in {low}..{MAX_ENUMERATION_N}, got {n}")


def _check_seed(seed):
    if not 0 <= seed <= _SEED_MAX:
        raise UsageError(f"--seed must be an unsigned 64-bit integer, got {seed}")


def _proj_rank(value, dim=None):
    if value is None or value == "random":
        return None
    try:
        rank = int(value)
    except ValueError:
        raise UsageError(f"--proj-rank must be an integer or 'random', got {value!r}") from None
    if rank < 0 or (dim is not None and rank > dim):
        raise UsageError(f"--proj-rank must lie in 0..{dim}, got {rank}")
    return rank


def cmd_parity(args):
    f = _function(args.f)
    return {"n": f.n, "f": encode(f), "parity": parity(f)}, EXIT_OK


def cmd_optimal(args):
    _check_n(args.n, low=2)
    if args.even_only and args.n % 2:
        raise UsageError(f"--even-only given but --n {args.n} is odd")
    tol = EXACT_TOL if args.tol is None else args.tol
    report = verify_exactness(args.n, tol)
    out = {
        "n": report.n,
        "k": report.k,
        "all_correct": report.all_correct,
        "worst_deviation": report.worst_deviation,
    }
    return out, EXIT_OK if report.all_correct else EXIT_FAILED


def cmd_bound(args):
    _check_n(args.n)
    if args.k is None:
        raise UsageError("--k is required")
    if args.k < 0:
        raise UsageError(f"--k must be >= 0, got {args.k}")
    if 2 * args.k >= args.n:
        raise UsageError(
            f"the lower bound only applies when 2k < N; got k = {args.k}, N = {args.n}"
        )
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    _check_seed(args.seed)
    if args.w is not None and args.w < 1:
        raise UsageError(f"--w must be >= 1, got {args.w}")
    rank = _proj_rank(args.proj_rank)
    if rank is not None:
        widths = [args.w] if args.w is not None else [1, 2]
        top = min(2 * args.n * wt for wt in widths)
        if rank > top:
            raise UsageError(f"--proj-rank {rank} exceeds the smallest register dimension {top}")
    tol = SUM_TOL if args.tol is None else args.tol
    report = impossibility_sweep(args.n, args.k, args.trials, make_rng(args.seed), w=args.w, proj_rank=rank)
    out = {
        "n": report.n,
        "k": report.k,
        "trials": report.trials,
        "seed": args.seed,
        "max_abs_correlation": report.max_abs_correlation,
        "eq20_max_gap": report.eq20_max_gap,
        "any_successful": report.any_successful,
        "max_high_degree_coefficient": report.max_high_degree_coefficient,
    }
    ok = (
        report.max_abs_correlation <= tol
        and report.eq20_max_gap <= tol
        and not report.any_successful
        and report.max_high_degree_coefficient <= tol
    )
    return out, EXIT_OK if ok else EXIT_FAILED


def cmd_fourier(args):
    _check_n(args.n)
    if args.algo == "optimal":
        extra = [flag for flag, val in (("--k", args.k), ("--seed", args.seed), ("--w", args.w),
                                        ("--proj-rank", args.proj_rank)) if val is not None]
        if extra:
            raise UsageError(f"{', '.join(extra)} not allowed with --algo optimal")
        if args.n < 2:
            raise UsageError("--algo optimal needs --n >= 2")
        alg = build_optimal(args.n)
    elif args.algo == "random":
        if args.k is None:
            raise UsageError("--algo random requires --k")
        if args.k < 0:
            raise UsageError(f"--k must be >= 0, got {args.k}")
        seed = 0 if args.seed is None else args.seed
        _check_seed(seed)
        w = 1 if args.w is None else args.w
        if w < 1:
            raise UsageError(f"--w must be >= 1, got {w}")
        dims = OracleDims(args.n, w)
        rank = _proj_rank(args.proj_rank, dims.dim)
        rng = make_rng(seed)
        if rank is None:
            rank = int(rng.integers(1, dims.dim))
        alg = random_algorithm(dims, args.k, rank, rng)
    else:
        raise UsageError(f"unknown --algo {args.algo!r}; choose 'optimal' or 'random'")
    tol = SUM_TOL if args.tol is None else args.tol
    table = fourier_coefficients(alg)
    out = {
        "n": args.n,
        "algo": args.algo,
        "k": alg.k,
        "coeffs": [{"mask": m, "value": v} for m, v in table.nonzero(_PRINT_TOL)],
        "max_degree_present": table.max_degree_present(tol),
        "parity_coefficient": table.parity_coefficient,
    }
    return out, EXIT_OK if degree_check(table, alg.k, tol) else EXIT_FAILED


def cmd_iterate(args):
    f = _function(args.f)
    trace = iterate_trace(lift(f), (1, 1), f.n)
    report = reduction_demo(f)
    out = {
        "n": f.n,
        "f": encode(f),
        "trace": [list(p) for p in trace],
        "parity_via_iteration": report.parity_via_iteration,
        "parity_direct": report.parity_direct,
        "agree": report.agree,
    }
    return out, EXIT_OK if report.agree else EXIT_FAILED


COMMANDS = {
    "parity": cmd_parity,
    "optimal": cmd_optimal,
    "bound": cmd_bound,
    "fourier": cmd_fourier,
    "iterate": cmd_iterate,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["json", "text"], default="json")
    common.add_argument("--tol", type=float, default=None,
                        help="override the check tolerance (1e-9 sweeps, 1e-10 exactness)")
    common.add_argument("--threads", type=int, default=None,
                        help="parallelism hint; accepted for compatibility, runs single-threaded")

    parser = argparse.ArgumentParser(prog="parityquery", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parity", parents=[common], help="parity of a sign function")
    p.add_argument("--f", required=True, help="function text, e.g. '+-+-' (leftmost is f(1))")

    p = sub.add_parser("optimal", parents=[common], help="verify the exact optimal algorithm")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--even-only", action="store_true", help="reject odd n")

    p = sub.add_parser("bound", parents=[common], help="lower-bound sweep over random algorithms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--w", type=int, default=None, help="fix the work dimension (default: vary over 1, 2)")
    p.add_argument("--proj-rank", default="random")

    p = sub.add_parser("fourier", parents=[common], help="Fourier expansion of the acceptance probability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algo", default="optimal")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--w", type=int, default=None)
    p.add_argument("--proj-rank", default=None)

    p = sub.add_parser("iterate", parents=[common], help="parity through the lifted iteration")
    p.add_argument("--f", required=True)

    return parser


def _glue_function_text(argv):
    # "--f -+-" would otherwise be read as an unknown option
    out = list(argv)
    for i in range(len(out) - 1):
        if out[i] == "--f":
            out[i:i + 2] = [f"--f={out[i + 1]}", None]
    return [a for a in out if a is not None]


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    args = parser.parse_args(_glue_function_text(argv))
    try:
        out, code = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"parityquery {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output == "text":
        print(_render_text(out))
    else:
        print(dumps(out))
    if code == EXIT_FAILED:
        print(f"parityquery {args.command}: verification check FAILED", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

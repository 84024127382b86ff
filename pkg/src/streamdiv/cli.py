"""Command-line experiment harness.

Subcommands: ``run``, ``bounds``, ``montecarlo`` and ``bench``.  Any flag can
also come from an environment variable ``STREAMDIV_<FLAG>`` (dashes become
underscores); an explicit flag always wins.

Exit codes: 0 success, 1 I/O or parse failure, 2 configuration error.
"""

import argparse
import csv
import math
import os
import sys

from .datasets import generate_numeric, generate_strings, read_numeric, read_strings
from .estimator import MEASURES
from .exceptions import ConfigError, ParseError, StreamDivError
from .experiment import RunParams, run_sweep, write_csv
from .oracle import timed_comparison
from .sampling import (
    bounds_report,
    harmonic_success,
    monte_carlo_success,
    optimal_k,
    secretary_bounds,
)

ENV_PREFIX = "STREAMDIV_"
EXIT_OK, EXIT_IO, EXIT_CONFIG = 0, 1, 2

DEFAULTS = {
    "run": {
        "kind": "numeric", "input": None, "generate": None, "m": 10, "k": 20, "a": 150,
        "s": 100, "delta": 0.2, "seed": 0, "sweep": None, "verify": False,
        "skip_nonimproving_final": False, "no_timing": False, "out": None,
    },
    "bounds": {"n": 100, "k": None, "delta": None, "s": None, "csv": False},
    "montecarlo": {"n": 100, "k": None, "trials": 100_000, "seed": 0, "jobs": 1},
    "bench": {
        "kind": "numeric", "sizes": "100000,200000,300000,400000,500000", "m": 10,
        "k": 20, "a": None, "s": 10, "seed": 0, "out": None,
    },
}

TYPES = {
    "m": int, "k": int, "a": int, "s": int, "n": int, "seed": int, "trials": int,
    "jobs": int, "generate": int, "delta": float,
}
FLAGS = {"verify", "skip_nonimproving_final", "no_timing", "csv"}


def _env_value(dest, cast):
    raw = os.environ.get(ENV_PREFIX + dest.upper())
    if raw is None:
        return None
    if dest in FLAGS:
        return raw.strip().lower() in ("1", "true", "yes", "on")
    try:
        return cast(raw)
    except ValueError:
        raise ConfigError(f"{ENV_PREFIX}{dest.upper()}={raw!r} is not a valid {cast.__name__}")


def resolve(args):
    """Fill flags left unset on the command line from the environment, then defaults."""
    for dest, default in DEFAULTS[args.command].items():
        if getattr(args, dest, None) in (None, False):
            env = _env_value(dest, TYPES.get(dest, str))
            if env is not None:
                setattr(args, dest, env)
            elif getattr(args, dest, None) is None:
                setattr(args, dest, default)
    return args


def build_parser():
    parser = argparse.ArgumentParser(prog="streamdiv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="segment-sampled selection experiments, CSV output")
    run.add_argument("--kind", choices=sorted(MEASURES))
    src = run.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="one element per line")
    src.add_argument("--generate", type=int, metavar="COUNT", help="synthetic data size")
    run.add_argument("--m", type=int, help="buffer size")
    run.add_argument("--k", type=int, help="scan length")
    run.add_argument("--a", type=int, help="segment size")
    run.add_argument("--s", type=int, help="number of sampled segments")
    run.add_argument("--delta", type=float, help="deviation factor (recorded only)")
    run.add_argument("--seed", type=int)
    run.add_argument("--sweep", metavar="PARAM=START:STEP:END")
    run.add_argument("--verify", action="store_true", default=None,
                     help="label each run against the brute-force oracle")
    run.add_argument("--skip-nonimproving-final", action="store_true", default=None)
    run.add_argument("--no-timing", action="store_true", default=None,
                     help="leave runtime_us blank so output is reproducible byte for byte")
    run.add_argument("--out", metavar="PATH")

    b = sub.add_parser("bounds", help="success-probability and sampling bounds")
    b.add_argument("--n", type=int)
    b.add_argument("--k", type=int, help="defaults to the optimal k for n")
    b.add_argument("--delta", type=float)
    b.add_argument("--s", type=int)
    b.add_argument("--csv", action="store_true", default=None)

    mc = sub.add_parser("montecarlo", help="simulate the stopping rule")
    mc.add_argument("--n", type=int)
    mc.add_argument("--k", type=int, help="defaults to the optimal k for n")
    mc.add_argument("--trials", type=int)
    mc.add_argument("--seed", type=int)
    mc.add_argument("--jobs", type=int)

    bench = sub.add_parser("bench", help="time stream selection against MaxMin")
    bench.add_argument("--kind", choices=sorted(MEASURES))
    bench.add_argument("--sizes", help="comma-separated element counts")
    bench.add_argument("--m", type=int)
    bench.add_argument("--k", type=int)
    bench.add_argument("--a", type=int, help="segment size (150 numeric, 200 string)")
    bench.add_argument("--s", type=int, help="segments timed per size")
    bench.add_argument("--seed", type=int)
    bench.add_argument("--out", metavar="PATH")
    return parser


def _load(args):
    if args.input is not None:
        reader = read_numeric if args.kind == "numeric" else read_strings
        return list(reader(args.input))
    if args.generate is None:
        raise ConfigError("one of --input or --generate is required")
    if args.generate < 0:
        raise ConfigError("--generate must be >= 0")
    gen = generate_numeric if args.kind == "numeric" else generate_strings
    return list(gen(args.generate, args.seed))


def _open_out(path):
    return open(path, "w", newline="", encoding="utf-8") if path else sys.stdout


def cmd_run(args):
    data = _load(args)
    params = RunParams(
        kind=args.kind, m=args.m, k=args.k, a=args.a, s=args.s, delta=args.delta,
        seed=args.seed, verify=args.verify, skip_nonimproving_final=args.skip_nonimproving_final,
        timing=not args.no_timing,
    )
    records = run_sweep(data, params, args.sweep)
    fh = _open_out(args.out)
    try:
        write_csv(records, fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return records


def cmd_bounds(args):
    if args.n < 3:
        raise ConfigError("--n must be >= 3")
    k = args.k if args.k is not None else optimal_k(args.n)[0]
    if (args.delta is None) != (args.s is None):
        raise ConfigError("--delta and --s must be given together")
    rep = bounds_report(args.n, k, args.delta, args.s)
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "k", "pr_lower", "pr_upper", "pr_exact", "k_opt", "h_max", "delta", "s", "p0"])
        w.writerow([rep.n, rep.k, rep.pr_lower, rep.pr_upper, rep.pr_exact, rep.k_opt,
                    rep.h_max, _blank(rep.delta), _blank(rep.s), _blank(rep.p0)])
    else:
        print(f"n={rep.n} k={rep.k}")
        print(f"pr_lower = {rep.pr_lower:.6g}")
        print(f"pr_exact = {rep.pr_exact:.6g}")
        print(f"pr_upper = {rep.pr_upper:.6g}")
        print(f"k_opt    = {rep.k_opt}  (h_max = {rep.h_max:.6g}, 1/e = {1 / math.e:.6g})")
        if rep.p0 is not None:
            print(f"p0       = {rep.p0:.6g}  (delta={rep.delta}, s={rep.s})")
    return rep


def _blank(v):
    return "" if v is None else v


def cmd_montecarlo(args):
    if args.trials < 1:
        raise ConfigError("--trials must be >= 1")
    k = args.k if args.k is not None else optimal_k(max(args.n, 3))[0]
    rate, half = monte_carlo_success(args.n, k, args.trials, seed=args.seed, n_jobs=args.jobs)
    lower, upper = secretary_bounds(args.n, k)
    se = half / 1.959963984540054
    inside = rate + 3 * se >= lower and rate - 3 * se <= upper
    print(f"n={args.n} k={k} trials={args.trials} seed={args.seed}")
    print(f"success rate = {rate:.6f} +/- {half:.6f} (95% CI)")
    print(f"exact        = {harmonic_success(args.n, k):.6f}")
    print(f"bounds       = [{lower:.6f}, {upper:.6f}]")
    print(f"verdict      = {'inside' if inside else 'OUTSIDE'} bounds (3 standard errors)")
    return rate, half, inside


def cmd_bench(args):
    try:
        sizes = [int(x) for x in str(args.sizes).split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    if not sizes:
        raise ConfigError("--sizes must list at least one size")
    a = args.a if args.a is not None else (150 if args.kind == "numeric" else 200)
    factory = MEASURES[args.kind]
    gen = generate_numeric if args.kind == "numeric" else generate_strings
    rows = []
    fh = _open_out(args.out)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["kind", "size", "segments", "stream_time", "stream_time_per_segment",
                    "maxmin_time", "speedup"])
        for size in sizes:
            data = list(gen(size, args.seed))
            t = timed_comparison(data, args.m, args.k, factory, a, args.s, args.seed)
            row = [args.kind, size, t.segments, t.stream_time, t.stream_time_per_segment,
                   t.maxmin_time, t.maxmin_time / t.stream_time]
            w.writerow(row)
            fh.flush()
            rows.append(t)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return rows


COMMANDS = {"run": cmd_run, "bounds": cmd_bounds, "montecarlo": cmd_montecarlo, "bench": cmd_bench}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        resolve(args)
        COMMANDS[args.command](args)
    except (ParseError, UnicodeDecodeError, OSError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (StreamDivError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

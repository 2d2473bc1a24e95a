"""Command-line surface: single runs, sweeps, and the bounds report.

Exit codes: 0 success, 2 invalid arguments or domain errors, 3 I/O failure.
All randomness flows from --seed / --base-seed; nothing reads the clock.
"""

import argparse
import sys

from .bounds import compute_bounds
from .continuous import ContinuousConfig, run_continuous
from .discrete import DiscreteConfig, run_discrete
from .harness import SweepConfig, fit_sweep, run_sweep
from .io import (
    bounds_json,
    fit_json_path_for,
    series_path_for,
    write_fit_json,
    write_series_csv,
    write_summaries_csv,
    write_trace_csv,
)


def _parse_n_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty n list")
    return values


def _add_model_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--model", required=True, choices=["discrete", "continuous"])
    parser.add_argument("--spread", type=float, default=50.0,
                        help="side of the initial square (default 50)")
    parser.add_argument("--delta", type=float, default=0.1,
                        help="blind-zone radius, continuous model only (default 0.1)")
    parser.add_argument("--substep", type=float, default=1e-3,
                        help="integration substep, continuous model only (default 1e-3)")
    parser.add_argument("--steps", type=int, default=None,
                        help="cap on steps (discrete, default 100000) or unit "
                             "intervals (continuous, default 10000)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gathersim",
                                     description="Randomized planar gathering: "
                                                 "simulators, sweeps, and bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("sim", help="one seeded run, trace + summary CSV")
    _add_model_flags(sim)
    sim.add_argument("--n", type=int, required=True, help="agent count")
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--record-every", type=int, default=1, metavar="K",
                     help="record every K-th frame in the trace (default 1)")
    sim.add_argument("--trace", required=True, help="trace CSV output path")
    sim.add_argument("--summary", required=True, help="summary CSV output path")
    sim.set_defaults(func=_cmd_sim)

    sweep = sub.add_parser("sweep", help="seeded grid of runs, summaries CSV + fit JSON")
    _add_model_flags(sweep)
    sweep.add_argument("--n-list", type=_parse_n_list, required=True, metavar="N1,N2,...",
                       help="comma-separated agent counts")
    sweep.add_argument("--reps", type=int, required=True, help="runs per agent count")
    sweep.add_argument("--base-seed", type=int, required=True)
    sweep.add_argument("--out", required=True,
                       help="summaries CSV path; the fit lands next to it as *.fit.json")
    sweep.set_defaults(func=_cmd_sweep)

    bounds = sub.add_parser("bounds", help="closed-form bound report as JSON on stdout")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--delta", type=float, required=True)
    bounds.add_argument("--dmax", type=float, required=True,
                        help="initial maximal pairwise distance")
    bounds.set_defaults(func=_cmd_bounds)
    return parser


def _cmd_sim(args) -> int:
    if args.model == "discrete":
        config = DiscreteConfig(n=args.n, spread=args.spread, seed=args.seed,
                                max_steps=100_000 if args.steps is None else args.steps)
        trace, summary = run_discrete(config, record_every=args.record_every)
    else:
        config = ContinuousConfig(n=args.n, delta=args.delta, substep=args.substep,
                                  spread=args.spread, seed=args.seed,
                                  max_intervals=10_000 if args.steps is None else args.steps)
        trace, summary = run_continuous(config, record_every=args.record_every)
    write_trace_csv(trace, args.trace)
    if trace.model == "continuous":
        write_series_csv(trace, series_path_for(args.trace))
    write_summaries_csv([summary], args.summary)
    return 0


def _cmd_sweep(args) -> int:
    config = SweepConfig(model=args.model, n_values=args.n_list, reps=args.reps,
                         base_seed=args.base_seed, spread=args.spread,
                         delta=args.delta, substep=args.substep,
                         max_steps=args.steps, out=args.out)
    summaries = run_sweep(config)
    write_summaries_csv(summaries, args.out)
    fit, n_means, excluded = fit_sweep(summaries)
    if excluded:
        print(f"warning: {excluded} non-converged run(s) excluded from the fit",
              file=sys.stderr)
    write_fit_json(fit, n_means, fit_json_path_for(args.out))
    return 0


def _cmd_bounds(args) -> int:
    report = compute_bounds(args.n, args.delta, args.dmax)
    print(bounds_json(report))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

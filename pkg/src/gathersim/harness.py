"""Monte-Carlo experiment orchestration: seeded sweeps over agent counts,
convergence detection on traces, and least-squares trend fitting."""

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .continuous import ContinuousConfig, run_continuous
from .discrete import DiscreteConfig, run_discrete
from .rng import derive_seed
from .state import RunSummary, Trace


@dataclass
class SweepConfig:
    model: str  # "discrete" or "continuous"
    n_values: Sequence[int]
    reps: int
    base_seed: int
    spread: float = 50.0
    delta: float = 0.1
    substep: float = 1e-3
    convergence_radius: float = 1.0
    max_steps: int | None = None  # per-run cap; model default when None
    out: str | None = None

    def __post_init__(self):
        if self.model not in ("discrete", "continuous"):
            raise ValueError(f"unknown model {self.model!r}")
        if not self.n_values or any(n < 1 for n in self.n_values):
            raise ValueError("n_values must be non-empty with every n >= 1")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")


class FitResult(NamedTuple):
    slope: float
    intercept: float
    pearson_r: float


def _single_run(config: SweepConfig, n: int, seed: int) -> RunSummary:
    cap = config.max_steps
    if config.model == "discrete":
        cfg = DiscreteConfig(n=n, spread=config.spread, seed=seed,
                             max_steps=100_000 if cap is None else cap,
                             convergence_radius=config.convergence_radius)
        _, summary = run_discrete(cfg, collect_trace=False)
    else:
        cfg = ContinuousConfig(n=n, delta=config.delta, substep=config.substep,
                               spread=config.spread, seed=seed,
                               max_intervals=10_000 if cap is None else cap)
        _, summary = run_continuous(cfg, collect_trace=False)
    return summary


def run_sweep(config: SweepConfig) -> list[RunSummary]:
    """One run per (n, rep) cell, seeded by derive_seed(base_seed, n, rep).

    Summaries come back sorted by (n ascending, rep ascending) with run_id
    numbering that order, so the output is independent of execution order
    and byte-stable for a fixed config.
    """
    summaries = []
    run_id = 0
    for n in sorted(config.n_values):
        for rep in range(config.reps):
            seed = derive_seed(config.base_seed, n, rep)
            summary = _single_run(config, n, seed)
            summary.run_id = run_id
            summaries.append(summary)
            run_id += 1
    return summaries


def least_squares_fit(points: Sequence[tuple[float, float]]) -> FitResult:
    """Ordinary least squares line through (x, y) points plus their Pearson
    correlation. Needs at least two distinct x values; a y series with zero
    variance gets pearson_r = 0.0 by convention."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
        raise ValueError("least_squares_fit needs >= 2 (x, y) points")
    x = pts[:, 0]
    y = pts[:, 1]
    sxx = float(((x - x.mean()) ** 2).sum())
    if sxx == 0.0:
        raise ValueError("least_squares_fit needs >= 2 distinct x values")
    sxy = float(((x - x.mean()) * (y - y.mean())).sum())
    syy = float(((y - y.mean()) ** 2).sum())
    slope = sxy / sxx
    intercept = float(y.mean()) - slope * float(x.mean())
    r = sxy / np.sqrt(sxx * syy) if syy > 0.0 else 0.0
    return FitResult(slope, intercept, float(r))


def fit_sweep(summaries: Sequence[RunSummary]) -> tuple[FitResult, list[dict], int]:
    """Fit mean convergence step vs n over the converged runs of a sweep.

    Non-converged runs are excluded from the means (their count is returned
    so callers can warn); an n group with no converged runs drops out of the
    fit entirely.
    """
    groups: dict[int, list[RunSummary]] = {}
    for s in summaries:
        groups.setdefault(s.n, []).append(s)
    n_means = []
    excluded = 0
    for n in sorted(groups):
        runs = groups[n]
        steps = [s.converged_step for s in runs if s.converged_step is not None]
        excluded += len(runs) - len(steps)
        if steps:
            n_means.append({"n": n, "mean": float(np.mean(steps)),
                            "converged": len(steps), "runs": len(runs)})
    fit = least_squares_fit([(m["n"], m["mean"]) for m in n_means])
    return fit, n_means, excluded


def detect_convergence(trace: Trace, radius: float, strict: bool = False) -> int | None:
    """First recorded step whose enclosing-disc radius reaches the target:
    radius <= target for the discrete criterion, strict < for the continuous
    confinement criterion. None when no recorded frame qualifies."""
    if not trace.frames:
        raise ValueError("detect_convergence needs a non-empty trace")
    for frame in trace.frames:
        if frame.radius is None:
            continue
        hit = frame.radius < radius if strict else frame.radius <= radius
        if hit:
            return frame.step
    return None

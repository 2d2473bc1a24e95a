"""Synchronous discrete jump process.

Each unit step every agent redraws a uniform heading, then jumps forward a
fixed step iff the closed half-plane behind its new heading contains no
other agent. Sensing is evaluated for all agents against the pre-move
positions, so the update is fully synchronous.
"""

from dataclasses import dataclass

import numpy as np

from .geometry import min_enclosing_disc
from .rng import make_rng
from .state import Constellation, Frame, RunSummary, Trace, draw_headings, init_constellation


@dataclass
class DiscreteConfig:
    n: int
    step_size: float = 1.0
    spread: float = 50.0
    seed: int = 0
    max_steps: int = 100_000
    convergence_radius: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.step_size <= 0:
            raise ValueError("step_size must be > 0")
        if self.spread <= 0:
            raise ValueError("spread must be > 0")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.convergence_radius <= 0:
            raise ValueError("convergence_radius must be > 0")


def back_sensors(positions: np.ndarray, hx: np.ndarray, hy: np.ndarray) -> np.ndarray:
    """Blocked flags for all agents at once: blocked[i] is True iff some
    j != i lies in agent i's closed back half-plane."""
    diff = positions[None, :, :] - positions[:, None, :]
    dots = hx[:, None] * diff[..., 0] + hy[:, None] * diff[..., 1]
    np.fill_diagonal(dots, np.inf)
    return (dots <= 0.0).any(axis=1)


def discrete_step(state: Constellation, config: DiscreteConfig, rng=None, headings=None) -> Constellation:
    """One synchronous jump step.

    All headings are redrawn (agent-index order) before any sensing; every
    agent whose closed back half-plane is empty advances by step_size along
    its new heading. Pass `headings` to force the draw (tests use this to
    construct adversarial steps); otherwise they come from `rng`.
    """
    if headings is None:
        if rng is None:
            raise ValueError("discrete_step needs an rng or explicit headings")
        headings = draw_headings(rng, state.n)
    headings = np.asarray(headings, dtype=float)
    if headings.shape != (state.n,):
        raise ValueError("headings must have one entry per agent")
    hx = np.cos(headings)
    hy = np.sin(headings)
    free = ~back_sensors(state.positions, hx, hy)
    positions = state.positions.copy()
    positions[free, 0] += config.step_size * hx[free]
    positions[free, 1] += config.step_size * hy[free]
    return Constellation(positions, headings, state.step_index + 1)


def _bbox_halfwidth(positions: np.ndarray) -> float:
    """Cheap lower bound on the enclosing-disc radius (half the larger
    bounding-box side); lets the run loop skip the exact disc while the
    constellation is still far from converged."""
    w = positions[:, 0].max() - positions[:, 0].min()
    h = positions[:, 1].max() - positions[:, 1].min()
    return max(w, h) / 2.0


def run_discrete(config: DiscreteConfig, rng=None, record_every: int = 1,
                 collect_trace: bool = True, initial: Constellation | None = None) -> tuple[Trace, RunSummary]:
    """Run until the minimal enclosing disc radius is <= convergence_radius
    or max_steps is reached. Non-convergence is a data outcome, not an error.
    Pass `initial` to start from a prepared constellation instead of the
    seeded uniform placement.
    """
    if record_every < 1:
        raise ValueError("record_every must be >= 1")
    if rng is None:
        rng = make_rng(config.seed)

    state = initial if initial is not None else init_constellation(config, rng)
    if state.n != config.n:
        raise ValueError("initial constellation size does not match config.n")
    radius = min_enclosing_disc(state.positions).radius
    trace = Trace(model="discrete")
    if collect_trace:
        trace.frames.append(Frame(0, state.positions.copy(), state.headings.copy(),
                                  np.zeros(config.n, dtype=bool), radius))
    converged = 0 if radius <= config.convergence_radius else None

    moved = np.zeros(config.n, dtype=bool)
    while converged is None and state.step_index < config.max_steps:
        prev_positions = state.positions
        state = discrete_step(state, config, rng)
        moved = np.any(state.positions != prev_positions, axis=1)
        k = state.step_index
        record = collect_trace and k % record_every == 0
        radius = None
        if record or _bbox_halfwidth(state.positions) <= config.convergence_radius:
            radius = min_enclosing_disc(state.positions).radius
        if record:
            trace.frames.append(Frame(k, state.positions.copy(), state.headings.copy(),
                                      moved.copy(), radius))
        if radius is not None and radius <= config.convergence_radius:
            converged = k

    if radius is None:
        radius = min_enclosing_disc(state.positions).radius
    if collect_trace and trace.frames[-1].step != state.step_index:
        trace.frames.append(Frame(state.step_index, state.positions.copy(),
                                  state.headings.copy(), moved.copy(), radius))
    summary = RunSummary(run_id=0, seed=config.seed, n=config.n, spread=config.spread,
                         converged_step=converged, final_radius=radius)
    return trace, summary

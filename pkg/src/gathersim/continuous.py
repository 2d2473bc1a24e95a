"""Piecewise-continuous dynamics with a blind zone.

Headings are redrawn once per unit interval. The interval is integrated by
fixed substeps: at each substep every sensor is evaluated against the same
position snapshot, then every unblocked agent advances speed * substep
along its heading (an agent may therefore stop and restart within one
interval as the constellation evolves around it). An agent's sensor ignores
everything within distance delta of it, in every direction: agent j blocks
agent i iff d_ij > delta and j lies in i's closed back half-plane.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .geometry import as_points, min_enclosing_disc
from .rng import make_rng
from .state import Constellation, Frame, RunSummary, Trace, draw_headings, init_constellation

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


@dataclass
class ContinuousConfig:
    n: int
    delta: float = 0.1
    substep: float = 1e-3
    spread: float = 50.0
    seed: int = 0
    max_intervals: int = 10_000
    speed: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.delta <= 0:
            raise ValueError("delta must be > 0")
        if not 0.0 < self.substep <= 1.0:
            raise ValueError("substep must lie in (0, 1]")
        nsub = round(1.0 / self.substep)
        if nsub < 1 or abs(nsub * self.substep - 1.0) > 1e-9:
            raise ValueError("substep must divide the unit interval exactly")
        if self.spread <= 0:
            raise ValueError("spread must be > 0")
        if self.max_intervals < 1:
            raise ValueError("max_intervals must be >= 1")
        if self.speed <= 0:
            raise ValueError("speed must be > 0")

    @property
    def nsub(self) -> int:
        return round(1.0 / self.substep)


class LyapunovState(NamedTuple):
    """Summed separated pairwise distances (zero iff confined)."""

    value: float
    confined: bool


def blind_zone_sensor(i: int, positions, heading, delta: float) -> bool:
    """True iff some agent j != i is BOTH farther than delta from agent i
    AND inside i's closed back half-plane. Agents within delta are invisible
    regardless of direction."""
    pts = as_points(positions)
    h = np.asarray(heading, dtype=float).reshape(2)
    if abs(math.hypot(h[0], h[1]) - 1.0) > 1e-12:
        raise ValueError("heading must be a unit vector (|norm - 1| <= 1e-12)")
    if delta <= 0:
        raise ValueError("delta must be > 0")
    if not 0 <= i < len(pts):
        raise ValueError(f"agent index {i} out of range for {len(pts)} agents")
    diff = pts - pts[i]
    dist2 = diff[:, 0] ** 2 + diff[:, 1] ** 2
    dots = diff @ h
    mask = (dist2 > delta * delta) & (dots <= 0.0)
    mask[i] = False
    return bool(mask.any())


def _advance_interval_numpy(pos, hx, hy, delta2, step, nsub):
    """Vectorized reference integrator; mutates pos, returns moved flags."""
    n = pos.shape[0]
    moved = np.zeros(n, dtype=bool)
    hvec = np.stack([hx, hy], axis=1)
    for _ in range(nsub):
        diff = pos[None, :, :] - pos[:, None, :]
        dist2 = diff[..., 0] ** 2 + diff[..., 1] ** 2
        dots = hx[:, None] * diff[..., 0] + hy[:, None] * diff[..., 1]
        behind = (dist2 > delta2) & (dots <= 0.0)
        np.fill_diagonal(behind, False)
        free = ~behind.any(axis=1)
        pos[free] += step * hvec[free]
        moved |= free
    return moved


def _advance_interval_loops(pos, hx, hy, delta2, step, nsub):
    # Same arithmetic as the numpy path, written as loops for numba.
    n = pos.shape[0]
    moved = np.zeros(n, np.bool_)
    blocked = np.zeros(n, np.bool_)
    for _ in range(nsub):
        for i in range(n):
            blocked[i] = False
            for j in range(n):
                if j == i:
                    continue
                dx = pos[j, 0] - pos[i, 0]
                dy = pos[j, 1] - pos[i, 1]
                if dx * dx + dy * dy > delta2 and hx[i] * dx + hy[i] * dy <= 0.0:
                    blocked[i] = True
                    break
        for i in range(n):
            if not blocked[i]:
                pos[i, 0] += step * hx[i]
                pos[i, 1] += step * hy[i]
                moved[i] = True
    return moved


if njit is not None:
    _advance_interval = njit(cache=True)(_advance_interval_loops)
else:  # pragma: no cover
    _advance_interval = _advance_interval_numpy


def continuous_interval(state: Constellation, config: ContinuousConfig, rng=None,
                        headings=None) -> Constellation:
    """Advance one unit interval: redraw headings once, then integrate
    1/substep synchronous sense-then-move substeps. Pass `headings` to force
    the draw; otherwise they come from `rng`."""
    if headings is None:
        if rng is None:
            raise ValueError("continuous_interval needs an rng or explicit headings")
        headings = draw_headings(rng, state.n)
    headings = np.asarray(headings, dtype=float)
    if headings.shape != (state.n,):
        raise ValueError("headings must have one entry per agent")
    pos = state.positions.copy()
    _advance_interval(pos, np.cos(headings), np.sin(headings),
                      config.delta * config.delta, config.speed * config.substep,
                      config.nsub)
    return Constellation(pos, headings, state.step_index + 1)


def _separated_sum(positions: np.ndarray, delta: float) -> float:
    diff = positions[None, :, :] - positions[:, None, :]
    d = np.sqrt(diff[..., 0] ** 2 + diff[..., 1] ** 2)
    return float(d[d > delta].sum())


def lyapunov_value(positions, delta: float) -> LyapunovState:
    """Gathering progress observable: zero iff the constellation fits in an
    open disc of radius delta, otherwise the sum of all pairwise distances
    exceeding delta (each unordered pair contributes twice)."""
    pts = as_points(positions)
    if delta <= 0:
        raise ValueError("delta must be > 0")
    if min_enclosing_disc(pts).radius < delta:
        return LyapunovState(0.0, True)
    return LyapunovState(_separated_sum(pts, delta), False)


def run_continuous(config: ContinuousConfig, rng=None, record_every: int = 1,
                   collect_trace: bool = True, initial: Constellation | None = None) -> tuple[Trace, RunSummary]:
    """Iterate unit intervals until the constellation is confined (enclosing
    radius strictly below delta, checked at interval boundaries) or
    max_intervals is reached. Pass `initial` to start from a prepared
    constellation instead of the seeded uniform placement."""
    if record_every < 1:
        raise ValueError("record_every must be >= 1")
    if rng is None:
        rng = make_rng(config.seed)

    state = initial if initial is not None else init_constellation(config, rng)
    if state.n != config.n:
        raise ValueError("initial constellation size does not match config.n")
    trace = Trace(model="continuous")
    moved = np.zeros(config.n, dtype=bool)

    def observe(k, moved_flags):
        radius = min_enclosing_disc(state.positions).radius
        confined = radius < config.delta
        value = 0.0 if confined else _separated_sum(state.positions, config.delta)
        trace.series.append((k, radius, value, confined))
        if collect_trace and (k % record_every == 0 or confined or k == config.max_intervals):
            trace.frames.append(Frame(k, state.positions.copy(), state.headings.copy(),
                                      moved_flags.copy(), radius, lyapunov=value,
                                      confined=confined))
        return confined, radius

    confined, radius = observe(0, moved)
    converged = 0 if confined else None
    while converged is None and state.step_index < config.max_intervals:
        prev_positions = state.positions
        state = continuous_interval(state, config, rng)
        moved = np.any(state.positions != prev_positions, axis=1)
        confined, radius = observe(state.step_index, moved)
        if confined:
            converged = state.step_index

    summary = RunSummary(run_id=0, seed=config.seed, n=config.n, spread=config.spread,
                         converged_step=converged, final_radius=radius)
    return trace, summary


def check_separation_band(trace: Trace, delta: float, substep: float) -> list[tuple]:
    """Scan a full-cadence trace for violations of the two distance bands.

    Separated pairs (distance > delta at an interval boundary) may not gain
    more than 4 * substep across the next interval, and once a pair has been
    within delta it may never exceed delta + 4 * substep. Returns a list of
    (kind, interval, i, j, distance) tuples, empty when the run is clean.
    """
    frames = trace.frames
    violations = []
    ever_close = None
    band = delta + 4.0 * substep
    prev = None
    for frame in frames:
        diff = frame.positions[None, :, :] - frame.positions[:, None, :]
        d = np.sqrt(diff[..., 0] ** 2 + diff[..., 1] ** 2)
        if ever_close is None:
            ever_close = np.zeros_like(d, dtype=bool)
        else:
            prev_d, prev_step = prev
            gap = frame.step - prev_step
            grow_tol = 4.0 * substep * gap
            bad = (prev_d > delta) & (d - prev_d > grow_tol)
            for i, j in zip(*np.nonzero(np.triu(bad, 1))):
                violations.append(("separated_growth", frame.step, int(i), int(j), float(d[i, j])))
            bad = ever_close & (d > band)
            for i, j in zip(*np.nonzero(np.triu(bad, 1))):
                violations.append(("close_pair_escape", frame.step, int(i), int(j), float(d[i, j])))
        ever_close |= d < delta
        prev = (d, frame.step)
    return violations


def check_lyapunov_monotone(trace: Trace, n: int, substep: float) -> list[tuple]:
    """Scan the per-interval series for Lyapunov increases beyond the
    integrator tolerance 2 * n^2 * substep per interval. Returns
    (interval, previous, current) tuples, empty when monotone."""
    tol = 2.0 * n * n * substep
    violations = []
    for (k0, _, v0, _), (k1, _, v1, _) in zip(trace.series, trace.series[1:]):
        if v1 - v0 > tol * (k1 - k0):
            violations.append((k1, v0, v1))
    return violations

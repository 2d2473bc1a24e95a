"""World state containers and uniform initialization shared by both engines."""

import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass
class Constellation:
    """All agent positions and headings at one instant.

    positions: (n, 2) float64; headings: (n,) radians in [0, 2*pi).
    """

    positions: np.ndarray
    headings: np.ndarray
    step_index: int = 0

    def __post_init__(self):
        self.positions = np.asarray(self.positions, dtype=float)
        self.headings = np.asarray(self.headings, dtype=float)
        if self.positions.ndim != 2 or self.positions.shape[1] != 2:
            raise ValueError("positions must have shape (n, 2)")
        if self.headings.shape != (len(self.positions),):
            raise ValueError("headings length must match positions")

    @property
    def n(self) -> int:
        return len(self.positions)


@dataclass
class Frame:
    """One recorded instant: positions, per-agent moved flags, disc radius.

    lyapunov/confined are populated by the continuous engine only.
    """

    step: int
    positions: np.ndarray
    headings: np.ndarray
    moved: np.ndarray
    radius: float
    lyapunov: float | None = None
    confined: bool | None = None


@dataclass
class Trace:
    """Time-indexed run record. frames follow the recording cadence;
    series (continuous runs) has one entry per unit interval regardless:
    (interval, enclosing radius, lyapunov value, confined)."""

    model: str
    frames: list[Frame] = field(default_factory=list)
    series: list[tuple[int, float, float, bool]] = field(default_factory=list)


@dataclass
class RunSummary:
    """Per-run convergence record; converged_step is None when the run hit
    its step cap without converging."""

    run_id: int
    seed: int
    n: int
    spread: float
    converged_step: int | None
    final_radius: float


def draw_headings(rng: np.random.Generator, n: int) -> np.ndarray:
    """n fresh headings, i.i.d. uniform on [0, 2*pi), in agent-index order."""
    return rng.uniform(0.0, TWO_PI, n)


def init_constellation(config, rng: np.random.Generator) -> Constellation:
    """Random initial state: positions i.i.d. uniform over the axis-aligned
    square [0, spread]^2, then headings uniform on [0, 2*pi).

    Draw order (all positions, then all headings) is part of the
    reproducibility contract: identical (config, seed) reproduces the
    constellation bit-for-bit.
    """
    positions = rng.uniform(0.0, config.spread, (config.n, 2))
    headings = draw_headings(rng, config.n)
    return Constellation(positions, headings, step_index=0)

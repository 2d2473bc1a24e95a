"""Continuous blind-zone process: sensing, integration, distance bands."""

import math

import numpy as np
import pytest

from gathersim.bounds import expected_time_bound
from gathersim.continuous import (
    ContinuousConfig,
    LyapunovState,
    _advance_interval,
    _advance_interval_numpy,
    blind_zone_sensor,
    check_lyapunov_monotone,
    check_separation_band,
    continuous_interval,
    lyapunov_value,
    run_continuous,
)
from gathersim.rng import make_rng
from gathersim.state import Constellation, init_constellation


def naive_interval(positions, chi, delta, speed, substep, nsub):
    """Independent reimplementation of one unit interval: per substep, sense
    every agent on the frozen snapshot (blocked iff someone beyond delta sits
    in the closed back half-plane), then advance the unblocked ones."""
    pos = [list(p) for p in positions.tolist()]
    n = len(pos)
    hx = [math.cos(c) for c in chi]
    hy = [math.sin(c) for c in chi]
    step = speed * substep
    for _ in range(nsub):
        blocked = []
        for i in range(n):
            hit = False
            for j in range(n):
                if j == i:
                    continue
                dx = pos[j][0] - pos[i][0]
                dy = pos[j][1] - pos[i][1]
                if dx * dx + dy * dy > delta * delta and hx[i] * dx + hy[i] * dy <= 0.0:
                    hit = True
                    break
            blocked.append(hit)
        for i in range(n):
            if not blocked[i]:
                pos[i][0] += step * hx[i]
                pos[i][1] += step * hy[i]
    return np.array(pos)


def test_config_validation():
    with pytest.raises(ValueError):
        ContinuousConfig(n=1, delta=0.0)
    with pytest.raises(ValueError):
        ContinuousConfig(n=1, substep=0.3)  # does not divide the unit interval
    with pytest.raises(ValueError):
        ContinuousConfig(n=0)
    assert ContinuousConfig(n=1, substep=0.25).nsub == 4


# ------------------------------------------------------------- sensing


def test_blind_zone_sensor_cases():
    delta = 0.1
    # within delta directly behind: invisible
    assert blind_zone_sensor(0, [(0, 0), (-delta / 2, 0)], (1, 0), delta) is False
    # beyond delta directly behind: blocks
    assert blind_zone_sensor(0, [(0, 0), (-2 * delta, 0)], (1, 0), delta) is True
    # beyond delta directly ahead: front half-plane never blocks
    assert blind_zone_sensor(0, [(0, 0), (2 * delta, 0)], (1, 0), delta) is False
    # exactly at distance delta: still invisible (strict d > delta)
    assert blind_zone_sensor(0, [(0, 0), (-delta, 0)], (1, 0), delta) is False


def test_blind_zone_sensor_validation():
    with pytest.raises(ValueError):
        blind_zone_sensor(0, [(0, 0), (1, 0)], (2, 0), 0.1)
    with pytest.raises(ValueError):
        blind_zone_sensor(0, [(0, 0), (1, 0)], (1, 0), 0.0)


# ---------------------------------------------------------- integration


def test_single_agent_travels_unit_distance():
    cfg = ContinuousConfig(n=1, seed=2, spread=5.0)
    rng = make_rng(cfg.seed)
    state = init_constellation(cfg, rng)
    new = continuous_interval(state, cfg, rng)
    assert math.isclose(np.hypot(*(new.positions[0] - state.positions[0])), 1.0,
                        abs_tol=1e-9)


@pytest.mark.parametrize("n,seed", [(2, 0), (3, 1), (5, 2), (8, 3)])
def test_interval_matches_naive_reimplementation(n, seed):
    cfg = ContinuousConfig(n=n, delta=0.1, spread=2.0, seed=seed)
    rng = make_rng(cfg.seed)
    state = init_constellation(cfg, rng)
    chi = rng.uniform(0, 2 * math.pi, n)
    new = continuous_interval(state, cfg, headings=chi)
    oracle = naive_interval(state.positions, chi, cfg.delta, cfg.speed, cfg.substep, cfg.nsub)
    assert np.array_equal(new.positions, oracle)


def test_jit_and_numpy_kernels_agree_exactly():
    rng = np.random.default_rng(9)
    for n in (2, 6, 11):
        pos = rng.uniform(0, 3, (n, 2))
        chi = rng.uniform(0, 2 * math.pi, n)
        hx, hy = np.cos(chi), np.sin(chi)
        p1, p2 = pos.copy(), pos.copy()
        m1 = _advance_interval(p1, hx, hy, 0.01, 1e-3, 1000)
        m2 = _advance_interval_numpy(p2, hx, hy, 0.01, 1e-3, 1000)
        assert np.array_equal(p1, p2)
        assert np.array_equal(np.asarray(m1), m2)


def test_head_on_pair_closes_two_per_interval():
    cfg = ContinuousConfig(n=2, delta=0.1, seed=0, spread=20.0)
    state = Constellation(np.array([[0.0, 0.0], [10.0, 0.0]]), np.zeros(2))
    headings = np.array([0.0, math.pi])  # straight at each other
    for expected in (8.0, 6.0, 4.0):
        state = continuous_interval(state, cfg, headings=headings)
        d = np.hypot(*(state.positions[1] - state.positions[0]))
        assert abs(d - expected) < 1e-9


def test_pair_within_delta_moves_freely_and_stays_in_band():
    cfg = ContinuousConfig(n=2, delta=0.1, seed=0, spread=1.0)
    rng = np.random.default_rng(3)
    for _ in range(20):
        start = np.array([[0.0, 0.0], [0.05 * math.cos(a := rng.uniform(0, 2 * math.pi)),
                                       0.05 * math.sin(a)]])
        chi = rng.uniform(0, 2 * math.pi, 2)
        state = Constellation(start.copy(), np.zeros(2))
        new = continuous_interval(state, cfg, headings=chi)
        oracle = naive_interval(start, chi, cfg.delta, cfg.speed, cfg.substep, cfg.nsub)
        assert np.array_equal(new.positions, oracle)
        d = np.hypot(*(new.positions[1] - new.positions[0]))
        assert d <= cfg.delta + 4 * cfg.substep


def test_mutually_blocked_pair_is_exactly_frozen():
    # each agent sits beyond delta in the other's back half-plane, so neither
    # may take a single substep
    cfg = ContinuousConfig(n=2, delta=0.1, seed=0, spread=1.0)
    start = np.array([[0.0, 0.0], [-0.5, 0.0]])
    state = Constellation(start.copy(), np.zeros(2))
    new = continuous_interval(state, cfg, headings=np.array([0.0, math.pi]))
    assert np.array_equal(new.positions, start)


def test_substep_level_separated_band():
    # distance between separated agents may grow at most 2 * substep per
    # substep; drive the kernel one substep at a time to observe it
    rng = np.random.default_rng(4)
    for n, seed in ((4, 0), (7, 1)):
        pos = rng.uniform(0, 1.5, (n, 2))
        chi = rng.uniform(0, 2 * math.pi, n)
        hx, hy = np.cos(chi), np.sin(chi)
        delta, sub = 0.1, 1e-3
        for _ in range(1000):
            d_before = np.hypot(pos[:, None, 0] - pos[None, :, 0],
                                pos[:, None, 1] - pos[None, :, 1])
            _advance_interval(pos, hx, hy, delta * delta, sub, 1)
            d_after = np.hypot(pos[:, None, 0] - pos[None, :, 0],
                               pos[:, None, 1] - pos[None, :, 1])
            grow = d_after - d_before
            assert (grow[d_before > delta] <= 2 * sub + 1e-12).all()


def test_halving_substep_is_first_order():
    intervals = 5
    for seed in range(3):
        rng = make_rng(seed)
        n = 5
        base = init_constellation(ContinuousConfig(n=n, spread=3.0, seed=seed), rng)
        chis = [rng.uniform(0, 2 * math.pi, n) for _ in range(intervals)]
        finals = {}
        for sub in (4e-3, 2e-3, 1e-3):
            cfg = ContinuousConfig(n=n, delta=0.1, substep=sub, spread=3.0, seed=seed)
            state = Constellation(base.positions.copy(), base.headings.copy())
            for chi in chis:
                state = continuous_interval(state, cfg, headings=chi)
            finals[sub] = state.positions
        for sub in (4e-3, 2e-3):
            diff = np.abs(finals[sub] - finals[sub / 2]).max()
            assert diff <= 2.0 * intervals * sub


# ------------------------------------------------------------ lyapunov


def test_lyapunov_examples():
    assert lyapunov_value([(1, 1), (1, 1), (1, 1)], 0.1) == LyapunovState(0.0, True)
    state = lyapunov_value([(0, 0), (5, 0)], 0.1)
    assert state == LyapunovState(10.0, False)  # each pair counted twice
    cluster = [(0, 0), (0.03, 0.02), (0.01, 0.04)]
    assert lyapunov_value(cluster, 0.1) == LyapunovState(0.0, True)


def test_lyapunov_zero_iff_confined():
    rng = np.random.default_rng(6)
    for _ in range(50):
        pts = rng.uniform(0, rng.choice([0.05, 0.3, 3.0]), (int(rng.integers(1, 9)), 2))
        st = lyapunov_value(pts, 0.1)
        assert (st.value == 0.0) == st.confined


# ------------------------------------------------------------------ run


def test_run_single_agent_confined_at_zero():
    _, summary = run_continuous(ContinuousConfig(n=1, seed=7, spread=5.0))
    assert summary.converged_step == 0
    assert summary.final_radius == 0.0


def test_run_two_agents_converges_well_under_bound():
    bound = expected_time_bound(2, 0.1, 3.0)
    steps = []
    for seed in range(40):
        cfg = ContinuousConfig(n=2, delta=0.1, spread=5.0, seed=seed, max_intervals=5000)
        initial = Constellation(np.array([[1.0, 1.0], [4.0, 1.0]]), np.zeros(2))
        _, summary = run_continuous(cfg, collect_trace=False, initial=initial)
        assert summary.converged_step is not None
        steps.append(summary.converged_step)
    assert np.mean(steps) <= bound
    assert np.mean(steps) < 0.05 * bound  # the closed-form ceiling is loose


def test_run_series_and_bands():
    cfg = ContinuousConfig(n=10, delta=0.1, spread=5.0, seed=12, max_intervals=5000)
    trace, summary = run_continuous(cfg)
    assert summary.converged_step is not None
    assert trace.series[0][0] == 0
    assert trace.series[-1][3] is True or trace.series[-1][3] == 1
    assert summary.final_radius < cfg.delta
    # runtime-checkable invariants: distance bands and Lyapunov monotonicity
    # (monotonicity holds for this seed; an interval where a pair drifts up
    # through delta re-activates its term at ~2*delta and can legitimately
    # exceed the 2 n^2 dt band -- the acceptance suite scans for those)
    assert check_separation_band(trace, cfg.delta, cfg.substep) == []
    assert check_lyapunov_monotone(trace, cfg.n, cfg.substep) == []
    # lyapunov hits zero exactly at confinement
    assert trace.series[-1][2] == 0.0
    assert all(v > 0 for _, _, v, conf in trace.series[:-1] if not conf)


def test_run_deterministic():
    cfg = ContinuousConfig(n=6, delta=0.1, spread=4.0, seed=31, max_intervals=3000)
    t1, s1 = run_continuous(cfg)
    t2, s2 = run_continuous(cfg)
    assert s1 == s2
    assert t1.series == t2.series
    for f1, f2 in zip(t1.frames, t2.frames):
        assert np.array_equal(f1.positions, f2.positions)

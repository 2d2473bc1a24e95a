"""CLI surface: flags, file formats, exit codes, byte-level determinism."""

import json
import math

import pytest

from gathersim.cli import main


def read_bytes(path):
    with open(path, "rb") as fh:
        return fh.read()


def test_bounds_command_json(capsys):
    assert main(["bounds", "--n", "4", "--delta", "0.1", "--dmax", "50"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload) == ["n", "delta", "d_max0", "alpha_max", "move_prob_lb",
                             "theta_s_max", "gamma_s_min", "step_min", "shrink_min",
                             "expected_intervals_ub"]
    assert payload["n"] == 4
    assert math.isclose(payload["step_min"], 0.1 * math.tan(math.pi / 16), rel_tol=1e-12)


def test_sim_discrete_outputs(tmp_path):
    trace = tmp_path / "t.csv"
    summary = tmp_path / "s.csv"
    args = ["sim", "--model", "discrete", "--n", "8", "--spread", "50", "--seed", "5",
            "--trace", str(trace), "--summary", str(summary)]
    assert main(args) == 0
    lines = trace.read_text().splitlines()
    assert lines[0] == "step,agent,x,y,heading,moved"
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "0" and first[5] == "0"
    srows = summary.read_text().splitlines()
    assert srows[0] == "run_id,seed,n,spread,converged_step,final_radius"
    assert srows[1].split(",")[1:4] == ["5", "8", "50.0"]


def test_sim_byte_identical_reruns(tmp_path):
    out1 = [str(tmp_path / "a_t.csv"), str(tmp_path / "a_s.csv")]
    out2 = [str(tmp_path / "b_t.csv"), str(tmp_path / "b_s.csv")]
    for trace, summary in (out1, out2):
        args = ["sim", "--model", "discrete", "--n", "12", "--spread", "50",
                "--seed", "99", "--trace", trace, "--summary", summary]
        assert main(args) == 0
    assert read_bytes(out1[0]) == read_bytes(out2[0])
    assert read_bytes(out1[1]) == read_bytes(out2[1])


def test_sim_continuous_writes_series(tmp_path):
    trace = tmp_path / "c.csv"
    summary = tmp_path / "cs.csv"
    args = ["sim", "--model", "continuous", "--n", "3", "--spread", "2", "--seed", "4",
            "--delta", "0.1", "--substep", "0.001", "--trace", str(trace),
            "--summary", str(summary)]
    assert main(args) == 0
    series = tmp_path / "c.series.csv"
    rows = series.read_text().splitlines()
    assert rows[0] == "interval,sec_radius,lyapunov,confined"
    assert rows[-1].split(",")[3] == "1"  # confined by the end


def test_sim_record_every(tmp_path):
    trace = tmp_path / "r.csv"
    args = ["sim", "--model", "discrete", "--n", "6", "--seed", "2",
            "--record-every", "50", "--trace", str(trace),
            "--summary", str(tmp_path / "rs.csv")]
    assert main(args) == 0
    steps = {int(line.split(",")[0]) for line in trace.read_text().splitlines()[1:]}
    inner = sorted(steps)[:-1]
    assert all(s % 50 == 0 for s in inner)


def test_sweep_outputs_and_determinism(tmp_path):
    def run(idx):
        out = tmp_path / f"sw{idx}.csv"
        args = ["sweep", "--model", "discrete", "--n-list", "4,8", "--reps", "2",
                "--base-seed", "17", "--out", str(out)]
        assert main(args) == 0
        return out

    out1, out2 = run(1), run(2)
    assert read_bytes(out1) == read_bytes(out2)
    fit1 = tmp_path / "sw1.fit.json"
    fit2 = tmp_path / "sw2.fit.json"
    assert read_bytes(fit1) == read_bytes(fit2)
    payload = json.loads(fit1.read_text())
    assert set(payload) == {"slope", "intercept", "pearson_r", "n_means"}
    assert len(payload["n_means"]) == 2
    rows = out1.read_text().splitlines()
    assert len(rows) == 5  # header + 2 n-values x 2 reps


def test_invalid_arguments_exit_2(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["sim", "--model", "warp", "--n", "4", "--seed", "0",
              "--trace", "t", "--summary", "s"])
    assert exc.value.code == 2
    # domain error surfaces as exit code 2 as well
    assert main(["sim", "--model", "discrete", "--n", "0", "--seed", "0",
                 "--trace", str(tmp_path / "t.csv"),
                 "--summary", str(tmp_path / "s.csv")]) == 2
    assert main(["bounds", "--n", "1", "--delta", "0.1", "--dmax", "5"]) == 2


def test_unwritable_output_exit_3(tmp_path):
    args = ["sim", "--model", "discrete", "--n", "2", "--seed", "0",
            "--trace", str(tmp_path / "missing_dir" / "t.csv"),
            "--summary", str(tmp_path / "s.csv")]
    assert main(args) == 3

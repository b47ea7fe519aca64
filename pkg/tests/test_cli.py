"""Command-line interface: solving, tabulation, verification, exit codes."""

import json
import math
import subprocess
import sys

import pytest

from cctrig.cli import main

ARCCOSH_2 = "1.3169578969248168"
HALF_PI = "1.5707963267948966"


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _error_kind(err: str) -> str:
    return json.loads(err.strip().splitlines()[-1])["error"]


def test_solve_human_output(capsys):
    code, out, err = _run(capsys, "solve", "--geometry", "hyperbolic",
                          "--mode", "sss", ARCCOSH_2, ARCCOSH_2, ARCCOSH_2)
    assert code == 0
    assert err == ""
    assert "hyperbolic triangle" in out
    assert "0.8410686705679" in out     # acos(2/3), each angle
    assert "deg" in out
    assert "residuals:" in out


def test_solve_json_output(capsys):
    code, out, _ = _run(capsys, "solve", "--geometry", "hyperbolic",
                        "--mode", "sss", "--format", "json",
                        ARCCOSH_2, ARCCOSH_2, ARCCOSH_2)
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["kind"] == "hyperbolic"
    assert data["k"] == 1.0
    assert data["mode"] == "sss"
    assert data["side_a"] == float(ARCCOSH_2)
    assert data["angle_a"] == pytest.approx(math.acos(2.0 / 3.0), abs=1e-15)
    assert data["angle_excess"] < 0.0
    assert set(data["residuals"]) == {"hyp_sine_law", "hyp_side_cosine",
                                      "hyp_angle_cosine", "hyp_cotangent"}
    assert all(abs(v) < 1e-12 for v in data["residuals"].values())
    assert out.count("\n") == 1         # a single line


def test_solve_csv_output(capsys):
    code, out, _ = _run(capsys, "solve", "--geometry", "euclidean",
                        "--mode", "sss", "--format", "csv", "3", "4", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "field,value"
    cells = dict(line.split(",", 1) for line in lines[1:])
    assert float(cells["angle_c"]) == pytest.approx(math.pi / 2.0, abs=1e-15)
    assert float(cells["angle_excess"]) == 0.0


def test_solve_octant_from_sas(capsys):
    code, out, _ = _run(capsys, "solve", "--geometry", "spherical",
                        "--mode", "sas", "--format", "json",
                        HALF_PI, HALF_PI, HALF_PI)
    assert code == 0
    data = json.loads(out)
    for field in ("side_a", "side_b", "side_c", "angle_a", "angle_b", "angle_c"):
        assert data[field] == pytest.approx(math.pi / 2.0, abs=1e-15)


def test_solve_writes_to_file(tmp_path, capsys):
    target = tmp_path / "triangle.json"
    code, out, _ = _run(capsys, "solve", "--geometry", "euclidean",
                        "--mode", "sss", "--format", "json",
                        "--out", str(target), "3", "4", "5")
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["kind"] == "euclidean"


def test_similarity_exits_3(capsys):
    code, out, err = _run(capsys, "solve", "--geometry", "euclidean",
                          "--mode", "aaa", "0.6", "0.7",
                          repr(math.pi - 1.3))
    assert code == 3
    assert out == ""
    assert _error_kind(err) == "similarity"


def test_infeasible_exits_3(capsys):
    code, _, err = _run(capsys, "solve", "--geometry", "euclidean",
                        "--mode", "sss", "1", "1", "5")
    assert code == 3
    assert _error_kind(err) == "infeasible"


def test_domain_error_exits_2(capsys):
    code, _, err = _run(capsys, "solve", "--geometry", "euclidean",
                        "--mode", "sss", "--", "-1", "4", "5")
    assert code == 2
    assert _error_kind(err) == "domain"


def test_flat_geometry_rejects_curvature_scale(capsys):
    code, _, err = _run(capsys, "solve", "--geometry", "euclidean",
                        "--mode", "sss", "--curvature-scale", "2", "3", "4", "5")
    assert code == 2
    assert _error_kind(err) == "domain"


def test_parallelism_table(capsys):
    code, out, err = _run(capsys, "parallelism", "0", ARCCOSH_2, "3")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "p,parallelism_angle"
    rows = [tuple(map(float, line.split(","))) for line in lines[1:]]
    assert len(rows) == 3
    assert rows[0] == (0.0, math.pi / 2.0)
    assert rows[-1][1] == pytest.approx(math.pi / 6.0, abs=1e-15)
    assert rows[0][1] > rows[1][1] > rows[2][1]


def test_parallelism_rejects_bad_ranges(capsys):
    code, _, err = _run(capsys, "parallelism", "2", "1", "5")
    assert code == 2
    assert _error_kind(err) == "domain"
    code, _, err = _run(capsys, "parallelism", "0", "1", "1")
    assert code == 2
    assert _error_kind(err) == "domain"


def test_verify_json_passes_and_reports_timing(capsys):
    code, out, err = _run(capsys, "verify", "euclidean", "--samples", "20")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert data["suite"] == "euclidean"
    assert "elapsed" not in out
    assert err.startswith("# suite euclidean:")
    assert "s elapsed" in err


def test_verify_output_is_byte_identical_across_runs(capsys):
    _, first, _ = _run(capsys, "verify", "euclidean", "--samples", "20")
    _, second, _ = _run(capsys, "verify", "euclidean", "--samples", "20")
    assert first == second


def test_verify_human_format(capsys):
    code, out, err = _run(capsys, "verify", "euclidean", "--samples", "20",
                          "--format", "human")
    assert code == 0
    assert "overall: PASS" in out
    assert "elapsed:" in out
    assert err == ""                    # timing lives in the table itself


def test_verify_writes_to_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = _run(capsys, "verify", "euclidean", "--samples", "20",
                        "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["pass"] is True


def test_verify_failure_exits_1(capsys):
    code, out, _ = _run(capsys, "verify", "euclidean", "--samples", "20",
                        "--tol", "1e-30")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_unknown_suite_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "elliptic"])
    assert excinfo.value.code == 2
    assert "invalid choice" in capsys.readouterr().err


def test_missing_values_are_a_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["solve", "--geometry", "euclidean", "--mode", "sss", "3", "4"])
    assert excinfo.value.code == 2


def test_module_runner(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "cctrig", "verify", "euclidean",
         "--samples", "10"],
        capture_output=True, text=True, cwd=tmp_path, timeout=120)
    assert result.returncode == 0
    assert json.loads(result.stdout)["pass"] is True

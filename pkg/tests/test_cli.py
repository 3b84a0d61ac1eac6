import json
from unittest.mock import patch

import numpy as np
import pandas as pd
import pytest

from linespace.cli import (
    EXIT_OK,
    EXIT_PARAMETER,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    main,
    parse_xi,
)
from linespace.core import INFINITY, ExtComplex
from linespace.utils.suites import CheckResult, RunReport


def run_convert(capsys, *argv):
    """Run ``convert`` and return its JSON record."""
    assert main(["convert", *argv]) == EXIT_OK
    return json.loads(capsys.readouterr().out)


@pytest.fixture
def config_file(tmp_path):
    """Write a JSON config file and return its path."""

    def _write(config: dict):
        path = tmp_path / "linespace.json"
        path.write_text(json.dumps(config), encoding="utf-8")
        return str(path)

    return _write


# --- argument parsing -----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1+2i", ExtComplex(1 + 2j)),
        ("1+2j", ExtComplex(1 + 2j)),
        ("-0.5", ExtComplex(-0.5)),
        ("3i", ExtComplex(3j)),
        ("inf", INFINITY),
        ("Infinity", INFINITY),
    ],
)
def test_parse_xi(text, expected):
    assert parse_xi(text) == expected


def test_malformed_number_is_usage_error(capsys):
    assert main(["convert", "--xi", "one", "--r", "1"]) == EXIT_USAGE
    assert "not a complex number" in capsys.readouterr().err


def test_missing_subcommand_is_usage_error():
    assert main([]) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert main(["sample", "--help"]) == EXIT_OK
    assert "--surface" in capsys.readouterr().out


# --- convert ------------------------------------------------------------------------------


def test_convert_t_axis(capsys):
    record = run_convert(capsys, "--xi", "0", "--eta", "0", "--r", "5")
    assert (record["x"], record["y"], record["t"]) == pytest.approx((0.0, 0.0, 5.0))


def test_convert_x_axis(capsys):
    record = run_convert(capsys, "--xi", "1", "--eta", "0", "--r", "3")
    assert (record["x"], record["y"], record["t"]) == pytest.approx((3.0, 0.0, 0.0), abs=1e-12)


def test_convert_point_to_line(capsys):
    record = run_convert(capsys, "--point", "0,0,1", "--xi", "1")
    assert record["eta_re"] == pytest.approx(-1.0)
    assert record["eta_im"] == pytest.approx(0.0)
    assert record["r"] == pytest.approx(0.0, abs=1e-12)
    assert record["chart"] == 1


def test_convert_south_pole_uses_chart_2(capsys):
    record = run_convert(capsys, "--xi", "inf", "--eta", "1", "--r", "2")
    assert record["chart"] == 2
    assert (record["x"], record["y"], record["t"]) == pytest.approx((2.0, 0.0, -2.0))


def test_convert_needs_xi(capsys):
    assert main(["convert", "--point", "1,2,3"]) == EXIT_USAGE
    assert "--xi" in capsys.readouterr().err


# --- sample -------------------------------------------------------------------------------


def test_sample_point_sphere(tmp_path):
    csv_path = tmp_path / "sphere.csv"
    argv = ["sample", "--surface", "sphere", "--point", "0,0,1", "--out-csv", str(csv_path)]
    argv += ["--radial-count", "4", "--angular-count", "4"]
    assert main(argv) == EXIT_OK

    df = pd.read_csv(csv_path)
    assert len(df) == 16
    assert np.allclose(df[["x", "y", "t"]].to_numpy(), [0.0, 0.0, 1.0], atol=1e-12)
    assert (df["skipped"] == 0).all()


def test_sample_ellipsoid_two_chart(tmp_path):
    csv_path = tmp_path / "ellipsoid.csv"
    argv = ["sample", "--surface", "ellipsoid", "--a1", "1", "--a2", "4", "--a3", "9"]
    argv += ["--grid", "two-chart", "--out-csv", str(csv_path)]
    assert main(argv) == EXIT_OK

    df = pd.read_csv(csv_path)
    assert set(df["chart"]) == {1, 2}
    residual = df["x"] ** 2 / 1 + df["y"] ** 2 / 4 + df["t"] ** 2 / 9 - 1
    assert residual.abs().max() <= 1e-8


@pytest.mark.parametrize("branch, radius", [("+", 4.0), ("-", 2.0)])
def test_sample_torus_equator(tmp_path, capsys, branch, radius):
    csv_path = tmp_path / "torus.csv"
    argv = ["sample", "--surface", "torus", "--a", "1", "--b", "3", "--branch", branch]
    argv += ["--grid", "annulus", "--radial-count", "1", "--inner-radius", "1"]
    argv += ["--max-modulus", "2", "--out-csv", str(csv_path)]
    assert main(argv) == EXIT_OK
    assert "⚠️" in capsys.readouterr().err

    df = pd.read_csv(csv_path)
    assert np.allclose(df["t"], 0.0, atol=1e-12)
    assert np.allclose(np.hypot(df["x"], df["y"]), radius, atol=1e-12)


def test_sample_torus_skips_poles(tmp_path, capsys):
    csv_path = tmp_path / "torus.csv"
    obj_path = tmp_path / "torus.obj"
    argv = ["sample", "--surface", "torus", "--a", "3", "--b", "1", "--grid", "two-chart"]
    argv += ["--radial-count", "3", "--angular-count", "4"]
    argv += ["--out-csv", str(csv_path), "--out-obj", str(obj_path)]
    assert main(argv) == EXIT_OK
    assert "Skipped 8 samples" in capsys.readouterr().err

    df = pd.read_csv(csv_path)
    assert len(df) == 24
    assert df["skipped"].sum() == 8
    vertices = obj_path.read_text(encoding="utf-8").splitlines()
    assert len(vertices) == 16


def test_sample_is_deterministic(tmp_path):
    """The same arguments, seed included, give byte-identical CSV."""
    outputs = []
    for name in ("first.csv", "second.csv"):
        csv_path = tmp_path / name
        argv = ["sample", "--surface", "ellipsoid", "--a1", "1", "--a2", "4", "--a3", "9"]
        argv += ["--grid", "annulus", "--seed", "7", "--out-csv", str(csv_path)]
        assert main(argv) == EXIT_OK
        outputs.append(csv_path.read_bytes())
    assert outputs[0] == outputs[1]


def test_sample_seed_does_not_change_grid(tmp_path):
    """Grids are deterministic, so the seed leaves the output unchanged."""
    outputs = []
    for seed in ("0", "7"):
        csv_path = tmp_path / f"seed{seed}.csv"
        argv = ["sample", "--radial-count", "2", "--angular-count", "3", "--seed", seed]
        assert main(argv + ["--out-csv", str(csv_path)]) == EXIT_OK
        outputs.append(csv_path.read_bytes())
    assert outputs[0] == outputs[1]


def test_sample_writes_csv_to_stdout(capsys):
    assert main(["sample", "--radial-count", "2", "--angular-count", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "xi_re,xi_im,chart,eta_re,eta_im,r,x,y,t,skipped"
    assert len(lines) == 5


def test_sample_invalid_parameters_write_nothing(tmp_path, capsys):
    csv_path = tmp_path / "bad.csv"
    argv = ["sample", "--surface", "ellipsoid", "--a1", "-1", "--out-csv", str(csv_path)]
    with patch("linespace.cli.write_csv") as mock_write:
        assert main(argv) == EXIT_PARAMETER
        mock_write.assert_not_called()
    assert not csv_path.exists()
    assert "❌" in capsys.readouterr().err


def test_sample_invalid_grid(tmp_path):
    csv_path = tmp_path / "bad.csv"
    argv = ["sample", "--radial-count", "0", "--out-csv", str(csv_path)]
    assert main(argv) == EXIT_PARAMETER
    assert not csv_path.exists()


# --- verify -------------------------------------------------------------------------------


def test_verify_core(capsys):
    assert main(["verify", "core", "--seed", "7"]) == EXIT_OK
    captured = capsys.readouterr()
    assert "unit_direction" in captured.out
    assert "✅" in captured.err


def test_verify_unattainable_tolerance(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    argv = ["verify", "torus", "--tol", "1e-20", "--report-json", str(report_path)]
    assert main(argv) == EXIT_VERIFICATION_FAILED

    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    assert "❌" in captured.err
    report = json.loads(report_path.read_text(encoding="utf-8"))
    assert report["passed"] is False
    assert all(check["tolerance"] == 1e-20 for check in report["checks"])


def test_verify_unknown_suite_is_usage_error():
    assert main(["verify", "cubes"]) == EXIT_USAGE


def test_verify_exit_status_follows_report(capsys):
    failing = RunReport(
        seed=3,
        checks=[CheckResult("core", "unit_direction", 1.0, 1e-12, False, 10, 0.01)],
    )
    with patch("linespace.cli.run_suite", return_value=failing) as mock_run:
        assert main(["verify", "core", "--seed", "3"]) == EXIT_VERIFICATION_FAILED
        mock_run.assert_called_once_with("core", seed=3, tol=None)
    assert "core/unit_direction" in capsys.readouterr().err


# --- config ---------------------------------------------------------------------------------


def test_config_fills_defaults_and_flags_win(tmp_path, config_file):
    csv_path = tmp_path / "configured.csv"
    config = config_file(
        {
            "surface": "ellipsoid",
            "a1": 1,
            "a2": 4,
            "a3": 9,
            "grid": "two-chart",
            "radial-count": 2,
            "angular-count": 3,
        }
    )
    argv = ["sample", "--config", config, "--a3", "16", "--out-csv", str(csv_path)]
    assert main(argv) == EXIT_OK

    df = pd.read_csv(csv_path)
    assert len(df) == 12
    residual = df["x"] ** 2 / 1 + df["y"] ** 2 / 4 + df["t"] ** 2 / 16 - 1
    assert residual.abs().max() <= 1e-10


def test_config_for_verify(config_file, capsys):
    config = config_file({"suite": "spheres", "seed": 5})
    assert main(["verify", "--config", config]) == EXIT_OK
    assert "sphere_normality" in capsys.readouterr().out


def test_config_unknown_key(config_file):
    assert main(["sample", "--config", config_file({"colour": "red"})]) == EXIT_USAGE


def test_config_missing_file(tmp_path):
    assert main(["verify", "--config", str(tmp_path / "missing.json")]) == EXIT_USAGE


@pytest.mark.parametrize(
    "config",
    [
        {"grid": "hexagon"},
        {"a1": "abc"},
        {"radial-count": 2.5},
        {"point": [0, 0]},
        {"branch": "both"},
    ],
)
def test_config_bad_value_is_usage_error(config_file, capsys, config):
    """Config values are checked like the matching flags."""
    assert main(["sample", "--config", config_file(config)]) == EXIT_USAGE
    assert "invalid value" in capsys.readouterr().err


def test_config_point_as_list(tmp_path, config_file):
    """A sphere centre may be given as [x, y, t]."""
    csv_path = tmp_path / "centre.csv"
    config = config_file({"point": [1, 2, 3], "radial-count": 1, "angular-count": 2})
    assert main(["sample", "--config", config, "--out-csv", str(csv_path)]) == EXIT_OK

    df = pd.read_csv(csv_path)
    assert np.allclose(df[["x", "y", "t"]].to_numpy(), [1.0, 2.0, 3.0], atol=1e-12)

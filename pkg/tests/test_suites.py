import json

import pytest

from linespace.utils.suites import SUITE_NAMES, SUITES, RunReport, run_suite, suite_names


@pytest.fixture(scope="module")
def full_report():
    """One run of every suite, shared by the tests below."""
    return run_suite("all", seed=0)


def test_all_suites_pass_with_default_tolerances(full_report):
    failures = [f"{c.suite}/{c.name}: {c.max_residual:.3e}" for c in full_report.failures]
    assert full_report.passed, failures


def test_all_lists_every_check(full_report):
    assert len(full_report.checks) == sum(len(checks) for checks in SUITES.values())
    assert len(full_report.checks) >= 8
    assert {c.suite for c in full_report.checks} == set(SUITE_NAMES)


def test_core_suite_with_seed():
    report = run_suite("core", seed=7)
    assert report.passed
    assert report.seed == 7
    assert all(c.suite == "core" and c.samples > 0 for c in report.checks)


def test_unattainable_tolerance_fails():
    report = run_suite("torus", tol=1e-20)
    assert not report.passed
    assert report.failures
    assert all(c.tolerance == 1e-20 for c in report.checks)
    assert any(c.max_residual > 1e-20 for c in report.failures)


def test_same_seed_same_residuals():
    first = run_suite("ellipsoid", seed=11)
    second = run_suite("ellipsoid", seed=11)
    assert [c.max_residual for c in first.checks] == [c.max_residual for c in second.checks]


def test_pass_iff_within_tolerance(full_report):
    for check in full_report.checks:
        assert check.passed == (check.max_residual <= check.tolerance)


def test_suite_names():
    assert suite_names("all") == list(SUITE_NAMES)
    assert suite_names("torus") == ["torus"]
    with pytest.raises(KeyError):
        suite_names("cubes")


def test_report_serialisation(full_report):
    data = json.loads(json.dumps(full_report.to_dict()))
    assert data["seed"] == 0
    assert data["passed"] is True
    assert {"suite", "name", "max_residual", "tolerance", "passed", "wall_time"} <= set(
        data["checks"][0]
    )

    text = full_report.to_text()
    assert "PASS" in text
    assert "FAIL" not in text
    assert "torus_double_cover" in text


def test_empty_report_text():
    assert RunReport(seed=0).to_text() == "No checks run."
    assert RunReport(seed=0).passed

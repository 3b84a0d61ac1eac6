"""Seeded property suites behind ``linespace verify``."""

import time
import warnings
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from linespace.congruences import (
    BRANCH_MINUS,
    BRANCH_PLUS,
    EllipsoidParams,
    TorusParams,
    ellipsoid_section,
    implicit_residual_ellipsoid,
    implicit_residual_sphere,
    implicit_residual_torus,
    point_sphere_section,
    reconstruct,
    round_sphere_section,
    torus_section,
    verify_normality,
)
from linespace.core import (
    CHART_NORTH,
    CHART_SOUTH,
    INFINITY,
    ChartPoint,
    ExtComplex,
    LinePoint,
    Vector3,
    chart_transition,
    dir_from_xi,
    foot_point,
    inner,
    line_point,
    lines_through_point,
    perp_displacement,
    xi_from_dir,
)
from linespace.errors import GeometryWarning
from linespace.utils.config import DEFAULT_STEP
from linespace.utils.sampling import random_disk, random_lines, random_log_annulus, random_points

SUITE_NAMES = ("core", "spheres", "ellipsoid", "torus")
SUITE_ALL = "all"

CheckFunction = Callable[[np.random.Generator], Tuple[float, int]]


@dataclass
class CheckResult:
    """Outcome of one property check."""

    suite: str
    name: str
    max_residual: float
    tolerance: float
    passed: bool
    samples: int
    wall_time: float


@dataclass
class RunReport:
    """Results of a verification run."""

    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(check) for check in self.checks])

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "passed": self.passed,
            "checks": [asdict(check) for check in self.checks],
        }

    def to_text(self) -> str:
        if not self.checks:
            return "No checks run."
        df = self.to_frame()
        df["max_residual"] = df["max_residual"].map(lambda v: f"{v:.3e}")
        df["tolerance"] = df["tolerance"].map(lambda v: f"{v:.1e}")
        df["wall_time"] = df["wall_time"].map(lambda v: f"{v:.3f}s")
        df["passed"] = df["passed"].map(lambda v: "PASS" if v else "FAIL")
        return df.to_string(index=False)


def _max(values) -> float:
    values = list(values)
    return float(np.max(values)) if values else 0.0


def _point_error(p, q) -> float:
    return max(abs(p.z - q.z), abs(p.t - q.t))


# --- core ---------------------------------------------------------------------------------


def _check_unit_direction(rng):
    xis = [ExtComplex(complex(w)) for w in random_log_annulus(rng, 10000, 1e-6, 1e3)]
    xis.extend([ExtComplex(0j), INFINITY])
    return _max(abs(inner(d, d) - 1.0) for d in map(dir_from_xi, xis)), len(xis)


def _check_projection_round_trip(rng):
    xis = [ExtComplex(complex(w)) for w in random_log_annulus(rng, 10000, 1e-6, 1e6)]
    xis.append(ExtComplex(0j))
    errors = [
        abs(xi_from_dir(dir_from_xi(xi)).finite() - xi.value) / max(1.0, abs(xi.value))
        for xi in xis
    ]
    # the south pole must come back as the tagged point at infinity
    errors.append(0.0 if xi_from_dir(dir_from_xi(INFINITY)).is_infinite else np.inf)
    return _max(errors), len(errors)


def _check_line_parametrization(rng):
    lines = random_lines(rng, 10000, 1e-3, 1e3, 100.0)
    rs = rng.uniform(-100.0, 100.0, (len(lines), 2))
    errors = []
    for line, (r1, r2) in zip(lines, rs):
        chord = line_point(LinePoint(line, r1)) - line_point(LinePoint(line, r2))
        expected = (r1 - r2) * dir_from_xi(line.xi)
        errors.append(max(abs(chord.vz - expected.vz), abs(chord.vt - expected.vt)))
    return _max(errors), len(lines)


def _check_orthogonality(rng):
    lines = random_lines(rng, 10000, 1e-3, 1e3, 100.0)
    errors = []
    for line in lines:
        perp = perp_displacement(line)
        errors.append(abs(inner(perp, dir_from_xi(line.xi))) / max(1.0, perp.norm()))
    return _max(errors), len(lines)


def _check_inverse_correctness(rng):
    points = random_points(rng, 10000, 1e3)
    xis = random_log_annulus(rng, len(points), 1e-3, 1e3)
    errors = [_point_error(line_point(lines_through_point(p, xi)), p) for p, xi in zip(points, xis)]
    return _max(errors), len(points)


def _check_minimal_distance(rng):
    points = random_points(rng, 10000, 1e3)
    xis = random_log_annulus(rng, len(points), 1e-3, 1e3)
    errors = []
    for p, xi in zip(points, xis):
        lp = lines_through_point(p, xi)
        foot = foot_point(lp.line)
        identity = lp.r**2 + foot.norm() ** 2 - p.norm() ** 2
        errors.append(abs(identity) / max(1.0, p.norm() ** 2))
    return _max(errors), len(points)


def _check_foot_minimality(rng):
    lines = random_lines(rng, 100, 1e-3, 1e3, 100.0)
    errors = []
    for line in lines:
        foot = foot_point(line).norm()
        for r in rng.uniform(-100.0, 100.0, 100):
            errors.append(max(0.0, foot - line_point(LinePoint(line, r)).norm()))
    return _max(errors), len(errors)


def _check_chart_coherence(rng):
    lines = random_lines(rng, 10000, 1e-3, 1e3, 100.0)
    errors = [_point_error(foot_point(line), foot_point(chart_transition(line))) for line in lines]
    return _max(errors), len(lines)


# --- spheres ------------------------------------------------------------------------------


def _check_point_sphere_exactness(rng):
    errors = []
    for p in random_points(rng, 100, 10.0):
        samples = random_log_annulus(rng, 10, 1e-3, 1e3)
        for result in reconstruct(point_sphere_section(p), samples):
            errors.append(_point_error(result.point, p))
    return _max(errors), len(errors)


def _check_round_sphere_on_surface(rng):
    errors = []
    centers = random_points(rng, 20, 10.0)
    radii = rng.uniform(0.1, 10.0, len(centers))
    for center, radius in zip(centers, radii):
        samples = random_log_annulus(rng, 50, 1e-3, 1e3)
        for result in reconstruct(round_sphere_section(center, radius), samples):
            errors.append(abs(implicit_residual_sphere(center, radius, result.point)) / radius**2)
    return _max(errors), len(errors)


def _check_sphere_normality(rng):
    center = random_points(rng, 1, 5.0)[0]
    sections = [(round_sphere_section(center, 2.0), 0.0), (point_sphere_section(center), 1.0)]
    errors = []
    for section, offset in sections:
        for xi in random_disk(rng, 50, 3.0):
            errors.append(verify_normality(section, complex(xi), DEFAULT_STEP, offset=offset))
    return _max(errors), len(errors)


# --- ellipsoid ----------------------------------------------------------------------------


def _random_ellipsoids(rng, count) -> List[EllipsoidParams]:
    return [EllipsoidParams(*axes) for axes in rng.uniform(0.5, 100.0, (count, 3))]


def _ellipsoid_samples(rng, count) -> List[ChartPoint]:
    half = count // 2
    north = random_log_annulus(rng, half, 1e-3, 50.0)
    south = random_log_annulus(rng, count - half, 1e-3, 50.0)
    return [ChartPoint(complex(w), CHART_NORTH) for w in north] + [
        ChartPoint(complex(w), CHART_SOUTH) for w in south
    ]


def _check_ellipsoid_on_surface(rng):
    errors = []
    for params in _random_ellipsoids(rng, 20):
        for result in reconstruct(ellipsoid_section(params), _ellipsoid_samples(rng, 500)):
            errors.append(abs(implicit_residual_ellipsoid(params, result.point)))
    return _max(errors), len(errors)


def _check_ellipsoid_sphere_degeneration(rng):
    errors = []
    for a in rng.uniform(0.5, 100.0, 10):
        section = ellipsoid_section(EllipsoidParams(a, a, a))
        for xi in random_disk(rng, 100, 50.0):
            eta, r = section.eval(complex(xi))
            errors.append(max(abs(eta), abs(r - np.sqrt(a))))
    return _max(errors), len(errors)


def _check_ellipsoid_global_section(rng):
    errors = []
    for params in _random_ellipsoids(rng, 20):
        section = ellipsoid_section(params)
        eta, r = section.eval(INFINITY)
        if not (np.isfinite(eta) and np.isfinite(r)):
            return np.inf, len(errors)
        at_pole = section.point_at(0j, CHART_SOUTH)
        errors.append(abs(implicit_residual_ellipsoid(params, at_pole)))
        # both charts describe the same surface near the south pole
        w = complex(random_log_annulus(rng, 1, 1e-2, 1e-1)[0])
        chart2 = section.point_at(w, CHART_SOUTH)
        chart1 = section.point_at(1.0 / w, CHART_NORTH)
        errors.append(_point_error(chart1, chart2) / np.sqrt(params.scale))
    return _max(errors), len(errors)


def _check_ellipsoid_normality(rng):
    families = [EllipsoidParams(1.0, 4.0, 9.0)] + _random_ellipsoids(rng, 1)
    errors = []
    for params in families:
        section = ellipsoid_section(params)
        for xi in random_disk(rng, 50, 3.0):
            errors.append(verify_normality(section, complex(xi), DEFAULT_STEP))
    return _max(errors), len(errors)


# --- torus --------------------------------------------------------------------------------


def _random_tori(rng, count) -> List[TorusParams]:
    tori = []
    for a, ratio in zip(rng.uniform(1.0, 10.0, count), rng.uniform(0.1, 0.9, count)):
        tori.append(TorusParams(a, a * ratio))
    return tori


def _spindle_torus() -> TorusParams:
    """Self-intersecting torus with centre radius 1 and tube radius 3."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GeometryWarning)
        return TorusParams(1.0, 3.0)


def _check_torus_on_surface(rng):
    errors = []
    for params in _random_tori(rng, 5) + [_spindle_torus()]:
        for branch in (BRANCH_PLUS, BRANCH_MINUS):
            section = torus_section(params.with_branch(branch))
            samples = random_log_annulus(rng, 500, 0.05, 20.0)
            for result in reconstruct(section, samples):
                errors.append(abs(implicit_residual_torus(params, result.point)) / params.scale**2)
    return _max(errors), len(errors)


def _check_torus_equators(rng):
    errors = []
    for params in _random_tori(rng, 5):
        for branch in (BRANCH_PLUS, BRANCH_MINUS):
            section = torus_section(params.with_branch(branch))
            expected_r = params.b + (params.a if branch == BRANCH_PLUS else -params.a)
            for angle in rng.uniform(0.0, 2.0 * np.pi, 100):
                eta, r = section.eval(complex(np.cos(angle), np.sin(angle)))
                errors.append(max(abs(eta), abs(r - expected_r)))
    return _max(errors), len(errors)


def _check_torus_double_cover(rng):
    errors = []
    for params in _random_tori(rng, 5):
        plus = torus_section(params.with_branch(BRANCH_PLUS))
        minus = torus_section(params.with_branch(BRANCH_MINUS))
        for xi in random_log_annulus(rng, 100, 0.05, 20.0):
            cp = ChartPoint.from_xi(complex(xi))
            x_plus = plus.point_at(cp.w, cp.chart)
            x_minus = minus.point_at(cp.w, cp.chart)
            if _point_error(x_plus, x_minus) == 0.0:
                return np.inf, len(errors)
            phase = complex(xi) / abs(xi)
            difference = (x_plus - x_minus) - Vector3(2.0 * params.a * phase, 0.0)
            direction = dir_from_xi(complex(xi))
            midpoint = (x_plus.as_vector() + x_minus.as_vector()) - 2.0 * params.b * direction
            errors.append(max(difference.norm(), midpoint.norm()) / (params.a + params.b))
    return _max(errors), len(errors)


def _check_torus_rotational_symmetry(rng):
    errors = []
    for params in _random_tori(rng, 3):
        for branch in (BRANCH_PLUS, BRANCH_MINUS):
            section = torus_section(params.with_branch(branch))
            xis = random_log_annulus(rng, 100, 0.05, 20.0)
            angles = rng.uniform(0.0, 2.0 * np.pi, len(xis))
            for xi, angle in zip(xis, angles):
                eta, r = section.eval(complex(xi))
                eta_rot, r_rot = section.eval(complex(xi) * np.exp(1j * angle))
                errors.append(max(abs(r_rot - r), abs(abs(eta_rot) - abs(eta))))
    return _max(errors), len(errors)


def _check_torus_normality(rng):
    errors = []
    params = TorusParams(3.0, 1.0)
    for branch in (BRANCH_PLUS, BRANCH_MINUS):
        section = torus_section(params.with_branch(branch))
        for xi in random_log_annulus(rng, 50, 0.2, 5.0):
            errors.append(verify_normality(section, complex(xi), DEFAULT_STEP))
    section = torus_section(_spindle_torus())
    errors.append(verify_normality(section, 1 + 0.3j, DEFAULT_STEP))
    return _max(errors), len(errors)


SUITES: Dict[str, List[Tuple[str, CheckFunction, float]]] = {
    "core": [
        ("unit_direction", _check_unit_direction, 1e-12),
        ("projection_round_trip", _check_projection_round_trip, 1e-10),
        ("line_parametrization", _check_line_parametrization, 1e-10),
        ("orthogonality", _check_orthogonality, 1e-12),
        ("inverse_correctness", _check_inverse_correctness, 1e-9),
        ("minimal_distance_identity", _check_minimal_distance, 1e-10),
        ("foot_minimality", _check_foot_minimality, 1e-10),
        ("chart_coherence", _check_chart_coherence, 1e-9),
    ],
    "spheres": [
        ("point_sphere_exactness", _check_point_sphere_exactness, 1e-10),
        ("round_sphere_on_surface", _check_round_sphere_on_surface, 1e-10),
        ("sphere_normality", _check_sphere_normality, 1e-6),
    ],
    "ellipsoid": [
        ("ellipsoid_on_surface", _check_ellipsoid_on_surface, 1e-8),
        ("ellipsoid_sphere_degeneration", _check_ellipsoid_sphere_degeneration, 1e-10),
        ("ellipsoid_global_section", _check_ellipsoid_global_section, 1e-8),
        ("ellipsoid_normality", _check_ellipsoid_normality, 1e-6),
    ],
    "torus": [
        ("torus_on_surface", _check_torus_on_surface, 1e-8),
        ("torus_equators", _check_torus_equators, 1e-12),
        ("torus_double_cover", _check_torus_double_cover, 1e-10),
        ("torus_rotational_symmetry", _check_torus_rotational_symmetry, 1e-10),
        ("torus_normality", _check_torus_normality, 1e-6),
    ],
}


def suite_names(name: str) -> List[str]:
    """Expand ``all`` and validate a suite name."""
    if name == SUITE_ALL:
        return list(SUITE_NAMES)
    if name not in SUITES:
        raise KeyError(f"Unknown suite {name!r}; expected one of {SUITE_NAMES + (SUITE_ALL,)}")
    return [name]


def run_suite(name: str, seed: int = 0, tol: Optional[float] = None) -> RunReport:
    """
    Run one property suite (or ``all``) with a seeded sampler.

    Args:
        name: core, spheres, ellipsoid, torus or all
        seed: Seed of the numpy Generator; each suite gets its own stream
        tol: Replace every check's tolerance

    Returns:
        RunReport with one CheckResult per check
    """
    report = RunReport(seed=seed)
    for suite in suite_names(name):
        suite_index = SUITE_NAMES.index(suite)
        for check_index, (check_name, check, default_tol) in enumerate(SUITES[suite]):
            rng = np.random.default_rng([seed, suite_index, check_index])
            tolerance = default_tol if tol is None else tol

            start = time.perf_counter()
            max_residual, samples = check(rng)
            wall_time = time.perf_counter() - start

            report.checks.append(
                CheckResult(
                    suite=suite,
                    name=check_name,
                    max_residual=float(max_residual),
                    tolerance=float(tolerance),
                    passed=bool(max_residual <= tolerance),
                    samples=int(samples),
                    wall_time=wall_time,
                )
            )
    return report

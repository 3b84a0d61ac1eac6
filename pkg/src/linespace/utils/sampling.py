"""Seeded random samples for the property suites."""

from typing import List

import numpy as np

from linespace.core import EuclideanPoint, ExtComplex, OrientedLine


def random_disk(rng: np.random.Generator, count: int, max_modulus: float) -> np.ndarray:
    """Complex numbers uniformly distributed (by area) in |xi| <= max_modulus."""
    radius = max_modulus * np.sqrt(rng.uniform(0.0, 1.0, count))
    angle = rng.uniform(0.0, 2.0 * np.pi, count)
    return radius * np.exp(1j * angle)


def random_log_annulus(
    rng: np.random.Generator, count: int, min_modulus: float, max_modulus: float
) -> np.ndarray:
    """Complex numbers with log-uniform modulus in [min_modulus, max_modulus]."""
    modulus = np.exp(rng.uniform(np.log(min_modulus), np.log(max_modulus), count))
    angle = rng.uniform(0.0, 2.0 * np.pi, count)
    return modulus * np.exp(1j * angle)


def random_points(rng: np.random.Generator, count: int, scale: float) -> List[EuclideanPoint]:
    """Points uniformly distributed in the cube [-scale, scale]^3."""
    xyz = rng.uniform(-scale, scale, (count, 3))
    return [EuclideanPoint.from_xyz(x, y, t) for x, y, t in xyz]


def random_lines(
    rng: np.random.Generator,
    count: int,
    min_modulus: float,
    max_modulus: float,
    eta_scale: float,
) -> List[OrientedLine]:
    """Chart-1 lines with log-uniform |xi| and eta uniform in the disk of radius eta_scale."""
    xis = random_log_annulus(rng, count, min_modulus, max_modulus)
    etas = random_disk(rng, count, eta_scale)
    return [OrientedLine(ExtComplex(complex(xi)), complex(eta)) for xi, eta in zip(xis, etas)]

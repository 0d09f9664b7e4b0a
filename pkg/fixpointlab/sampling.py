import enum
import math

import numpy as np

from .hermite import NodeSystem
from .poly import Polynomial, from_fixed_point_form


MIN_LEADING = 0.1
C_ANNULUS = (0.1, 2.0)


class SamplingStrategy(enum.Enum):
    coefficient = "coefficient"
    fixed_point = "fixed-point"


def sample_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    )


def unit_disk(rng: np.random.Generator, size: int) -> np.ndarray:
    radius = np.sqrt(rng.uniform(0.0, 1.0, size))
    angle = rng.uniform(0.0, 2 * math.pi, size)
    return radius * np.exp(1j * angle)


def separated_points(
    rng: np.random.Generator,
    n: int,
    min_separation: float,
) -> np.ndarray:
    points: list[complex] = []
    while len(points) < n:
        candidate = complex(unit_disk(rng, 1)[0])
        if all(abs(candidate - p) >= min_separation for p in points):
            points.append(candidate)
    return np.array(points, dtype=np.complex128)


def attractive_multipliers(rng: np.random.Generator, n: int) -> np.ndarray:
    return unit_disk(rng, n) * (1 - 1e-9)


def random_node_system(
    rng: np.random.Generator,
    n: int,
    min_separation: float = 1e-3,
) -> NodeSystem:
    points = separated_points(rng, n, min_separation)
    alphas = attractive_multipliers(rng, n)
    return NodeSystem.from_pairs(list(zip(points, alphas)))


def random_collinear_node_system(
    rng: np.random.Generator,
    n: int,
    min_separation: float = 1e-3,
    vertical: bool = False,
) -> NodeSystem:
    """
    Attractive nodes on a random chord of the unit disk, b + t d with
    |b|, |t| <= 1/2; the direction d is i when `vertical` is set.
    """
    offsets: list[float] = []
    while len(offsets) < n:
        t = float(rng.uniform(-0.5, 0.5))
        if all(abs(t - s) >= min_separation for s in offsets):
            offsets.append(t)
    t = np.array(offsets)

    b = 0.5 * complex(unit_disk(rng, 1)[0])
    if vertical:
        direction = 1j
    else:
        direction = complex(np.exp(1j * rng.uniform(0.0, math.pi)))
    points = b + t * direction

    alphas = attractive_multipliers(rng, n)
    return NodeSystem.from_pairs(list(zip(points, alphas)))


def random_polynomial(
    rng: np.random.Generator,
    degree: int,
    strategy: SamplingStrategy,
) -> Polynomial:
    if strategy == SamplingStrategy.coefficient:
        while True:
            coeffs = (
                rng.uniform(-1.0, 1.0, degree + 1) +
                1j * rng.uniform(-1.0, 1.0, degree + 1)
            )
            if abs(coeffs[-1]) >= MIN_LEADING:
                return Polynomial(coeffs)
    elif strategy == SamplingStrategy.fixed_point:
        low, high = C_ANNULUS
        c = rng.uniform(low, high) * np.exp(1j * rng.uniform(0, 2 * math.pi))
        return from_fixed_point_form(complex(c), unit_disk(rng, degree))
    else:
        raise ValueError(f"Unknown sampling strategy: {strategy}")

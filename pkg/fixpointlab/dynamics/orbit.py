import enum
import logging
import math
from collections import deque
from typing import NamedTuple, Optional

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import Field

from ..errors import DidNotConverge, FixpointError, NotAFixedPoint
from ..model import ComplexValue, Model
from ..poly import Polynomial, cauchy_bound, derivative, minus_identity

log = logging.getLogger(__name__)


MAX_STEPS = 10_000
CONV_TOL = 1e-10
ORBIT_STORAGE_CAP = 10_000
ORBIT_TAIL = 16

FIXED_POINT_RESIDUAL = 1e-9
SUPERATTRACTIVE = 1e-8
RATE_FLOOR = 1e-9
RATE_WINDOW = 5


class OrbitStatus(enum.Enum):
    converged = "converged"
    escaped = "escaped"
    exhausted = "exhausted"


class Orbit(Model):
    points: list[ComplexValue] = Field(
        description="x_0 ... x_K, or the last 16 iterates when truncated",
    )
    status: OrbitStatus
    limit: Optional[ComplexValue] = Field(
        default=None,
        description="last iterate of a converged orbit",
    )
    steps: int
    truncated: bool = False


class RateEstimate(Model):
    rate: float = Field(
        description="geometric mean of |x_{k+1} - theta| / |x_k - theta|",
    )
    multiplier_modulus: float = Field(description="|p'(theta)|")
    quadratic: bool = Field(
        description="superattractive point, convergence is not linear",
    )
    ratios_used: int


def default_escape_radius(p: Polynomial) -> float:
    """Beyond 2 (1 + Cauchy bound of p(z) - z) orbits only grow."""
    return 2 * (1 + cauchy_bound(minus_identity(p)))


def iterate(
    p: Polynomial,
    x0: complex,
    max_steps: int = MAX_STEPS,
    conv_tol: float = CONV_TOL,
    escape_radius: Optional[float] = None,
) -> Orbit:
    if max_steps < 1:
        raise ValueError(f"max_steps must be at least 1, got {max_steps}")
    if escape_radius is None:
        escape_radius = default_escape_radius(p)

    x = complex(x0)
    points: list[complex] | deque[complex] = [x]
    status = OrbitStatus.exhausted
    steps = 0
    truncated = False

    if abs(x) > escape_radius:
        status = OrbitStatus.escaped
    else:
        for steps in range(1, max_steps + 1):
            following = p(x)
            if not truncated and len(points) >= ORBIT_STORAGE_CAP:
                points = deque(points, maxlen=ORBIT_TAIL)
                truncated = True
            if not math.isfinite(abs(following)):
                status = OrbitStatus.escaped
                steps -= 1
                break
            points.append(following)
            if abs(following) > escape_radius:
                status = OrbitStatus.escaped
                break
            if abs(following - x) <= conv_tol:
                status = OrbitStatus.converged
                break
            x = following

    return Orbit(
        points=list(points),
        status=status,
        limit=points[-1] if status == OrbitStatus.converged else None,
        steps=steps,
        truncated=truncated,
    )


class OrbitEnds(NamedTuple):
    values: np.ndarray
    status: np.ndarray
    steps: np.ndarray


STATUS_CODES = {
    OrbitStatus.exhausted: 0,
    OrbitStatus.converged: 1,
    OrbitStatus.escaped: 2,
}


def iterate_many(
    p: Polynomial,
    seeds: np.ndarray,
    max_steps: int = MAX_STEPS,
    conv_tol: float = CONV_TOL,
    escape_radius: Optional[float] = None,
) -> OrbitEnds:
    if escape_radius is None:
        escape_radius = default_escape_radius(p)

    z = np.array(seeds, dtype=np.complex128).ravel()
    status = np.zeros(z.size, dtype=np.int8)
    steps = np.zeros(z.size, dtype=np.int64)

    escaped_code = STATUS_CODES[OrbitStatus.escaped]
    converged_code = STATUS_CODES[OrbitStatus.converged]

    status[np.abs(z) > escape_radius] = escaped_code
    active = np.flatnonzero(status == 0)
    for step in range(1, max_steps + 1):
        if active.size == 0:
            break
        current = z[active]
        with np.errstate(over="ignore", invalid="ignore"):
            following = P.polyval(current, p.coeffs)
        escaped = ~np.isfinite(following) | (np.abs(following) > escape_radius)
        converged = ~escaped & (np.abs(following - current) <= conv_tol)

        z[active] = np.where(np.isfinite(following), following, current)
        steps[active] = step
        status[active[escaped]] = escaped_code
        status[active[converged]] = converged_code
        active = active[~(escaped | converged)]

    return OrbitEnds(values=z, status=status, steps=steps)


def convergence_rate(
    p: Polynomial,
    theta: complex,
    x0: complex,
    steps: int = MAX_STEPS,
) -> RateEstimate:
    theta = complex(theta)
    magnitude = max(1.0, abs(theta))
    residual = abs(p(theta) - theta)
    if residual > FIXED_POINT_RESIDUAL * magnitude:
        raise NotAFixedPoint(
            f"{theta} is not a fixed point (residual {residual:.3e})"
        )

    modulus = abs(derivative(p)(theta))
    floor = RATE_FLOOR * magnitude

    errors = [abs(complex(x0) - theta)]
    if errors[0] <= floor:
        raise FixpointError(
            f"seed {x0} is within {floor:.1e} of {theta}, no rate to observe"
        )

    x = complex(x0)
    for _ in range(steps):
        x = p(x)
        errors.append(abs(x - theta))
        if errors[-1] <= floor or not math.isfinite(errors[-1]):
            break

    if not errors[-1] <= floor:
        raise DidNotConverge(
            f"orbit of {x0} did not reach {theta} within {steps} steps"
        )

    if modulus <= SUPERATTRACTIVE:
        return RateEstimate(
            rate=0.0,
            multiplier_modulus=modulus,
            quadratic=True,
            ratios_used=0,
        )

    ratios = [
        after / before
        for before, after in zip(errors[:-1], errors[1:])
        if after > floor
    ][-RATE_WINDOW:]
    if not ratios:
        # Converged in a single step from above the floor
        return RateEstimate(
            rate=errors[-1] / errors[-2],
            multiplier_modulus=modulus,
            quadratic=False,
            ratios_used=1,
        )

    rate = math.exp(sum(math.log(r) for r in ratios) / len(ratios))
    log.debug(
        "Observed rate %.6f against multiplier modulus %.6f",
        rate, modulus,
    )
    return RateEstimate(
        rate=rate,
        multiplier_modulus=modulus,
        quadratic=False,
        ratios_used=len(ratios),
    )

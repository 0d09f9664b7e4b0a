import logging
import math

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, Field, PositiveFloat, conint

from .errors import DegreeTooSmall, DegreeZero, NoConvergence
from .poly import Polynomial, cauchy_bound, derivative, minus_identity

log = logging.getLogger(__name__)


POLISH_STEPS = 5


class RootFindConfig(BaseModel):
    tol: PositiveFloat = Field(
        default=1e-12,
        description="relative residual target |p(r)| <= tol * sum |a_k||r|^k",
    )
    max_iter: conint(ge=1) = Field(  # type: ignore[valid-type]
        default=200,
        description="maximum number of simultaneous iteration sweeps",
    )
    seed: conint(ge=0, lt=2**64) = Field(  # type: ignore[valid-type]
        default=0,
        description="seed of the phase that rotates the initial guesses",
    )

    class Config:
        allow_mutation = False


def _initial_guesses(p: Polynomial, seed: int) -> np.ndarray:
    n = p.degree
    radius = cauchy_bound(p)
    phase = np.random.default_rng(seed).uniform(0.0, 2 * math.pi)
    angles = phase + 2 * math.pi * np.arange(n) / n
    return radius * np.exp(1j * angles)


def _converged(coeffs: np.ndarray, z: np.ndarray, tol: float) -> np.ndarray:
    residual = np.abs(P.polyval(z, coeffs))
    scale = P.polyval(np.abs(z), np.abs(coeffs))
    return residual <= tol * scale


def _aberth(p: Polynomial, cfg: RootFindConfig) -> np.ndarray:
    coeffs = p.coeffs
    dcoeffs = P.polyder(coeffs)
    z = _initial_guesses(p, cfg.seed)
    rng = np.random.default_rng([cfg.seed, p.degree])

    done = _converged(coeffs, z, cfg.tol)
    iteration = 0
    while not done.all():
        if iteration >= cfg.max_iter:
            worst = float(np.max(
                np.abs(P.polyval(z, coeffs)) /
                P.polyval(np.abs(z), np.abs(coeffs))
            ))
            raise NoConvergence(
                f"Aberth iteration did not converge in {cfg.max_iter} " +
                f"sweeps (worst relative residual {worst:.3e})"
            )
        iteration += 1

        with np.errstate(divide="ignore", invalid="ignore"):
            value = P.polyval(z, coeffs)
            slope = P.polyval(z, dcoeffs)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = (1.0 / diff).sum(axis=1)
            step = value / (slope - value * repulsion)

        # Coincident guesses or a vanishing denominator: nudge apart
        stuck = ~np.isfinite(step)
        if stuck.any():
            nudge = 1e-8 * (1.0 + np.abs(z[stuck]))
            step[stuck] = nudge * np.exp(
                2j * math.pi * rng.uniform(size=int(stuck.sum()))
            )

        z = np.where(done, z, z - step)
        done = _converged(coeffs, z, cfg.tol)

    log.debug(
        "Aberth iteration converged for degree %d in %d sweeps",
        p.degree, iteration,
    )
    return z


def polish_root(p: Polynomial, z0: complex) -> complex:
    """
    At most five Newton steps from z0; keeps the iterate with the smallest
    residual, so the result is never worse than z0.
    """
    dp = derivative(p)
    best = complex(z0)
    best_residual = abs(p(best))
    z = best
    for _ in range(POLISH_STEPS):
        if best_residual == 0:
            break
        slope = dp(z)
        if abs(slope) <= np.finfo(float).eps * max(p.scale(), 1.0):
            break
        z = z - p(z) / slope
        residual = abs(p(z))
        if not math.isfinite(residual):
            break
        if residual < best_residual:
            best, best_residual = z, residual
    return best


def sort_roots(roots) -> list[complex]:
    return sorted((complex(r) for r in roots), key=lambda r: (r.real, r.imag))


def find_roots(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
) -> list[complex]:
    if p.degree < 1:
        raise DegreeZero("a constant polynomial has no roots to find")

    coeffs = p.coeffs
    # Exact zero roots are split off; the relative residual test cannot
    # certify them for monomial-like factors.
    zeros = int(np.argmax(coeffs != 0))
    roots = [0j] * zeros
    reduced = Polynomial(coeffs[zeros:])

    if reduced.degree == 1:
        roots.append(complex(-reduced.coeffs[0] / reduced.coeffs[1]))
    elif reduced.degree > 1:
        roots.extend(polish_root(reduced, r) for r in _aberth(reduced, cfg))

    return sort_roots(roots)


def fixed_points(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
) -> list[complex]:
    if p.degree < 2:
        raise DegreeTooSmall(
            f"fixed point analysis needs degree >= 2, got {p.degree}"
        )
    return find_roots(minus_identity(p), cfg)


def min_separation(roots) -> float:
    points = np.asarray(roots, dtype=np.complex128)
    if points.size < 2:
        return math.inf
    diff = np.abs(points[:, None] - points[None, :])
    np.fill_diagonal(diff, np.inf)
    return float(diff.min())


def spread(points) -> float:
    points = np.asarray(points, dtype=np.complex128)
    if points.size < 2:
        return 0.0
    return float(np.abs(points[:, None] - points[None, :]).max())

import logging
from typing import Optional

import numpy as np
from pydantic import Field

from ..analysis.classify import EPS_CLASS, FixedPointRecord, classify
from ..errors import DegreeTooSmall
from ..model import ComplexValue, Model
from ..poly import Polynomial, derivative
from ..rootfind import RootFindConfig, find_roots
from .orbit import (
    CONV_TOL,
    MAX_STEPS,
    STATUS_CODES,
    OrbitStatus,
    iterate_many,
)

log = logging.getLogger(__name__)


MATCH_FACTOR = 10.0


class CoverageReport(Model):
    degree: int
    attractive: list[ComplexValue] = Field(
        description="attractive fixed points, in classification order",
    )
    critical_points: list[ComplexValue]
    critical_status: list[OrbitStatus]
    coverage: dict[int, list[int]] = Field(
        description="attractive index -> indices of critical points whose "
        "orbit converges to it",
    )
    all_covered: bool
    uncovered: list[int] = Field(
        description="attractive indices no critical orbit reached; "
        "candidates for capture by an attracting cycle",
    )
    attractive_count: int
    attractive_bound_satisfied: bool = Field(
        description="attractive_count <= degree - 1",
    )


def critical_points(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
) -> list[complex]:
    if p.degree < 2:
        raise DegreeTooSmall(
            f"critical points need degree >= 2, got {p.degree}"
        )
    return find_roots(derivative(p), cfg)


def match_radius(record: FixedPointRecord, conv_tol: float) -> float:
    """
    How far a converged orbit may stop from an attractive fixed point: a
    final step of conv_tol leaves at most conv_tol |m| / (1 - |m|) to go.
    """
    return MATCH_FACTOR * conv_tol / (1 - abs(record.multiplier))


def match_attractive(
    values: np.ndarray,
    attractive: list[FixedPointRecord],
    conv_tol: float,
) -> np.ndarray:
    labels = np.full(values.shape, -1, dtype=np.int64)
    if not attractive:
        return labels

    points = np.array([r.theta for r in attractive], dtype=np.complex128)
    radii = np.array([match_radius(r, conv_tol) for r in attractive])
    distance = np.abs(values[..., None] - points)
    nearest = np.argmin(distance, axis=-1)
    within = np.take_along_axis(distance, nearest[..., None], -1)[..., 0] \
        <= radii[nearest]
    labels[within] = nearest[within]
    return labels


def critical_orbit_coverage(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
    max_steps: int = MAX_STEPS,
    conv_tol: float = CONV_TOL,
    eps_class: float = EPS_CLASS,
    records: Optional[list[FixedPointRecord]] = None,
) -> CoverageReport:
    if records is None:
        records = classify(p, cfg, eps_class)
    attractive = [r for r in records if r.is_attractive]
    critical = critical_points(p, cfg)

    ends = iterate_many(p, np.array(critical), max_steps, conv_tol)
    converged = ends.status == STATUS_CODES[OrbitStatus.converged]
    labels = match_attractive(ends.values, attractive, conv_tol)
    labels[~converged] = -1

    coverage: dict[int, list[int]] = {i: [] for i in range(len(attractive))}
    for critical_index, label in enumerate(labels):
        if label >= 0:
            coverage[int(label)].append(critical_index)

    uncovered = [i for i, covering in coverage.items() if not covering]
    for i in uncovered:
        log.warning(
            "Attractive fixed point %s is not reached by any critical orbit " +
            "(possible capture by an attracting cycle)",
            attractive[i].theta,
        )

    status_by_code = {code: status for status, code in STATUS_CODES.items()}
    return CoverageReport(
        degree=p.degree,
        attractive=[r.theta for r in attractive],
        critical_points=critical,
        critical_status=[status_by_code[int(s)] for s in ends.status],
        coverage=coverage,
        all_covered=not uncovered,
        uncovered=uncovered,
        attractive_count=len(attractive),
        attractive_bound_satisfied=len(attractive) <= p.degree - 1,
    )

import enum
import math
from typing import Iterable, Optional

import numpy as np
from pydantic import Field, root_validator

from ..model import ComplexValue, Model
from ..poly import Polynomial, derivative
from ..rootfind import RootFindConfig, fixed_points, spread


EPS_CLASS = 1e-9
EPS_LINE = 1e-7


class FixedPointClass(enum.Enum):
    attractive = "attractive"
    neutral = "neutral"
    repelling = "repelling"


class FixedPointRecord(Model):
    theta: ComplexValue = Field(description="the fixed point")
    multiplier: ComplexValue = Field(description="p'(theta)")
    classification: FixedPointClass = Field(alias="class")
    residual: float = Field(description="|p(theta) - theta|")

    @property
    def is_attractive(self) -> bool:
        return self.classification == FixedPointClass.attractive


class Line(Model):
    point: ComplexValue
    direction: ComplexValue = Field(description="unit direction")


class BoundReport(Model):
    degree: int
    records: list[FixedPointRecord]
    max_collinear_attractive: int
    bound: int = Field(description="ceil(degree / 2)")
    satisfied: bool
    witness_line: Optional[Line] = None
    attractive_count: int
    attractive_bound_satisfied: bool = Field(
        description="attractive_count <= degree - 1",
    )

    @root_validator(skip_on_failure=True)
    def satisfied_matches_counts(cls, values):
        if values["satisfied"] != (
            values["max_collinear_attractive"] <= values["bound"]
        ):
            raise ValueError("satisfied must equal count <= bound")
        return values


def classify_multiplier(
    multiplier: complex,
    eps_class: float = EPS_CLASS,
) -> FixedPointClass:
    modulus = abs(multiplier)
    if modulus < 1 - eps_class:
        return FixedPointClass.attractive
    if modulus > 1 + eps_class:
        return FixedPointClass.repelling
    return FixedPointClass.neutral


def classify(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
    eps_class: float = EPS_CLASS,
) -> list[FixedPointRecord]:
    dp = derivative(p)
    records = []
    for theta in fixed_points(p, cfg):
        multiplier = dp(theta)
        records.append(FixedPointRecord(
            theta=theta,
            multiplier=multiplier,
            classification=classify_multiplier(multiplier, eps_class),
            residual=abs(p(theta) - theta),
        ))
    return records


def attractive_points(records: Iterable[FixedPointRecord]) -> list[complex]:
    return [record.theta for record in records if record.is_attractive]


def max_collinear_attractive(
    records: list[FixedPointRecord],
    eps_line: float = EPS_LINE,
) -> tuple[int, Optional[Line]]:
    """
    Largest number of attractive fixed points within eps_line * spread of
    one line, over all lines through two of them.
    """
    points = np.array(attractive_points(records), dtype=np.complex128)
    m = points.size
    if m <= 1:
        return m, None

    tolerance = eps_line * spread(points)
    best_count, best_line = 0, None
    for i in range(m):
        for j in range(i + 1, m):
            offset = points[j] - points[i]
            if offset == 0:
                continue
            direction = offset / abs(offset)
            rotated = (points - points[i]) * direction.conjugate()
            distance = np.abs(rotated.imag)
            count = int(np.count_nonzero(distance <= tolerance))
            if count > best_count:
                best_count = count
                best_line = Line(point=points[i], direction=direction)

    if best_line is None:
        # Every attractive point coincides
        return m, Line(point=points[0], direction=1)
    return best_count, best_line


def check_half_bound(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
    eps_class: float = EPS_CLASS,
    eps_line: float = EPS_LINE,
) -> BoundReport:
    records = classify(p, cfg, eps_class)
    count, line = max_collinear_attractive(records, eps_line)
    bound = math.ceil(p.degree / 2)
    attractive_count = len(attractive_points(records))
    return BoundReport(
        degree=p.degree,
        records=records,
        max_collinear_attractive=count,
        bound=bound,
        satisfied=count <= bound,
        witness_line=line,
        attractive_count=attractive_count,
        attractive_bound_satisfied=attractive_count <= p.degree - 1,
    )


def margin_of(records: Iterable[FixedPointRecord]) -> float:
    return max(record.multiplier.real for record in records)


def conjecture_margin(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
) -> float:
    dp = derivative(p)
    return max(dp(theta).real for theta in fixed_points(p, cfg))

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from typing import Iterable, Optional

from pydantic import BaseModel, Field, PositiveFloat, conint

from ..errors import ConvergenceError
from ..model import ComplexValue, Model
from ..poly import Polynomial
from ..rootfind import RootFindConfig
from ..sampling import SamplingStrategy, random_polynomial, sample_rng
from .classify import EPS_CLASS, EPS_LINE, BoundReport, check_half_bound

log = logging.getLogger(__name__)


MAX_KEPT_VIOLATIONS = 16


class SweepConfig(BaseModel):
    degree: conint(ge=2) = Field(  # type: ignore[valid-type]
        description="degree of the sampled polynomials",
    )
    samples: conint(ge=1) = Field(  # type: ignore[valid-type]
        description="number of polynomials to check",
    )
    seed: conint(ge=0, lt=2**64) = Field(  # type: ignore[valid-type]
        default=0,
        description="run seed, split per sample by a counter",
    )
    strategy: SamplingStrategy = SamplingStrategy.coefficient
    workers: conint(ge=1) = Field(  # type: ignore[valid-type]
        default_factory=lambda: os.cpu_count() or 1,
    )
    rootfind: RootFindConfig = Field(default_factory=RootFindConfig)
    eps_class: PositiveFloat = EPS_CLASS
    eps_line: PositiveFloat = EPS_LINE


class Violation(Model):
    index: int
    coeffs: list[ComplexValue]
    report: BoundReport


class SweepReport(Model):
    checked: int = 0
    skipped: int = 0
    violations: int = Field(
        default=0,
        description="instances with more than ceil(n/2) collinear attractors",
    )
    attractive_violations: int = Field(
        default=0,
        description="instances with more than n - 1 attractive fixed points",
    )
    tight: int = Field(
        default=0,
        description="instances meeting the collinear bound with equality",
    )
    seed: Optional[int] = Field(
        default=None,
        description="run seed of a random stream, None for a corpus",
    )
    degree: Optional[int] = None
    violating_instances: list[Violation] = Field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return self.violations == 0 and self.attractive_violations == 0


def _merge(left: SweepReport, right: SweepReport) -> SweepReport:
    violating = sorted(
        left.violating_instances + right.violating_instances,
        key=lambda v: v.index,
    )
    return SweepReport(
        checked=left.checked + right.checked,
        skipped=left.skipped + right.skipped,
        violations=left.violations + right.violations,
        attractive_violations=(
            left.attractive_violations + right.attractive_violations
        ),
        tight=left.tight + right.tight,
        violating_instances=violating[:MAX_KEPT_VIOLATIONS],
    )


def _record(
    report: SweepReport,
    index: int,
    p: Polynomial,
    rootfind: RootFindConfig,
    eps_class: float,
    eps_line: float,
):
    try:
        bound = check_half_bound(p, rootfind, eps_class, eps_line)
    except ConvergenceError as e:
        log.warning("Instance %d skipped: %s", index, e)
        report.skipped += 1
        return

    report.checked += 1
    if bound.max_collinear_attractive == bound.bound:
        report.tight += 1
    if not bound.satisfied:
        report.violations += 1
    if not bound.attractive_bound_satisfied:
        report.attractive_violations += 1
    if (
        (not bound.satisfied or not bound.attractive_bound_satisfied) and
        len(report.violating_instances) < MAX_KEPT_VIOLATIONS
    ):
        report.violating_instances.append(Violation(
            index=index,
            coeffs=p.coeffs.tolist(),
            report=bound,
        ))


def sweep_corpus(
    polynomials: Iterable[Polynomial],
    rootfind: RootFindConfig = RootFindConfig(),
    eps_class: float = EPS_CLASS,
    eps_line: float = EPS_LINE,
) -> SweepReport:
    report = SweepReport()
    for index, p in enumerate(polynomials):
        _record(report, index, p, rootfind, eps_class, eps_line)
    return report


def _sweep_block(cfg: SweepConfig, start: int, stop: int) -> SweepReport:
    report = SweepReport()
    for index in range(start, stop):
        p = random_polynomial(
            sample_rng(cfg.seed, index), cfg.degree, cfg.strategy
        )
        _record(report, index, p, cfg.rootfind, cfg.eps_class, cfg.eps_line)
    return report


def sweep_half_bound(cfg: SweepConfig) -> SweepReport:
    step = max(1, -(-cfg.samples // max(10, 4 * cfg.workers)))
    blocks = [
        (start, min(start + step, cfg.samples))
        for start in range(0, cfg.samples, step)
    ]

    if cfg.workers == 1:
        partials = [_sweep_block(cfg, *block) for block in blocks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            partials = list(executor.map(
                _sweep_block,
                [cfg] * len(blocks),
                *zip(*blocks),
            ))

    report = reduce(_merge, partials, SweepReport())
    report.seed = cfg.seed
    report.degree = cfg.degree
    log.info(
        "Bound sweep: %d checked, %d skipped, %d violations (degree %d)",
        report.checked, report.skipped, report.violations, cfg.degree,
    )
    return report

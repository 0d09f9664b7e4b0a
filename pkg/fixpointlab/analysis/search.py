import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field, PositiveFloat, conint

from ..errors import ConvergenceError
from ..model import ComplexValue, Model
from ..poly import derivative
from ..rootfind import RootFindConfig, fixed_points, min_separation, spread
from ..sampling import SamplingStrategy, random_polynomial, sample_rng

log = logging.getLogger(__name__)


HISTOGRAM_BINS = 64
HISTOGRAM_RANGE = (0.0, 4.0)
MAX_KEPT_VIOLATIONS = 16
VIOLATION_THRESHOLD = 1e-6


class SearchConfig(BaseModel):
    degree: conint(ge=2) = Field(  # type: ignore[valid-type]
        description="degree of the sampled polynomials",
    )
    samples: conint(ge=1) = Field(  # type: ignore[valid-type]
        description="number of polynomials to probe",
    )
    seed: conint(ge=0, lt=2**64) = Field(  # type: ignore[valid-type]
        default=0,
        description="run seed, split per sample by a counter",
    )
    strategy: SamplingStrategy = Field(
        default=SamplingStrategy.coefficient,
        description="how random polynomials are drawn",
    )
    workers: conint(ge=1) = Field(  # type: ignore[valid-type]
        default_factory=lambda: os.cpu_count() or 1,
        description="number of worker processes",
    )
    rootfind: RootFindConfig = Field(default_factory=RootFindConfig)
    cluster_separation: PositiveFloat = Field(
        default=1e-8,
        description="resample when fixed points are closer than this * spread",
    )
    max_resample: conint(ge=1) = Field(  # type: ignore[valid-type]
        default=32,
        description="resampling attempts per sample before it is skipped",
    )
    violation_threshold: PositiveFloat = Field(
        default=VIOLATION_THRESHOLD,
        description="a margin below 1 - threshold counts as a violation",
    )
    max_skip_rate: float = Field(
        default=0.01,
        ge=0.0,
        le=1.0,
        description="largest tolerated share of skipped samples",
    )


class Instance(Model):
    index: int = Field(description="sample index within the run")
    margin: float
    coeffs: list[ComplexValue]


class SearchReport(Model):
    min_margin: Optional[float] = None
    argmin_coeffs: Optional[list[ComplexValue]] = None
    histogram: list[int] = Field(
        default_factory=lambda: [0] * HISTOGRAM_BINS,
        description="64 bins over [0, 4], margins outside clamped",
    )
    violations: int = 0
    skipped: int = 0
    samples: int
    seed: int
    strategy: SamplingStrategy
    degree: int
    skip_rate: float = 0.0
    skip_rate_exceeded: bool = False
    violating_instances: list[Instance] = Field(default_factory=list)


class _Partial(BaseModel):
    """Mergeable summary of a contiguous block of samples."""

    argmin: Optional[Instance] = None
    histogram: list[int] = Field(
        default_factory=lambda: [0] * HISTOGRAM_BINS,
    )
    violations: int = 0
    skipped: int = 0
    violating: list[Instance] = Field(default_factory=list)


def histogram_bin(margin: float) -> int:
    low, high = HISTOGRAM_RANGE
    position = math.floor((margin - low) / (high - low) * HISTOGRAM_BINS)
    return min(max(position, 0), HISTOGRAM_BINS - 1)


def _merge(left: _Partial, right: _Partial) -> _Partial:
    candidates = [i for i in (left.argmin, right.argmin) if i is not None]
    argmin = min(
        candidates, key=lambda i: (i.margin, i.index), default=None
    )
    violating = sorted(left.violating + right.violating, key=lambda i: i.index)
    return _Partial(
        argmin=argmin,
        histogram=[a + b for a, b in zip(left.histogram, right.histogram)],
        violations=left.violations + right.violations,
        skipped=left.skipped + right.skipped,
        violating=violating[:MAX_KEPT_VIOLATIONS],
    )


def probe(cfg: SearchConfig, index: int) -> Optional[Instance]:
    # None marks a skip: a failed root find, or clustered fixed points on
    # every resampled candidate
    rng = sample_rng(cfg.seed, index)
    for attempt in range(cfg.max_resample):
        p = random_polynomial(rng, cfg.degree, cfg.strategy)
        try:
            points = fixed_points(p, cfg.rootfind)
        except ConvergenceError as e:
            log.warning("Sample %d skipped: %s", index, e)
            return None

        if min_separation(points) <= cfg.cluster_separation * spread(points):
            log.debug(
                "Sample %d attempt %d: clustered fixed points, resampling",
                index, attempt,
            )
            continue

        dp = derivative(p)
        margin = max(dp(theta).real for theta in points)
        return Instance(
            index=index,
            margin=margin,
            coeffs=p.coeffs.tolist(),
        )
    return None


def _search_block(cfg: SearchConfig, start: int, stop: int) -> _Partial:
    partial = _Partial()
    threshold = 1 - cfg.violation_threshold
    for index in range(start, stop):
        instance = probe(cfg, index)
        if instance is None:
            partial.skipped += 1
            continue

        partial.histogram[histogram_bin(instance.margin)] += 1
        if (
            partial.argmin is None or
            instance.margin < partial.argmin.margin
        ):
            partial.argmin = instance
        if instance.margin < threshold:
            partial.violations += 1
            if len(partial.violating) < MAX_KEPT_VIOLATIONS:
                partial.violating.append(instance)
    return partial


def _blocks(samples: int, count: int) -> list[tuple[int, int]]:
    edges = np.linspace(0, samples, count + 1).round().astype(int)
    return [
        (int(start), int(stop))
        for start, stop in zip(edges[:-1], edges[1:])
        if stop > start
    ]


def conjecture_search(cfg: SearchConfig) -> SearchReport:
    # At least ten blocks give one progress line per 10% of samples
    blocks = _blocks(cfg.samples, max(10, 4 * cfg.workers))
    partials: list[_Partial] = []
    done = 0

    def progress(block: tuple[int, int]):
        nonlocal done
        done += block[1] - block[0]
        log.info(
            "Conjecture search: %d/%d samples (degree %d)",
            done, cfg.samples, cfg.degree,
        )

    if cfg.workers == 1:
        for block in blocks:
            partials.append(_search_block(cfg, *block))
            progress(block)
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            futures = [
                executor.submit(_search_block, cfg, *block)
                for block in blocks
            ]
            for block, future in zip(blocks, futures):
                partials.append(future.result())
                progress(block)

    total = reduce(_merge, partials, _Partial())
    skip_rate = total.skipped / cfg.samples
    if total.skipped:
        log.warning(
            "Conjecture search skipped %d of %d samples",
            total.skipped, cfg.samples,
        )

    return SearchReport(
        min_margin=None if total.argmin is None else total.argmin.margin,
        argmin_coeffs=None if total.argmin is None else total.argmin.coeffs,
        histogram=total.histogram,
        violations=total.violations,
        skipped=total.skipped,
        samples=cfg.samples,
        seed=cfg.seed,
        strategy=cfg.strategy,
        degree=cfg.degree,
        skip_rate=skip_rate,
        skip_rate_exceeded=skip_rate > cfg.max_skip_rate,
        violating_instances=total.violating,
    )

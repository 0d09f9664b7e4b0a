import logging
from pathlib import Path
from typing import Optional

from ..analysis import SearchConfig, conjecture_search
from ..rootfind import RootFindConfig
from ..sampling import SamplingStrategy
from .base import BaseCommand, ExitCode

log = logging.getLogger(__name__)


class ConjectureCommand(BaseCommand):
    config: SearchConfig

    def __init__(
        self,
        output_path: Optional[Path],
        rootfind: RootFindConfig,
        degree: int,
        samples: int,
        seed: Optional[int],
        strategy: SamplingStrategy,
        workers: Optional[int],
    ):
        super().__init__(output_path)

        self.config = SearchConfig(
            degree=degree,
            samples=samples,
            seed=self.resolve_seed(seed),
            strategy=strategy,
            workers=self.resolve_workers(workers),
            rootfind=rootfind,
        )

    def execute(self) -> ExitCode:
        report = conjecture_search(self.config)
        self.write(report)

        self.summary["Samples"] = report.samples
        self.summary["Minimum margin"] = report.min_margin
        self.summary["Violations"] = report.violations
        self.summary["Skipped"] = report.skipped

        if report.violations:
            for instance in report.violating_instances:
                self.violation(
                    f"sample {instance.index} has every multiplier " +
                    "with real part below one",
                    instance,
                )
            return ExitCode.violation

        if report.skip_rate_exceeded:
            log.error(
                "Root finding failed on %.2f%% of samples, " +
                "above the tolerated %.2f%%",
                100 * report.skip_rate,
                100 * self.config.max_skip_rate,
            )
            return ExitCode.no_convergence

        return ExitCode.ok

import logging
from pathlib import Path
from typing import Optional

from ..analysis import SweepConfig, SweepReport, sweep_corpus, \
    sweep_half_bound
from ..rootfind import RootFindConfig
from ..sampling import SamplingStrategy
from .base import ExitCode, InputCommand

log = logging.getLogger(__name__)


class VerifyBoundCommand(InputCommand):
    rootfind: RootFindConfig
    eps_class: float
    eps_line: float
    degree: Optional[int]
    samples: int
    seed: Optional[int]
    strategy: SamplingStrategy
    workers: Optional[int]

    def __init__(
        self,
        input_path: Optional[Path],
        inline: Optional[str],
        output_path: Optional[Path],
        rootfind: RootFindConfig,
        eps_class: float,
        eps_line: float,
        degree: Optional[int],
        samples: int,
        seed: Optional[int],
        strategy: SamplingStrategy,
        workers: Optional[int],
    ):
        self.rootfind = rootfind
        self.eps_class = eps_class
        self.eps_line = eps_line
        self.degree = degree
        self.samples = samples
        self.seed = seed
        self.strategy = strategy
        self.workers = workers

        super().__init__(input_path, inline, output_path)

    def sweep(self) -> SweepReport:
        if self.degree is None:
            return sweep_corpus(
                self.polynomials(),
                self.rootfind,
                self.eps_class,
                self.eps_line,
            )

        return sweep_half_bound(SweepConfig(
            degree=self.degree,
            samples=self.samples,
            seed=self.resolve_seed(self.seed),
            strategy=self.strategy,
            workers=self.resolve_workers(self.workers),
            rootfind=self.rootfind,
            eps_class=self.eps_class,
            eps_line=self.eps_line,
        ))

    def execute(self) -> ExitCode:
        report = self.sweep()
        self.write(report)

        self.summary["Checked"] = report.checked
        self.summary["Skipped"] = report.skipped
        self.summary["Tight"] = report.tight
        self.summary["Violations"] = report.violations
        self.summary["Attractive count violations"] = \
            report.attractive_violations

        if report.satisfied:
            return ExitCode.ok

        for violation in report.violating_instances:
            self.violation(
                f"instance {violation.index} breaks the collinear " +
                "or attractive count bound",
                violation,
            )
        return ExitCode.violation

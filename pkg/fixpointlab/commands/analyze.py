import logging
from pathlib import Path
from typing import Optional

from pydantic import Field

from ..analysis import VIOLATION_THRESHOLD, BoundReport, check_half_bound, \
    margin_of
from ..model import ComplexValue, Model
from ..rootfind import RootFindConfig
from .base import ExitCode, InputCommand

log = logging.getLogger(__name__)


class Analysis(Model):
    coeffs: list[ComplexValue]
    degree: int
    bound: BoundReport
    conjecture_margin: float = Field(
        description="max over fixed points of Re p'(theta)",
    )
    conjecture_satisfied: bool = Field(
        description="conjecture_margin >= 1 - 1e-6",
    )

    @property
    def violated(self) -> bool:
        return not (
            self.bound.satisfied and
            self.bound.attractive_bound_satisfied and
            self.conjecture_satisfied
        )


class AnalyzeCommand(InputCommand):
    rootfind: RootFindConfig
    eps_class: float
    eps_line: float

    def __init__(
        self,
        input_path: Optional[Path],
        inline: Optional[str],
        output_path: Optional[Path],
        rootfind: RootFindConfig,
        eps_class: float,
        eps_line: float,
    ):
        self.rootfind = rootfind
        self.eps_class = eps_class
        self.eps_line = eps_line

        super().__init__(input_path, inline, output_path)

    def execute(self) -> ExitCode:
        code = ExitCode.ok
        analyzed = 0
        violations = 0
        for p in self.polynomials():
            bound = check_half_bound(
                p, self.rootfind, self.eps_class, self.eps_line
            )
            margin = margin_of(bound.records)
            analysis = Analysis(
                coeffs=p.coeffs.tolist(),
                degree=p.degree,
                bound=bound,
                conjecture_margin=margin,
                conjecture_satisfied=margin >= 1 - VIOLATION_THRESHOLD,
            )
            self.write(analysis)
            analyzed += 1

            if analysis.violated:
                violations += 1
                code = ExitCode.violation
                self.violation(
                    f"polynomial {analyzed - 1} breaks a proven bound " +
                    "or the conjecture",
                    analysis,
                )

        self.summary["Analyzed"] = analyzed
        self.summary["Violations"] = violations
        return code

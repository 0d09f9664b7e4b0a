from pathlib import Path
from typing import Optional

from ..dynamics import critical_orbit_coverage
from ..rootfind import RootFindConfig
from .base import ExitCode, InputCommand


class CoverageCommand(InputCommand):
    rootfind: RootFindConfig
    max_steps: int
    conv_tol: float
    eps_class: float

    def __init__(
        self,
        input_path: Optional[Path],
        inline: Optional[str],
        output_path: Optional[Path],
        rootfind: RootFindConfig,
        max_steps: int,
        conv_tol: float,
        eps_class: float,
    ):
        self.rootfind = rootfind
        self.max_steps = max_steps
        self.conv_tol = conv_tol
        self.eps_class = eps_class

        super().__init__(input_path, inline, output_path)

    def execute(self) -> ExitCode:
        code = ExitCode.ok
        checked = 0
        uncovered = 0
        for index, p in enumerate(self.polynomials()):
            report = critical_orbit_coverage(
                p,
                self.rootfind,
                self.max_steps,
                self.conv_tol,
                self.eps_class,
            )
            self.write(report)
            checked += 1
            uncovered += len(report.uncovered)

            if not report.attractive_bound_satisfied:
                code = ExitCode.violation
                self.violation(
                    f"polynomial {index} has more than degree - 1 " +
                    "attractive fixed points",
                    report,
                )

        self.summary["Checked"] = checked
        self.summary["Uncovered attractive points"] = uncovered
        return code

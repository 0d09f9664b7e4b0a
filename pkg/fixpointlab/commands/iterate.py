from pathlib import Path
from typing import Optional

from ..dynamics import iterate
from .base import ExitCode, InputCommand


class IterateCommand(InputCommand):
    x0: complex
    max_steps: int
    conv_tol: float
    escape_radius: Optional[float]

    def __init__(
        self,
        input_path: Optional[Path],
        inline: Optional[str],
        output_path: Optional[Path],
        x0: complex,
        max_steps: int,
        conv_tol: float,
        escape_radius: Optional[float],
    ):
        self.x0 = x0
        self.max_steps = max_steps
        self.conv_tol = conv_tol
        self.escape_radius = escape_radius

        super().__init__(input_path, inline, output_path)

    def execute(self) -> ExitCode:
        for p in self.polynomials():
            orbit = iterate(
                p,
                self.x0,
                self.max_steps,
                self.conv_tol,
                self.escape_radius,
            )
            self.write(orbit)
            self.summary.setdefault(orbit.status.value.capitalize(), 0)
            self.summary[orbit.status.value.capitalize()] += 1
        return ExitCode.ok

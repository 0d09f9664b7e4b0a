from pathlib import Path
from typing import Optional

from ..poly import PolynomialModel, exemplar_family
from .base import BaseCommand, ExitCode


class ExemplarCommand(BaseCommand):
    n: int

    def __init__(self, output_path: Optional[Path], n: int):
        self.n = n

        super().__init__(output_path)

    def execute(self) -> ExitCode:
        self.write(PolynomialModel.from_polynomial(exemplar_family(self.n)))
        self.summary["Degree"] = self.n + 1
        return ExitCode.ok

from pathlib import Path
from typing import Optional

from ..analysis import CubicDecomposition, identity_check
from ..rootfind import RootFindConfig
from .base import ExitCode, InputCommand


class IdentityCommand(InputCommand):
    rootfind: RootFindConfig

    def __init__(
        self,
        input_path: Optional[Path],
        inline: Optional[str],
        output_path: Optional[Path],
        rootfind: RootFindConfig,
    ):
        self.rootfind = rootfind

        super().__init__(input_path, inline, output_path)

    def execute(self) -> ExitCode:
        code = ExitCode.ok
        checked = {"Quadratic": 0, "Cubic": 0}
        failed = 0
        for index, p in enumerate(self.polynomials()):
            result = identity_check(p, self.rootfind)
            self.write(result)
            checked[
                "Cubic" if isinstance(result, CubicDecomposition)
                else "Quadratic"
            ] += 1

            if not result.ok:
                failed += 1
                code = ExitCode.violation
                self.violation(
                    f"polynomial {index} fails its multiplier identity",
                    result,
                )

        self.summary.update(checked)
        self.summary["Failed"] = failed
        return code

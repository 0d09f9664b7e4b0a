import logging
from pathlib import Path
from typing import Optional

from ..hermite import NodeSystem, synthesize
from .base import ExitCode, InputCommand

log = logging.getLogger(__name__)


VALUE_TOLERANCE = 1e-9
DERIVATIVE_TOLERANCE = 1e-8


class SynthesizeCommand(InputCommand):

    def __init__(
        self,
        input_path: Optional[Path],
        inline: Optional[str],
        output_path: Optional[Path],
    ):
        super().__init__(input_path, inline, output_path)

    def execute(self) -> ExitCode:
        synthesized = 0
        worst = (0.0, 0.0)
        for data in self.documents():
            result = synthesize(NodeSystem.parse_obj(data))
            self.write(result)
            synthesized += 1

            if (
                result.value_residual > VALUE_TOLERANCE or
                result.derivative_residual > DERIVATIVE_TOLERANCE
            ):
                log.warning(
                    "Node system %d interpolated with large residuals " +
                    "(%.2e, %.2e)",
                    synthesized - 1,
                    result.value_residual,
                    result.derivative_residual,
                )
            worst = (
                max(worst[0], result.value_residual),
                max(worst[1], result.derivative_residual),
            )

        self.summary["Synthesized"] = synthesized
        self.summary["Largest value residual"] = worst[0]
        self.summary["Largest derivative residual"] = worst[1]
        return ExitCode.ok

from pydantic import BaseModel

from fixpointlab.args import (
    AnalyzeArgs,
    SynthesizeArgs,
    VerifyBoundArgs,
    ConjectureArgs,
    IdentityArgs,
    IterateArgs,
    CoverageArgs,
    BasinsArgs,
    ExemplarArgs,
)
from ..dynamics import Window
from .base import Command, BaseCommand, InputCommand, ExitCode
from .analyze import AnalyzeCommand
from .synthesize import SynthesizeCommand
from .verify_bound import VerifyBoundCommand
from .conjecture import ConjectureCommand
from .identity import IdentityCommand
from .iterate import IterateCommand
from .coverage import CoverageCommand
from .basins import BasinsCommand
from .exemplar import ExemplarCommand


def select_command(name: str, args: BaseModel) -> Command:
    if isinstance(args, AnalyzeArgs):
        return AnalyzeCommand(
            args.input,
            args.inline,
            args.output,
            args.rootfind(),
            args.eps_class,
            args.eps_line,
        )
    elif isinstance(args, SynthesizeArgs):
        return SynthesizeCommand(
            args.input,
            args.inline,
            args.output,
        )
    elif isinstance(args, VerifyBoundArgs):
        return VerifyBoundCommand(
            args.input,
            args.inline,
            args.output,
            args.rootfind(),
            args.eps_class,
            args.eps_line,
            args.degree,
            args.samples,
            args.seed,
            args.sampling_strategy(),
            args.workers,
        )
    elif isinstance(args, ConjectureArgs):
        return ConjectureCommand(
            args.output,
            args.rootfind(),
            args.degree,
            args.samples,
            args.seed,
            args.sampling_strategy(),
            args.workers,
        )
    elif isinstance(args, IdentityArgs):
        return IdentityCommand(
            args.input,
            args.inline,
            args.output,
            args.rootfind(),
        )
    elif isinstance(args, IterateArgs):
        return IterateCommand(
            args.input,
            args.inline,
            args.output,
            complex(args.x0_re, args.x0_im),
            args.max_steps,
            args.conv_tol,
            args.escape_radius,
        )
    elif isinstance(args, CoverageArgs):
        return CoverageCommand(
            args.input,
            args.inline,
            args.output,
            args.rootfind(),
            args.max_steps,
            args.conv_tol,
            args.eps_class,
        )
    elif isinstance(args, BasinsArgs):
        return BasinsCommand(
            args.input,
            args.inline,
            args.output,
            args.sidecar,
            args.rootfind(),
            args.eps_class,
            Window(
                center=complex(args.center_re, args.center_im),
                half_width=args.half_width,
            ),
            args.width,
            args.height,
            args.max_steps,
            args.conv_tol,
            args.workers,
        )
    elif isinstance(args, ExemplarArgs):
        return ExemplarCommand(
            args.output,
            args.n,
        )
    else:
        raise ValueError(f"Unknown command: {name}")


__all__ = [
    "Command",
    "BaseCommand",
    "InputCommand",
    "ExitCode",
    "select_command",
    "AnalyzeCommand",
    "SynthesizeCommand",
    "VerifyBoundCommand",
    "ConjectureCommand",
    "IdentityCommand",
    "IterateCommand",
    "CoverageCommand",
    "BasinsCommand",
    "ExemplarCommand",
]

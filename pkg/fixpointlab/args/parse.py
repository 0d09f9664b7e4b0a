from typing import Optional

from pydantic_argparse.argparse.parser import ArgumentParser

from .model import CliArgs

from fixpointlab._version import __version__


def parse_arguments(
    program_args: Optional[list[str]] = None,
) -> tuple[ArgumentParser, CliArgs]:
    parser = ArgumentParser(
        model=CliArgs,
        prog="fixpointlab",
        description=(
            "fixpointlab - " +
            "fixed points and multipliers of complex polynomials: " +
            "Hermite synthesis, collinear bound checks " +
            "and conjecture searches"
        ),
        version=__version__,
    )
    args: CliArgs = parser.parse_typed_args(args=program_args)

    return parser, args

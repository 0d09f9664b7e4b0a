import sys
import logging
from typing import Optional

from rich.console import Console

from .args import parse_arguments
from .commands import Command, ExitCode, select_command
from .errors import ConvergenceError

root_log = logging.getLogger()
log = logging.getLogger(__name__)


def setup_log() -> logging.Handler:
    root_log.setLevel(logging.DEBUG)

    root_stderr_handler = logging.StreamHandler(stream=sys.stderr)
    root_stderr_handler.setLevel(logging.INFO)
    basic_formatter = logging.Formatter(
        "%(asctime)s\t-\t%(name)s\t-\t%(levelname)s\t-\t%(message)s"
    )
    root_stderr_handler.setFormatter(basic_formatter)
    root_log.addHandler(root_stderr_handler)
    return root_stderr_handler


def _exit_code(error: SystemExit) -> int:
    if error.code is None:
        return ExitCode.ok
    if isinstance(error.code, int):
        return error.code
    return ExitCode.invalid


def run(argv: Optional[list[str]] = None) -> int:
    # Configure logging
    root_log_handler = setup_log()
    try:
        return _run(argv, root_log_handler)
    finally:
        root_log.removeHandler(root_log_handler)


def _run(argv: Optional[list[str]], root_log_handler: logging.Handler) -> int:
    try:
        parser, args = parse_arguments(argv)
    except SystemExit as e:
        # Usage errors and --help/--version exit from inside the parser
        return _exit_code(e)

    # Apply logging related arguments
    if args.verbose:
        root_log_handler.setLevel(logging.DEBUG)

    selected = args.command()
    if selected is None:
        parser.print_usage(sys.stderr)
        print("fixpointlab: error: a subcommand is required", file=sys.stderr)
        return ExitCode.invalid
    name, options = selected

    command: Optional[Command] = None
    try:
        command = select_command(name, options)
        with command:
            return command.execute()
    except ConvergenceError as e:
        log.error("%s: %s", type(e).__name__, e)
        return ExitCode.no_convergence
    except (ValueError, OSError) as e:
        # Library errors, pydantic validation and malformed JSON
        log.error("%s: %s", type(e).__name__, e)
        return ExitCode.invalid
    finally:
        # Print the summary of the run
        if command is not None:
            console = Console(file=sys.stderr)
            console.print(command.report())


def main():
    sys.exit(run(sys.argv[1:]))

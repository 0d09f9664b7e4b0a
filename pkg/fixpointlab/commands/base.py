import enum
import io
import logging
import os
import secrets
import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Iterator, Optional, TextIO

import jsonstream
from rich.console import Console
from rich.panel import Panel

from ..errors import FixpointError
from ..model import Model
from ..poly import Polynomial, PolynomialModel

log = logging.getLogger(__name__)


class ExitCode(enum.IntEnum):
    ok = 0
    invalid = 2
    no_convergence = 3
    violation = 4


class Command(ABC):

    def __enter__(self):
        self.open()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    @abstractmethod
    def open(self):
        pass

    @abstractmethod
    def close(self):
        pass

    @abstractmethod
    def execute(self) -> ExitCode:
        pass

    @abstractmethod
    def report(self) -> Any:
        pass


class BaseCommand(Command):
    output_path: Optional[Path]
    output: Optional[TextIO]
    console: Console
    summary: dict[str, Any]

    def __init__(
        self,
        output_path: Optional[Path],
        console: Optional[Console] = None,
    ):
        self.output_path = output_path
        self.output = None
        self.console = console or Console(file=sys.stderr)
        self.summary = {}

        super().__init__()

    def open(self):
        if self.output_path is None:
            self.output = sys.stdout
        else:
            self.output = self.output_path.open("w")

    def close(self):
        if self.output is not None and self.output_path is not None:
            self.output.close()
        self.output = None

    def write(self, document: Model):
        assert self.output is not None, "command output is not open"
        self.output.write(document.dump())
        self.output.write("\n")
        self.output.flush()

    def violation(self, title: str, document: Model):
        log.error("%s", title)
        self.console.print(Panel(
            document.dump(),
            title=f"VIOLATION: {title}",
            border_style="bold red",
            style="red",
        ))

    def resolve_seed(self, seed: Optional[int]) -> int:
        if seed is None:
            seed = secrets.randbits(63)
            log.info("Generated seed %d", seed)
            self.console.print(f"[bold]Generated seed:[/bold] {seed}")
        self.summary["Seed"] = seed
        return seed

    @staticmethod
    def resolve_workers(workers: Optional[int]) -> int:
        if workers is not None:
            return workers
        return os.cpu_count() or 1

    def report(self) -> dict[str, Any]:
        return self.summary


class InputCommand(BaseCommand):
    input_path: Optional[Path]
    inline: Optional[str]

    def __init__(
        self,
        input_path: Optional[Path],
        inline: Optional[str],
        output_path: Optional[Path],
        console: Optional[Console] = None,
    ):
        if input_path is not None and inline is not None:
            raise FixpointError("use either --input or --inline, not both")

        self.input_path = input_path
        self.inline = inline

        super().__init__(output_path, console)

    def _open_input(self) -> TextIO:
        if self.inline is not None:
            return io.StringIO(self.inline)
        if self.input_path is None or str(self.input_path) == "-":
            return sys.stdin
        return self.input_path.open()

    def documents(self) -> Iterator[dict[str, Any]]:
        stream = self._open_input()
        count = 0
        try:
            for data in jsonstream.load(stream):
                if not isinstance(data, dict):
                    raise FixpointError(
                        f"input documents must be JSON objects, got {data!r}"
                    )
                count += 1
                yield data
        finally:
            if stream is not sys.stdin:
                stream.close()

        if count == 0:
            raise FixpointError("no JSON documents in input")

    def polynomials(self) -> Iterator[Polynomial]:
        for data in self.documents():
            yield PolynomialModel.parse_obj(data).to_polynomial()

    def single(self) -> dict[str, Any]:
        documents = list(self.documents())
        if len(documents) != 1:
            raise FixpointError(
                f"expected a single input document, got {len(documents)}"
            )
        return documents[0]

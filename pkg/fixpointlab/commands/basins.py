import logging
from pathlib import Path
from typing import Optional

from ..dynamics import Window, basin_sidecar, render_basins, write_ppm
from ..poly import PolynomialModel
from ..rootfind import RootFindConfig
from .base import ExitCode, InputCommand

log = logging.getLogger(__name__)


class BasinsCommand(InputCommand):
    """Renders a PPM image and its JSON sidecar instead of JSON output."""

    sidecar_path: Path
    rootfind: RootFindConfig
    eps_class: float
    window: Window
    width: int
    height: int
    max_steps: int
    conv_tol: float
    workers: Optional[int]

    def __init__(
        self,
        input_path: Optional[Path],
        inline: Optional[str],
        output_path: Path,
        sidecar_path: Optional[Path],
        rootfind: RootFindConfig,
        eps_class: float,
        window: Window,
        width: int,
        height: int,
        max_steps: int,
        conv_tol: float,
        workers: Optional[int],
    ):
        self.sidecar_path = sidecar_path or \
            output_path.with_name(output_path.name + ".json")
        self.rootfind = rootfind
        self.eps_class = eps_class
        self.window = window
        self.width = width
        self.height = height
        self.max_steps = max_steps
        self.conv_tol = conv_tol
        self.workers = workers

        super().__init__(input_path, inline, output_path)

    def open(self):
        # Files are written once the image is complete
        pass

    def close(self):
        pass

    def execute(self) -> ExitCode:
        assert self.output_path is not None
        p = PolynomialModel.parse_obj(self.single()).to_polynomial()
        image = render_basins(
            p,
            self.window,
            self.width,
            self.height,
            self.max_steps,
            self.conv_tol,
            self.rootfind,
            self.eps_class,
            self.resolve_workers(self.workers),
        )

        with self.output_path.open("wb") as stream:
            write_ppm(image, stream)
        with self.sidecar_path.open("w") as stream:
            stream.write(basin_sidecar(image).dump())
            stream.write("\n")

        log.info("Wrote %s and %s", self.output_path, self.sidecar_path)
        self.summary["Image"] = str(self.output_path)
        self.summary["Sidecar"] = str(self.sidecar_path)
        self.summary["Attractive fixed points"] = len(image.attractive)
        return ExitCode.ok

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import BinaryIO

import numpy as np
from pydantic import Field, PositiveFloat

from ..analysis.classify import EPS_CLASS, FixedPointRecord, classify
from ..errors import DegreeTooSmall
from ..model import ComplexValue, Model
from ..poly import Polynomial
from ..rootfind import RootFindConfig
from .critical import match_attractive
from .orbit import (
    CONV_TOL,
    MAX_STEPS,
    STATUS_CODES,
    OrbitStatus,
    default_escape_radius,
    iterate_many,
)

log = logging.getLogger(__name__)


ESCAPE = -1
OTHER = -2

PALETTE: list[tuple[int, int, int]] = [
    (230, 25, 75),
    (60, 180, 75),
    (0, 130, 200),
    (255, 225, 25),
    (245, 130, 48),
    (145, 30, 180),
    (70, 240, 240),
    (240, 50, 230),
    (210, 245, 60),
    (0, 128, 128),
    (170, 110, 40),
    (128, 128, 0),
]
ESCAPE_COLOR = (0, 0, 0)
OTHER_COLOR = (255, 255, 255)


class Window(Model):
    center: ComplexValue = Field(default=0j, description="image center")
    half_width: PositiveFloat = Field(
        default=2.0,
        description="half of the horizontal extent of the image",
    )


class BasinImage(Model):
    width: int = Field(ge=1)
    height: int = Field(ge=1)
    window: Window
    attractive: list[FixedPointRecord]
    labels: np.ndarray = Field(
        description="(height, width) fixed point index, ESCAPE or OTHER",
    )
    iterations: np.ndarray = Field(description="(height, width) step counts")

    class Config:
        arbitrary_types_allowed = True


class BasinLabel(Model):
    label: int
    fixed_point: ComplexValue
    multiplier: ComplexValue
    color: tuple[int, int, int]


class BasinSidecar(Model):
    window: Window
    width: int
    height: int
    labels: list[BasinLabel]
    palette: list[tuple[int, int, int]]
    escape_label: int = ESCAPE
    escape_color: tuple[int, int, int] = ESCAPE_COLOR
    other_label: int = OTHER
    other_color: tuple[int, int, int] = OTHER_COLOR


def pixel_centers(window: Window, width: int, height: int) -> np.ndarray:
    """
    (height, width) grid of pixel centers; square pixels, row 0 at the top.
    """
    pixel = 2 * window.half_width / width
    x = window.center.real + (np.arange(width) + 0.5 - width / 2) * pixel
    y = window.center.imag - (np.arange(height) + 0.5 - height / 2) * pixel
    return x[None, :] + 1j * y[:, None]


def _render_row(
    p: Polynomial,
    row: np.ndarray,
    attractive: list[FixedPointRecord],
    max_steps: int,
    conv_tol: float,
    escape_radius: float,
) -> tuple[np.ndarray, np.ndarray]:
    ends = iterate_many(p, row, max_steps, conv_tol, escape_radius)
    labels = match_attractive(ends.values, attractive, conv_tol)
    converged = ends.status == STATUS_CODES[OrbitStatus.converged]
    escaped = ends.status == STATUS_CODES[OrbitStatus.escaped]
    labels[converged & (labels < 0)] = OTHER
    labels[~converged] = OTHER
    labels[escaped] = ESCAPE
    return labels.astype(np.int32), ends.steps


def render_basins(
    p: Polynomial,
    window: Window = Window(),
    width: int = 256,
    height: int = 256,
    max_steps: int = MAX_STEPS,
    conv_tol: float = CONV_TOL,
    cfg: RootFindConfig = RootFindConfig(),
    eps_class: float = EPS_CLASS,
    workers: int = 1,
) -> BasinImage:
    if p.degree < 2:
        raise DegreeTooSmall(f"basins need degree >= 2, got {p.degree}")
    if width < 1 or height < 1:
        raise ValueError(f"image must be at least 1x1, got {width}x{height}")

    attractive = [r for r in classify(p, cfg, eps_class) if r.is_attractive]
    escape_radius = default_escape_radius(p)
    grid = pixel_centers(window, width, height)
    arguments = [
        (p, row, attractive, max_steps, conv_tol, escape_radius)
        for row in grid
    ]

    if workers == 1:
        rows = [_render_row(*args) for args in arguments]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(_render_row, *zip(*arguments)))

    log.info(
        "Rendered %dx%d basins of %d attractive fixed points",
        width, height, len(attractive),
    )
    return BasinImage(
        width=width,
        height=height,
        window=window,
        attractive=attractive,
        labels=np.stack([labels for labels, _ in rows]),
        iterations=np.stack([steps for _, steps in rows]),
    )


def label_color(label: int) -> tuple[int, int, int]:
    if label == ESCAPE:
        return ESCAPE_COLOR
    if label == OTHER:
        return OTHER_COLOR
    return PALETTE[label % len(PALETTE)]


def write_ppm(image: BasinImage, stream: BinaryIO):
    lookup = np.array(
        [OTHER_COLOR, ESCAPE_COLOR] +
        [label_color(i) for i in range(len(image.attractive))],
        dtype=np.uint8,
    )
    # OTHER -> 0, ESCAPE -> 1, fixed point k -> k + 2
    rgb = lookup[image.labels - OTHER]
    stream.write(f"P6\n{image.width} {image.height}\n255\n".encode("ascii"))
    stream.write(rgb.tobytes())


def basin_sidecar(image: BasinImage) -> BasinSidecar:
    return BasinSidecar(
        window=image.window,
        width=image.width,
        height=image.height,
        labels=[
            BasinLabel(
                label=i,
                fixed_point=record.theta,
                multiplier=record.multiplier,
                color=label_color(i),
            )
            for i, record in enumerate(image.attractive)
        ],
        palette=PALETTE,
    )

from .orbit import (
    OrbitStatus,
    Orbit,
    RateEstimate,
    iterate,
    iterate_many,
    convergence_rate,
    default_escape_radius,
)
from .critical import (
    CoverageReport,
    critical_points,
    critical_orbit_coverage,
)
from .basins import (
    ESCAPE,
    OTHER,
    Window,
    BasinImage,
    BasinSidecar,
    render_basins,
    write_ppm,
    basin_sidecar,
)

__all__ = [
    "OrbitStatus",
    "Orbit",
    "RateEstimate",
    "iterate",
    "iterate_many",
    "convergence_rate",
    "default_escape_radius",
    "CoverageReport",
    "critical_points",
    "critical_orbit_coverage",
    "ESCAPE",
    "OTHER",
    "Window",
    "BasinImage",
    "BasinSidecar",
    "render_basins",
    "write_ppm",
    "basin_sidecar",
]

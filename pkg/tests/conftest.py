import math

import pytest

from fixpointlab.hermite import NodeSystem
from fixpointlab.poly import Polynomial, from_fixed_point_form


SQRT2 = math.sqrt(2)


@pytest.fixture
def square() -> Polynomial:
    """z^2"""
    return Polynomial([0, 0, 1])


@pytest.fixture
def smoothstep() -> Polynomial:
    """3z^2 - 2z^3, the interpolant of the nodes (0, 0) and (1, 0)."""
    return Polynomial([0, 0, 3, -2])


@pytest.fixture
def smoothstep_nodes() -> NodeSystem:
    return NodeSystem.from_pairs([(0, 0), (1, 0)])


@pytest.fixture
def sqrt2_map() -> Polynomial:
    """-(z^2 - 2) / 4 + z, whose attractive fixed point is sqrt(2)."""
    return from_fixed_point_form(-0.25, [SQRT2, -SQRT2])

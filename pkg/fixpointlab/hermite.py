"""
Hermite interpolation of prescribed fixed points.

Given distinct points z_i and multipliers alpha_i, the least degree
polynomial H with H(z_i) = z_i and H'(z_i) = alpha_i is built from the
divided-difference table over the doubled node list
z_1, z_1, z_2, z_2, ..., z_n, z_n and expanded from Newton form.
"""
import logging
from functools import lru_cache
from typing import Sequence

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import Field

from .errors import NodesTooClose
from .model import ComplexValue, Model
from .poly import Polynomial, derivative, residual_scale
from .rootfind import min_separation, spread

log = logging.getLogger(__name__)


SEPARATION_RELATIVE = 1e-8
SEPARATION_ABSOLUTE = 1e-12


class Node(Model):
    z: ComplexValue = Field(description="prescribed fixed point")
    alpha: ComplexValue = Field(description="prescribed multiplier H'(z)")


class NodeSystem(Model):
    nodes: list[Node] = Field(
        description="prescribed (fixed point, multiplier) pairs",
        min_items=1,
    )

    @classmethod
    def from_pairs(
        cls,
        pairs: Sequence[tuple[complex, complex]],
    ) -> "NodeSystem":
        return cls(nodes=[Node(z=z, alpha=alpha) for z, alpha in pairs])

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def points(self) -> np.ndarray:
        return np.array([node.z for node in self.nodes], dtype=np.complex128)

    @property
    def alphas(self) -> np.ndarray:
        return np.array(
            [node.alpha for node in self.nodes], dtype=np.complex128
        )

    def separation_threshold(self) -> float:
        return max(
            SEPARATION_RELATIVE * spread(self.points),
            SEPARATION_ABSOLUTE,
        )

    def require_separated(self):
        separation = min_separation(self.points)
        threshold = self.separation_threshold()
        if separation < threshold:
            raise NodesTooClose(
                f"prescribed points are {separation:.3e} apart, " +
                f"below the separation threshold {threshold:.3e}"
            )

    def permuted(self, order: Sequence[int]) -> "NodeSystem":
        return NodeSystem(nodes=[self.nodes[i] for i in order])


class DividedDifferenceTable(Model):
    doubled_nodes: list[ComplexValue] = Field(
        description="z_1, z_1, z_2, z_2, ..., z_n, z_n",
    )
    entries: list[list[ComplexValue]] = Field(
        description=(
            "entries[k][i] is the divided difference over " +
            "doubled_nodes[i..i+k]"
        ),
    )

    @property
    def diagonal(self) -> list[complex]:
        return [level[0] for level in self.entries]

    @property
    def top(self) -> complex:
        return self.entries[-1][0]


class SynthesisResult(Model):
    coeffs: list[ComplexValue] = Field(
        description="monomial coefficients of H, ascending degree",
    )
    newton_coeffs: list[ComplexValue] = Field(
        description="diagonal of the divided-difference table",
    )
    doubled_nodes: list[ComplexValue]
    leading_coefficient: ComplexValue = Field(
        description="f[z_1, z_1, ..., z_n, z_n] as found in the table",
    )
    achieved_degree: int
    value_residual: float = Field(
        description="max_i |H(z_i) - z_i| relative to the evaluation scale",
    )
    derivative_residual: float = Field(
        description="max_i |H'(z_i) - alpha_i| relative to evaluation scale",
    )

    @property
    def h(self) -> Polynomial:
        return Polynomial(self.coeffs)


def doubled_nodes(sys: NodeSystem) -> np.ndarray:
    return np.repeat(sys.points, 2)


def build_table(sys: NodeSystem) -> DividedDifferenceTable:
    sys.require_separated()

    nodes = doubled_nodes(sys)
    size = nodes.size
    levels = [nodes.copy()]

    first = np.empty(size - 1, dtype=np.complex128)
    first[0::2] = sys.alphas
    # Spans over two distinct consecutive nodes use the plain quotient
    first[1::2] = (
        (levels[0][2::2] - levels[0][1:-1:2]) /
        (nodes[2::2] - nodes[1:-1:2])
    )
    levels.append(first)

    for k in range(2, size):
        previous = levels[-1]
        levels.append(
            (previous[1:] - previous[:-1]) / (nodes[k:] - nodes[:-k])
        )

    return DividedDifferenceTable(
        doubled_nodes=nodes.tolist(),
        entries=[level.tolist() for level in levels],
    )


def divided_difference(sys: NodeSystem, indices: Sequence[int]) -> complex:
    """
    f[z_{i_1}, ..., z_{i_k}] by direct recursion over a valid index list
    (0-based indices; identical indices must be adjacent, at most twice).
    """
    indices = tuple(indices)
    if len(indices) == 0:
        raise ValueError("divided difference needs at least one node")
    for i in set(indices):
        positions = [k for k, j in enumerate(indices) if j == i]
        if len(positions) > 2 or positions[-1] - positions[0] > 1:
            raise ValueError(f"index list {indices} is not valid")

    points = [complex(z) for z in sys.points]
    alphas = [complex(a) for a in sys.alphas]

    @lru_cache(maxsize=None)
    def f(span: tuple[int, ...]) -> complex:
        if len(span) == 1:
            return points[span[0]]
        if len(span) == 2 and span[0] == span[1]:
            return alphas[span[0]]
        return (f(span[1:]) - f(span[:-1])) / (
            points[span[-1]] - points[span[0]]
        )

    return f(indices)


def _pi(points: np.ndarray, i: int, k: int) -> complex:
    others = np.delete(points[:k], i)
    value = complex(np.prod((points[i] - others) ** 2))
    if value == 0 or not np.isfinite(value):
        raise NodesTooClose(
            f"product of squared node differences for node {i} is {value}"
        )
    return value


def closed_form_even(sys: NodeSystem, k: int) -> complex:
    """
    f[z_1, z_1, ..., z_k, z_k] = sum_{i<=k} (alpha_i - 1) / pi^k_i,
    k counted from 1.
    """
    if not 2 <= k <= sys.n:
        raise ValueError(f"k must lie in 2..{sys.n}, got {k}")
    sys.require_separated()

    points, alphas = sys.points, sys.alphas
    return complex(sum(
        (alphas[i] - 1) / _pi(points, i, k)
        for i in range(k)
    ))


def closed_form_bridge(sys: NodeSystem, k: int) -> complex:
    """
    f[z_1, z_2, z_2, ..., z_k, z_k, z_{k+1}]
    = sum_{i=2}^{k} (alpha_i - 1)(z_i - z_1)(z_i - z_{k+1}) / pi^{k+1}_i,
    k counted from 1.
    """
    if not 2 <= k <= sys.n - 1:
        raise ValueError(f"k must lie in 2..{sys.n - 1}, got {k}")
    sys.require_separated()

    points, alphas = sys.points, sys.alphas
    return complex(sum(
        (alphas[i] - 1) * (points[i] - points[0]) * (points[i] - points[k]) /
        _pi(points, i, k + 1)
        for i in range(1, k)
    ))


def bridge_indices(k: int) -> list[int]:
    return [0] + [i for i in range(1, k) for _ in range(2)] + [k]


def even_indices(k: int) -> list[int]:
    return [i for i in range(k) for _ in range(2)]


def newton_to_monomial(
    newton_coeffs: Sequence[complex],
    doubled_nodes: Sequence[complex],
) -> Polynomial:
    if len(newton_coeffs) != len(doubled_nodes):
        raise ValueError(
            "newton coefficients and nodes must have equal lengths, got " +
            f"{len(newton_coeffs)} and {len(doubled_nodes)}"
        )
    if len(newton_coeffs) == 0:
        raise ValueError("newton form needs at least one coefficient")

    accumulated = np.array([newton_coeffs[-1]], dtype=np.complex128)
    for coefficient, node in zip(
        reversed(newton_coeffs[:-1]), reversed(doubled_nodes[:-1])
    ):
        accumulated = P.polyadd(
            P.polymul(accumulated, [-node, 1]),
            [coefficient],
        )
    return Polynomial(accumulated)


def interpolation_residuals(
    sys: NodeSystem,
    h: Polynomial,
) -> tuple[float, float]:
    dh = derivative(h)
    value_residual = 0.0
    derivative_residual = 0.0
    for node in sys.nodes:
        value_scale = max(residual_scale(h, node.z), abs(node.z), 1.0)
        slope_scale = max(residual_scale(dh, node.z), abs(node.alpha), 1.0)
        value_residual = max(
            value_residual, abs(h(node.z) - node.z) / value_scale
        )
        derivative_residual = max(
            derivative_residual, abs(dh(node.z) - node.alpha) / slope_scale
        )
    return value_residual, derivative_residual


def synthesize(sys: NodeSystem) -> SynthesisResult:
    table = build_table(sys)
    newton_coeffs = table.diagonal
    h = newton_to_monomial(newton_coeffs, table.doubled_nodes)
    value_residual, derivative_residual = interpolation_residuals(sys, h)

    log.debug(
        "Synthesized degree %d interpolant for %d nodes " +
        "(residuals %.2e, %.2e)",
        h.degree, sys.n, value_residual, derivative_residual,
    )

    return SynthesisResult(
        coeffs=h.coeffs.tolist(),
        newton_coeffs=newton_coeffs,
        doubled_nodes=table.doubled_nodes,
        leading_coefficient=table.top,
        achieved_degree=h.degree,
        value_residual=value_residual,
        derivative_residual=derivative_residual,
    )


def line_direction(points: np.ndarray) -> complex:
    offsets = points - points[0]
    far = offsets[np.argmax(np.abs(offsets))]
    if far == 0:
        return 1 + 0j
    return complex(far / abs(far))


def leading_sign_certificate(sys: NodeSystem) -> complex:
    """
    Leading coefficient rotated by d^(2(n-1)), d the direction of the line
    through collinear nodes.

    Every pi^n_i is then a positive real multiple of d^(2(n-1)), so the
    rotated value is sum_i (alpha_i - 1) / r_i with r_i > 0 and has a
    negative real part whenever every Re(alpha_i) < 1.
    """
    if sys.n < 2:
        raise ValueError("the sign certificate needs at least two nodes")
    direction = line_direction(sys.points)
    return closed_form_even(sys, sys.n) * direction ** (2 * (sys.n - 1))

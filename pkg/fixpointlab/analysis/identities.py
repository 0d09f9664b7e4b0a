import cmath

import numpy as np
from pydantic import Field

from ..errors import MultipleFixedPoint, NodesTooClose, WrongDegree, \
    ZeroLeadingFactor
from ..model import ComplexValue, Model
from ..poly import Polynomial, derivative, from_fixed_point_form
from ..rootfind import RootFindConfig, fixed_points, spread


QUADRATIC_TOLERANCE = 1e-9
ALPHA_SUM_TOLERANCE = 1e-12
LAMBDA_TOLERANCE = 1e-9
SEPARATION_RELATIVE = 1e-8


class QuadraticIdentity(Model):
    fixed_points: tuple[ComplexValue, ComplexValue]
    multipliers: tuple[ComplexValue, ComplexValue]
    offsets: tuple[ComplexValue, ComplexValue] = Field(
        description="c(z1 - z2) and c(z2 - z1), the parts beyond 1",
    )
    sum: ComplexValue = Field(description="lambda_1 + lambda_2")
    ok: bool = Field(description="|sum - 2| <= 1e-9 * scale")

    @property
    def margin(self) -> float:
        return max(m.real for m in self.multipliers)


class CubicDecomposition(Model):
    c: ComplexValue
    fixed_points: tuple[ComplexValue, ComplexValue, ComplexValue]
    a: ComplexValue = Field(description="principal square root of c")
    alphas: tuple[ComplexValue, ComplexValue, ComplexValue] = Field(
        description="a(z1 - z2), a(z3 - z1), a(z2 - z3)",
    )
    lambdas: tuple[ComplexValue, ComplexValue, ComplexValue] = Field(
        description="1 - a1 a2, 1 - a2 a3, 1 - a3 a1",
    )
    lambda_points: tuple[ComplexValue, ComplexValue, ComplexValue] = Field(
        description="the fixed point each lambda is the multiplier of",
    )
    multipliers: tuple[ComplexValue, ComplexValue, ComplexValue] = Field(
        description="p'(z) at lambda_points, evaluated directly",
    )
    alpha_sum: ComplexValue
    alpha_sum_ok: bool
    lambdas_ok: bool
    sign_pair: tuple[int, int] = Field(
        description="0-based (i, j) with Im(alpha_i) Im(alpha_j) >= 0",
    )
    guaranteed_index: int = Field(
        description="0-based index of a lambda with the largest real part",
    )
    margin: float

    @property
    def ok(self) -> bool:
        return (
            self.alpha_sum_ok and
            self.lambdas_ok and
            self.margin >= 1 - LAMBDA_TOLERANCE
        )


def quadratic_identity_check(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
) -> QuadraticIdentity:
    """
    For p = c(z - z1)(z - z2) + z the multipliers are 1 + c(z1 - z2) and
    1 + c(z2 - z1); their sum is exactly 2, so one has real part >= 1.
    """
    if p.degree != 2:
        raise WrongDegree(f"expected a quadratic, got degree {p.degree}")

    z1, z2 = fixed_points(p, cfg)
    if abs(z1 - z2) <= SEPARATION_RELATIVE * max(1.0, abs(z1), abs(z2)):
        raise MultipleFixedPoint(
            f"fixed points {z1} and {z2} coincide within working precision"
        )

    dp = derivative(p)
    lambdas = (dp(z1), dp(z2))
    c = p.leading
    total = lambdas[0] + lambdas[1]
    scale = max(1.0, p.scale())

    return QuadraticIdentity(
        fixed_points=(z1, z2),
        multipliers=lambdas,
        offsets=(c * (z1 - z2), c * (z2 - z1)),
        sum=total,
        ok=abs(total - 2) <= QUADRATIC_TOLERANCE * scale,
    )


def _sign_pair(alphas: tuple[complex, complex, complex]) -> tuple[int, int]:
    # Among three reals two share a sign (zero counts for both)
    for i, j in ((0, 1), (1, 2), (2, 0)):
        if alphas[i].imag * alphas[j].imag >= 0:
            return i, j
    raise AssertionError("three imaginary parts cannot all differ in sign")


def cubic_decomposition(
    c: complex,
    z1: complex,
    z2: complex,
    z3: complex,
) -> CubicDecomposition:
    """
    Decompose p = c(z - z1)(z - z2)(z - z3) + z through a with a^2 = c.

    The alpha values sum to zero and the multipliers are
    lambda_1 = 1 - a1 a2 = p'(z1), lambda_2 = 1 - a2 a3 = p'(z3),
    lambda_3 = 1 - a3 a1 = p'(z2).
    """
    if c == 0:
        raise ZeroLeadingFactor("cubic decomposition needs c != 0")
    points = np.array([z1, z2, z3], dtype=np.complex128)
    width = spread(points)
    for i, j in ((0, 1), (1, 2), (0, 2)):
        if abs(points[i] - points[j]) <= SEPARATION_RELATIVE * max(width, 1.0):
            raise NodesTooClose(
                f"fixed points {points[i]} and {points[j]} coincide"
            )

    a = cmath.sqrt(c)
    alphas = (a * (z1 - z2), a * (z3 - z1), a * (z2 - z3))
    lambdas = (
        1 - alphas[0] * alphas[1],
        1 - alphas[1] * alphas[2],
        1 - alphas[2] * alphas[0],
    )
    lambda_points = (complex(z1), complex(z3), complex(z2))

    p = from_fixed_point_form(c, [z1, z2, z3])
    dp = derivative(p)
    multipliers = tuple(dp(z) for z in lambda_points)

    alpha_scale = max(abs(a) * width, 1.0)
    alpha_sum = sum(alphas)
    reach = 1.0 + float(np.abs(points).max())
    lambda_scale = max(abs(c) * reach ** 2, 1.0)
    lambdas_ok = all(
        abs(lam - mult) <= LAMBDA_TOLERANCE * lambda_scale
        for lam, mult in zip(lambdas, multipliers)
    )

    guaranteed = int(np.argmax([lam.real for lam in lambdas]))

    return CubicDecomposition(
        c=c,
        fixed_points=(z1, z2, z3),
        a=a,
        alphas=alphas,
        lambdas=lambdas,
        lambda_points=lambda_points,
        multipliers=multipliers,
        alpha_sum=alpha_sum,
        alpha_sum_ok=abs(alpha_sum) <= ALPHA_SUM_TOLERANCE * alpha_scale,
        lambdas_ok=lambdas_ok,
        sign_pair=_sign_pair(alphas),
        guaranteed_index=guaranteed,
        margin=lambdas[guaranteed].real,
    )


def cubic_decomposition_of(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
) -> CubicDecomposition:
    if p.degree != 3:
        raise WrongDegree(f"expected a cubic, got degree {p.degree}")
    z1, z2, z3 = fixed_points(p, cfg)
    return cubic_decomposition(p.leading, z1, z2, z3)


def identity_check(
    p: Polynomial,
    cfg: RootFindConfig = RootFindConfig(),
) -> QuadraticIdentity | CubicDecomposition:
    if p.degree == 2:
        return quadratic_identity_check(p, cfg)
    if p.degree == 3:
        return cubic_decomposition_of(p, cfg)
    raise WrongDegree(
        f"exact identities exist for degree 2 and 3, got {p.degree}"
    )

from typing import Iterable, Sequence

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import Field

from .errors import DegreeTooSmall, NonFiniteValue, ZeroLeadingFactor
from .model import ComplexValue, Model


# A leading coefficient counts as zero below this fraction of the largest
# coefficient magnitude.
TRIM_RELATIVE = 1e-13


def _trim(coeffs: np.ndarray) -> np.ndarray:
    magnitudes = np.abs(coeffs)
    threshold = TRIM_RELATIVE * magnitudes.max()
    last = coeffs.size - 1
    while last > 0 and magnitudes[last] <= threshold:
        last -= 1
    if last == 0 and magnitudes[0] <= threshold:
        return np.zeros(1, dtype=np.complex128)
    return coeffs[:last + 1].copy()


class Polynomial:
    __slots__ = ("_coeffs",)

    _coeffs: np.ndarray

    def __init__(self, coeffs: Iterable[complex] | np.ndarray):
        array = np.array(
            coeffs if isinstance(coeffs, np.ndarray) else list(coeffs),
            dtype=np.complex128,
        ).ravel()
        if array.size == 0:
            raise ValueError("polynomial needs at least one coefficient")
        if not np.all(np.isfinite(array)):
            raise NonFiniteValue(f"non-finite coefficient in {array!r}")

        array = _trim(array)
        array.setflags(write=False)
        self._coeffs = array

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree(self) -> int:
        return self._coeffs.size - 1

    @property
    def leading(self) -> complex:
        return complex(self._coeffs[-1])

    @property
    def is_zero(self) -> bool:
        return self.degree == 0 and self._coeffs[0] == 0

    def scale(self) -> float:
        return float(np.abs(self._coeffs).max())

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(P.polyadd(self._coeffs, other.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(P.polysub(self._coeffs, other.coeffs))

    def __mul__(self, other: "Polynomial | complex") -> "Polynomial":
        if isinstance(other, Polynomial):
            return Polynomial(P.polymul(self._coeffs, other.coeffs))
        return Polynomial(self._coeffs * complex(other))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash(self._coeffs.tobytes())

    def __repr__(self) -> str:
        return f"Polynomial({self._coeffs.tolist()!r})"


IDENTITY = Polynomial([0, 1])


def evaluate(p: Polynomial, z):
    value = P.polyval(z, p.coeffs)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def derivative(p: Polynomial) -> Polynomial:
    if p.degree == 0:
        return Polynomial([0])
    return Polynomial(P.polyder(p.coeffs))


def minus_identity(p: Polynomial) -> Polynomial:
    return p - IDENTITY


def from_roots(roots: Sequence[complex], leading: complex = 1) -> Polynomial:
    if leading == 0:
        raise ZeroLeadingFactor("leading factor must be nonzero")
    if len(roots) == 0:
        return Polynomial([leading])
    return Polynomial(
        complex(leading) * P.polyfromroots(np.asarray(roots, np.complex128))
    )


def from_fixed_point_form(c: complex, roots: Sequence[complex]) -> Polynomial:
    if c == 0:
        raise ZeroLeadingFactor("fixed point form needs c != 0")
    return from_roots(roots, c) + IDENTITY


def exemplar_family(n: int) -> Polynomial:
    """
    (-z^(n+1) + (n+1) z) / n, whose n-th roots of unity are all
    superattractive fixed points.
    """
    if n < 2:
        raise DegreeTooSmall(f"exemplar family needs n >= 2, got {n}")
    coeffs = np.zeros(n + 2, dtype=np.complex128)
    coeffs[1] = (n + 1) / n
    coeffs[n + 1] = -1 / n
    return Polynomial(coeffs)


def cauchy_bound(p: Polynomial) -> float:
    if p.degree == 0:
        return 1.0
    ratios = np.abs(p.coeffs[:-1] / p.coeffs[-1])
    return 1.0 + float(ratios.max())


def residual_scale(p: Polynomial, z) -> float:
    return float(P.polyval(abs(z), np.abs(p.coeffs)))


class PolynomialModel(Model):
    coeffs: list[ComplexValue] = Field(
        description="complex coefficients as [re, im] pairs, ascending degree",
        min_items=1,
    )

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "PolynomialModel":
        return cls(coeffs=[complex(c) for c in p.coeffs])

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

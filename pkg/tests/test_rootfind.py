import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fixpointlab.errors import DegreeTooSmall, DegreeZero, NoConvergence
from fixpointlab.poly import Polynomial, exemplar_family, from_roots, \
    residual_scale
from fixpointlab.rootfind import (
    RootFindConfig,
    find_roots,
    fixed_points,
    min_separation,
    polish_root,
    spread,
)
from fixpointlab.sampling import SamplingStrategy, random_polynomial, \
    sample_rng, separated_points


def assert_roots(found, expected, tolerance=1e-10):
    assert len(found) == len(expected)
    for z, e in zip(found, expected):
        assert abs(z - e) <= tolerance, (found, expected)


def test_find_roots():
    assert_roots(find_roots(Polynomial([-1, 0, 1])), [-1, 1])
    assert find_roots(Polynomial([0, 0, 0, 1])) == [0, 0, 0]
    assert_roots(find_roots(Polynomial([0, 0.5, 0, -0.5])), [-1, 0, 1])


def test_find_roots_constant():
    with pytest.raises(DegreeZero):
        find_roots(Polynomial([3]))


def test_find_roots_linear():
    assert find_roots(Polynomial([-2, 4])) == [0.5]


def test_find_roots_multiple_root():
    roots = find_roots(from_roots([1, 1, 1, -2]))
    assert abs(roots[0] + 2) <= 1e-10
    assert all(abs(r - 1) <= 1e-3 for r in roots[1:])


def test_fixed_points(square, smoothstep):
    assert_roots(fixed_points(square), [0, 1])
    assert_roots(fixed_points(exemplar_family(2)), [-1, 0, 1])
    assert_roots(fixed_points(smoothstep), [0, 0.5, 1])


def test_fixed_points_of_linear_map():
    with pytest.raises(DegreeTooSmall):
        fixed_points(Polynomial([1, 2]))


def test_polish_root():
    p = Polynomial([-2, 0, 1])
    assert polish_root(p, 1.4) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert polish_root(Polynomial([-1, 1]), 1) == 1
    # Vanishing derivative leaves the guess alone
    assert polish_root(Polynomial([0, 0, 1]), 0) == 0


def test_roots_sorted():
    roots = find_roots(from_roots([2j, -1, 1, -2j, 0.5]))
    keys = [(r.real, r.imag) for r in roots]
    assert keys == sorted(keys)


def test_no_convergence():
    p = random_polynomial(sample_rng(3, 0), 8, SamplingStrategy.coefficient)
    with pytest.raises(NoConvergence):
        find_roots(p, RootFindConfig(max_iter=1))


def test_seed_is_deterministic():
    p = random_polynomial(sample_rng(5, 1), 6, SamplingStrategy.coefficient)
    cfg = RootFindConfig(seed=11)
    assert find_roots(p, cfg) == find_roots(p, cfg)


@given(st.integers(0, 2**32), st.integers(2, 10))
@settings(max_examples=200, deadline=None)
def test_residual_criterion(seed, degree):
    p = random_polynomial(
        sample_rng(seed, 0), degree, SamplingStrategy.coefficient
    )
    cfg = RootFindConfig()
    roots = find_roots(p, cfg)
    assert len(roots) == degree
    for r in roots:
        assert abs(p(r)) <= cfg.tol * residual_scale(p, r)


@given(st.integers(0, 2**32), st.integers(1, 8))
@settings(max_examples=200, deadline=None)
def test_recovers_separated_roots(seed, degree):
    rng = np.random.default_rng(seed)
    expected = sorted(
        separated_points(rng, degree, 0.1),
        key=lambda r: (r.real, r.imag),
    )
    found = find_roots(from_roots(expected))
    # Sorting is only stable up to the accuracy of the roots
    for e in expected:
        assert min(abs(f - e) for f in found) <= 1e-8


@given(st.integers(0, 2**32), st.integers(2, 12))
@settings(max_examples=100, deadline=None)
def test_roots_reconstruct_coefficients(seed, degree):
    rng = np.random.default_rng(seed)
    p = from_roots(separated_points(rng, degree, 0.1), leading=0.5 - 2j)
    rebuilt = from_roots(find_roots(p), p.leading)
    np.testing.assert_allclose(
        rebuilt.coeffs, p.coeffs, rtol=0,
        atol=1e-8 * np.abs(p.coeffs).max(),
    )


@given(st.integers(0, 2**32), st.integers(2, 12))
@settings(max_examples=100, deadline=None)
def test_roots_do_not_depend_on_guess_rotation(seed, degree):
    rng = np.random.default_rng(seed)
    p = from_roots(separated_points(rng, degree, 0.1))
    first = find_roots(p, RootFindConfig(seed=1))
    second = find_roots(p, RootFindConfig(seed=99))
    for r in first:
        assert min(abs(r - s) for s in second) <= 1e-9


def test_min_separation_and_spread():
    points = [0, 1, 3j]
    assert min_separation(points) == 1
    assert spread(points) == pytest.approx(math.sqrt(10))
    assert min_separation([1]) == math.inf
    assert spread([1]) == 0

import cmath
import io
import math

import numpy as np
import pytest

from fixpointlab.analysis import classify
from fixpointlab.dynamics import (
    ESCAPE,
    OTHER,
    OrbitStatus,
    Window,
    basin_sidecar,
    convergence_rate,
    critical_orbit_coverage,
    critical_points,
    default_escape_radius,
    iterate,
    iterate_many,
    render_basins,
    write_ppm,
)
from fixpointlab.dynamics.basins import ESCAPE_COLOR, PALETTE, pixel_centers
from fixpointlab.dynamics.orbit import ORBIT_STORAGE_CAP, ORBIT_TAIL, \
    STATUS_CODES
from fixpointlab.errors import DegreeTooSmall, DidNotConverge, \
    FixpointError, NotAFixedPoint
from fixpointlab.poly import Polynomial, exemplar_family, \
    from_fixed_point_form
from fixpointlab.sampling import SamplingStrategy, random_polynomial, \
    sample_rng


SQRT2 = math.sqrt(2)


def test_iterate_converges(square):
    orbit = iterate(square, 0.5)
    assert orbit.status == OrbitStatus.converged
    assert abs(orbit.limit) <= 1e-10
    assert orbit.points[0] == 0.5
    assert len(orbit.points) == orbit.steps + 1


def test_iterate_escapes(square):
    orbit = iterate(square, 3, escape_radius=100)
    assert orbit.status == OrbitStatus.escaped
    assert orbit.limit is None
    assert orbit.points == [3, 9, 81, 6561]


def test_iterate_seed_outside_escape_radius(square):
    orbit = iterate(square, 50, escape_radius=10)
    assert orbit.status == OrbitStatus.escaped
    assert orbit.steps == 0


def test_iterate_sqrt2(sqrt2_map):
    orbit = iterate(sqrt2_map, 1.0)
    assert orbit.status == OrbitStatus.converged
    assert abs(orbit.limit - SQRT2) <= 1e-9


def test_iterate_truncates_long_orbits():
    rotation = Polynomial([0, cmath.exp(1j)])
    orbit = iterate(rotation, 0.5, max_steps=ORBIT_STORAGE_CAP + 50)
    assert orbit.status == OrbitStatus.exhausted
    assert orbit.truncated
    assert len(orbit.points) == ORBIT_TAIL
    assert orbit.steps == ORBIT_STORAGE_CAP + 50


def test_iterate_rejects_zero_steps(square):
    with pytest.raises(ValueError):
        iterate(square, 0.5, max_steps=0)


def test_default_escape_radius(square):
    # z^2 - z has Cauchy bound 2
    assert default_escape_radius(square) == 6


def test_iterate_many_matches_iterate(square):
    seeds = np.array([0.5, 3, 0.9j, 1.0, 0])
    ends = iterate_many(square, seeds)
    codes = {code: status for status, code in STATUS_CODES.items()}
    for seed, value, status, steps in zip(
        seeds, ends.values, ends.status, ends.steps
    ):
        orbit = iterate(square, seed)
        assert codes[int(status)] == orbit.status
        assert value == orbit.points[-1]
        assert steps == orbit.steps


def test_convergence_rate_sqrt2(sqrt2_map):
    estimate = convergence_rate(sqrt2_map, SQRT2, 1.2)
    assert estimate.rate == pytest.approx(1 - SQRT2 / 2, rel=0.05)
    assert estimate.multiplier_modulus == pytest.approx(1 - SQRT2 / 2)
    assert not estimate.quadratic


def test_convergence_rate_superattractive(smoothstep):
    estimate = convergence_rate(smoothstep, 0, 0.01)
    assert estimate.quadratic
    assert estimate.multiplier_modulus == 0


def test_convergence_rate_errors(smoothstep):
    with pytest.raises(NotAFixedPoint):
        convergence_rate(smoothstep, 0.3, 0.31)
    with pytest.raises(DidNotConverge):
        convergence_rate(smoothstep, 0.5, 0.501, steps=50)
    with pytest.raises(FixpointError):
        convergence_rate(smoothstep, 1, 1)


def test_rate_law():
    rng = np.random.default_rng(1234)
    for _ in range(100):
        theta = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        multiplier = rng.uniform(0.06, 0.94) * cmath.exp(
            1j * rng.uniform(0, 2 * math.pi)
        )
        # p'(theta) = 1 + c (theta - other) = multiplier
        p = from_fixed_point_form(1 - multiplier, [theta, theta + 1])
        x0 = theta + 1e-3 * cmath.exp(1j * rng.uniform(0, 2 * math.pi))

        estimate = convergence_rate(p, theta, x0)
        assert estimate.rate == pytest.approx(abs(multiplier), rel=0.05)
        assert estimate.multiplier_modulus == pytest.approx(abs(multiplier))


def test_critical_points(square, smoothstep):
    assert critical_points(smoothstep) == pytest.approx([0, 1])
    assert critical_points(square) == [0]
    assert critical_points(exemplar_family(2)) == pytest.approx([-1, 1])
    with pytest.raises(DegreeTooSmall):
        critical_points(Polynomial([1, 1]))


def test_coverage(square, smoothstep):
    report = critical_orbit_coverage(smoothstep)
    assert report.coverage == {0: [0], 1: [1]}
    assert report.all_covered
    assert report.attractive_bound_satisfied

    report = critical_orbit_coverage(square)
    assert report.coverage == {0: [0]}
    assert report.all_covered


def test_coverage_exemplar_family():
    report = critical_orbit_coverage(exemplar_family(3))
    assert report.attractive_count == 3
    assert report.all_covered
    assert sorted(len(c) for c in report.coverage.values()) == [1, 1, 1]


def with_attractive_points(strategy, size):
    # Random polynomials of degree 2..6 with an attractive fixed point
    index = 0
    while size:
        rng = sample_rng(31, index)
        index += 1
        p = random_polynomial(rng, int(rng.integers(2, 7)), strategy)
        records = classify(p)
        if any(r.is_attractive for r in records):
            size -= 1
            yield p, records


def assert_coverage(strategy, size, max_steps):
    for p, records in with_attractive_points(strategy, size):
        report = critical_orbit_coverage(
            p, max_steps=max_steps, records=records
        )

        assert 1 <= report.attractive_count <= p.degree - 1, p
        assert len(report.critical_points) == p.degree - 1
        # Uncovered points are reported as cycle-capture candidates
        assert report.all_covered == (not report.uncovered), p
        for covering in report.coverage.values():
            assert all(0 <= i < p.degree - 1 for i in covering)


@pytest.mark.parametrize("strategy", list(SamplingStrategy))
def test_coverage_on_random_polynomials(strategy):
    assert_coverage(strategy, 100, max_steps=10**4)


@pytest.mark.slow
@pytest.mark.parametrize("strategy", list(SamplingStrategy))
def test_coverage_at_acceptance_size(strategy):
    assert_coverage(strategy, 1000, max_steps=10**4)


def test_pixel_centers():
    grid = pixel_centers(Window(center=1j, half_width=1), 2, 2)
    np.testing.assert_allclose(
        grid, [[-0.5 + 1.5j, 0.5 + 1.5j], [-0.5 + 0.5j, 0.5 + 0.5j]]
    )


def test_basins_of_square(square):
    image = render_basins(square, Window(), 3, 3)
    expected = np.full((3, 3), ESCAPE)
    expected[1, 1] = 0
    np.testing.assert_array_equal(image.labels, expected)


def test_single_pixel_on_attractive_point(square):
    image = render_basins(square, Window(center=0, half_width=0.1), 1, 1)
    assert image.labels[0, 0] == 0
    assert image.iterations[0, 0] in (0, 1)


def test_basins_of_smoothstep(smoothstep):
    image = render_basins(
        smoothstep, Window(center=0.5, half_width=0.5), 5, 1
    )
    assert image.labels[0, 0] == 0
    assert image.labels[0, 4] == 1
    # 1/2 is a repelling fixed point
    assert image.labels[0, 2] == OTHER


def test_basins_need_degree_two():
    with pytest.raises(DegreeTooSmall):
        render_basins(Polynomial([0, 0.5]))


def test_basins_are_reproducible():
    p = exemplar_family(3)
    first = render_basins(p, Window(), 24, 16, workers=1)
    second = render_basins(p, Window(), 24, 16, workers=2)
    np.testing.assert_array_equal(first.labels, second.labels)
    np.testing.assert_array_equal(first.iterations, second.iterations)


def test_write_ppm(square):
    image = render_basins(square, Window(), 3, 3)
    stream = io.BytesIO()
    write_ppm(image, stream)
    data = stream.getvalue()

    header = b"P6\n3 3\n255\n"
    assert data.startswith(header)
    pixels = np.frombuffer(data[len(header):], dtype=np.uint8)
    pixels = pixels.reshape(3, 3, 3)
    assert tuple(pixels[1, 1]) == PALETTE[0]
    assert tuple(pixels[0, 0]) == ESCAPE_COLOR


def test_basin_sidecar(smoothstep):
    image = render_basins(smoothstep, Window(), 4, 4)
    sidecar = basin_sidecar(image)
    attractive = [r for r in classify(smoothstep) if r.is_attractive]
    assert [label.fixed_point for label in sidecar.labels] == \
        pytest.approx([r.theta for r in attractive])
    assert [label.color for label in sidecar.labels] == PALETTE[:2]
    assert sidecar.escape_label == ESCAPE

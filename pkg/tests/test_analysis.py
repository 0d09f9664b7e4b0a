import math

import pytest
from pydantic import ValidationError

from fixpointlab.analysis import (
    BoundReport,
    CubicDecomposition,
    FixedPointClass,
    FixedPointRecord,
    QuadraticIdentity,
    SearchConfig,
    SweepConfig,
    check_half_bound,
    classify,
    classify_multiplier,
    conjecture_margin,
    conjecture_search,
    cubic_decomposition,
    cubic_decomposition_of,
    identity_check,
    margin_of,
    max_collinear_attractive,
    quadratic_identity_check,
    sweep_corpus,
    sweep_half_bound,
)
import fixpointlab.analysis.search as search
from fixpointlab.analysis.search import histogram_bin
from fixpointlab.errors import MultipleFixedPoint, NoConvergence, \
    NodesTooClose, WrongDegree, ZeroLeadingFactor
from fixpointlab.hermite import synthesize
from fixpointlab.poly import Polynomial, exemplar_family, \
    from_fixed_point_form
from fixpointlab.sampling import (
    SamplingStrategy,
    random_collinear_node_system,
    random_node_system,
    random_polynomial,
    sample_rng,
)


def attractive(*points: complex) -> list[FixedPointRecord]:
    return [
        FixedPointRecord(
            theta=z,
            multiplier=0,
            classification=FixedPointClass.attractive,
            residual=0,
        )
        for z in points
    ]


def assert_records(records, expected):
    assert len(records) == len(expected)
    for record, (theta, multiplier, kind) in zip(records, expected):
        assert record.theta == pytest.approx(theta, abs=1e-10)
        assert record.multiplier == pytest.approx(multiplier, abs=1e-9)
        assert record.classification == kind


def test_classify_multiplier():
    assert classify_multiplier(0.999) == FixedPointClass.attractive
    assert classify_multiplier(1j) == FixedPointClass.neutral
    assert classify_multiplier(1 - 1e-10) == FixedPointClass.neutral
    assert classify_multiplier(1.001) == FixedPointClass.repelling
    assert classify_multiplier(0.9, eps_class=0.2) == FixedPointClass.neutral


def test_classify(square, smoothstep):
    A = FixedPointClass.attractive
    R = FixedPointClass.repelling
    assert_records(classify(square), [(0, 0, A), (1, 2, R)])
    assert_records(
        classify(exemplar_family(2)),
        [(-1, 0, A), (0, 1.5, R), (1, 0, A)],
    )
    assert_records(
        classify(smoothstep),
        [(0, 0, A), (0.5, 1.5, R), (1, 0, A)],
    )


def test_record_serializes_class_alias(square):
    record = classify(square)[0]
    assert '"class": "attractive"' in record.dump()
    assert FixedPointRecord.parse_raw(record.dump()) == record


def test_max_collinear_attractive():
    count, line = max_collinear_attractive(attractive(-1, 1))
    assert count == 2
    assert abs(line.direction.imag) <= 1e-15

    count, _ = max_collinear_attractive(attractive(1, 1j, -1, -1j))
    assert count == 2

    assert max_collinear_attractive(attractive(0.5)) == (1, None)
    assert max_collinear_attractive([]) == (0, None)

    count, line = max_collinear_attractive(attractive(0, 1 + 1j, 2 + 2j, 5))
    assert count == 3
    assert line.direction == pytest.approx((1 + 1j) / math.sqrt(2))


def test_max_collinear_ignores_other_classes():
    records = attractive(0, 2) + [
        FixedPointRecord(
            theta=1,
            multiplier=3,
            classification=FixedPointClass.repelling,
            residual=0,
        ),
    ]
    count, _ = max_collinear_attractive(records)
    assert count == 2


def test_check_half_bound(square, smoothstep):
    report = check_half_bound(smoothstep)
    assert report.max_collinear_attractive == 2
    assert report.bound == 2
    assert report.satisfied

    report = check_half_bound(square)
    assert (report.max_collinear_attractive, report.bound) == (1, 1)
    assert report.satisfied

    report = check_half_bound(exemplar_family(4))
    assert report.degree == 5
    assert report.max_collinear_attractive == 2
    assert report.bound == 3
    assert report.attractive_count == 4
    assert report.attractive_bound_satisfied


def test_bound_report_consistency(square):
    report = check_half_bound(square)
    data = report.dict()
    data["satisfied"] = False
    with pytest.raises(ValidationError):
        BoundReport(**data)


def test_conjecture_margin(square, smoothstep):
    assert conjecture_margin(square) == pytest.approx(2)
    assert conjecture_margin(exemplar_family(2)) == pytest.approx(1.5)
    assert conjecture_margin(smoothstep) == pytest.approx(1.5)
    assert margin_of(classify(smoothstep)) == pytest.approx(1.5)


def test_multiple_fixed_point_has_neutral_multiplier():
    # z^2 + z has 0 as a double fixed point with multiplier exactly 1
    p = Polynomial([0, 1, 1])
    assert conjecture_margin(p) >= 1 - 1e-9
    records = classify(p)
    assert [r.classification for r in records] == \
        [FixedPointClass.neutral] * 2


def test_synthesized_interpolants_satisfy_half_bound():
    for index in range(200):
        rng = sample_rng(31, index)
        n = int(rng.integers(2, 7))
        if index % 2:
            nodes = random_collinear_node_system(
                rng, n, min_separation=0.05, vertical=index % 4 == 1
            )
        else:
            nodes = random_node_system(rng, n, min_separation=0.05)
        report = check_half_bound(synthesize(nodes).h)
        assert report.satisfied, (index, report.max_collinear_attractive)
        assert report.attractive_bound_satisfied, index


def test_smoothstep_golden_case(smoothstep_nodes):
    result = synthesize(smoothstep_nodes)
    assert result.newton_coeffs == pytest.approx([0, 0, 1, -2])

    p = result.h
    records = classify(p)
    assert [r.theta for r in records] == pytest.approx([0, 0.5, 1])
    assert [r.multiplier for r in records] == pytest.approx(
        [0, 1.5, 0], abs=1e-9
    )

    report = check_half_bound(p)
    assert report.max_collinear_attractive == report.bound == 2
    assert conjecture_margin(p) == pytest.approx(1.5)


@pytest.mark.parametrize("n", range(2, 11))
def test_exemplar_family(n):
    p = exemplar_family(n)
    records = classify(p)
    roots = [complex(math.cos(2 * math.pi * k / n),
                     math.sin(2 * math.pi * k / n)) for k in range(n)]
    for root in roots:
        nearest = min(records, key=lambda r: abs(r.theta - root))
        assert abs(nearest.theta - root) <= 1e-10
        assert abs(nearest.multiplier) <= 1e-10

    origin = min(records, key=lambda r: abs(r.theta))
    assert abs(origin.theta) <= 1e-10
    assert origin.multiplier == pytest.approx((n + 1) / n)

    report = check_half_bound(p)
    assert report.attractive_count == n == p.degree - 1
    assert report.attractive_bound_satisfied
    assert report.satisfied
    assert conjecture_margin(p) == pytest.approx((n + 1) / n)


def test_quadratic_identity(square, sqrt2_map):
    result = quadratic_identity_check(square)
    assert result.sum == pytest.approx(2)
    assert result.ok
    assert result.margin == pytest.approx(2)

    result = quadratic_identity_check(sqrt2_map)
    assert sorted(m.real for m in result.multipliers) == pytest.approx(
        [1 - math.sqrt(2) / 2, 1 + math.sqrt(2) / 2]
    )
    assert result.ok

    result = quadratic_identity_check(from_fixed_point_form(1j, [0, 1]))
    assert result.sum == pytest.approx(2)
    # The parts beyond 1 cancel
    assert result.offsets[0] == pytest.approx(-result.offsets[1])


def test_quadratic_identity_errors():
    with pytest.raises(WrongDegree):
        quadratic_identity_check(Polynomial([0, 0, 0, 1]))
    with pytest.raises(MultipleFixedPoint):
        quadratic_identity_check(Polynomial([0, 1, 1]))


def test_cubic_decomposition():
    result = cubic_decomposition(1, 0, 1, 2)
    assert result.a == 1
    assert result.alphas == (-1, 2, -1)
    assert result.lambdas == (3, 3, 0)
    assert result.lambda_points == (0, 2, 1)
    assert result.multipliers == pytest.approx((3, 3, 0))
    assert result.alpha_sum == 0
    assert result.margin == 3
    assert result.guaranteed_index == 0
    assert result.ok


def test_cubic_decomposition_errors():
    with pytest.raises(ZeroLeadingFactor):
        cubic_decomposition(0, 0, 1, 2)
    with pytest.raises(NodesTooClose):
        cubic_decomposition(1, 0, 1, 1)


def test_identity_check_dispatch(square, smoothstep):
    assert isinstance(identity_check(square), QuadraticIdentity)
    assert isinstance(identity_check(smoothstep), CubicDecomposition)
    with pytest.raises(WrongDegree):
        identity_check(exemplar_family(3))


def random_identities(degree: int, samples: int):
    for index in range(samples):
        p = random_polynomial(
            sample_rng(degree, index), degree, SamplingStrategy.coefficient
        )
        try:
            yield p, identity_check(p)
        except (MultipleFixedPoint, NodesTooClose):
            continue


def test_quadratic_identity_on_random_quadratics():
    for p, result in random_identities(2, 1000):
        assert result.ok, p
        assert result.margin >= 1 - 1e-9


def test_cubic_identities_on_random_cubics():
    for p, result in random_identities(3, 1000):
        assert result.alpha_sum_ok, p
        assert result.lambdas_ok, p
        assert result.margin >= 1 - 1e-9, p
        i, j = result.sign_pair
        assert result.alphas[i].imag * result.alphas[j].imag >= 0


@pytest.mark.slow
@pytest.mark.parametrize("degree", [2, 3])
def test_identities_at_acceptance_size(degree):
    for p, result in random_identities(degree, 10_000):
        assert result.ok, p


def test_cubic_decomposition_of_monomial_form(smoothstep):
    result = cubic_decomposition_of(smoothstep)
    assert result.c == -2
    assert sorted(m.real for m in result.multipliers) == pytest.approx(
        [0, 0, 1.5], abs=1e-9
    )
    assert result.margin == pytest.approx(1.5)


def test_histogram_bin():
    assert histogram_bin(-1) == 0
    assert histogram_bin(0) == 0
    assert histogram_bin(1) == 16
    assert histogram_bin(3.99) == 63
    assert histogram_bin(100) == 63


@pytest.mark.parametrize("strategy", list(SamplingStrategy))
def test_conjecture_search_quadratics(strategy):
    report = conjecture_search(SearchConfig(
        degree=2, samples=200, seed=1, strategy=strategy, workers=1,
    ))
    assert report.violations == 0
    assert report.min_margin >= 1 - 1e-9
    assert sum(report.histogram) + report.skipped == report.samples
    assert report.argmin_coeffs is not None


@pytest.mark.parametrize("degree", [3, 4, 5, 6])
def test_conjecture_search_finds_no_violation(degree):
    report = conjecture_search(SearchConfig(
        degree=degree, samples=300, seed=7, workers=1,
    ))
    assert report.violations == 0
    assert not report.skip_rate_exceeded
    assert report.degree == degree


@pytest.mark.slow
@pytest.mark.parametrize("degree", [4, 5, 6])
def test_conjecture_search_at_acceptance_size(degree):
    report = conjecture_search(SearchConfig(
        degree=degree, samples=10_000, seed=7,
    ))
    assert report.violations == 0
    assert report.skip_rate <= 0.01


def test_conjecture_search_counts_failed_root_finds(monkeypatch):
    def fail(p, cfg):
        raise NoConvergence("no convergence in 1 sweep")

    monkeypatch.setattr(search, "fixed_points", fail)
    report = conjecture_search(SearchConfig(
        degree=3, samples=50, seed=1, workers=1,
    ))
    assert report.skipped == 50
    assert report.skip_rate == 1
    assert report.skip_rate_exceeded
    assert report.min_margin is None
    assert sum(report.histogram) == 0


def test_conjecture_search_is_independent_of_workers():
    reports = [
        conjecture_search(SearchConfig(
            degree=4, samples=120, seed=99, workers=workers,
        )).dump()
        for workers in (1, 3)
    ]
    assert reports[0] == reports[1]


def test_sweep_corpus(square, smoothstep):
    report = sweep_corpus([exemplar_family(2), smoothstep, square])
    assert report.checked == 3
    assert report.violations == 0
    assert report.tight == 3
    assert report.satisfied
    assert report.seed is None


@pytest.mark.parametrize("strategy", list(SamplingStrategy))
@pytest.mark.parametrize("degree", range(2, 9))
def test_sweep_half_bound(degree, strategy):
    report = sweep_half_bound(SweepConfig(
        degree=degree, samples=100, seed=degree, strategy=strategy,
        workers=1,
    ))
    assert report.satisfied, report.violating_instances
    assert report.checked + report.skipped == 100
    assert report.seed == degree


@pytest.mark.slow
@pytest.mark.parametrize("strategy", list(SamplingStrategy))
@pytest.mark.parametrize("degree", range(2, 9))
def test_sweep_half_bound_at_acceptance_size(degree, strategy):
    report = sweep_half_bound(SweepConfig(
        degree=degree, samples=10_000, seed=degree, strategy=strategy,
    ))
    assert report.satisfied, report.violating_instances


def test_sweep_is_independent_of_workers():
    reports = [
        sweep_half_bound(SweepConfig(
            degree=5, samples=60, seed=4, workers=workers,
        )).dump()
        for workers in (1, 2)
    ]
    assert reports[0] == reports[1]

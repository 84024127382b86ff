import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import harmonic
from streamdiv.exceptions import (
    DeltaOutOfRange,
    InvalidKN,
    InvalidN,
    TooManySegmentsRequested,
    ZeroSegmentSize,
)
from streamdiv.sampling import (
    SamplingPlan,
    bounds_report,
    chernoff_p0,
    harmonic_success,
    monte_carlo_success,
    optimal_k,
    secretary_bounds,
    segment_partition,
    select_segments,
)


def test_partition_drops_tail():
    assert segment_partition(10, 3) == [range(0, 3), range(3, 6), range(6, 9)]
    assert len(segment_partition(9, 3)) == 3
    assert segment_partition(5, 10) == []
    with pytest.raises(ZeroSegmentSize):
        segment_partition(5, 0)


def test_select_segments():
    assert select_segments(SamplingPlan(a=3, s=10, total=30, seed=1)) == list(range(10))
    for seed in (1, 2):
        (idx,) = select_segments(SamplingPlan(a=3, s=1, total=30, seed=seed))
        assert 0 <= idx < 10
    plan = SamplingPlan(a=7, s=20, total=10_000, seed=42)
    first = select_segments(plan)
    assert first == select_segments(plan)
    assert first == sorted(set(first)) and len(first) == 20


def test_select_segments_too_many():
    with pytest.raises(TooManySegmentsRequested):
        select_segments(SamplingPlan(a=3, s=11, total=30, seed=0))


def test_select_segments_uniform():
    counts = [0] * 10
    for seed in range(3000):
        for i in select_segments(SamplingPlan(a=1, s=3, total=10, seed=seed)):
            counts[i] += 1
    # each index expected 900 times; sd ~ 25
    assert all(abs(c - 900) < 125 for c in counts)


def test_secretary_bounds_n100_k37():
    lower, upper = secretary_bounds(100, 37)
    # direct evaluation of the closed forms
    assert lower == pytest.approx(0.37 * (math.log(100) - math.log(37)), abs=1e-15)
    assert upper == pytest.approx(0.37 * (math.log(99) - math.log(36)), abs=1e-15)
    assert round(lower, 5) == 0.36787
    assert round(upper, 5) == 0.37429


def test_secretary_k1_uses_harmonic():
    assert secretary_bounds(2, 1) == (0.5, 0.5)
    lo, hi = secretary_bounds(10, 1)
    assert lo == hi == pytest.approx(float(harmonic(10, 1)), rel=1e-15)


@pytest.mark.parametrize("n, k", [(5, 5), (5, 0), (5, 7), (1, 1)])
def test_secretary_invalid(n, k):
    with pytest.raises(InvalidKN):
        secretary_bounds(n, k)


@given(st.integers(3, 2000).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_bound_sandwich(nk):
    n, k = nk
    exact = harmonic_success(n, k)
    lo, hi = secretary_bounds(n, k)
    assert lo - 1e-12 <= exact <= hi + 1e-12
    assert exact == pytest.approx(float(harmonic(n, k)), rel=1e-12)


def test_optimal_k_examples():
    k, h = optimal_k(100)
    assert k == 37
    assert h == pytest.approx(0.36787, abs=1e-5)
    k3, h3 = optimal_k(3)
    assert k3 == 1 and h3 == pytest.approx(math.log(3) / 3)
    with pytest.raises(InvalidN):
        optimal_k(2)


@pytest.mark.parametrize("n", [3, 4, 10, 57, 100, 999])
def test_optimal_k_matches_scan(n):
    scan = max(range(1, n), key=lambda k: (k / n * (math.log(n) - math.log(k)), -k))
    assert optimal_k(n)[0] == scan


def test_h_max_tends_to_inv_e():
    for n in (100, 500, 10_000):
        assert abs(optimal_k(n)[1] - 1 / math.e) < 0.01


@pytest.mark.parametrize(
    "delta, n, expected", [(0.2, 500, 1.72151e-1), (0.5, 300, 2.02689e-4), (0.8, 100, 7.80991e-4)]
)
def test_chernoff_table(delta, n, expected):
    assert float(f"{chernoff_p0(delta, n):.5e}") == expected


def test_chernoff_monotone():
    for n in (10, 100, 1000):
        vals = [chernoff_p0(d, n) for d in (0.1, 0.3, 0.5, 0.9)]
        assert vals == sorted(vals, reverse=True) and len(set(vals)) == 4
    vals = [chernoff_p0(0.3, n) for n in (1, 10, 100, 1000)]
    assert vals == sorted(vals, reverse=True)


@pytest.mark.parametrize("delta", [0, 1, -0.1, 1.5])
def test_chernoff_delta_range(delta):
    with pytest.raises(DeltaOutOfRange):
        chernoff_p0(delta, 10)


def test_bounds_report_invariants():
    rep = bounds_report(100, 37, 0.5, 300)
    assert 0 <= rep.pr_lower <= rep.pr_upper <= 1
    assert 0 < rep.p0 <= 2
    assert rep.k_opt == 37
    assert rep.h_max <= secretary_bounds(100, rep.k_opt)[1]


def test_monte_carlo_two_elements():
    rate, half = monte_carlo_success(2, 1, 100_000, seed=3)
    assert abs(rate - 0.5) <= 3 * half


def test_monte_carlo_reproducible():
    assert monte_carlo_success(20, 7, 5000, seed=9) == monte_carlo_success(20, 7, 5000, seed=9)
    assert monte_carlo_success(20, 7, 5000, seed=9, n_jobs=3) == monte_carlo_success(
        20, 7, 5000, seed=9, n_jobs=3
    )


@pytest.mark.parametrize("n, k", [(10, 3), (7, 1), (30, 29), (60, 22)])
def test_monte_carlo_matches_harmonic(n, k):
    rate, half = monte_carlo_success(n, k, 200_000, seed=n * 31 + k)
    se = half / 1.959963984540054
    assert abs(rate - float(harmonic(n, k))) <= 3 * se


def test_monte_carlo_invalid():
    with pytest.raises(InvalidKN):
        monte_carlo_success(5, 5, 10)
    with pytest.raises(Exception):
        monte_carlo_success(5, 2, 0)

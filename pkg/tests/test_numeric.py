import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_swap_gains, var_exact
from streamdiv.base import MemoryBuffer, diversity_close
from streamdiv.exceptions import EmptySet
from streamdiv.numeric import (
    NumericAggregates,
    VarianceDiversity,
    apply_swap_numeric,
    pdg_numeric,
    variance,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("c", [0.0, -3.5, 1e6])
def test_variance_constant(c):
    assert variance([c, c, c]) == 0


@pytest.mark.parametrize("values, expected", [([1, 2, 3, 4, 5], 2.0), ([0, 10], 25.0)])
def test_variance_known(values, expected):
    assert variance(values) == expected


def test_variance_empty():
    with pytest.raises(EmptySet):
        variance([])


@given(st.lists(finite, min_size=1, max_size=30), finite)
def test_variance_translation_invariant(values, c):
    shifted = [v + c for v in values]
    scale = max(1.0, max(abs(v) for v in shifted)) ** 2
    assert abs(variance(values) - variance(shifted)) <= 1e-9 * scale


@given(st.lists(finite, min_size=1, max_size=30))
def test_aggregate_variance_nonnegative(values):
    agg = NumericAggregates.from_values(values)
    assert agg.variance(values) >= 0


def test_pdg_identity_swap_dominates():
    agg = NumericAggregates.from_values([0.0, 10.0])
    assert all_swap_gains([0.0, 10.0], 10.0, var_exact) == [-25.0, 0.0]
    assert pdg_numeric(agg, [0.0, 10.0], 10.0) == (0.0, 1)


def test_pdg_all_equal_slots():
    agg = NumericAggregates.from_values([5.0, 5.0, 5.0])
    assert pdg_numeric(agg, [5.0, 5.0, 5.0], 5.0) == (0.0, 0)


def test_pdg_example1_candidate_beats_scan(example1):
    slots = example1[:5]
    agg = NumericAggregates.from_values(slots)
    target, _ = pdg_numeric(agg, slots, -8914.71)
    for x in example1[5:18]:
        assert pdg_numeric(agg, slots, x)[0] < target


def test_apply_swap_known():
    slots = [0.0, 10.0]
    agg = NumericAggregates.from_values(slots)
    apply_swap_numeric(agg, slots, 0, 20.0)
    assert slots == [20.0, 10.0]
    assert agg.variance(slots) == 25.0


def test_apply_swap_same_value_keeps_aggregates():
    slots = [1.5, -2.0, 7.25]
    agg = NumericAggregates.from_values(slots)
    before = (agg.sum, agg.sum_sq)
    apply_swap_numeric(agg, slots, 1, -2.0)
    assert (agg.sum, agg.sum_sq) == before


def test_apply_swap_involution():
    slots = [3.1, -7.7, 100.25, 42.0]
    agg = NumericAggregates.from_values(slots)
    s0, q0 = agg.sum, agg.sum_sq
    apply_swap_numeric(agg, slots, 2, -999.125)
    apply_swap_numeric(agg, slots, 2, 100.25)
    assert math.isclose(agg.sum, s0, rel_tol=1e-12, abs_tol=1e-12)
    assert math.isclose(agg.sum_sq, q0, rel_tol=1e-12, abs_tol=1e-12)


def test_apply_swap_bad_slot():
    slots = [1.0, 2.0]
    with pytest.raises(IndexError):
        apply_swap_numeric(NumericAggregates.from_values(slots), slots, 2, 3.0)


def test_near_constant_data_is_rebuilt():
    base = 1e8
    slots = [base + i * 1e-4 for i in range(5)]
    agg = NumericAggregates.from_values(slots)
    assert math.isclose(agg.variance(slots), var_exact(slots), rel_tol=1e-9)
    apply_swap_numeric(agg, slots, 0, base + 5e-4)
    assert math.isclose(agg.variance(slots), var_exact(slots), rel_tol=1e-9)


def test_incremental_matches_bruteforce_random():
    rng = random.Random(11)
    for _ in range(2000):
        m = rng.randint(2, 16)
        slots = [rng.uniform(-1000, 1000) for _ in range(m)]
        cand = rng.choice([rng.uniform(-3000, 3000), rng.choice(slots)])
        agg = NumericAggregates.from_values(slots)
        gain, slot = pdg_numeric(agg, slots, cand)
        ref = all_swap_gains(slots, cand, var_exact)
        scale = var_exact(slots)
        assert diversity_close(gain, max(ref), scale)
        assert diversity_close(ref[slot], max(ref), scale)


@settings(max_examples=200)
@given(st.lists(finite, min_size=2, max_size=12, unique=True), finite, st.randoms())
def test_pdg_order_invariant(slots, cand, rnd):
    agg = NumericAggregates.from_values(slots)
    gain, _ = pdg_numeric(agg, slots, cand)
    shuffled = list(slots)
    rnd.shuffle(shuffled)
    gain2, _ = pdg_numeric(NumericAggregates.from_values(shuffled), shuffled, cand)
    assert diversity_close(gain, gain2, var_exact(slots))


@given(st.lists(finite, min_size=2, max_size=12), st.data())
def test_pdg_of_buffer_element_nonnegative(slots, data):
    cand = data.draw(st.sampled_from(slots))
    agg = NumericAggregates.from_values(slots)
    assert pdg_numeric(agg, slots, cand)[0] >= 0


@pytest.mark.parametrize("m", [2, 5, 10, 20, 40])
def test_pdg_cost_linear_in_m(m):
    measure = VarianceDiversity()
    slots = [float(i) for i in range(m)]
    buf = MemoryBuffer(slots)
    measure.attach(buf)
    for x in range(7):
        measure.pdg(buf, float(x) * 3.3)
    assert measure.evaluations == 7 * m


def test_measure_recompute_consistent_after_swaps():
    rng = random.Random(5)
    measure = VarianceDiversity()
    buf = measure.attach(MemoryBuffer([rng.uniform(-1000, 1000) for _ in range(8)]))
    for _ in range(50):
        x = rng.uniform(-1000, 1000)
        gain, slot = measure.pdg(buf, x)
        before = measure.diversity(buf)
        measure.apply_swap(buf, slot, x)
        after = measure.diversity(buf)
        assert diversity_close(after - before, gain, before)
        assert diversity_close(after, var_exact(buf.slots), after)

"""Variance-based diversity for numeric buffers.

The buffer keeps a running sum and sum of squares so that each hypothetical
swap is evaluated in constant time.
"""

import math
from dataclasses import dataclass

from .base import DiversityMeasure
from .exceptions import EmptySet

# Variance below this fraction of mean**2 is dominated by cancellation in
# sum_sq - sum**2/m and is recomputed from the slots instead.
ILL_CONDITIONED = 1e-8
NEGATIVE_CLAMP = 1e-12


def variance(values):
    """Population variance (1/m) * sum((a - mean)**2)."""
    values = list(values)
    if not values:
        raise EmptySet("variance of an empty set")
    m = len(values)
    mean = math.fsum(values) / m
    return math.fsum((v - mean) ** 2 for v in values) / m


@dataclass
class NumericAggregates:
    sum: float
    sum_sq: float
    m: int

    @classmethod
    def from_values(cls, values):
        values = list(values)
        if not values:
            raise EmptySet("cannot aggregate an empty buffer")
        return cls(math.fsum(values), math.fsum(v * v for v in values), len(values))

    @property
    def mean(self):
        return self.sum / self.m

    def raw_variance(self):
        return (self.sum_sq - self.sum * self.sum / self.m) / self.m

    def variance(self, slots=None):
        """Variance from the aggregates, falling back to ``slots`` when unstable."""
        v = self.raw_variance()
        mean = self.mean
        if slots is not None and abs(v) < ILL_CONDITIONED * mean * mean:
            return variance(slots)
        if v < 0:
            if v < -NEGATIVE_CLAMP * max(1.0, mean * mean):
                raise AssertionError(f"aggregates inconsistent: variance {v}")
            return 0.0
        return v


def swap_gains(aggregates, slots, candidate):
    """Variance change for every single swap ``slots[j] -> candidate``.

    Uses new_sum = sum - a_j + x and new_sum_sq = sum_sq - a_j**2 + x**2,
    rearranged so the result is formed from small differences:
    gain_j = (d/m) * ((x - mean) + (a_j - mean) - d/m) with d = x - a_j.
    """
    m = aggregates.m
    mean = aggregates.sum / m
    xc = candidate - mean
    gains = []
    for a in slots:
        d = candidate - a
        gains.append(d / m * (xc + (a - mean) - d / m))
    return gains


def pdg_numeric(aggregates, slots, candidate):
    """Return ``(gain, slot)`` of the best single swap; ties go to the lowest slot."""
    best_gain = -math.inf
    best_slot = 0
    for j, g in enumerate(swap_gains(aggregates, slots, candidate)):
        if g > best_gain:
            best_gain, best_slot = g, j
    return best_gain, best_slot


def apply_swap_numeric(aggregates, slots, slot, candidate):
    """Swap ``candidate`` into ``slots[slot]`` and update the aggregates in place."""
    if not 0 <= slot < len(slots):
        raise IndexError(f"slot {slot} out of range for m={len(slots)}")
    old = slots[slot]
    slots[slot] = candidate
    aggregates.sum += candidate - old
    aggregates.sum_sq += candidate * candidate - old * old
    mean = aggregates.mean
    if abs(aggregates.raw_variance()) < ILL_CONDITIONED * mean * mean:
        rebuilt = NumericAggregates.from_values(slots)
        aggregates.sum, aggregates.sum_sq = rebuilt.sum, rebuilt.sum_sq
    return aggregates, slots


class VarianceDiversity(DiversityMeasure):
    """Population variance of the buffer.

    ``evaluations`` counts single-swap evaluations, so one :meth:`pdg` call
    adds exactly ``m``.
    """

    kind = "numeric"

    def __init__(self):
        self.evaluations = 0

    def build_cache(self, slots):
        return NumericAggregates.from_values(slots)

    def diversity(self, buffer):
        return buffer.measure_cache.variance(buffer.slots)

    def pdg(self, buffer, candidate):
        self.evaluations += buffer.m
        return pdg_numeric(buffer.measure_cache, buffer.slots, float(candidate))

    def apply_swap(self, buffer, slot, candidate):
        apply_swap_numeric(buffer.measure_cache, buffer.slots, slot, float(candidate))

    def recompute(self, slots):
        return variance(slots)

    def distance(self, x, y):
        return abs(x - y)

    def __repr__(self):
        return "VarianceDiversity()"

"""Sum-of-pairwise-edit-distance diversity for string buffers.

The cache holds the full m x m distance matrix and its row sums.  Scoring a
candidate needs its m distances to the slots once; every hypothetical swap
gain then follows arithmetically:

    gain_j = sum_{i != j} d(x, s_i) - sum_{i != j} d(s_j, s_i)
"""

import math
from dataclasses import dataclass, field

from rapidfuzz.distance import Levenshtein

from .base import DiversityMeasure


def edit_distance(x, y):
    """Levenshtein distance with unit costs, two-row dynamic programming.

    Characters are Unicode code points; comparison is case-sensitive.
    """
    if len(x) < len(y):
        x, y = y, x
    if not y:
        return len(x)
    prev = list(range(len(y) + 1))
    for i, cx in enumerate(x, 1):
        cur = [i]
        for j, cy in enumerate(y, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (cx != cy)))
        prev = cur
    return prev[-1]


# Same metric, C implementation. Used on hot paths; edit_distance is the reference.
fast_edit_distance = Levenshtein.distance


def dis_sum(strings, distance=fast_edit_distance):
    """Sum of edit distances over all unordered pairs."""
    strings = list(strings)
    total = 0
    for i in range(len(strings) - 1):
        for j in range(i + 1, len(strings)):
            total += distance(strings[i], strings[j])
    return total


@dataclass
class DistanceCache:
    pair_dist: list
    row_sums: list
    total: int
    # distances of the most recently scored candidate, reused by apply_swap
    last_candidate: object = None
    last_dists: list = field(default=None, repr=False)

    @classmethod
    def from_strings(cls, slots, distance=fast_edit_distance):
        m = len(slots)
        pair = [[0] * m for _ in range(m)]
        for i in range(m - 1):
            for j in range(i + 1, m):
                pair[i][j] = pair[j][i] = distance(slots[i], slots[j])
        rows = [sum(r) for r in pair]
        return cls(pair, rows, sum(rows) // 2)


def _candidate_dists(cache, slots, candidate, distance):
    if cache.last_dists is not None and cache.last_candidate == candidate:
        return cache.last_dists
    dists = [distance(candidate, s) for s in slots]
    cache.last_candidate, cache.last_dists = candidate, dists
    return dists


def pdg_string(cache, slots, candidate, distance=fast_edit_distance):
    """Return ``(gain, slot)`` of the best single swap; ties go to the lowest slot."""
    dists = _candidate_dists(cache, slots, candidate, distance)
    to_all = sum(dists)
    best_gain = -math.inf
    best_slot = 0
    for j, (dj, row) in enumerate(zip(dists, cache.row_sums)):
        g = (to_all - dj) - row
        if g > best_gain:
            best_gain, best_slot = g, j
    return best_gain, best_slot


def apply_swap_string(cache, slots, slot, candidate, distance=fast_edit_distance):
    """Swap ``candidate`` into ``slots[slot]``; only row/column ``slot`` changes."""
    m = len(slots)
    if not 0 <= slot < m:
        raise IndexError(f"slot {slot} out of range for m={m}")
    dists = list(_candidate_dists(cache, slots, candidate, distance))
    dists[slot] = 0
    pair = cache.pair_dist
    for i in range(m):
        if i == slot:
            continue
        cache.row_sums[i] += dists[i] - pair[i][slot]
        pair[i][slot] = pair[slot][i] = dists[i]
    new_row = sum(dists)
    cache.total += new_row - cache.row_sums[slot]
    cache.row_sums[slot] = new_row
    slots[slot] = candidate
    cache.last_candidate = cache.last_dists = None
    return cache, slots


class EditDistanceDiversity(DiversityMeasure):
    """Sum of pairwise edit distances.

    ``distance_calls`` counts edit-distance evaluations made while scoring
    and swapping; one fresh :meth:`pdg` call adds exactly ``m``.
    """

    kind = "string"

    def __init__(self, distance=fast_edit_distance):
        self._distance = distance
        self.distance_calls = 0

    def _counted(self, x, y):
        self.distance_calls += 1
        return self._distance(x, y)

    def build_cache(self, slots):
        return DistanceCache.from_strings(slots, self._distance)

    def diversity(self, buffer):
        return buffer.measure_cache.total

    def pdg(self, buffer, candidate):
        return pdg_string(buffer.measure_cache, buffer.slots, candidate, self._counted)

    def apply_swap(self, buffer, slot, candidate):
        apply_swap_string(buffer.measure_cache, buffer.slots, slot, candidate, self._counted)

    def recompute(self, slots):
        return dis_sum(slots, self._distance)

    def distance(self, x, y):
        return self._distance(x, y)

    def __repr__(self):
        return "EditDistanceDiversity()"

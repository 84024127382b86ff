"""Offline references: the brute-force best single swap and greedy MaxMin."""

import gc
import math
import time
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from rapidfuzz import process
from rapidfuzz.distance import Levenshtein

from .base import SelectionConfig, initialize_memory, run_selection
from .exceptions import EmptyWindow, InsufficientData
from .sampling import SamplingPlan, segment_partition, select_segments


@dataclass
class OracleVerdict:
    best_position: int
    best_pdg: float
    algorithm_succeeded: bool | None = None
    dir_ratio_vs_optimal: float | None = None


def window_pdgs(window, buffer, measure):
    """PDG of every window element against a private copy of ``buffer``."""
    ref = buffer.copy(measure)
    return [measure.pdg(ref, x) for x in window]


def brute_force_best_swap(window, buffer, measure, outcome=None):
    """Best single swap over the whole window, relative to the initial buffer.

    ``buffer`` must hold the slots as they were *before* the online run.
    Ties go to the earliest position.  With ``outcome`` the verdict also
    says whether the online run picked the same position.
    """
    window = list(window)
    if not window:
        raise EmptyWindow("oracle needs at least one window element")
    best_pos, best_pdg = 0, -math.inf
    for pos, (gain, _) in enumerate(window_pdgs(window, buffer, measure), 1):
        if gain > best_pdg:
            best_pos, best_pdg = pos, gain
    verdict = OracleVerdict(best_pos, best_pdg)
    if outcome is not None:
        verdict.algorithm_succeeded = outcome.replaced and outcome.selected_position == best_pos
        if best_pdg > 0:
            verdict.dir_ratio_vs_optimal = outcome.pdg / best_pdg
    return verdict


def _farthest_pair_numeric(x):
    lo, hi = int(np.argmin(x)), int(np.argmax(x))
    if x[lo] == x[hi]:
        return 0, 1
    return min(lo, hi), max(lo, hi)


def _farthest_pair_edit(data):
    # d(x, y) <= max(len(x), len(y)); rows that cannot beat the best are skipped.
    lens = np.fromiter((len(s) for s in data), dtype=np.int64, count=len(data))
    suffix_max = np.maximum.accumulate(lens[::-1])[::-1]
    best, pair = -1, (0, 1)
    for i in range(len(data) - 1):
        if max(lens[i], suffix_max[i + 1]) <= best:
            continue
        row = process.cdist([data[i]], data[i + 1:], scorer=Levenshtein.distance, workers=1)[0]
        j = int(np.argmax(row))
        if row[j] > best:
            best, pair = int(row[j]), (i, i + 1 + j)
    return pair


def _farthest_pair_generic(data, metric):
    best, pair = -math.inf, (0, 1)
    for i in range(len(data) - 1):
        for j in range(i + 1, len(data)):
            d = metric(data[i], data[j])
            if d > best:
                best, pair = d, (i, j)
    return pair


def _resolve_metric(metric, data):
    if metric == "auto":
        metric = "edit" if data and isinstance(data[0], str) else "absolute"
    if metric not in ("absolute", "edit") and not callable(metric):
        raise ValueError(f"unknown metric {metric!r}")
    return metric


def maxmin_select(dataset, m, metric="auto"):
    """Greedy max-min dispersion; returns the indices of the ``m`` chosen elements.

    Starts from the farthest pair (earliest pair on ties) and then repeatedly
    adds the element whose distance to the chosen set is largest (earliest
    index on ties).  ``metric`` is ``"absolute"``, ``"edit"``, ``"auto"`` or
    a callable ``metric(x, y)``.
    """
    data = list(dataset)
    if m < 2 or len(data) < m:
        raise InsufficientData(f"need at least m={m} >= 2 elements, got {len(data)}")
    metric = _resolve_metric(metric, data)

    if metric == "absolute":
        x = np.asarray(data, dtype=float)
        i, j = _farthest_pair_numeric(x)
        dist_to = lambda idx: np.abs(x - x[idx])
    elif metric == "edit":
        i, j = _farthest_pair_edit(data)
        dist_to = lambda idx: process.cdist(
            [data[idx]], data, scorer=Levenshtein.distance, dtype=np.int64, workers=1
        )[0].astype(float)
    else:
        i, j = _farthest_pair_generic(data, metric)
        dist_to = lambda idx: np.array([metric(data[idx], y) for y in data], dtype=float)

    chosen = [i, j]
    min_dist = np.minimum(dist_to(i), dist_to(j))
    min_dist[chosen] = -np.inf
    while len(chosen) < m:
        nxt = int(np.argmax(min_dist))
        chosen.append(nxt)
        min_dist = np.minimum(min_dist, dist_to(nxt))
        min_dist[chosen] = -np.inf
    return chosen


class Timing(NamedTuple):
    stream_time: float
    maxmin_time: float
    segments: int

    @property
    def stream_time_per_segment(self):
        return self.stream_time / self.segments


def run_on_segments(data, m, k, measure_factory, a, s, seed=None):
    """Run one selection per sampled segment; yields ``(segment_id, outcome)``."""
    plan = SamplingPlan(a=a, s=s, total=len(data), seed=seed).validate(m)
    ranges = segment_partition(len(data), a)
    for seg in select_segments(plan):
        r = ranges[seg]
        it = iter(data[r.start:r.stop])
        measure = measure_factory()
        buffer = initialize_memory(it, m, measure)
        n = a - buffer.init_reads
        yield seg, run_selection(it, SelectionConfig(m, k, n), measure, buffer)


def timed_comparison(dataset, m, k, measure_factory, a, s=10, seed=0):
    """Wall-clock the sampled stream selection against MaxMin on the same data."""
    data = list(dataset)
    metric = getattr(measure_factory(), "kind", None)
    metric = "edit" if metric == "string" else "absolute"

    # like timeit, keep collector pauses from the freshly built data out of the clock
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        done = sum(1 for _ in run_on_segments(data, m, k, measure_factory, a, s, seed))
        stream_time = time.perf_counter() - start

        start = time.perf_counter()
        maxmin_select(data, m, metric)
        maxmin_time = time.perf_counter() - start
    finally:
        if gc_was_enabled:
            gc.enable()
    return Timing(stream_time, maxmin_time, done)

"""Segment sampling and the success-probability bounds of the stopping rule."""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._validation import check_int
from .exceptions import (
    ConfigError,
    DeltaOutOfRange,
    InvalidKN,
    InvalidN,
    TooManySegmentsRequested,
    ZeroSegmentSize,
)


@dataclass(frozen=True)
class SamplingPlan:
    """Fixed-size segments of ``a`` elements; ``s`` of them sampled without replacement."""

    a: int
    s: int
    total: int
    seed: int | None = None

    @property
    def n_segments(self):
        return self.total // self.a if self.a > 0 else 0

    def validate(self, m=None):
        if self.a < 1:
            raise ZeroSegmentSize("segment size a must be >= 1")
        if m is not None and self.a < m + 2:
            raise ConfigError(f"segment size a={self.a} leaves no room for m={m}, k>=1 and n>k")
        check_int(self.s, "s", min_val=1)
        if self.s > self.n_segments:
            raise TooManySegmentsRequested(
                f"s={self.s} segments requested but only {self.n_segments} of size {self.a} exist"
            )
        return self


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    pr_lower: float
    pr_upper: float
    pr_exact: float
    k_opt: int
    h_max: float
    p0: float | None
    delta: float | None
    s: int | None


def segment_partition(total, a):
    """``total // a`` contiguous half-open ranges of length ``a``; the tail is dropped."""
    if a < 1:
        raise ZeroSegmentSize("segment size a must be >= 1")
    return [range(i * a, (i + 1) * a) for i in range(total // a)]


def select_segments(plan):
    """Sorted uniform ``s``-subset of the segment indices, reproducible per seed."""
    plan.validate()
    rng = np.random.default_rng(plan.seed)
    picked = rng.choice(plan.n_segments, size=plan.s, replace=False)
    return sorted(int(i) for i in picked)


def _check_kn(n, k):
    if isinstance(n, bool) or isinstance(k, bool) or int(n) != n or int(k) != k:
        raise InvalidKN(f"n and k must be integers (n={n!r}, k={k!r})")
    if not 1 <= k < n:
        raise InvalidKN(f"need 1 <= k < n, got k={k}, n={n}")
    return int(n), int(k)


def harmonic_success(n, k):
    """Exact success probability (k/n) * sum_{i=k}^{n-1} 1/i."""
    n, k = _check_kn(n, k)
    return k / n * math.fsum(1.0 / i for i in range(k, n))


def secretary_bounds(n, k):
    """Integral lower/upper bounds on the probability of picking the best element.

    For ``k == 1`` the upper bound involves ln(0); the exact harmonic sum is
    returned for both bounds instead.
    """
    n, k = _check_kn(n, k)
    if k == 1:
        exact = harmonic_success(n, k)
        return exact, exact
    lower = k / n * (math.log(n) - math.log(k))
    upper = k / n * (math.log(n - 1) - math.log(k - 1))
    clamp = lambda p: min(max(p, 0.0), 1.0)
    return clamp(lower), clamp(upper)


def h(k, n):
    return k / n * (math.log(n) - math.log(k))


def optimal_k(n):
    """Integer scan length maximizing (k/n)(ln n - ln k); returns ``(k_opt, h_max)``."""
    if isinstance(n, bool) or int(n) != n or n < 3:
        raise InvalidN(f"n must be an integer >= 3, got {n!r}")
    n = int(n)
    x = n / math.e
    candidates = sorted({min(max(math.floor(x), 1), n - 1), min(max(math.ceil(x), 1), n - 1)})
    best = max(candidates, key=lambda c: (h(c, n), -c))
    return best, h(best, n)


def chernoff_p0(delta, n_samples):
    """Deviation bound 2 * exp(-delta**2 * n_samples / (3e))."""
    if not 0 < delta < 1:
        raise DeltaOutOfRange(f"delta must lie in (0, 1), got {delta}")
    n_samples = check_int(n_samples, "n_samples", min_val=1)
    return 2.0 * math.exp(-delta * delta * n_samples / (3.0 * math.e))


def bounds_report(n, k, delta=None, s=None):
    lower, upper = secretary_bounds(n, k)
    k_opt, h_max = optimal_k(n) if n >= 3 else (1, harmonic_success(n, 1))
    p0 = chernoff_p0(delta, s) if delta is not None and s is not None else None
    return BoundsReport(n, k, lower, upper, harmonic_success(n, k), k_opt, h_max, p0, delta, s)


def _draw_scores(rng, rows, n, k):
    # Rank order of i.i.d. continuous keys is a uniform random permutation.
    # Rows where a tie could change the outcome are redrawn, so the rule
    # only ever sees distinct relevant scores.
    scores = rng.random((rows, n))
    while True:
        top = scores.max(axis=1)
        scan_max = scores[:, :k].max(axis=1)
        tied = ((scores == top[:, None]).sum(axis=1) > 1) | (
            (scores[:, k:] == scan_max[:, None]).any(axis=1)
        )
        if not tied.any():
            return scores, top, scan_max
        scores[tied] = rng.random((int(tied.sum()), n))


def _success_count(n, k, trials, rng, chunk):
    wins = 0
    done = 0
    while done < trials:
        rows = min(chunk, trials - done)
        scores, top, scan_max = _draw_scores(rng, rows, n, k)
        beats = scores[:, k:] > scan_max[:, None]
        hit = beats.any(axis=1)
        chosen = np.where(hit, k + beats.argmax(axis=1), n - 1)
        wins += int(np.count_nonzero(scores[np.arange(rows), chosen] == top))
        done += rows
    return wins


def monte_carlo_success(n, k, trials, seed=None, n_jobs=1):
    """Empirical success rate of the stopping rule on random permutations.

    Each trial draws scores in uniformly random rank order, scans the first
    ``k``, picks the first later score above the scan maximum (or the last
    one) and counts a success when the pick is the overall maximum.  Work is split
    across ``n_jobs`` workers, each with its own spawned RNG stream, so the
    result depends only on ``(seed, n_jobs)``.

    Returns ``(rate, ci_half_width)`` with a 95% normal-approximation interval.
    """
    n, k = _check_kn(n, k)
    trials = check_int(trials, "trials", min_val=1)
    n_jobs = check_int(n_jobs, "n_jobs", min_val=1)
    chunk = max(1, min(trials, 2_000_000 // n))
    children = np.random.SeedSequence(seed).spawn(n_jobs)
    shares = [trials // n_jobs + (1 if i < trials % n_jobs else 0) for i in range(n_jobs)]
    jobs = [(np.random.default_rng(ss), t) for ss, t in zip(children, shares) if t]
    if len(jobs) == 1:
        wins = _success_count(n, k, jobs[0][1], jobs[0][0], chunk)
    else:
        with ThreadPoolExecutor(max_workers=len(jobs)) as pool:
            wins = sum(pool.map(lambda j: _success_count(n, k, j[1], j[0], chunk), jobs))
    rate = wins / trials
    half = 1.959963984540054 * math.sqrt(rate * (1 - rate) / trials)
    return rate, half

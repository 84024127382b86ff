"""Generic one-pass selection engine.

The engine keeps an ``m``-slot buffer, scans ``k`` stream elements to learn
the best possible diversity gain seen so far, then swaps in the first later
element that beats it (or the last element if none does).  Everything that
depends on the element kind lives behind :class:`DiversityMeasure`.
"""

import math
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass

from ._validation import check_int, check_selection_params, check_stream
from .exceptions import StreamExhausted, ZeroBaselineDiversity

# Looser of the two wins when comparing diversity values.
REL_TOL = 1e-9
ABS_TOL = 1e-12


def diversity_close(a, b, scale=None):
    """Tolerance check for diversity quantities.

    ``scale`` is the magnitude the values were derived from (typically the
    baseline diversity); gains are differences of diversities so their
    rounding error follows the diversity scale, not their own size.
    """
    ref = max(abs(a), abs(b), abs(scale) if scale is not None else 0.0)
    return abs(a - b) <= max(REL_TOL * ref, ABS_TOL)


@dataclass
class MemoryBuffer:
    """The in-memory result set plus the aggregate owned by the active measure."""

    slots: list
    measure_cache: object = None
    init_reads: int = 0

    @property
    def m(self):
        return len(self.slots)

    def copy(self, measure=None):
        """Deep enough copy for trial swaps; the cache is rebuilt from slots."""
        cache = measure.build_cache(self.slots) if measure is not None else None
        return MemoryBuffer(list(self.slots), cache, self.init_reads)


@dataclass(frozen=True)
class SelectionConfig:
    m: int
    k: int
    n: int

    def __post_init__(self):
        check_selection_params(self.m, self.k, self.n)


@dataclass
class SelectionOutcome:
    """Record of one selection run.

    Positions are 1-based into the post-initialization stream; slots are
    0-based.  ``evicted_slot`` is ``None`` only when a non-improving forced
    replacement was skipped on request.
    """

    selected_position: int
    evicted_slot: int | None
    pdg: float
    div0: float
    div_final: float
    dir: float
    forced_final: bool
    elements_scanned: int
    wall_time: float
    selected_element: object = None
    evicted_element: object = None
    pdg_max: float = -math.inf
    pdg_max_position: int | None = None
    replaced: bool = True


class DiversityMeasure(ABC):
    """Contract between the engine and a concrete diversity definition."""

    kind = None

    @abstractmethod
    def build_cache(self, slots):
        """Aggregate state for ``slots`` computed from scratch."""

    @abstractmethod
    def diversity(self, buffer):
        """Diversity of the buffer, read from the cache."""

    @abstractmethod
    def pdg(self, buffer, candidate):
        """Return ``(gain, best_slot)`` for swapping ``candidate`` in.

        Ties on the gain resolve to the lowest slot index.
        """

    @abstractmethod
    def apply_swap(self, buffer, slot, candidate):
        """Replace ``buffer.slots[slot]`` with ``candidate`` and update the cache."""

    @abstractmethod
    def recompute(self, slots):
        """Diversity of ``slots`` by direct evaluation, bypassing any cache."""

    @abstractmethod
    def distance(self, x, y):
        """Pairwise distance used by the MaxMin baseline."""

    def attach(self, buffer):
        buffer.measure_cache = self.build_cache(buffer.slots)
        return buffer


def dir_ratio(pdg, div0):
    """Diversity increasing rate ``pdg / div0``."""
    if div0 == 0:
        raise ZeroBaselineDiversity("initial diversity is zero; DIR is undefined")
    return pdg / div0


def initialize_memory(stream, m, measure=None):
    """Fill a buffer with the first ``m`` distinct elements of ``stream``.

    ``stream`` should be an iterator: on return it is positioned right after
    the element that completed the buffer.  Distinctness is exact.
    """
    m = check_int(m, "m", min_val=1)
    it = check_stream(stream)
    seen = set()
    slots = []
    reads = 0
    for item in it:
        reads += 1
        if item in seen:
            continue
        seen.add(item)
        slots.append(item)
        if len(slots) == m:
            break
    if len(slots) < m:
        raise StreamExhausted(
            f"stream holds only {len(slots)} distinct elements, {m} required"
        )
    buffer = MemoryBuffer(slots, init_reads=reads)
    if measure is not None:
        measure.attach(buffer)
    return buffer


def run_selection(stream, config, measure, buffer=None, *, skip_nonimproving_final=False):
    """Run the scan-then-select procedure over the next ``config.n`` elements.

    When ``buffer`` is omitted it is initialized from ``stream`` first.
    Elements after the stopping point are never read.
    """
    it = check_stream(stream)
    if buffer is None:
        buffer = initialize_memory(it, config.m, measure)
    elif buffer.measure_cache is None:
        measure.attach(buffer)

    div0 = measure.diversity(buffer)
    if div0 == 0:
        raise ZeroBaselineDiversity("initial diversity is zero; DIR is undefined")

    k, n = config.k, config.n
    pdg_max = -math.inf
    pdg_max_pos = None
    chosen = None
    forced = False

    start = time.perf_counter()
    for pos in range(1, n + 1):
        try:
            item = next(it)
        except StopIteration:
            raise StreamExhausted(
                f"stream ended after {pos - 1} elements, n={n} required"
            ) from None
        gain, slot = measure.pdg(buffer, item)
        if pos <= k:
            if gain > pdg_max:
                pdg_max, pdg_max_pos = gain, pos
            continue
        if gain > pdg_max:
            chosen = (pos, item, gain, slot)
            break
        if pos == n:
            chosen = (pos, item, gain, slot)
            forced = True

    pos, item, gain, slot = chosen
    replaced = not (forced and skip_nonimproving_final and gain <= 0)
    evicted = None
    if replaced:
        evicted = buffer.slots[slot]
        measure.apply_swap(buffer, slot, item)
    else:
        gain, slot = 0.0, None
    wall = time.perf_counter() - start

    div_final = measure.diversity(buffer)
    return SelectionOutcome(
        selected_position=pos,
        evicted_slot=slot,
        pdg=gain,
        div0=div0,
        div_final=div_final,
        dir=dir_ratio(gain, div0),
        forced_final=forced,
        elements_scanned=pos,
        wall_time=wall,
        selected_element=item,
        evicted_element=evicted,
        pdg_max=pdg_max,
        pdg_max_position=pdg_max_pos,
        replaced=replaced,
    )

"""Segment-sampled experiments and their CSV records."""

import csv
import io
from dataclasses import astuple, dataclass, fields

from .base import SelectionConfig, initialize_memory, run_selection
from .estimator import make_measure
from .exceptions import ConfigError
from .oracle import brute_force_best_swap
from .sampling import SamplingPlan, segment_partition, select_segments

SWEEPABLE = {"m": int, "k": int, "a": int, "s": int, "delta": float}


@dataclass
class ExperimentRecord:
    run_id: int
    kind: str
    m: int
    k: int
    n: int
    a: int
    s: int
    delta: float
    seed: int
    segment_id: int
    selected_position: int
    evicted_slot: object
    pdg: float
    div0: float
    dir: float
    forced_final: int
    success_vs_oracle: object
    runtime_us: object


HEADER = [f.name for f in fields(ExperimentRecord)]


@dataclass
class RunParams:
    kind: str
    m: int
    k: int
    a: int
    s: int
    delta: float = 0.2
    seed: int = 0
    verify: bool = False
    skip_nonimproving_final: bool = False
    timing: bool = True

    def check(self):
        if self.kind not in ("numeric", "string"):
            raise ConfigError(f"--kind must be numeric or string, got {self.kind!r}")
        if self.m < 2:
            raise ConfigError(f"--m must be >= 2, got {self.m}")
        if self.k < 1:
            raise ConfigError(f"--k must be >= 1, got {self.k}")
        if not 0 < self.delta < 1:
            raise ConfigError(f"--delta must lie in (0, 1), got {self.delta}")
        if self.a < self.m + self.k + 1:
            raise ConfigError(
                f"--a={self.a} is too small: a segment needs m={self.m} buffer elements, "
                f"k={self.k} scan elements and at least one more (a >= {self.m + self.k + 1})"
            )
        return self


def run_segment(segment, params):
    """Selection on one segment; returns ``(n, outcome, verdict_or_None)``."""
    it = iter(segment)
    measure = make_measure(params.kind)
    buffer = initialize_memory(it, params.m, measure)
    n = len(segment) - buffer.init_reads
    if params.k >= n:
        raise ConfigError(
            f"k={params.k} must be smaller than the {n} elements left in the segment after "
            f"filling the buffer; lower --k or raise --a"
        )
    initial = buffer.copy(measure) if params.verify else None
    window = segment[buffer.init_reads:] if params.verify else None
    outcome = run_selection(
        it, SelectionConfig(params.m, params.k, n), measure, buffer,
        skip_nonimproving_final=params.skip_nonimproving_final,
    )
    verdict = brute_force_best_swap(window, initial, measure, outcome) if params.verify else None
    return n, outcome, verdict


def run_experiment(data, params, run_id=0):
    """One record per sampled segment, ordered by segment id."""
    params.check()
    plan = SamplingPlan(a=params.a, s=params.s, total=len(data), seed=params.seed)
    plan.validate(params.m)
    ranges = segment_partition(len(data), params.a)
    records = []
    for seg in select_segments(plan):
        r = ranges[seg]
        n, out, verdict = run_segment(data[r.start:r.stop], params)
        records.append(ExperimentRecord(
            run_id=run_id, kind=params.kind, m=params.m, k=params.k, n=n, a=params.a,
            s=params.s, delta=params.delta, seed=params.seed, segment_id=seg,
            selected_position=out.selected_position,
            evicted_slot="" if out.evicted_slot is None else out.evicted_slot,
            pdg=out.pdg, div0=out.div0, dir=out.dir, forced_final=int(out.forced_final),
            success_vs_oracle="" if verdict is None else int(verdict.algorithm_succeeded),
            runtime_us=round(out.wall_time * 1e6, 3) if params.timing else "",
        ))
    return records


def parse_sweep(spec):
    """``"k=10:5:30"`` -> ``("k", [10, 15, 20, 25, 30])``; END is inclusive."""
    try:
        name, rng = spec.split("=", 1)
        start, step, end = rng.split(":")
    except ValueError:
        raise ConfigError(f"--sweep must look like PARAM=START:STEP:END, got {spec!r}") from None
    name = name.strip()
    if name not in SWEEPABLE:
        raise ConfigError(f"cannot sweep {name!r}; choose one of {', '.join(SWEEPABLE)}")
    cast = SWEEPABLE[name]
    try:
        start, step, end = cast(start), cast(step), cast(end)
    except ValueError:
        raise ConfigError(f"bad numbers in --sweep {spec!r}") from None
    if step <= 0 or end < start:
        raise ConfigError(f"--sweep needs step > 0 and END >= START, got {spec!r}")
    values = []
    i = 0
    while True:
        v = start + i * step
        if v > end + (1e-12 if cast is float else 0):
            break
        values.append(round(v, 12) if cast is float else v)
        i += 1
    return name, values


def run_sweep(data, params, sweep=None):
    """Repeat the experiment per sweep value, all other parameters fixed."""
    if sweep is None:
        return run_experiment(data, params)
    name, values = parse_sweep(sweep)
    records = []
    for run_id, v in enumerate(values):
        p = RunParams(**{**params.__dict__, name: v})
        records.extend(run_experiment(data, p, run_id=run_id))
    return records


def write_csv(records, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(HEADER)
    for rec in records:
        writer.writerow(astuple(rec))


def records_to_csv(records):
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()

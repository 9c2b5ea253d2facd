"""Monte Carlo estimation of P(K_n is cover solvable) across pebble counts.

Per trial, a configuration is drawn from the requested model and tested
with the exact complete-graph criterion (odd stacks + total >= 2n), so a
trial costs O(t) and no graph search ever runs.  Each trial's randomness
is a pure function of (seed, t, trial index), which makes sweeps
bit-reproducible for any worker count.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from multiprocessing import Pool

import numpy as np

from .sampling import RandomModel, SeededStream, be_counts, mb_counts

_T_STRIDE = 2**32  # stream index packs (t, trial) as t * 2^32 + trial


@dataclass(frozen=True)
class SweepRecord:
    """Estimated solvability probability for one (model, n, t) point."""

    model: RandomModel
    n: int
    t: int
    trials: int
    solvable_count: int
    seed: int

    @property
    def p_hat(self) -> float:
        return self.solvable_count / self.trials


@dataclass(frozen=True)
class ThresholdCurve:
    """SweepRecords sharing (model, n, trials, seed), sorted by distinct t."""

    records: tuple

    def __post_init__(self):
        recs = self.records
        if any(a.t >= b.t for a, b in zip(recs, recs[1:])):
            raise ValueError("records must be sorted by strictly increasing t")
        if len({(r.model, r.n, r.trials, r.seed) for r in recs}) > 1:
            raise ValueError("records must share model, n, trials, and seed")

    @property
    def crossing(self):
        return crossing_point(self)


def _trial_counts(model: RandomModel, n: int, t: int, rng) -> np.ndarray:
    if model is RandomModel.MAXWELL_BOLTZMANN:
        return mb_counts(n, t, rng)
    return be_counts(n, t, rng)


def _count_solvable(args) -> int:
    model_value, n, t, lo, hi, seed = args
    model = RandomModel(model_value)
    count = 0
    for trial in range(lo, hi):
        rng = SeededStream(seed, t * _T_STRIDE + trial).generator()
        counts = _trial_counts(model, n, t, rng)
        odd = int(np.count_nonzero(counts & 1))
        if odd + t >= 2 * n:
            count += 1
    return count


def estimate_solvable_probability(
    model: RandomModel, n: int, t: int, trials: int, seed: int
) -> SweepRecord:
    """Draw `trials` configurations on K_n and count the cover-solvable ones."""
    model = RandomModel(model)
    if trials < 1:
        raise ValueError("need at least one trial")
    if n < 1:
        raise ValueError("need n >= 1")
    if not 0 <= t < _T_STRIDE:
        raise ValueError(f"t out of range for stream indexing: {t}")
    solvable = _count_solvable((model.value, n, t, 0, trials, seed))
    return SweepRecord(model, n, t, trials, solvable, seed)


def sweep(
    model: RandomModel,
    n: int,
    t_min: int,
    t_max: int,
    step: int,
    trials: int,
    seed: int,
    workers: int = 1,
) -> ThresholdCurve:
    """One SweepRecord per t in range(t_min, t_max + 1, step).

    With workers > 1, trials are distributed over a process pool in chunks;
    per-trial streams make the result identical for every worker count.
    """
    model = RandomModel(model)
    if t_min > t_max:
        raise ValueError("t_min must not exceed t_max")
    if step < 1:
        raise ValueError("step must be positive")
    if trials < 1:
        raise ValueError("need at least one trial")
    ts = list(range(t_min, t_max + 1, step))
    if workers <= 1:
        totals = {t: _count_solvable((model.value, n, t, 0, trials, seed)) for t in ts}
    else:
        chunk = max(1, -(-trials // (workers * 4)))
        tasks = [
            (model.value, n, t, lo, min(lo + chunk, trials), seed)
            for t in ts
            for lo in range(0, trials, chunk)
        ]
        with Pool(processes=workers) as pool:
            results = pool.map(_count_solvable, tasks)
        totals = {t: 0 for t in ts}
        for task, solvable in zip(tasks, results):
            totals[task[2]] += solvable
    records = tuple(
        SweepRecord(model, n, t, trials, totals[t], seed) for t in ts
    )
    return ThresholdCurve(records)


def crossing_point(curve, level: float = 0.5):
    """Linear interpolation of the last upward crossing through `level`.

    Takes the last record with p_hat < level followed by a record with
    p_hat >= level; None when the curve never crosses.
    """
    records = curve.records if isinstance(curve, ThresholdCurve) else tuple(curve)
    if not records:
        raise ValueError("empty curve")
    below = [i for i, r in enumerate(records) if r.p_hat < level]
    if not below or below[-1] == len(records) - 1:
        return None
    i = below[-1]
    lo, hi = records[i], records[i + 1]
    return lo.t + (level - lo.p_hat) * (hi.t - lo.t) / (hi.p_hat - lo.p_hat)


CSV_HEADER = "model,n,t,trials,solvable_count,p_hat,seed"


def curve_to_csv(curve: ThresholdCurve, include_crossing: bool = False) -> str:
    """Render the sweep as CSV; optionally append the crossing summary line."""
    out = io.StringIO()
    out.write(CSV_HEADER + "\n")
    for r in curve.records:
        out.write(
            f"{r.model.value},{r.n},{r.t},{r.trials},{r.solvable_count},{r.p_hat},{r.seed}\n"
        )
    if include_crossing:
        t_star = curve.crossing
        if t_star is not None:
            n = curve.records[0].n
            out.write(f"# crossing t*={t_star} t*/n={t_star / n}\n")
        else:
            out.write("# crossing t*=none\n")
    return out.getvalue()

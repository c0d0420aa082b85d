"""Monte Carlo estimation of capture probabilities, collision moments, and
capture-time scaling.

All estimators are deterministic functions of (inputs, seed): trials are
generated in fixed-size blocks whose generators are derived from the seed and
the block index, so results do not depend on how work is scheduled.
Indicator and collision counts are accumulated as exact integer tallies.
"""

from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import strategies
from .errors import InputError
from .game import HunterPath, RabbitPath, check_cycle_size, default_cutoff, unbounded_capture_times
from .rng import STREAM_TRIALS, stream

Z95 = 1.959963984540054
TRIAL_BLOCK = 8192  # fixed so that stream derivation is schedule-independent


@dataclass(frozen=True)
class EstimateWithCI:
    point: float
    ci_low: float
    ci_high: float
    trials: int
    seed: int
    censored_count: int = 0
    method: str = "wilson"

    def __post_init__(self):
        if not (self.ci_low <= self.point <= self.ci_high):
            raise InputError("confidence interval must bracket the point estimate")
        if self.trials < 1:
            raise InputError("trials must be >= 1")

    @property
    def halfwidth(self) -> float:
        return (self.ci_high - self.ci_low) / 2


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    if trials < 1:
        raise InputError("trials must be >= 1")
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def normal_interval(mean: float, sd: float, trials: int, z: float = Z95) -> tuple[float, float]:
    half = z * sd / math.sqrt(trials)
    return mean - half, mean + half


def _proportion_estimate(successes, trials, seed, censored=0) -> EstimateWithCI:
    lo, hi = wilson_interval(successes, trials)
    return EstimateWithCI(successes / trials, lo, hi, trials, seed, censored, "wilson")


def _mean_estimate(total, total_sq, trials, seed, censored=0) -> EstimateWithCI:
    mean = total / trials
    var = max(0.0, total_sq / trials - mean * mean)
    lo, hi = normal_interval(mean, math.sqrt(var), trials)
    return EstimateWithCI(mean, lo, hi, trials, seed, censored, "normal")


def respec(template, side: str, n: int) -> strategies.StrategySpec:
    """Rebuild a strategy spec (or bare kind name) for a different cycle size."""
    if isinstance(template, str):
        return strategies.StrategySpec(side, template, n)
    return strategies.StrategySpec(template.side, template.kind, n, dict(template.params))


def estimate_capture_prob(
    hunter, rabbit, n: int, horizon: int, trials: int, seed: int
) -> EstimateWithCI:
    """Capture frequency over independent trials of the fixed-horizon game."""
    n = check_cycle_size(n)
    if trials < 100:
        raise InputError("trials must be >= 100")
    captures = 0
    done = 0
    block = 0
    while done < trials:
        m = min(TRIAL_BLOCK, trials - done)
        h = strategies.sample_paths(hunter, horizon, m, stream(seed, STREAM_TRIALS, block, 0))
        r = strategies.sample_paths(rabbit, horizon, m, stream(seed, STREAM_TRIALS, block, 1))
        captures += int((h == r).any(axis=1).sum())
        done += m
        block += 1
    return _proportion_estimate(captures, trials, seed)


@dataclass(frozen=True)
class CollisionMoments:
    n: int
    horizon: int
    mean_Kn: EstimateWithCI
    mean_Kn_sq: EstimateWithCI
    capture_prob: EstimateWithCI


def collision_moments(
    strategy: strategies.StrategySpec,
    fixed: Union[HunterPath, RabbitPath],
    trials: int,
    seed: int,
    horizon: Optional[int] = None,
) -> CollisionMoments:
    """Moments of the collision count K against one fixed pure path.

    ``strategy`` is the randomized side; ``fixed`` the opponent's pure path.
    A fixed hunter path shorter than the horizon is extended by freezing its
    final position (the frozen tail used for the two-round collision count);
    a short fixed rabbit path is an error.
    """
    if isinstance(fixed, HunterPath):
        if strategy.side != "rabbit":
            raise InputError("fixed hunter path requires a rabbit strategy")
    elif isinstance(fixed, RabbitPath):
        if strategy.side != "hunter":
            raise InputError("fixed rabbit path requires a hunter strategy")
    else:
        raise InputError("fixed side must be a HunterPath or RabbitPath")
    n = fixed.n
    if strategy.n != n:
        raise InputError(f"strategy built for n={strategy.n}, path has n={n}")
    if horizon is None:
        horizon = len(fixed)
    steps = fixed.steps
    if len(steps) < horizon:
        if isinstance(fixed, RabbitPath):
            raise InputError("fixed rabbit path shorter than horizon")
        pad = np.full(horizon - len(steps), steps[-1], dtype=np.int64)
        steps = np.concatenate([steps, pad])
    steps = steps[:horizon]

    tot_k = 0
    tot_k2 = 0
    tot_k4 = 0
    hits = 0
    done = 0
    block = 0
    while done < trials:
        m = min(TRIAL_BLOCK, trials - done)
        p = strategies.sample_paths(strategy, horizon, m, stream(seed, STREAM_TRIALS, block, 0))
        k = (p == steps).sum(axis=1)
        k2 = k * k
        tot_k += int(k.sum())
        tot_k2 += int(k2.sum())
        tot_k4 += int((k2 * k2).sum())
        hits += int((k > 0).sum())
        done += m
        block += 1
    return CollisionMoments(
        n,
        horizon,
        _mean_estimate(tot_k, tot_k2, trials, seed),
        _mean_estimate(tot_k2, tot_k4, trials, seed),
        _proportion_estimate(hits, trials, seed),
    )


@dataclass(frozen=True)
class CaptureTimeEstimate:
    raw: EstimateWithCI
    corrected: EstimateWithCI
    cutoff: int
    censored_fraction: float
    unreliable: bool


def estimate_expected_capture_time(
    hunter, rabbit, n: int, trials: int, seed: int, cutoff: Optional[int] = None
) -> CaptureTimeEstimate:
    """Mean capture time under the open-ended round scheme.

    Censored trials enter the raw mean at the cutoff value; the corrected mean
    rescales by 1/(1 - censored fraction), which is exact when the capture
    time is a round-geometric variable (memoryless across rounds).  A censored
    fraction above 20% marks the estimate unreliable.
    """
    n = check_cycle_size(n)
    if cutoff is None:
        cutoff = default_cutoff(n)
    times, censored = unbounded_capture_times(hunter, rabbit, n, trials, seed, cutoff)
    cens = int(censored.sum())
    raw = _mean_estimate(int(times.sum()), int((times.astype(np.float64) ** 2).sum()), trials, seed, cens)
    frac = cens / trials
    if frac < 1.0:
        scale = 1.0 / (1.0 - frac)
    else:
        scale = math.inf
    corrected = EstimateWithCI(
        raw.point * scale,
        raw.ci_low * scale,
        raw.ci_high * scale,
        trials,
        seed,
        cens,
        "normal",
    )
    return CaptureTimeEstimate(raw, corrected, int(cutoff), frac, frac > 0.2)


@dataclass(frozen=True)
class ScalingRow:
    n: int
    capture_prob: EstimateWithCI
    normalized: float
    expected_time: Optional[EstimateWithCI] = None


def scaling_study(
    hunter_template,
    rabbit_template,
    n_list: Sequence[int],
    trials: int,
    seed: int,
    horizon: str = "n",
    with_time: bool = False,
) -> list[ScalingRow]:
    """One capture-probability row per cycle size, with the log-n-normalized column.

    ``hunter_template``/``rabbit_template`` are kind names or specs whose kind
    and params are re-instantiated at each n.  Emits a soft (non-failing)
    warning if the capture probability fails to be non-increasing in n.
    """
    ns = [int(v) for v in n_list]
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise InputError("n_list must be strictly increasing")
    if any(v < 4 for v in ns):
        raise InputError("every n must be >= 4")
    rows = []
    for i, n in enumerate(ns):
        h = respec(hunter_template, "hunter", n)
        r = respec(rabbit_template, "rabbit", n)
        hz = n if horizon == "n" else int(horizon)
        est = estimate_capture_prob(h, r, n, hz, trials, child_seed(seed, 1, i))
        expected = None
        if with_time:
            expected = estimate_expected_capture_time(
                h, r, n, max(100, trials // 50), child_seed(seed, 2, i)
            ).corrected
        rows.append(ScalingRow(n, est, est.point * math.log(n), expected))
    probs = [row.capture_prob.point for row in rows]
    if any(b > a for a, b in zip(probs, probs[1:])):
        warnings.warn("capture probability is not monotone non-increasing in n (soft check)")
    return rows


def normalized_band(rows: Sequence[ScalingRow]) -> tuple[float, float]:
    vals = [row.normalized for row in rows]
    return (max(vals), min(vals)) if vals else (math.nan, math.nan)


def write_scaling_csv(rows: Sequence[ScalingRow], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "trials", "capture_prob", "ci_low", "ci_high", "normalized"])
        for row in rows:
            e = row.capture_prob
            w.writerow(
                [row.n, e.trials, f"{e.point:.10g}", f"{e.ci_low:.10g}", f"{e.ci_high:.10g}", f"{row.normalized:.10g}"]
            )

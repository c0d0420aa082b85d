"""Pursuit game on the cycle: path types, collision detection, and play harnesses.

Two players move on the vertices of a cycle with ``n`` nodes without seeing
each other.  The hunter may stay or step to a neighbour; the rabbit may jump
anywhere.  Capture happens when both occupy the same vertex at the same
integer time.  ``play_game`` runs the finite win/lose variant over a fixed
horizon; ``play_unbounded`` runs the open-ended game with the round scheme
(restartable strategies replay a fresh independent copy every round of length
``n``, and a restartable hunter uses every other round to walk to the next
copy's starting vertex).

Also provided is the lift that turns a 1-Lipschitz circle trajectory into a
legal hunter path dominating it on integer windows.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import ContractViolation, InputError
from .rng import STREAM_HUNTER, STREAM_RABBIT, stream

CycleSize = int


def check_cycle_size(n: int) -> int:
    n = int(n)
    if n < 1:
        raise InputError(f"cycle size must be >= 1, got {n}")
    return n


def _as_steps(steps, n: int) -> np.ndarray:
    arr = np.asarray(steps, dtype=np.int64)
    if arr.ndim != 1:
        raise InputError("path steps must be a 1-d sequence")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise InputError(f"path entries must lie in [0, {n})")
    return arr


@dataclass(frozen=True)
class HunterPath:
    n: CycleSize
    steps: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n", check_cycle_size(self.n))
        object.__setattr__(self, "steps", _as_steps(self.steps, self.n))

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "steps": self.steps.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "HunterPath":
        obj = json.loads(text)
        return cls(obj["n"], obj["steps"])


@dataclass(frozen=True)
class RabbitPath:
    n: CycleSize
    steps: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n", check_cycle_size(self.n))
        object.__setattr__(self, "steps", _as_steps(self.steps, self.n))

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "steps": self.steps.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "RabbitPath":
        obj = json.loads(text)
        return cls(obj["n"], obj["steps"])


@dataclass(frozen=True)
class CaptureResult:
    captured: bool
    time: Optional[int]
    horizon: int
    censored: bool = False

    def __post_init__(self):
        if self.captured != (self.time is not None and self.time < self.horizon):
            raise InputError("captured flag inconsistent with time/horizon")

    def to_json(self) -> str:
        return json.dumps(
            {
                "captured": self.captured,
                "time": self.time,
                "horizon": self.horizon,
                "censored": self.censored,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CaptureResult":
        obj = json.loads(text)
        return cls(obj["captured"], obj["time"], obj["horizon"], obj.get("censored", False))


def validate_hunter_path(path: HunterPath) -> bool:
    """True iff every move is stay or a step to a cycle neighbour."""
    n = path.n
    if len(path.steps) < 2:
        return True
    d = np.mod(np.diff(path.steps), n)
    return bool(np.all((d == 0) | (d == 1) | (d == n - 1)))


def validate_hunter_steps(steps: np.ndarray, n: int) -> bool:
    """Array form of validate_hunter_path; ``steps`` may be 2-d (paths in rows)."""
    if steps.shape[-1] < 2:
        return True
    d = np.mod(np.diff(steps, axis=-1), n)
    return bool(np.all((d == 0) | (d == 1) | (d == n - 1)))


def collision_time(hunter: HunterPath, rabbit: RabbitPath, horizon: int) -> CaptureResult:
    """First time below ``horizon`` at which the two paths coincide."""
    if hunter.n != rabbit.n:
        raise InputError(f"cycle size mismatch: {hunter.n} vs {rabbit.n}")
    horizon = int(horizon)
    if horizon < 1:
        raise InputError("horizon must be >= 1")
    if len(hunter) < horizon or len(rabbit) < horizon:
        raise InputError("both paths must have length >= horizon")
    eq = hunter.steps[:horizon] == rabbit.steps[:horizon]
    idx = np.flatnonzero(eq)
    if idx.size:
        return CaptureResult(True, int(idx[0]), horizon)
    return CaptureResult(False, None, horizon)


def play_game(hunter, rabbit, n: CycleSize, horizon: int, seed: int) -> CaptureResult:
    """Play the fixed-horizon game once.

    ``hunter`` and ``rabbit`` are StrategySpec instances (or any object with a
    compatible ``sample_paths``-style surface, see strategies module).  The two
    sides draw from independent sub-streams of ``seed``.
    """
    from . import strategies

    n = check_cycle_size(n)
    horizon = int(horizon)
    if horizon < 1:
        raise InputError("horizon must be >= 1")
    for side in (hunter, rabbit):
        side_n = getattr(side, "n", n)
        if side_n != n:
            raise InputError(f"strategy built for n={side_n}, game has n={n}")
    h = strategies.sample_paths(hunter, horizon, 1, stream(seed, STREAM_HUNTER))[0]
    r = strategies.sample_paths(rabbit, horizon, 1, stream(seed, STREAM_RABBIT))[0]
    return collision_time(HunterPath(n, h), RabbitPath(n, r), horizon)


def default_cutoff(n: int) -> int:
    """Smallest multiple of 2n at or above 200 * n * log(n + 1)."""
    raw = 200.0 * n * math.log(n + 1)
    return max(2 * n, int(math.ceil(raw / (2 * n))) * 2 * n)


def unbounded_capture_times(
    hunter, rabbit, n: CycleSize, trials: int, seed: int, cutoff: Optional[int] = None
) -> tuple[np.ndarray, np.ndarray]:
    """Round-scheme simulation of the open-ended game for many trials.

    Returns ``(times, censored)``; censored trials carry ``times == cutoff``.
    Restartable strategies replay fresh copies each round; the hunter's
    round scheme inserts walking rounds between active ones.  Free-running
    strategies (zigzag hunter, sweep rabbit, ...) advance continuously.
    """
    from . import strategies

    n = check_cycle_size(n)
    trials = int(trials)
    if trials < 1:
        raise InputError("trials must be >= 1")
    if cutoff is None:
        cutoff = default_cutoff(n)
    cutoff = int(cutoff)
    if cutoff < 2 * n or cutoff % (2 * n) != 0:
        raise InputError("cutoff must be a positive multiple of 2n")

    hs = strategies.make_stepper(hunter, n, trials, stream(seed, STREAM_HUNTER))
    rs = strategies.make_stepper(rabbit, n, trials, stream(seed, STREAM_RABBIT))

    times = np.full(trials, cutoff, dtype=np.int64)
    open_mask = np.ones(trials, dtype=bool)
    base = 0
    while base < cutoff and open_mask.any():
        hb = hs.block(n)
        rb = rs.block(n)
        eq = hb == rb
        hit = eq.any(axis=1) & open_mask
        if hit.any():
            first = eq.argmax(axis=1)
            times[hit] = base + first[hit]
            open_mask &= ~hit
        base += n
    return times, times >= cutoff


def play_unbounded(
    hunter, rabbit, n: CycleSize, seed: int, cutoff: Optional[int] = None
) -> CaptureResult:
    """Play the open-ended game once; censoring at ``cutoff`` is explicit."""
    if cutoff is None:
        cutoff = default_cutoff(check_cycle_size(n))
    times, censored = unbounded_capture_times(hunter, rabbit, n, 1, seed, cutoff)
    if censored[0]:
        return CaptureResult(False, None, int(cutoff), censored=True)
    return CaptureResult(True, int(times[0]), int(cutoff))


@dataclass
class LipschitzSampler:
    """A caller-promised 1-Lipschitz map of the circle [0, n), queried pointwise.

    The promise is with respect to the circle metric: values near 0 and near n
    are close.  Only finitely many evaluations are performed.
    """

    n: CycleSize
    evaluator: Callable[[float], float]

    def __post_init__(self):
        self.n = check_cycle_size(self.n)

    def __call__(self, t: float) -> float:
        v = float(self.evaluator(t))
        if not (0.0 <= v < self.n):
            raise ContractViolation(f"evaluator returned {v} outside [0, {self.n})")
        return v


def lift_lipschitz_path(f: LipschitzSampler, interior_samples: int = 0) -> HunterPath:
    """Project a 1-Lipschitz circle trajectory onto a legal hunter path.

    For each unit window [m, m+1) the lift records the unique integer the
    trajectory passes through, if any, else the floor of the window's start
    value.  The Lipschitz promise guarantees at most one integer per window;
    if two are detected the promise is broken and ContractViolation is raised.

    Detection evaluates window endpoints (plus ``interior_samples`` interior
    points) and unrolls wrap-around locally, so it is exact whenever the
    trajectory is monotone within each window (e.g. circle-linear motions).
    """
    n = f.n
    if n == 1:
        return HunterPath(1, np.zeros(n, dtype=np.int64))
    ts = [float(m) for m in range(n)]
    vals = [f(t) for t in ts]
    half = n / 2.0
    out = np.empty(n, dtype=np.int64)
    for m in range(n):
        v0 = vals[m]
        v1 = vals[(m + 1) % n]
        pts = [0.0]
        # unroll to the local universal cover: each consecutive displacement is
        # the mod-n representative nearest zero (|true step| <= spacing <= 1)
        prev = v0
        offs = [m + (j + 1) / (interior_samples + 1) for j in range(interior_samples)]
        samples = [f(t) for t in offs] + [v1]
        for v in samples:
            d = (v - prev) % n
            if d >= half:
                d -= n
            pts.append(pts[-1] + d)
            prev = v
        lifted = [v0 + p for p in pts]
        hits = set()
        for j, y in enumerate(lifted[:-1]):
            # sampled points other than the excluded right endpoint are attained
            if y == int(y):
                hits.add(int(y))
        for y0, y1 in zip(lifted, lifted[1:]):
            lo, hi = min(y0, y1), max(y0, y1)
            k = math.floor(lo) + 1
            while k < hi:
                if k > lo:
                    hits.add(k)
                k += 1
        hits_mod = {k % n for k in hits}
        if len(hits_mod) > 1:
            raise ContractViolation(
                f"window [{m}, {m + 1}) hits integers {sorted(hits_mod)}; "
                "the 1-Lipschitz promise is broken"
            )
        if hits_mod:
            out[m] = hits_mod.pop()
        else:
            out[m] = int(math.floor(v0)) % n
    path = HunterPath(n, out)
    if not validate_hunter_path(path):
        raise ContractViolation("lifted path is not 1-Lipschitz on the lattice")
    return path

"""Concrete randomized strategies for both players, as seedable generators.

Hunter side:
  linear_hunter       ceil(a*n + b*l) mod n with a, b uniform on [0, 1]
  zigzag_hunter       sticky direction; pause or reverse each with prob 1/n
  uniform_pure_hunter uniform over all legal pure paths
  stationary          uniform random vertex, never moves
  fixed_path          a caller-provided pure path

Rabbit side:
  cauchy_rabbit       (X_{T_k} + U) mod n where X is the horizontal coordinate
                      of a planar simple random walk at successive first hits
                      of horizontal levels; U uniform
  sweep_rabbit        floor(sqrt(n)) unit steps right, jump 2*floor(sqrt(n))
                      left, repeat; uniform start and phase
  uniform_iid_rabbit  fresh uniform vertex every step
  stationary / fixed_path as above

The level-crossing kernel is the displacement law of the walk at the first
hit of the next horizontal line.  It is computed by iterating its one-step
decomposition (stay with the up-move, shift with a horizontal move, or
convolve with itself after a down-move) to a fixed point on a truncated
support, and doubles as a fast sampler for the cauchy rabbit: successive
level displacements are i.i.d. draws from it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
from scipy.signal import fftconvolve

from .errors import ConvergenceError, InputError
from .game import check_cycle_size, HunterPath, RabbitPath, validate_hunter_steps

HUNTER_KINDS = {"linear_hunter", "zigzag_hunter", "uniform_pure_hunter", "stationary", "fixed_path"}
RABBIT_KINDS = {"cauchy_rabbit", "sweep_rabbit", "uniform_iid_rabbit", "stationary", "fixed_path"}

# kinds that are redrawn independently every round of length n in the
# open-ended game; everything else advances as a single continuous process
ROUND_RESTART_KINDS = {"cauchy_rabbit", "linear_hunter", "uniform_pure_hunter"}

KERNEL_FORMAT_VERSION = 1
DEFAULT_KERNEL_J = 4096
DEFAULT_KERNEL_TOL = 1e-8
KERNEL_MODE_CUTOVER = 256  # auto mode: kernel sampler at or above this n


@dataclass(frozen=True)
class StrategySpec:
    side: str
    kind: str
    n: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "n", check_cycle_size(self.n))
        if self.side not in ("hunter", "rabbit"):
            raise InputError(f"side must be hunter or rabbit, got {self.side!r}")
        allowed = HUNTER_KINDS if self.side == "hunter" else RABBIT_KINDS
        if self.kind not in allowed:
            raise InputError(f"kind {self.kind!r} is not a {self.side} strategy")
        if self.kind == "zigzag_hunter" and self.n < 3:
            raise InputError("zigzag_hunter requires n >= 3")
        if self.kind == "sweep_rabbit" and self.n < 9:
            raise InputError("sweep_rabbit requires n >= 9")
        if self.kind == "cauchy_rabbit":
            mode = self.params.get("mode", "auto")
            if mode not in ("auto", "kernel", "direct_srw"):
                raise InputError(f"unknown cauchy sampler mode {mode!r}")
        if self.kind == "fixed_path":
            steps = np.asarray(self.params.get("steps", ()), dtype=np.int64)
            if steps.size == 0:
                raise InputError("fixed_path requires non-empty params['steps']")
            if steps.min() < 0 or steps.max() >= self.n:
                raise InputError("fixed_path steps out of range")
            if self.side == "hunter" and not validate_hunter_steps(steps, self.n):
                raise InputError("fixed_path hunter steps violate the unit-step constraint")

    def to_json(self) -> str:
        params = dict(self.params)
        if "steps" in params:
            params["steps"] = list(map(int, params["steps"]))
        params["n"] = self.n
        return json.dumps({"side": self.side, "kind": self.kind, "params": params})

    @classmethod
    def from_json(cls, text: str) -> "StrategySpec":
        obj = json.loads(text)
        params = dict(obj["params"])
        n = params.pop("n")
        return cls(obj["side"], obj["kind"], n, params)


def hunter(kind: str, n: int, **params) -> StrategySpec:
    return StrategySpec("hunter", kind, n, params)


def rabbit(kind: str, n: int, **params) -> StrategySpec:
    return StrategySpec("rabbit", kind, n, params)


# ---------------------------------------------------------------------------
# level-crossing kernel
# ---------------------------------------------------------------------------


@dataclass
class LevelCrossingKernel:
    """Distribution of the walk's horizontal displacement at the next level hit.

    ``masses[j + j_max]`` is the probability of displacement j for
    |j| <= j_max; ``tail_mass`` is the probability mass outside the truncated
    support (including any mass not yet recovered at the stopping tolerance).
    """

    j_max: int
    masses: np.ndarray
    tail_mass: float
    tolerance: float
    iterations: int

    def __post_init__(self):
        self._cdf = None

    @property
    def offsets(self) -> np.ndarray:
        return np.arange(-self.j_max, self.j_max + 1)

    def prob(self, j: int) -> float:
        if abs(j) > self.j_max:
            return 0.0
        return float(self.masses[j + self.j_max])

    def sampling_cdf(self) -> np.ndarray:
        # tail mass folded half-and-half into the extreme bins
        if self._cdf is None:
            adj = self.masses.copy()
            adj[0] += self.tail_mass / 2
            adj[-1] += self.tail_mass / 2
            cdf = np.cumsum(adj)
            cdf /= cdf[-1]
            self._cdf = cdf
        return self._cdf

    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        cdf = self.sampling_cdf()
        u = rng.random(size)
        return np.searchsorted(cdf, u, side="right").astype(np.int64) - self.j_max

    def save(self, path) -> None:
        np.savez_compressed(
            path,
            version=KERNEL_FORMAT_VERSION,
            j_max=self.j_max,
            masses=self.masses,
            tail_mass=self.tail_mass,
            tolerance=self.tolerance,
            iterations=self.iterations,
        )

    @classmethod
    def load(cls, path) -> "LevelCrossingKernel":
        with np.load(path) as z:
            if int(z["version"]) != KERNEL_FORMAT_VERSION:
                raise InputError(f"kernel cache {path} has unsupported version {z['version']}")
            return cls(
                int(z["j_max"]),
                z["masses"],
                float(z["tail_mass"]),
                float(z["tolerance"]),
                int(z["iterations"]),
            )


_KERNEL_CACHE: dict[tuple[int, float], LevelCrossingKernel] = {}


def level_crossing_kernel(
    j_max: int = DEFAULT_KERNEL_J,
    tolerance: float = DEFAULT_KERNEL_TOL,
    iteration_cap: int = 200_000,
    cache_dir: Optional[Path] = None,
) -> LevelCrossingKernel:
    """Compute the one-level hitting distribution by fixed-point iteration.

    Iterates K <- 1/4 d0 + 1/4 (d+1 + d-1) * K + 1/4 K * K on the support
    [-j_max, j_max] until successive iterates differ by less than ``tolerance``
    in total variation.  Mass pushed outside the support is dropped and
    reported as tail mass together with the unconverged deficit.
    """
    j_max = int(j_max)
    if j_max < 64:
        raise InputError("j_max must be >= 64")
    key = (j_max, float(tolerance))
    if key in _KERNEL_CACHE:
        return _KERNEL_CACHE[key]
    cache_file = None
    if cache_dir is not None:
        cache_file = Path(cache_dir) / f"level_kernel_J{j_max}_tol{tolerance:g}_v{KERNEL_FORMAT_VERSION}.npz"
        if cache_file.exists():
            kern = LevelCrossingKernel.load(cache_file)
            _KERNEL_CACHE[key] = kern
            return kern

    size = 2 * j_max + 1
    K = np.zeros(size)
    it = 0
    tv = math.inf
    while it < iteration_cap:
        it += 1
        KK = fftconvolve(K, K)[size - 1 - j_max : size + j_max]
        Knew = 0.25 * KK
        Knew[j_max] += 0.25
        Knew[:-1] += 0.25 * K[1:]
        Knew[1:] += 0.25 * K[:-1]
        tv = 0.5 * float(np.abs(Knew - K).sum())
        K = Knew
        if tv < tolerance:
            break
    else:
        raise ConvergenceError(
            f"kernel iteration did not reach tv<{tolerance:g} within {iteration_cap} "
            f"iterations (last tv={tv:.3e})"
        )
    K = 0.5 * (K + K[::-1])  # enforce exact lattice symmetry
    np.clip(K, 0.0, None, out=K)
    kern = LevelCrossingKernel(j_max, K, float(1.0 - K.sum()), float(tolerance), it)
    _KERNEL_CACHE[key] = kern
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        kern.save(cache_file)
    return kern


def convolve_power(kernel: LevelCrossingKernel, i: int) -> tuple[np.ndarray, np.ndarray]:
    """Law of the displacement after i level crossings (i-fold convolution).

    Returns (offsets, masses).
    """
    if i < 1:
        raise InputError("i must be >= 1")
    cur = kernel.masses
    for _ in range(i - 1):
        cur = fftconvolve(cur, kernel.masses)
        np.clip(cur, 0.0, None, out=cur)
    half = (len(cur) - 1) // 2
    return np.arange(-half, half + 1), cur


# ---------------------------------------------------------------------------
# simple-random-walk samplers (reference for the kernel)
# ---------------------------------------------------------------------------


@dataclass
class PlanarWalkState:
    """Snapshot of one planar walk: position, elapsed time, level-hit times."""

    position: tuple[int, int]
    time: int
    level_hit_times: list[int]


def walk_first_passages(levels: int, rng: np.random.Generator, step_cap: int = 1 << 22) -> PlanarWalkState:
    """Run one planar SRW until the vertical coordinate first hits ``levels``.

    Records T_0 = 0 and each later first-hit time.  Raises ConvergenceError if
    the step budget runs out (hitting times are heavy-tailed).
    """
    x = y = 0
    t = 0
    hits = [0]
    target = 1
    chunk = 4096
    while target <= levels:
        if t >= step_cap:
            raise ConvergenceError(f"step budget {step_cap} exhausted at level {target}")
        moves = rng.integers(0, 4, size=chunk)
        for mv in moves:
            t += 1
            if mv == 0:
                y += 1
            elif mv == 1:
                y -= 1
            elif mv == 2:
                x -= 1
            else:
                x += 1
            if y == target:
                hits.append(t)
                target += 1
                if target > levels:
                    break
    return PlanarWalkState((x, y), t, hits)


def srw_level_displacements_stepwise(
    count: int,
    levels: int,
    rng: np.random.Generator,
    step_cap: int = 1 << 22,
    stats: Optional[dict] = None,
) -> np.ndarray:
    """Horizontal displacement at each of the first ``levels`` level hits.

    Vectorized over ``count`` independent walks; walks that exhaust the step
    budget are transparently restarted on fresh randomness (counted in
    ``stats['retries']``).  Returns an int64 array of shape (count, levels).
    """
    out = np.zeros((count, levels), dtype=np.int64)
    x = np.zeros(count, dtype=np.int64)
    y = np.zeros(count, dtype=np.int64)
    nxt = np.ones(count, dtype=np.int64)
    steps = np.zeros(count, dtype=np.int64)
    idx = np.arange(count)
    chunk = 256
    while idx.size:
        u = rng.integers(0, 4, size=(idx.size, chunk))
        dy = (u == 0).astype(np.int64) - (u == 1)
        dx = (u == 3).astype(np.int64) - (u == 2)
        ycum = y[idx, None] + np.cumsum(dy, axis=1)
        xcum = x[idx, None] + np.cumsum(dx, axis=1)
        ymax = np.maximum.accumulate(ycum, axis=1)
        reached = ymax[:, -1] >= nxt[idx]
        for row in np.flatnonzero(reached):
            i = idx[row]
            lvl = nxt[i]
            while lvl <= ymax[row, -1] and lvl <= levels:
                j = int(np.argmax(ycum[row] == lvl))
                out[i, lvl - 1] = xcum[row, j]
                lvl += 1
            nxt[i] = lvl
        x[idx] = xcum[:, -1]
        y[idx] = ycum[:, -1]
        steps[idx] += chunk
        exhausted = steps[idx] >= step_cap
        if exhausted.any():
            bad = idx[exhausted]
            x[bad] = 0
            y[bad] = 0
            nxt[bad] = 1
            steps[bad] = 0
            out[bad] = 0
            if stats is not None:
                stats["retries"] = stats.get("retries", 0) + int(exhausted.sum())
        idx = idx[nxt[idx] <= levels]
    return out


_FIRST_PASSAGE_CDF: Optional[np.ndarray] = None
_FIRST_PASSAGE_TERMS = 1_500_000


def _first_passage_cdf() -> np.ndarray:
    # P(vertical first passage takes 2k+1 vertical moves) = Catalan(k)/2^(2k+1)
    global _FIRST_PASSAGE_CDF
    if _FIRST_PASSAGE_CDF is None:
        k = np.arange(_FIRST_PASSAGE_TERMS - 1, dtype=np.float64)
        ratios = (2 * k + 1) / (2 * (k + 2))
        pmf = 0.5 * np.concatenate([[1.0], np.cumprod(ratios)])
        _FIRST_PASSAGE_CDF = np.cumsum(pmf)
    return _FIRST_PASSAGE_CDF


def sample_level_displacements_exact(
    count: int, rng: np.random.Generator, stats: Optional[dict] = None
) -> np.ndarray:
    """Monte Carlo of X at the first level hit via the excursion decomposition.

    A planar SRW step is vertical or horizontal with probability 1/2 each.
    The number of vertical moves until the vertical walk first reaches +1 has
    the classical ballot-problem law; the horizontal moves interleaved before
    that are negative-binomial many fair +-1 steps.  This samples the exact
    hitting law at a scale stepwise simulation cannot reach; draws falling in
    the truncated far tail of the first-passage law are redrawn (counted in
    ``stats['tail_redraws']``).
    """
    cdf = _first_passage_cdf()
    top = cdf[-1]
    out = np.empty(count, dtype=np.int64)
    done = 0
    while done < count:
        m = min(count - done, 1 << 20)
        u = rng.random(m)
        bad = u >= top
        if bad.any():
            if stats is not None:
                stats["tail_redraws"] = stats.get("tail_redraws", 0) + int(bad.sum())
            u[bad] = rng.random(int(bad.sum())) * top
        k = np.searchsorted(cdf, u, side="right")
        vertical = 2 * k + 1
        horizontal = rng.negative_binomial(vertical, 0.5)
        out[done : done + m] = 2 * rng.binomial(horizontal, 0.5) - horizontal
        done += m
    return out


# ---------------------------------------------------------------------------
# path generation (batched)
# ---------------------------------------------------------------------------


def _linear_hunter_block(n, horizon, trials, rng):
    if horizon > n:
        raise InputError("linear_hunter is defined per n-step round (horizon <= n)")
    a = rng.random(trials)
    b = rng.random(trials)
    ell = np.arange(horizon)
    return np.mod(np.ceil(a[:, None] * n + b[:, None] * ell).astype(np.int64), n)


class _ZigzagState:
    def __init__(self, n, trials, rng):
        self.n = n
        self.rng = rng
        self.pos = rng.integers(0, n, size=trials)
        self.dir = rng.choice(np.array([-1, 1], dtype=np.int64), size=trials)
        self.pending = np.zeros(trials, dtype=bool)
        self.fresh = True

    def block(self, k):
        n, rng = self.n, self.rng
        out = np.empty((len(self.pos), k), dtype=np.int64)
        start = 0
        if self.fresh:
            out[:, 0] = self.pos
            start = 1
            self.fresh = False
        for j in range(start, k):
            move_now = self.pending.copy()
            decide = ~move_now
            u = rng.random(int(decide.sum()))
            cont = u < (n - 2) / n
            pause = (~cont) & (u < (n - 1) / n)
            rev = (~cont) & (~pause)
            di = np.flatnonzero(decide)
            self.dir[di[rev]] = -self.dir[di[rev]]
            step = np.zeros(len(self.pos), dtype=np.int64)
            step[move_now] = self.dir[move_now]
            step[di[cont]] = self.dir[di[cont]]
            step[di[rev]] = self.dir[di[rev]]
            self.pending[move_now] = False
            self.pending[di[pause]] = True
            self.pos = np.mod(self.pos + step, n)
            out[:, j] = self.pos
        return out


class _SweepState:
    def __init__(self, n, trials, rng):
        self.n = n
        s = int(math.isqrt(n))
        self.s = s
        self.period = s + 1
        self.start = rng.integers(0, n, size=trials)
        self.phase = rng.integers(0, self.period, size=trials)
        self.t = 0

    def _cum(self, j):
        # prefix sum of the repeating displacement pattern [+1]*s + [-2s]
        return -self.s * (j // self.period) + (j % self.period)

    def block(self, k):
        j = self.phase[:, None] + self.t + np.arange(k)
        pos = np.mod(self.start[:, None] + self._cum(j) - self._cum(self.phase)[:, None], self.n)
        self.t += k
        return pos


class _UniformIidState:
    def __init__(self, n, trials, rng):
        self.n, self.trials, self.rng = n, trials, rng

    def block(self, k):
        return self.rng.integers(0, self.n, size=(self.trials, k))


class _StationaryState:
    def __init__(self, n, trials, rng):
        self.pos = rng.integers(0, n, size=trials)

    def block(self, k):
        return np.repeat(self.pos[:, None], k, axis=1)


class _UniformPureHunterState:
    def __init__(self, n, trials, rng):
        self.n, self.rng = n, rng
        self.pos = rng.integers(0, n, size=trials)
        self.fresh = True

    def block(self, k):
        n, rng = self.n, self.rng
        trials = len(self.pos)
        out = np.empty((trials, k), dtype=np.int64)
        start = 0
        if self.fresh:
            out[:, 0] = self.pos
            start = 1
            self.fresh = False
        if k > start:
            if n == 1:
                moves = np.zeros((trials, k - start), dtype=np.int64)
            elif n == 2:
                moves = rng.integers(0, 2, size=(trials, k - start))
            else:
                moves = rng.integers(-1, 2, size=(trials, k - start))
            cum = np.cumsum(moves, axis=1)
            out[:, start:] = np.mod(self.pos[:, None] + cum, n)
            self.pos = out[:, -1].copy()
        return out


def _cauchy_mode(spec):
    mode = spec.params.get("mode", "auto")
    if mode == "auto":
        return "kernel" if spec.n >= KERNEL_MODE_CUTOVER else "direct_srw"
    return mode


def _cauchy_rabbit_block(spec, horizon, trials, rng, stats=None):
    n = spec.n
    u = rng.integers(0, n, size=trials)
    if horizon == 1 or n == 1:
        return np.repeat(np.mod(u, n)[:, None], horizon, axis=1)
    mode = _cauchy_mode(spec)
    if mode == "kernel":
        kern = level_crossing_kernel(
            spec.params.get("j_max", DEFAULT_KERNEL_J),
            spec.params.get("tolerance", DEFAULT_KERNEL_TOL),
        )
        inc = kern.sample(rng, (trials, horizon - 1))
        x = np.cumsum(inc, axis=1)
    else:
        x = srw_level_displacements_stepwise(
            trials, horizon - 1, rng, step_cap=spec.params.get("step_cap", 1 << 22), stats=stats
        )
    out = np.empty((trials, horizon), dtype=np.int64)
    out[:, 0] = u
    out[:, 1:] = np.mod(u[:, None] + x, n)
    return out


def sample_paths(spec, horizon: int, trials: int, rng: np.random.Generator, stats=None) -> np.ndarray:
    """Draw ``trials`` independent paths of length ``horizon`` as an int64 array."""
    horizon = int(horizon)
    if horizon < 1:
        raise InputError("horizon must be >= 1")
    sampler = getattr(spec, "sample_paths_array", None)
    if sampler is not None:
        return sampler(horizon, trials, rng)
    kind, n = spec.kind, spec.n
    if kind == "linear_hunter":
        return _linear_hunter_block(n, horizon, trials, rng)
    if kind == "zigzag_hunter":
        return _ZigzagState(n, trials, rng).block(horizon)
    if kind == "uniform_pure_hunter":
        return _UniformPureHunterState(n, trials, rng).block(horizon)
    if kind == "stationary":
        return _StationaryState(n, trials, rng).block(horizon)
    if kind == "fixed_path":
        steps = np.asarray(spec.params["steps"], dtype=np.int64)
        if len(steps) < horizon:
            raise InputError(f"fixed_path of length {len(steps)} cannot cover horizon {horizon}")
        return np.repeat(steps[None, :horizon], trials, axis=0)
    if kind == "cauchy_rabbit":
        return _cauchy_rabbit_block(spec, horizon, trials, rng, stats=stats)
    if kind == "sweep_rabbit":
        return _SweepState(n, trials, rng).block(horizon)
    if kind == "uniform_iid_rabbit":
        return _UniformIidState(n, trials, rng).block(horizon)
    raise InputError(f"unknown strategy kind {kind!r}")


def cauchy_rabbit_path(n: int, horizon: int, seed_rng: np.random.Generator, mode="auto", stats=None) -> RabbitPath:
    spec = rabbit("cauchy_rabbit", n, mode=mode)
    return RabbitPath(n, sample_paths(spec, horizon, 1, seed_rng, stats=stats)[0])


def linear_hunter_path(n: int, horizon: int, seed_rng: np.random.Generator) -> HunterPath:
    return HunterPath(n, _linear_hunter_block(n, horizon, 1, seed_rng)[0])


def zigzag_hunter_path(n: int, horizon: int, seed_rng: np.random.Generator) -> HunterPath:
    spec = hunter("zigzag_hunter", n)
    return HunterPath(n, sample_paths(spec, horizon, 1, seed_rng)[0])


def sweep_rabbit_path(n: int, horizon: int, seed_rng: np.random.Generator) -> RabbitPath:
    spec = rabbit("sweep_rabbit", n)
    return RabbitPath(n, sample_paths(spec, horizon, 1, seed_rng)[0])


# ---------------------------------------------------------------------------
# steppers for the open-ended game
# ---------------------------------------------------------------------------


class _RoundRestartStepper:
    """Fresh independent copy of an n-step strategy every round of length n."""

    def __init__(self, spec, n, trials, rng):
        self.spec, self.n, self.trials, self.rng = spec, n, trials, rng

    def block(self, k):
        if k != self.n:
            raise InputError("round stepper advances in whole rounds")
        return sample_paths(self.spec, self.n, self.trials, self.rng)


class _RoundSchemeHunterStepper:
    """Lemma-style alternation: active round, then walk to the next start."""

    def __init__(self, spec, n, trials, rng):
        self.spec, self.n, self.trials, self.rng = spec, n, trials, rng
        self.active = True
        self.next_block = sample_paths(spec, n, trials, rng)

    def block(self, k):
        n = self.n
        if k != n:
            raise InputError("round stepper advances in whole rounds")
        if self.active:
            self.active = False
            self.cur_end = self.next_block[:, -1].copy()
            blk = self.next_block
            self.next_block = sample_paths(self.spec, n, self.trials, self.rng)
            return blk
        # walking round: unit steps along the shorter arc toward the next start
        self.active = True
        target = self.next_block[:, 0]
        pos = self.cur_end.copy()
        out = np.empty((self.trials, n), dtype=np.int64)
        fwd = np.mod(target - pos, n)
        step = np.where(fwd <= n - fwd, 1, -1).astype(np.int64)
        remaining = np.minimum(fwd, n - fwd)
        for j in range(n):
            move = remaining > 0
            pos = np.where(move, np.mod(pos + step, n), pos)
            remaining = np.where(move, remaining - 1, remaining)
            out[:, j] = pos
        return out


_FREE_RUNNING = {
    "zigzag_hunter": _ZigzagState,
    "sweep_rabbit": _SweepState,
    "uniform_iid_rabbit": _UniformIidState,
    "stationary": _StationaryState,
}


def make_stepper(spec, n: int, trials: int, rng: np.random.Generator):
    """Build a block generator for the open-ended game.

    Round-restartable kinds follow the round scheme (hunter side adds walking
    rounds); free-running kinds advance continuously.  fixed_path has no
    open-ended extension and is rejected.
    """
    spec_n = getattr(spec, "n", n)
    if spec_n != n:
        raise InputError(f"strategy built for n={spec_n}, game has n={n}")
    kind = getattr(spec, "kind", None)
    side = getattr(spec, "side", None)
    if kind == "fixed_path":
        raise InputError("fixed_path has no open-ended extension")
    if kind in _FREE_RUNNING:
        return _FREE_RUNNING[kind](n, trials, rng)
    if kind in ROUND_RESTART_KINDS or kind is None:
        if side == "hunter":
            return _RoundSchemeHunterStepper(spec, n, trials, rng)
        return _RoundRestartStepper(spec, n, trials, rng)
    raise InputError(f"no open-ended stepper for kind {kind!r}")

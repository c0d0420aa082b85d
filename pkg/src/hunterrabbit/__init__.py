"""Pursuit on a cycle, exact small-game values, and triangle-set geometry.

See README.md for an overview of the subpackages:

- game: path types, collision detection, finite and open-ended play
- strategies: seedable strategy generators and the level-crossing kernel
- estimators: Monte Carlo capture probabilities, moments, scaling studies
- exact_solver: enumerated payoff matrix and certified game values
- geometry: exact triangle-set construction, union areas, witnesses
- continuum: heavy-tailed path sampling and neighborhood volume scaling
- cli: command-line entry points
"""

__version__ = "0.1.0"

from .game import (
    CaptureResult,
    HunterPath,
    LipschitzSampler,
    RabbitPath,
    collision_time,
    lift_lipschitz_path,
    play_game,
    play_unbounded,
    validate_hunter_path,
)
from .strategies import StrategySpec, hunter, rabbit, level_crossing_kernel

__all__ = [
    "CaptureResult",
    "HunterPath",
    "LipschitzSampler",
    "RabbitPath",
    "StrategySpec",
    "collision_time",
    "hunter",
    "lift_lipschitz_path",
    "level_crossing_kernel",
    "play_game",
    "play_unbounded",
    "rabbit",
    "validate_hunter_path",
    "__version__",
]

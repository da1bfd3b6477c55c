"""
Annealing schedule and search configuration
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from config.settings import (
    ANNEAL_CHECK_INTERVAL, ANNEAL_COOLING_FACTOR, ANNEAL_FREEZE_TEMPERATURE, ANNEAL_RESTART_LIMIT,
    ANNEAL_STAGNATION_WINDOW, ANNEAL_STEPS_FACTOR, DEBUG_CHECKS,
)
from core.bounds import band_parameters

SEED_MAX = 2 ** 64 - 1


class ObjectiveMode(str, Enum):
    BAND = 'band'
    IMBALANCE = 'imbalance'


@dataclass(frozen=True)
class AnnealConfig:
    n: int
    seed: int
    initial_temperature: Optional[float] = None   # defaults to n
    cooling_factor: float = ANNEAL_COOLING_FACTOR
    steps_per_temperature: Optional[int] = None   # defaults to 100 * n
    restart_limit: int = ANNEAL_RESTART_LIMIT
    stagnation_window: int = ANNEAL_STAGNATION_WINDOW
    time_limit: Optional[float] = None
    thread_count: int = 1
    objective_mode: ObjectiveMode = ObjectiveMode.BAND
    check_interval: int = ANNEAL_CHECK_INTERVAL if DEBUG_CHECKS else 0
    freeze_temperature: float = ANNEAL_FREEZE_TEMPERATURE
    reheat_temperature: Optional[float] = None    # defaults to initial_temperature / 4

    def __post_init__(self):
        band_parameters(self.n)
        if not 0 <= self.seed <= SEED_MAX:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if not 0.0 < self.cooling_factor < 1.0:
            raise ValueError(f"cooling_factor must lie strictly between 0 and 1, got {self.cooling_factor}")
        if self.initial_temperature is None:
            object.__setattr__(self, 'initial_temperature', float(self.n))
        if self.initial_temperature <= 0:
            raise ValueError("initial_temperature must be positive")
        if self.freeze_temperature <= 0:
            raise ValueError("freeze_temperature must be positive")
        if self.reheat_temperature is None:
            object.__setattr__(self, 'reheat_temperature',
                               max(self.freeze_temperature, self.initial_temperature / 4))
        if self.reheat_temperature <= 0:
            raise ValueError("reheat_temperature must be positive")
        if self.steps_per_temperature is None:
            object.__setattr__(self, 'steps_per_temperature', ANNEAL_STEPS_FACTOR * self.n)
        if self.steps_per_temperature < 1 or self.restart_limit < 1 or self.stagnation_window < 1:
            raise ValueError("steps_per_temperature, restart_limit and stagnation_window must be positive")
        object.__setattr__(self, 'objective_mode', ObjectiveMode(self.objective_mode))

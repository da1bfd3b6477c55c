"""
Task and result records for exhaustive enumeration
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from config.settings import DEFAULT_THREADS, ENUM_LATIN_MAX_N
from core.errors import OrderTooLarge, OrderTooSmall


class EnumerationMode(str, Enum):
    PERFECT_PERMUTATIONS = 'perfect-permutations'
    ALL_LATIN_SQUARES = 'all-latin-squares'


@dataclass(frozen=True)
class EnumerationTask:
    n: int
    mode: EnumerationMode
    count_only: bool = True
    time_limit: Optional[float] = None
    thread_count: int = DEFAULT_THREADS

    def __post_init__(self):
        if self.n < 1:
            raise OrderTooSmall(self.n, minimum=1)
        if self.mode == EnumerationMode.ALL_LATIN_SQUARES and self.n > ENUM_LATIN_MAX_N:
            raise OrderTooLarge(self.n, ENUM_LATIN_MAX_N)
        if self.thread_count < 1:
            object.__setattr__(self, 'thread_count', 1)


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    mode: EnumerationMode
    total_count: int
    canonical_count: int
    items: Optional[Tuple] = None
    exhausted: bool = True
    elapsed: float = 0.0


class SearchTimeout(Exception):
    """Raised inside a search to unwind once its deadline has passed"""

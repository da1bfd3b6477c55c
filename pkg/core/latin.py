"""
Latin squares, row-pair distances and the imbalance functional
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np

from config.settings import MAX_SAFE_ORDER
from core.bounds import fixed_distance_sum, lower_bound3, naive_lower_bound3
from core.errors import (
    ColumnViolation, DimensionMismatch, IndexOutOfRange, OrderTooLarge,
    RowViolation, SymbolOutOfRange,
)
from core.permutations import Permutation, invert

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatinSquare:
    """An n x n array in which every row and every column is a bijection on 0..n-1"""
    n: int
    cells: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(int(v) for v in row) for row in self.cells)
        if self.n < 1 or len(cells) != self.n or any(len(row) != self.n for row in cells):
            raise DimensionMismatch()
        object.__setattr__(self, 'cells', cells)
        _check_cells(self.array)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.cells, dtype=np.int64).reshape(self.n, self.n)
        arr.setflags(write=False)
        return arr

    @cached_property
    def positions(self) -> np.ndarray:
        """positions[r, s] is the column of symbol s in row r"""
        pos = np.argsort(self.array, axis=1, kind='stable')
        pos.setflags(write=False)
        return pos


@dataclass(frozen=True)
class ImbalanceReport:
    n: int
    imbalance3: int
    pair_count: int
    distance_sum: int
    all_even: bool
    lower_bound3: int
    gap3: int
    naive_bound3: int = 0
    # distances of pairs (0,1), (0,2), ..., (1,2), ... in row-major upper-triangle order
    distances: Tuple[int, ...] = field(default=(), repr=False)

    @property
    def fixed_sum_ok(self) -> bool:
        return self.distance_sum == fixed_distance_sum(self.n)

    @property
    def min_distance(self) -> int:
        return min(self.distances) if self.distances else 0

    @property
    def max_distance(self) -> int:
        return max(self.distances) if self.distances else 0


def _check_cells(arr: np.ndarray):
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        r, c = (int(v) for v in bad[0])
        raise SymbolOutOfRange(r, c, int(arr[r, c]), n)
    expected = np.arange(n)
    bad_rows = np.flatnonzero((np.sort(arr, axis=1) != expected).any(axis=1))
    if len(bad_rows):
        raise RowViolation(int(bad_rows[0]))
    bad_cols = np.flatnonzero((np.sort(arr, axis=0) != expected[:, None]).any(axis=0))
    if len(bad_cols):
        raise ColumnViolation(int(bad_cols[0]))


def validate_latin(cells: Sequence[Sequence[int]]) -> LatinSquare:
    """Validate every row and column and return the square"""
    rows = [list(row) for row in cells]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise DimensionMismatch()
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise SymbolOutOfRange(i, j, v, n)
    return LatinSquare(n, tuple(tuple(int(v) for v in row) for row in rows))


def row_distance(square: LatinSquare, r1: int, r2: int) -> int:
    """sum over symbols of |pos(r1, s) - pos(r2, s)|"""
    for r in (r1, r2):
        if not 0 <= r < square.n:
            raise IndexOutOfRange(r, square.n)
    pos = square.positions
    return int(np.abs(pos[r1] - pos[r2]).sum())


def pair_distances(positions: np.ndarray) -> np.ndarray:
    """Distances of all unordered row pairs, row-major upper triangle"""
    n = positions.shape[0]
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate([
        np.abs(positions[r + 1:] - positions[r]).sum(axis=1) for r in range(n - 1)
    ])


def imbalance3_from_distances(distances: np.ndarray, n: int) -> int:
    return int(np.abs(3 * distances - n * (n + 1)).sum())


def imbalance(square: LatinSquare) -> ImbalanceReport:
    n = square.n
    if n > MAX_SAFE_ORDER:
        raise OrderTooLarge(n, MAX_SAFE_ORDER)
    distances = pair_distances(square.positions)
    imbalance3 = imbalance3_from_distances(distances, n)
    bound = lower_bound3(n) if n % 3 == 1 else 0
    return ImbalanceReport(
        n=n,
        imbalance3=imbalance3,
        pair_count=n * (n - 1) // 2,
        distance_sum=int(distances.sum()),
        all_even=bool((distances % 2 == 0).all()),
        lower_bound3=bound,
        gap3=imbalance3 - bound,
        naive_bound3=naive_lower_bound3(n),
        distances=tuple(distances.tolist()),
    )


def circulant(sigma: Permutation) -> LatinSquare:
    """L[i][j] = (i + sigma^-1(j)) mod n; rows at offset delta sit at distance f_sigma(delta)"""
    n = sigma.n
    tau = invert(sigma).array
    cells = (np.arange(n)[:, None] + tau[None, :]) % n
    return LatinSquare(n, tuple(tuple(row) for row in cells.tolist()))

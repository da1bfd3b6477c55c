"""
Exhaustive enumeration of Latin squares of tiny order
"""
import logging
import time
from dataclasses import dataclass
from functools import partial
from itertools import combinations, islice, permutations
from typing import Callable, Iterator, List, Optional, Tuple

import numpy as np

from config.settings import ENUM_LATIN_MAX_N, EXHAUSTIVE_MIN_MAX_N
from core.errors import OrderTooLarge, WrongMode
from core.latin import LatinSquare
from enumeration.tasks import EnumerationMode, EnumerationResult, EnumerationTask, SearchTimeout
from workers.pool import run_jobs

logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]
BATCH_SIZE = 4096


def iter_latin_rows(n: int, first_row: Optional[Tuple[int, ...]] = None,
                    deadline: Optional[float] = None) -> Iterator[Rows]:
    """Yield every Latin square of order n in lexicographic order of its cells.

    Cells are filled row by row with per-row and per-column used-symbol masks.
    """
    cells = [[0] * n for _ in range(n)]
    row_used = [0] * n
    col_used = [0] * n
    full = (1 << n) - 1
    start = 0
    if first_row is not None:
        for j, s in enumerate(first_row):
            cells[0][j] = s
            row_used[0] |= 1 << s
            col_used[j] |= 1 << s
        start = n
    total = n * n
    nodes = 0

    def fill(k: int):
        nonlocal nodes
        if k == total:
            yield tuple(tuple(row) for row in cells)
            return
        nodes += 1
        if deadline is not None and nodes % 4096 == 0 and time.time() > deadline:
            raise SearchTimeout()
        i, j = divmod(k, n)
        free = full & ~(row_used[i] | col_used[j])
        while free:
            bit = free & -free
            free ^= bit
            s = bit.bit_length() - 1
            cells[i][j] = s
            row_used[i] |= bit
            col_used[j] |= bit
            yield from fill(k + 1)
            row_used[i] ^= bit
            col_used[j] ^= bit

    yield from fill(start)


@dataclass
class LatinPartition:
    first_row: Tuple[int, ...]
    count: int
    items: List[Rows]
    exhausted: bool


def count_partition(n: int, first_row: Tuple[int, ...], deadline: Optional[float] = None,
                    collect: bool = False, on_item: Optional[Callable] = None) -> LatinPartition:
    part = LatinPartition(first_row=first_row, count=0, items=[], exhausted=True)
    try:
        for rows in iter_latin_rows(n, first_row, deadline):
            part.count += 1
            if collect:
                part.items.append(rows)
            if on_item is not None:
                on_item(rows)
    except SearchTimeout:
        part.exhausted = False
    return part


def enumerate_latin(task: EnumerationTask, on_item: Optional[Callable[[LatinSquare], None]] = None) -> EnumerationResult:
    """Count every Latin square of order task.n (no symmetry reduction).

    Squares go to on_item as they are found; they are only kept in the
    result when the task asks for items.
    """
    if task.mode != EnumerationMode.ALL_LATIN_SQUARES:
        raise WrongMode(EnumerationMode.ALL_LATIN_SQUARES.value, task.mode.value)
    n = task.n
    if n > ENUM_LATIN_MAX_N:
        raise OrderTooLarge(n, ENUM_LATIN_MAX_N)

    start = time.time()
    deadline = start + task.time_limit if task.time_limit else None
    want_items = not task.count_only
    kept: List[LatinSquare] = []

    def stream(rows):
        square = LatinSquare(n, rows)
        if want_items:
            kept.append(square)
        if on_item is not None:
            on_item(square)

    first_rows = list(permutations(range(n)))
    logger.info(f"🔍 Enumerating Latin squares of order {n} over {len(first_rows)} first rows")
    streaming = want_items or on_item is not None
    if task.thread_count <= 1:
        worker = partial(count_partition, collect=False, on_item=stream if streaming else None)
        parts = run_jobs(worker, [(n, row, deadline) for row in first_rows], threads=1)
    else:
        parts = run_jobs(count_partition, [(n, row, deadline, streaming) for row in first_rows],
                         threads=task.thread_count)

    total = 0
    exhausted = True
    for part in parts:
        if isinstance(part, BaseException):
            exhausted = False
            continue
        total += part.count
        exhausted = exhausted and part.exhausted
        if task.thread_count > 1:
            for rows in part.items:
                stream(rows)

    elapsed = time.time() - start
    logger.info(f"✅ n={n}: {total} Latin squares, exhausted={exhausted} ({elapsed:.2f}s)")
    return EnumerationResult(n=n, mode=task.mode, total_count=total, canonical_count=0,
                             items=tuple(kept) if want_items else None,
                             exhausted=exhausted, elapsed=elapsed)


def _batch_imbalance3(batch: np.ndarray, pairs: Tuple[np.ndarray, np.ndarray]) -> np.ndarray:
    """imbalance3 for a stack of squares shaped (B, n, n)"""
    n = batch.shape[1]
    positions = np.argsort(batch, axis=2)
    first, second = pairs
    distances = np.abs(positions[:, first, :] - positions[:, second, :]).sum(axis=2)
    return np.abs(3 * distances - n * (n + 1)).sum(axis=1)


def min_imbalance_exhaustive(n: int) -> Tuple[int, LatinSquare]:
    """Exact minimum imbalance3 over all squares of order n, with the lexicographically first witness"""
    if n > EXHAUSTIVE_MIN_MAX_N:
        raise OrderTooLarge(n, EXHAUSTIVE_MIN_MAX_N)
    if n == 1:
        return 0, LatinSquare(1, ((0,),))

    index_pairs = list(combinations(range(n), 2))
    pairs = (np.array([p[0] for p in index_pairs]), np.array([p[1] for p in index_pairs]))
    best_value = None
    best_rows = None
    seen = 0
    squares = iter_latin_rows(n)
    while True:
        chunk = list(islice(squares, BATCH_SIZE))
        if not chunk:
            break
        seen += len(chunk)
        values = _batch_imbalance3(np.asarray(chunk, dtype=np.int64), pairs)
        idx = int(np.argmin(values))
        if best_value is None or values[idx] < best_value:
            best_value = int(values[idx])
            best_rows = chunk[idx]

    logger.info(f"Minimum imbalance3 for n={n} is {best_value} over {seen} squares")
    return best_value, LatinSquare(n, best_rows)

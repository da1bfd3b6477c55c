"""
Exhaustive enumeration of perfect permutations.

Every rotation orbit {j -> sigma(j + c)} has exactly n members (sigma(j + c) =
sigma(j) for all j forces c = 0) and exactly one member with sigma(0) = 0, so
the search fixes sigma(0) = 0 and multiplies the count by n. The tree is split
on sigma(1) across workers.
"""
import logging
import time
from dataclasses import dataclass
from functools import partial
from itertools import permutations
from typing import Callable, List, Optional, Tuple

from config.settings import NAIVE_ORACLE_MAX_N
from core.bounds import perfect_target
from core.errors import OrderTooLarge, WrongMode
from core.permutations import Permutation, rotate
from enumeration.tasks import EnumerationMode, EnumerationResult, EnumerationTask, SearchTimeout
from workers.pool import run_jobs

logger = logging.getLogger(__name__)

DEADLINE_CHECK_EVERY = 4096


@dataclass
class PartitionResult:
    second: int
    count: int
    items: List[Tuple[int, ...]]
    exhausted: bool


def _open_pairs(n: int) -> List[List[int]]:
    """open_pairs[i][d]: pairs for shift d still incomplete once positions 0..i are fixed"""
    table = []
    for i in range(n):
        row = [0] * n
        for d in range(1, n):
            straight = max(0, i - d + 1)
            wrapped = max(0, i - (n - d) + 1)
            row[d] = n - straight - wrapped
        table.append(row)
    return table


def search_partition(n: int, second: int, deadline: Optional[float] = None, prune: bool = True,
                     collect: bool = False, on_item: Optional[Callable] = None) -> PartitionResult:
    """All perfect permutations with sigma(0) = 0 and sigma(1) = second.

    Positions are filled left to right, candidate values in ascending order.
    For each shift d the running sum covers only completed index pairs
    (j, j + d mod n); a branch is cut once a running sum plus one per still
    open pair exceeds the target, since every open pair adds at least 1.
    """
    target = perfect_target(n)
    result = PartitionResult(second=second, count=0, items=[], exhausted=True)
    if target is None:
        return result

    sigma = [0] * n
    used = [False] * n
    sums = [0] * n
    open_after = _open_pairs(n)
    nodes = 0

    def accept():
        result.count += 1
        if collect or on_item is not None:
            image = tuple(sigma)
            if collect:
                result.items.append(image)
            if on_item is not None:
                on_item(image)

    def place(i: int):
        nonlocal nodes
        if i == n:
            if all(sums[d] == target for d in range(1, n)):
                accept()
            return

        nodes += 1
        if deadline is not None and nodes % DEADLINE_CHECK_EVERY == 0 and time.time() > deadline:
            raise SearchTimeout()

        candidates = (0,) if i == 0 else (second,) if i == 1 else range(n)
        open_row = open_after[i]
        for v in candidates:
            if used[v]:
                continue
            adds = [0] * n
            feasible = True
            for d in range(1, n):
                add = 0
                if i >= d:
                    add = abs(v - sigma[i - d])
                if i + d >= n:
                    add += abs(sigma[i + d - n] - v)
                if prune and sums[d] + add + open_row[d] > target:
                    feasible = False
                    break
                adds[d] = add
            if not feasible:
                continue

            sigma[i] = v
            used[v] = True
            for d in range(1, n):
                sums[d] += adds[d]
            place(i + 1)
            for d in range(1, n):
                sums[d] -= adds[d]
            used[v] = False

    if n == 1:
        return result
    try:
        place(0)
    except SearchTimeout:
        result.exhausted = False
    return result


def enumerate_perfect(task: EnumerationTask, on_item: Optional[Callable[[Permutation], None]] = None,
                      prune: bool = True) -> EnumerationResult:
    """Count (and optionally list) every perfect permutation of order task.n"""
    if task.mode != EnumerationMode.PERFECT_PERMUTATIONS:
        raise WrongMode(EnumerationMode.PERFECT_PERMUTATIONS.value, task.mode.value)

    n = task.n
    start = time.time()
    if perfect_target(n) is None or n == 1:
        logger.info(f"n(n+1)/3 is not an integer for n={n}; no perfect permutations")
        return EnumerationResult(n=n, mode=task.mode, total_count=0, canonical_count=0,
                                 items=None if task.count_only else (), exhausted=True,
                                 elapsed=time.time() - start)

    deadline = start + task.time_limit if task.time_limit else None
    want_items = not task.count_only
    seconds = [v for v in range(1, n)]
    logger.info(f"🔍 Enumerating perfect permutations of order {n} over {len(seconds)} partitions")

    in_process = task.thread_count <= 1
    canonical_items = []

    def stream(image):
        canonical_items.append(image)
        if on_item is not None:
            _emit_orbit(image, on_item)

    if in_process:
        worker = partial(search_partition, prune=prune, collect=False,
                         on_item=stream if want_items or on_item is not None else None)
        jobs = [(n, second, deadline) for second in seconds]
        partitions = run_jobs(worker, jobs, threads=1)
    else:
        jobs = [(n, second, deadline, prune, want_items or on_item is not None) for second in seconds]
        partitions = run_jobs(search_partition, jobs, threads=task.thread_count)

    canonical = 0
    exhausted = True
    for part in partitions:
        if isinstance(part, BaseException):
            exhausted = False
            continue
        canonical += part.count
        exhausted = exhausted and part.exhausted
        if not in_process:
            for image in part.items:
                stream(image)

    items = None
    if want_items:
        items = tuple(member for image in canonical_items for member in _orbit(image))

    elapsed = time.time() - start
    logger.info(f"✅ n={n}: canonical={canonical} total={n * canonical} exhausted={exhausted} ({elapsed:.2f}s)")
    return EnumerationResult(n=n, mode=task.mode, total_count=n * canonical, canonical_count=canonical,
                             items=items, exhausted=exhausted, elapsed=elapsed)


def _orbit(image: Tuple[int, ...]) -> List[Permutation]:
    sigma = Permutation(image)
    return [rotate(sigma, c) for c in range(sigma.n)]


def _emit_orbit(image, on_item):
    for member in _orbit(image):
        on_item(member)


def naive_perfect_count(n: int) -> int:
    """Filter all n! permutations with no pruning and no symmetry breaking"""
    if n > NAIVE_ORACLE_MAX_N:
        raise OrderTooLarge(n, NAIVE_ORACLE_MAX_N)
    if (n * (n + 1)) % 3 or n < 2:
        return 0
    target = n * (n + 1) // 3
    count = 0
    for image in permutations(range(n)):
        if all(sum(abs(image[(j + d) % n] - image[j]) for j in range(n)) == target
               for d in range(1, n)):
            count += 1
    return count

"""
Fan a list of independent jobs out over worker processes and gather the results
"""
import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Sequence, Tuple

logger = logging.getLogger(__name__)


async def _gather_jobs(func: Callable, jobs: Sequence[Tuple], threads: int) -> List[Any]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        tasks = [loop.run_in_executor(pool, func, *args) for args in jobs]
        logger.info(f"Dispatched {len(tasks)} jobs to {threads} workers")
        return await asyncio.gather(*tasks, return_exceptions=True)


def run_jobs(func: Callable, jobs: Sequence[Tuple], threads: int = 1) -> List[Any]:
    """Run func(*args) for every job; failed jobs come back as their exception.

    With a single thread the jobs run in-process, in order.
    """
    if threads <= 1 or len(jobs) <= 1:
        results = []
        for args in jobs:
            try:
                results.append(func(*args))
            except Exception as e:
                logger.error(f"Job {args!r} failed: {e}")
                results.append(e)
        return results

    results = asyncio.run(_gather_jobs(func, jobs, threads))
    for args, result in zip(jobs, results):
        if isinstance(result, BaseException):
            logger.error(f"Job {args!r} failed: {result}")
    return results

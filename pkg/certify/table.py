"""
Reproduction of the near-PP existence table for n = 1 mod 3
"""
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from anneal.annealer import search
from anneal.certificate import NearPPCertificate
from anneal.config import AnnealConfig
from certify.verifier import verify_near_pp
from config.settings import TABLE_MAX_N
from core.errors import OrderTooLarge
from workers.pool import run_jobs

logger = logging.getLogger(__name__)


def format_thirds(value3: int) -> str:
    """value3 / 3 as a reduced fraction string: 16 -> '16/3', 120 -> '40'"""
    return str(Fraction(value3, 3))


def table_orders(n_max: int) -> List[int]:
    return list(range(4, n_max + 1, 3))


@dataclass
class TableRow:
    n: int
    i_star: str
    seconds: float
    status: str = 'ok'
    detail: str = ''
    certificate: Optional[NearPPCertificate] = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.status == 'ok'


@dataclass
class TableManifest:
    rows: List[TableRow]
    seed: int
    budget: float

    @property
    def all_ok(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def failed(self) -> List[TableRow]:
        return [row for row in self.rows if not row.ok]


def table_row(n: int, seed: int, budget: float) -> TableRow:
    """Search, verify and format one row; failures are recorded, never raised"""
    start = time.time()
    expected = 4 * n * (n - 1) // 3
    try:
        outcome = search(AnnealConfig(n=n, seed=seed, time_limit=budget))
    except Exception as e:
        logger.error(f"Row n={n} crashed: {e}")
        return TableRow(n=n, i_star='', seconds=time.time() - start, status='failed', detail=str(e))

    seconds = time.time() - start
    if not isinstance(outcome, NearPPCertificate):
        detail = f"budget exceeded ({outcome.reason}); best energy {outcome.best_energy}"
        logger.error(f"Row n={n}: {detail}")
        return TableRow(n=n, i_star='', seconds=seconds, status='failed', detail=detail)

    report = verify_near_pp(outcome)
    if not report.passed or report.imbalance3 != expected:
        detail = f"verification failed on {', '.join(report.failed_fields)}"
        logger.error(f"Row n={n}: {detail}")
        return TableRow(n=n, i_star=format_thirds(outcome.imbalance3), seconds=seconds,
                        status='failed', detail=detail, certificate=outcome)

    return TableRow(n=n, i_star=format_thirds(report.imbalance3), seconds=seconds, certificate=outcome)


def reproduce_table(n_max: int, budget: float, seed: int = 0, threads: int = 1,
                    explore: bool = False) -> TableManifest:
    """One verified row per n = 1 mod 3 in [4, n_max]; rows are isolated from each other"""
    if n_max > TABLE_MAX_N and not explore:
        raise OrderTooLarge(n_max, TABLE_MAX_N)
    orders = table_orders(n_max)
    logger.info(f"📊 Reproducing {len(orders)} table rows up to n={n_max} (budget {budget:.0f}s per row)")

    results = run_jobs(table_row, [(n, seed, budget) for n in orders], threads=threads)
    rows = []
    for n, result in zip(orders, results):
        if isinstance(result, BaseException):
            rows.append(TableRow(n=n, i_star='', seconds=0.0, status='failed', detail=str(result)))
        else:
            rows.append(result)
    manifest = TableManifest(rows=rows, seed=seed, budget=budget)
    logger.info(f"✅ Table: {len(rows) - len(manifest.failed)}/{len(rows)} rows verified")
    return manifest

"""
Verification of near-PP certificates and of the lower bound on arbitrary squares
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from certify.oracle import (
    imbalance3_of_cells, is_bijection, oracle_circulant, oracle_distances, oracle_profile,
)
from core.errors import InvariantViolation, WrongResidue

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldMismatch:
    field: str
    claimed: object
    actual: object


@dataclass
class VerificationReport:
    n: int
    passed: bool = True
    mismatches: List[FieldMismatch] = field(default_factory=list)
    profile: Optional[Tuple[int, ...]] = None
    classification: Optional[str] = None
    imbalance3: Optional[int] = None
    lower_bound3: Optional[int] = None

    def fail(self, name: str, claimed, actual):
        self.passed = False
        self.mismatches.append(FieldMismatch(name, claimed, actual))

    @property
    def failed_fields(self) -> List[str]:
        return [m.field for m in self.mismatches]


def verify_near_pp(cert) -> VerificationReport:
    """Recompute profile, classification, circulant and imbalance3 from sigma alone"""
    sigma = list(cert.sigma)
    n = cert.n
    report = VerificationReport(n=n)

    if len(sigma) != n:
        report.fail('n', n, len(sigma))
    if not is_bijection(sigma):
        report.fail('sigma', list(cert.sigma), 'not a bijection on 0..n-1')
        return report
    n = len(sigma)
    if n % 3 != 1 or n < 4:
        report.fail('n', n, 'order must be congruent to 1 mod 3 and at least 4')
        return report

    a = (n * (n + 1) - 2) // 3
    bound = 4 * n * (n - 1) // 3
    profile = oracle_profile(sigma)
    report.profile = tuple(profile)
    report.lower_bound3 = bound

    claimed = list(cert.profile)
    if len(claimed) != len(profile):
        report.fail('profile', claimed, profile)
    else:
        for delta, (c, actual) in enumerate(zip(claimed, profile), start=1):
            if c != actual:
                report.fail(f'profile[{delta}]', c, actual)

    near_perfect = all(f == a or f == a + 2 for f in profile)
    report.classification = 'near-perfect' if near_perfect else 'neither'
    if not near_perfect:
        report.fail('classification', 'near-perfect', report.classification)

    report.imbalance3 = imbalance3_of_cells(oracle_circulant(sigma))
    if report.imbalance3 != cert.imbalance3:
        report.fail('imbalance3', cert.imbalance3, report.imbalance3)
    if report.imbalance3 != bound:
        report.fail('lower_bound3', bound, report.imbalance3)

    if not report.passed:
        logger.warning(f"Certificate for n={n} failed on {', '.join(report.failed_fields)}")
    return report


def pointwise_holds(x: int) -> bool:
    """|-2 + 6x| >= 2 + 2x"""
    return abs(-2 + 6 * x) >= 2 + 2 * x


@dataclass(frozen=True)
class PairSlack:
    r1: int
    r2: int
    distance: int
    x: int
    slack: int


@dataclass
class BoundReport:
    n: int
    a: int
    imbalance3: int
    lower_bound3: int
    sum_x: int
    expected_sum_x: int
    pairs: List[PairSlack]

    @property
    def total_slack(self) -> int:
        return sum(p.slack for p in self.pairs)

    @property
    def passed(self) -> bool:
        return self.imbalance3 >= self.lower_bound3 and self.sum_x == self.expected_sum_x

    @property
    def x_values(self) -> List[int]:
        return sorted({p.x for p in self.pairs})


def verify_bound(square) -> BoundReport:
    """Walk the lower-bound argument on one concrete square.

    Each distance is written d = a + 2x, the x are checked to sum to N/3, the
    pointwise inequality is checked per pair and the slacks are summed.
    """
    cells = [list(row) for row in square.cells]
    n = len(cells)
    if n % 3 != 1:
        raise WrongResidue(n)

    a = (n * (n + 1) - 2) // 3
    pair_count = n * (n - 1) // 2
    pairs = []
    imbalance3 = 0
    for r1, r2, d in oracle_distances(cells):
        if (d - a) % 2:
            raise InvariantViolation(f"rows {r1} and {r2} are at odd distance {d}")
        x = (d - a) // 2
        deviation = abs(3 * d - n * (n + 1))
        if deviation != abs(-2 + 6 * x):
            raise InvariantViolation(f"deviation of rows {r1}, {r2} is not |-2 + 6x|")
        if not pointwise_holds(x):
            raise InvariantViolation(f"pointwise inequality fails at x = {x}")
        imbalance3 += deviation
        pairs.append(PairSlack(r1, r2, d, x, deviation - (2 + 2 * x)))

    report = BoundReport(
        n=n, a=a, imbalance3=imbalance3, lower_bound3=4 * n * (n - 1) // 3,
        sum_x=sum(p.x for p in pairs), expected_sum_x=pair_count // 3, pairs=pairs,
    )
    if report.sum_x != report.expected_sum_x:
        raise InvariantViolation(f"sum of x is {report.sum_x}, expected {report.expected_sum_x}")
    if report.imbalance3 < report.lower_bound3:
        raise InvariantViolation(f"imbalance3 {imbalance3} is below the bound {report.lower_bound3}")
    if report.total_slack != report.imbalance3 - report.lower_bound3:
        raise InvariantViolation("slack does not account for the gap to the bound")
    return report


@dataclass
class SquareReport:
    n: int
    imbalance3: int
    all_even: bool
    distance_sum: int
    expected_distance_sum: int
    bound: Optional[BoundReport] = None

    @property
    def passed(self) -> bool:
        return self.all_even and self.distance_sum == self.expected_distance_sum and \
            (self.bound is None or self.bound.passed)


def verify_square_claims(square) -> SquareReport:
    """Parity and fixed-sum checks for any order, plus the bound walk when n = 1 mod 3"""
    cells = [list(row) for row in square.cells]
    n = len(cells)
    distances = [d for _, _, d in oracle_distances(cells)]
    return SquareReport(
        n=n,
        imbalance3=sum(abs(3 * d - n * (n + 1)) for d in distances),
        all_even=all(d % 2 == 0 for d in distances),
        distance_sum=sum(distances),
        expected_distance_sum=n * n * (n * n - 1) // 6,
        bound=verify_bound(square) if n % 3 == 1 else None,
    )

"""
Closed-form bound formulas, all scaled by 3 to stay in integers
"""
from dataclasses import dataclass
from typing import Optional

from core.errors import OrderTooSmall, WrongResidue


@dataclass(frozen=True)
class BandParameters:
    n: int
    a: int
    k: int

    @property
    def band(self):
        return (self.a, self.a + 2)


def band_parameters(n: int) -> BandParameters:
    """Near-perfect band {a, a+2} for n = 3k+1"""
    if n % 3 != 1:
        raise WrongResidue(n)
    if n < 4:
        raise OrderTooSmall(n, minimum=4)
    a = (n * (n + 1) - 2) // 3
    k = (n - 1) // 3
    return BandParameters(n=n, a=a, k=k)


def lower_bound3(n: int) -> int:
    """3 * 4n(n-1)/9, integral because 3 | n-1"""
    if n % 3 != 1:
        raise WrongResidue(n)
    return 4 * n * (n - 1) // 3


def naive_lower_bound3(n: int) -> int:
    """Bound that ignores parity: each pair deviates by >= 1 when 3 does not divide n(n+1)"""
    if n % 3 != 1:
        return 0
    return n * (n - 1) // 2


def perfect_target(n: int) -> Optional[int]:
    """n(n+1)/3 when integral, else None"""
    if (n * (n + 1)) % 3:
        return None
    return n * (n + 1) // 3


def fixed_distance_sum(n: int) -> int:
    return n * n * (n * n - 1) // 6


def profile_total(n: int) -> int:
    return n * (n * n - 1) // 3


def circulant_imbalance3(profile) -> int:
    """imbalance3 of the circulant square built from a permutation with this profile.

    Each shift delta accounts for n ordered row pairs, so every unordered pair
    is seen twice across delta and n - delta.
    """
    n = profile.n
    ideal = n * (n + 1)
    return n * sum(abs(3 * f - ideal) for f in profile.values) // 2

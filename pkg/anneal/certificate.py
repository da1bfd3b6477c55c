"""
Search outcomes: a checkable certificate on success, diagnostics on failure
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from config.settings import PRNG_ALGORITHM


@dataclass(frozen=True)
class NearPPCertificate:
    """A claimed near-perfect permutation and the quantities derived from it.

    sigma and profile are kept as plain integer tuples: a certificate read
    back from disk is a claim, and verification must be able to reject a
    sigma that is not even a bijection.
    """
    n: int
    sigma: Tuple[int, ...]
    profile: Tuple[int, ...]
    imbalance3: int
    seed: int
    steps: int
    elapsed: float = 0.0
    replica: int = 0
    restarts: int = 0
    rng: str = PRNG_ALGORITHM
    objective: str = 'band'


@dataclass(frozen=True)
class SearchFailure:
    n: int
    seed: int
    best_energy: int
    restart_count: int
    steps: int
    elapsed: float
    reason: str
    replica: Optional[int] = None

"""
Search state with O(n) incremental shift-profile updates for transpositions
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Tuple

import numpy as np

from core.errors import IdenticalIndices, IndexOutOfRange, InvariantViolation
from core.permutations import Permutation, ShiftProfile

logger = logging.getLogger(__name__)


def full_profile(sigma: np.ndarray) -> np.ndarray:
    n = len(sigma)
    deltas = np.arange(1, n)
    shifted = sigma[(np.arange(n)[None, :] + deltas[:, None]) % n]
    return np.abs(shifted - sigma[None, :]).sum(axis=1)


def swapped_profiles(sigma: np.ndarray, profile: np.ndarray, ps: np.ndarray, qs: np.ndarray) -> np.ndarray:
    """Profiles after each transposition (ps[b], qs[b]) applied on its own to sigma.

    For each shift d only the summands at j in {p, q, p-d, q-d} (mod n) move.
    p-d coincides with q when d = p-q, and q-d with p when d = q-p; those
    duplicates are masked so no summand is counted twice. Returns one row
    per transposition.
    """
    n = len(sigma)
    deltas = np.arange(1, n)
    p = np.asarray(ps, dtype=np.int64)[:, None, None]
    q = np.asarray(qs, dtype=np.int64)[:, None, None]
    j = np.concatenate(np.broadcast_arrays(p, q, (p - deltas) % n, (q - deltas) % n), axis=1)
    mask = np.ones(j.shape, dtype=bool)
    mask[:, 2] = j[:, 2] != q[:, 0]
    mask[:, 3] = j[:, 3] != p[:, 0]
    k = (j + deltas) % n

    sigma_p, sigma_q = sigma[p], sigma[q]

    def after_swap(index: np.ndarray) -> np.ndarray:
        return np.where(index == p, sigma_q, np.where(index == q, sigma_p, sigma[index]))

    old = np.abs(sigma[k] - sigma[j])
    new = np.abs(after_swap(k) - after_swap(j))
    return profile + np.where(mask, new - old, 0).sum(axis=1)


def swapped_profile(sigma: np.ndarray, profile: np.ndarray, p: int, q: int) -> np.ndarray:
    """Profile after exchanging sigma[p] and sigma[q]"""
    return swapped_profiles(sigma, profile, np.array([p]), np.array([q]))[0]


@dataclass
class AnnealState:
    sigma: np.ndarray
    profile: np.ndarray
    energy: int
    best_energy: int
    step_count: int = 0
    restart_count: int = 0
    energy_of: Callable[[np.ndarray], int] = field(default=None, repr=False)

    @classmethod
    def start(cls, sigma: np.ndarray, energy_of: Callable[[np.ndarray], int]) -> 'AnnealState':
        sigma = np.asarray(sigma, dtype=np.int64).copy()
        profile = full_profile(sigma)
        energy = energy_of(profile)
        return cls(sigma=sigma, profile=profile, energy=energy, best_energy=energy, energy_of=energy_of)

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def permutation(self) -> Permutation:
        return Permutation(tuple(self.sigma.tolist()))

    @property
    def shift_profile(self) -> ShiftProfile:
        return ShiftProfile(self.n, tuple(self.profile.tolist()))

    def propose(self, p: int, q: int) -> Tuple[int, np.ndarray]:
        profile = swapped_profile(self.sigma, self.profile, p, q)
        return self.energy_of(profile), profile

    def propose_batch(self, ps: np.ndarray, qs: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Energies and profiles for independent transpositions of the current sigma"""
        profiles = swapped_profiles(self.sigma, self.profile, ps, qs)
        return self.energy_of(profiles), profiles

    def accept(self, p: int, q: int, energy: int, profile: np.ndarray):
        self.sigma[p], self.sigma[q] = self.sigma[q], self.sigma[p]
        self.profile = profile
        self.energy = energy
        if energy < self.best_energy:
            self.best_energy = energy

    def check(self):
        """Compare the maintained profile with a recomputation from scratch"""
        expected = full_profile(self.sigma)
        if not np.array_equal(expected, self.profile):
            raise InvariantViolation(f"incremental profile drifted after {self.step_count} steps")
        if (self.profile & 1).any():
            raise InvariantViolation(f"odd shift correlation after {self.step_count} steps")
        if self.energy != self.energy_of(self.profile):
            raise InvariantViolation(f"energy drifted after {self.step_count} steps")


def swap_delta(state: AnnealState, p: int, q: int) -> Tuple[int, List[Tuple[int, int]]]:
    """Energy after swapping positions p and q, and the shifts whose value changes.

    The state is left untouched.
    """
    n = state.n
    for index in (p, q):
        if not 0 <= index < n:
            raise IndexOutOfRange(index, n)
    if p == q:
        raise IdenticalIndices(p)
    energy, profile = state.propose(p, q)
    changed = np.flatnonzero(profile != state.profile) + 1
    touched = [(int(d), int(profile[d - 1])) for d in changed]
    return energy, touched


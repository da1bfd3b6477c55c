"""
Permutations of Z_n and their shift correlations
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import gcd
from typing import Tuple

import numpy as np

from core.bounds import band_parameters, perfect_target
from core.errors import InvalidPermutation, OrderTooSmall

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1}; image[j] is sigma(j)"""
    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        object.__setattr__(self, 'image', image)
        n = len(image)
        if n < 1:
            raise InvalidPermutation("a permutation needs at least one point")
        if sorted(image) != list(range(n)):
            raise InvalidPermutation(f"image is not a bijection on 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.image)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.image, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __len__(self):
        return len(self.image)

    def __getitem__(self, j):
        return self.image[j]


@dataclass(frozen=True)
class ShiftProfile:
    """values[delta - 1] is f_sigma(delta) for delta in 1..n-1"""
    n: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(int(v) for v in self.values))
        if len(self.values) != self.n - 1:
            raise InvalidPermutation(f"a profile of order {self.n} has {self.n - 1} entries, got {len(self.values)}")

    def __getitem__(self, delta: int) -> int:
        """Profile value at shift delta (1-based, like the shift itself)"""
        return self.values[delta - 1]

    @property
    def total(self) -> int:
        return sum(self.values)


class Classification(str, Enum):
    PERFECT = 'perfect'
    NEAR_PERFECT = 'near-perfect'
    NEITHER = 'neither'


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def shift_profile(sigma: Permutation) -> ShiftProfile:
    """Shift correlations f(delta) = sum_j |sigma(j+delta) - sigma(j)|.

    Only the index wraps modulo n; values are compared as plain integers.
    """
    n = sigma.n
    if n < 2:
        raise OrderTooSmall(n)
    s = sigma.array
    deltas = np.arange(1, n)
    shifted = s[(np.arange(n)[None, :] + deltas[:, None]) % n]
    values = np.abs(shifted - s[None, :]).sum(axis=1)
    return ShiftProfile(n, tuple(values.tolist()))


def invert(sigma: Permutation) -> Permutation:
    tau = np.empty(sigma.n, dtype=np.int64)
    tau[sigma.array] = np.arange(sigma.n)
    return Permutation(tuple(tau.tolist()))


def classify(sigma: Permutation) -> Classification:
    profile = shift_profile(sigma)
    n = sigma.n
    target = perfect_target(n)
    if target is not None:
        if all(v == target for v in profile.values):
            return Classification.PERFECT
        return Classification.NEITHER
    if n % 3 == 1:
        params = band_parameters(n)
        if all(v in (params.a, params.a + 2) for v in profile.values):
            return Classification.NEAR_PERFECT
    return Classification.NEITHER


# Algebraic families

def power_map(n: int, e: int) -> Permutation:
    """j -> j**e mod n; raises InvalidPermutation when the map is not bijective"""
    try:
        return Permutation(tuple(pow(j, e, n) for j in range(n)))
    except InvalidPermutation:
        raise InvalidPermutation(f"j^{e} mod {n} is not a permutation") from None


def inversion_map(p: int) -> Permutation:
    """j -> j^-1 mod p with 0 fixed; p must be prime"""
    if p < 2 or any(gcd(j, p) != 1 for j in range(1, p)):
        raise InvalidPermutation(f"inversion map needs a prime modulus, got {p}")
    return Permutation((0,) + tuple(pow(j, -1, p) for j in range(1, p)))


# Symmetries that preserve the shift profile

def rotate(sigma: Permutation, c: int) -> Permutation:
    """j -> sigma(j + c)"""
    n = sigma.n
    return Permutation(tuple(sigma.image[(j + c) % n] for j in range(n)))


def reflect(sigma: Permutation) -> Permutation:
    """j -> sigma(-j)"""
    n = sigma.n
    return Permutation(tuple(sigma.image[(-j) % n] for j in range(n)))


def complement(sigma: Permutation) -> Permutation:
    """j -> n - 1 - sigma(j)"""
    n = sigma.n
    return Permutation(tuple(n - 1 - v for v in sigma.image))

"""
Integer energies that vanish exactly on near-perfect permutations

Both energies accept a single profile (one-dimensional array, returns an
int) or a stack of profiles (one per row, returns an integer array).
"""
import numpy as np

from anneal.config import ObjectiveMode
from core.bounds import BandParameters
from core.errors import WrongResidue
from core.permutations import ShiftProfile


def _total(terms: np.ndarray):
    totals = terms.sum(axis=-1)
    return int(totals) if np.ndim(totals) == 0 else totals


def band_penalty(values: np.ndarray, a: int):
    """Distance of every entry from the band {a, a+2}"""
    return _total(np.maximum(a - values, 0) + np.maximum(values - (a + 2), 0))


def imbalance_excess(values: np.ndarray, n: int):
    """sum |3f - n(n+1)| minus its minimum 8(n-1)/3; zero iff every entry is in the band"""
    return _total(np.abs(3 * values - n * (n + 1))) - 8 * (n - 1) // 3


def energy_function(params: BandParameters, mode: ObjectiveMode):
    if mode == ObjectiveMode.IMBALANCE:
        return lambda values: imbalance_excess(values, params.n)
    return lambda values: band_penalty(values, params.a)


def objective(profile: ShiftProfile, params: BandParameters, mode: ObjectiveMode = ObjectiveMode.BAND) -> int:
    if profile.n % 3 != 1 or profile.n != params.n:
        raise WrongResidue(profile.n)
    return energy_function(params, ObjectiveMode(mode))(np.asarray(profile.values, dtype=np.int64))

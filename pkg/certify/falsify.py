"""
Randomized attempts to find a square below the lower bound
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from anneal.config import ObjectiveMode
from anneal.objective import energy_function
from anneal.state import AnnealState
from core.bounds import band_parameters, lower_bound3
from core.latin import LatinSquare, circulant, imbalance
from core.permutations import Permutation
from core.sampling import LatinSquareWalk

logger = logging.getLogger(__name__)


@dataclass
class FalsificationResult:
    n: int
    samples: int
    min_imbalance3: Optional[int] = None
    violations: List[LatinSquare] = field(default_factory=list)

    @property
    def lower_bound3(self) -> int:
        return lower_bound3(self.n)


def descended_circulant(n: int, rng: np.random.Generator, steps: int) -> LatinSquare:
    """Circulant of a permutation after a short greedy descent on circulant imbalance"""
    params = band_parameters(n)
    state = AnnealState.start(rng.permutation(n), energy_function(params, ObjectiveMode.IMBALANCE))
    for _ in range(steps):
        if state.energy == 0:
            break
        p, q = rng.choice(n, size=2, replace=False)
        energy, profile = state.propose(int(p), int(q))
        if energy <= state.energy:
            state.accept(int(p), int(q), energy, profile)
    return circulant(Permutation(tuple(state.sigma.tolist())))


def falsify_bound(n: int, samples: int, rng: np.random.Generator, descent_steps: int = 200,
                  circulant_every: int = 2, spacing: Optional[int] = None) -> FalsificationResult:
    """Check random squares and descended circulants against the bound, recording any square under it.

    Random squares come from one Jacobson-Matthews walk, burnt in for n**3
    moves and sampled every `spacing` moves (n*n by default). Every
    `circulant_every`-th sample is a descended circulant instead.
    """
    bound = lower_bound3(n)
    result = FalsificationResult(n=n, samples=samples)
    walk = LatinSquareWalk(n, rng)
    walk.advance(n ** 3)
    spacing = n * n if spacing is None else spacing
    for i in range(samples):
        if circulant_every and i % circulant_every == circulant_every - 1:
            square = descended_circulant(n, rng, descent_steps)
        else:
            walk.advance(spacing)
            square = walk.square()
        value = imbalance(square).imbalance3
        if result.min_imbalance3 is None or value < result.min_imbalance3:
            result.min_imbalance3 = value
        if value < bound:
            logger.error(f"Square of order {n} with imbalance3 {value} is below the bound {bound}")
            result.violations.append(square)
    logger.info(f"Falsification n={n}: {samples} samples, min imbalance3 {result.min_imbalance3}, "
                f"{len(result.violations)} violations")
    return result

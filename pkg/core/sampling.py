"""
Random permutations and Latin squares for property checks and falsification runs
"""
from typing import Iterator, Optional, Tuple

import numpy as np

from core.latin import LatinSquare, circulant
from core.permutations import Permutation


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation(tuple(rng.permutation(n).tolist()))


def random_isotope(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random circulant with rows, columns and symbols relabelled"""
    base = circulant(random_permutation(n, rng)).array
    cells = base[rng.permutation(n)][:, rng.permutation(n)]
    return rng.permutation(n)[cells]


class LatinSquareWalk:
    """Jacobson-Matthews random walk on the Latin squares of order n.

    The square lives in its incidence cube: cube[r, c, s] is 1 when cell
    (r, c) holds s. A move adds +1/-1 around a 2x2x2 sub-cube so every line
    of the cube keeps summing to 1. It may leave a single entry at -1, the
    improper point; the next move is then forced through that point. Only
    proper states are reported as squares.
    """

    def __init__(self, n: int, rng: np.random.Generator, start: Optional[np.ndarray] = None):
        self.n = n
        self.rng = rng
        cells = random_isotope(n, rng) if start is None else np.asarray(start)
        self.cube = np.zeros((n, n, n), dtype=np.int8)
        rows, cols = np.indices((n, n))
        self.cube[rows, cols, cells] = 1
        self.improper: Optional[Tuple[int, int, int]] = None
        self.moves = 0

    @property
    def proper(self) -> bool:
        return self.improper is None

    def _pick(self, line: np.ndarray) -> int:
        ones = np.flatnonzero(line == 1)
        return int(ones[0]) if len(ones) == 1 else int(self.rng.choice(ones))

    def step(self):
        n, cube = self.n, self.cube
        if n < 2:
            return
        if self.improper is None:
            while True:
                r, c, s = (int(v) for v in self.rng.integers(n, size=3))
                if cube[r, c, s] == 0:
                    break
        else:
            r, c, s = self.improper
        r1 = self._pick(cube[:, c, s])
        c1 = self._pick(cube[r, :, s])
        s1 = self._pick(cube[r, c, :])

        cube[r, c, s] += 1
        cube[r, c1, s1] += 1
        cube[r1, c, s1] += 1
        cube[r1, c1, s] += 1
        cube[r, c, s1] -= 1
        cube[r, c1, s] -= 1
        cube[r1, c, s] -= 1
        cube[r1, c1, s1] -= 1

        self.improper = (r1, c1, s1) if cube[r1, c1, s1] < 0 else None
        self.moves += 1

    def advance(self, moves: int):
        """At least `moves` moves, then on until the state is proper"""
        for _ in range(moves):
            self.step()
        while not self.proper:
            self.step()

    @property
    def cells(self) -> np.ndarray:
        return self.cube.argmax(axis=2)

    def square(self) -> LatinSquare:
        return LatinSquare(self.n, tuple(tuple(row) for row in self.cells.tolist()))

    def samples(self, spacing: int) -> Iterator[LatinSquare]:
        while True:
            self.advance(spacing)
            yield self.square()


def random_latin_square(n: int, rng: np.random.Generator, moves: Optional[int] = None) -> LatinSquare:
    """Square reached after n**3 Jacobson-Matthews moves from a random circulant isotope"""
    walk = LatinSquareWalk(n, rng)
    walk.advance(n ** 3 if moves is None else moves)
    return walk.square()

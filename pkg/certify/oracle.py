"""
Deliberately naive re-implementations used as cross-checks
"""
from typing import List, Sequence, Tuple


def _column_of(row: Sequence[int], symbol: int) -> int:
    for column, value in enumerate(row):
        if value == symbol:
            return column
    raise ValueError(f"symbol {symbol} missing from row")


def oracle_distances(cells: Sequence[Sequence[int]]) -> List[Tuple[int, int, int]]:
    """(r1, r2, d) for every unordered row pair, scanning rows for each symbol"""
    n = len(cells)
    out = []
    for r1 in range(n):
        for r2 in range(r1 + 1, n):
            d = 0
            for s in range(n):
                d += abs(_column_of(cells[r1], s) - _column_of(cells[r2], s))
            out.append((r1, r2, d))
    return out


def oracle_imbalance(square) -> int:
    """3 * I(L) by triple loop over row pairs and symbols"""
    return imbalance3_of_cells([list(row) for row in square.cells])


def imbalance3_of_cells(cells: Sequence[Sequence[int]]) -> int:
    n = len(cells)
    total = 0
    for _, _, d in oracle_distances(cells):
        total += abs(3 * d - n * (n + 1))
    return total


def oracle_profile(image: Sequence[int]) -> List[int]:
    n = len(image)
    profile = []
    for delta in range(1, n):
        f = 0
        for j in range(n):
            f += abs(image[(j + delta) % n] - image[j])
        profile.append(f)
    return profile


def oracle_inverse(image: Sequence[int]) -> List[int]:
    inverse = [0] * len(image)
    for j, v in enumerate(image):
        inverse[v] = j
    return inverse


def oracle_circulant(image: Sequence[int]) -> List[List[int]]:
    """L[i][j] = (i + sigma^-1(j)) mod n"""
    n = len(image)
    inverse = oracle_inverse(image)
    return [[(i + inverse[j]) % n for j in range(n)] for i in range(n)]


def is_bijection(image: Sequence[int]) -> bool:
    n = len(image)
    seen = [False] * n
    for v in image:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n or seen[v]:
            return False
        seen[v] = True
    return n > 0

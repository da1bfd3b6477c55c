"""
Core package: exact combinatorial primitives for Latin square balance
"""
from core.errors import (
    LatinBalanceError, ValidationError, DimensionMismatch, SymbolOutOfRange,
    RowViolation, ColumnViolation, InvalidPermutation, IndexOutOfRange,
    IdenticalIndices, OrderTooSmall, OrderTooLarge, WrongResidue, WrongMode,
    InvariantViolation, ParseError,
)
from core.permutations import (
    Permutation, ShiftProfile, Classification, shift_profile, invert,
    classify, identity, power_map, inversion_map, rotate, reflect, complement,
)
from core.latin import LatinSquare, ImbalanceReport, validate_latin, row_distance, imbalance, circulant
from core.bounds import (
    BandParameters, band_parameters, lower_bound3, naive_lower_bound3,
    perfect_target, circulant_imbalance3,
)

__all__ = [
    'LatinBalanceError', 'ValidationError', 'DimensionMismatch', 'SymbolOutOfRange',
    'RowViolation', 'ColumnViolation', 'InvalidPermutation', 'IndexOutOfRange',
    'IdenticalIndices', 'OrderTooSmall', 'OrderTooLarge', 'WrongResidue', 'WrongMode',
    'InvariantViolation', 'ParseError',
    'Permutation', 'ShiftProfile', 'Classification', 'shift_profile', 'invert',
    'classify', 'identity', 'power_map', 'inversion_map', 'rotate', 'reflect', 'complement',
    'LatinSquare', 'ImbalanceReport', 'validate_latin', 'row_distance', 'imbalance', 'circulant',
    'BandParameters', 'band_parameters', 'lower_bound3', 'naive_lower_bound3',
    'perfect_target', 'circulant_imbalance3',
]

"""
Enumeration package: exhaustive, provably complete searches
"""
from enumeration.tasks import EnumerationMode, EnumerationTask, EnumerationResult
from enumeration.perfect import enumerate_perfect, naive_perfect_count
from enumeration.latin import enumerate_latin, min_imbalance_exhaustive

__all__ = [
    'EnumerationMode', 'EnumerationTask', 'EnumerationResult',
    'enumerate_perfect', 'naive_perfect_count',
    'enumerate_latin', 'min_imbalance_exhaustive',
]

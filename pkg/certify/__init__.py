"""
Certify package: independent re-computation of every claimed quantity.

Nothing here reuses core's code paths; inputs are read as plain integers.
"""
from certify.oracle import oracle_imbalance, oracle_distances, oracle_profile
from certify.verifier import (
    FieldMismatch, VerificationReport, BoundReport, PairSlack, SquareReport,
    verify_near_pp, verify_bound, verify_square_claims, pointwise_holds,
)
from certify.table import TableRow, TableManifest, reproduce_table, table_orders, format_thirds
from certify.falsify import FalsificationResult, falsify_bound

__all__ = [
    'oracle_imbalance', 'oracle_distances', 'oracle_profile',
    'FieldMismatch', 'VerificationReport', 'BoundReport', 'PairSlack', 'SquareReport',
    'verify_near_pp', 'verify_bound', 'verify_square_claims', 'pointwise_holds',
    'TableRow', 'TableManifest', 'reproduce_table', 'table_orders', 'format_thirds',
    'FalsificationResult', 'falsify_bound',
]

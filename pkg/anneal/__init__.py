"""
Anneal package: simulated-annealing search for near-perfect permutations
"""
from anneal.config import AnnealConfig, ObjectiveMode
from anneal.objective import objective
from anneal.state import AnnealState, swap_delta
from anneal.certificate import NearPPCertificate, SearchFailure
from anneal.annealer import search, run_replica

__all__ = [
    'AnnealConfig', 'ObjectiveMode', 'objective', 'AnnealState', 'swap_delta',
    'NearPPCertificate', 'SearchFailure', 'search', 'run_replica',
]

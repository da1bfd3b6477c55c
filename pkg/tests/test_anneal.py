"""
Tests for the annealing objective, incremental swap updates and the search driver
"""
import math
import os
import sys
import unittest

import numpy as np
from dotenv import load_dotenv

# Add parent directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Load environment variables
load_dotenv()

from anneal.annealer import replica_rng, run_replica, search
from anneal.certificate import NearPPCertificate, SearchFailure
from anneal.config import AnnealConfig, ObjectiveMode
from anneal.objective import band_penalty, energy_function, objective
from anneal.state import AnnealState, full_profile, swap_delta
from config.settings import SLOW_TESTS
from core.bounds import band_parameters, lower_bound3
from core.errors import IdenticalIndices, IndexOutOfRange, InvariantViolation, WrongResidue
from core.permutations import Classification, Permutation, classify, identity, shift_profile
from core.sampling import make_rng


class TestObjective(unittest.TestCase):

    def test_zero_exactly_on_near_perfect(self):
        params = band_parameters(4)
        profile = shift_profile(identity(4))
        self.assertEqual(objective(profile, params), 0)
        self.assertEqual(objective(profile, params, ObjectiveMode.IMBALANCE), 0)

    def test_neither_has_positive_energy(self):
        params = band_parameters(7)
        profile = shift_profile(identity(7))
        # (12, 20, 24, 24, 20, 12) against the band {18, 20}
        self.assertEqual(objective(profile, params), 6 + 4 + 4 + 6)
        self.assertEqual(objective(profile, params, ObjectiveMode.IMBALANCE), 80 - 16)

    def test_band_penalty_counts_both_sides(self):
        self.assertEqual(band_penalty(np.array([4, 6, 8, 12]), 6), 2 + 4)

    def test_wrong_residue(self):
        with self.assertRaises(WrongResidue):
            objective(shift_profile(identity(5)), band_parameters(4))

    def test_modes_agree_on_zero_set(self):
        rng = make_rng(23)
        params = band_parameters(7)
        band = energy_function(params, ObjectiveMode.BAND)
        excess = energy_function(params, ObjectiveMode.IMBALANCE)
        for _ in range(500):
            values = full_profile(rng.permutation(7))
            self.assertGreaterEqual(excess(values), 0)
            self.assertEqual(band(values) == 0, excess(values) == 0)


class TestSwapDelta(unittest.TestCase):

    def test_matches_full_recomputation(self):
        moves = 10_000 if SLOW_TESTS else 1_000
        for n in (7, 13, 31):
            params = band_parameters(n)
            energy_of = energy_function(params, ObjectiveMode.BAND)
            rng = make_rng(n)
            state = AnnealState.start(rng.permutation(n), energy_of)
            for _ in range(moves):
                p, q = (int(v) for v in rng.choice(n, size=2, replace=False))
                energy, touched = swap_delta(state, p, q)
                swapped = state.sigma.copy()
                swapped[p], swapped[q] = swapped[q], swapped[p]
                expected = full_profile(swapped)
                self.assertEqual(energy, energy_of(expected))
                for d, value in touched:
                    self.assertEqual(value, expected[d - 1])
                untouched = set(range(1, n)) - {d for d, _ in touched}
                for d in untouched:
                    self.assertEqual(state.profile[d - 1], expected[d - 1])
                state.accept(p, q, *state.propose(p, q))
            state.check()

    def test_batch_matches_full_recomputation(self):
        rng = make_rng(40)
        for n in (4, 10, 22):
            sigma = rng.permutation(n)
            state = AnnealState.start(sigma, energy_function(band_parameters(n), ObjectiveMode.BAND))
            ps = rng.integers(n, size=64)
            qs = rng.integers(n - 1, size=64)
            qs += qs >= ps
            energies, profiles = state.propose_batch(ps, qs)
            for b in range(64):
                swapped = sigma.copy()
                swapped[ps[b]], swapped[qs[b]] = swapped[qs[b]], swapped[ps[b]]
                expected = full_profile(swapped)
                self.assertTrue(np.array_equal(profiles[b], expected))
                self.assertEqual(int(energies[b]), state.energy_of(expected))

    def test_swap_leaves_state_untouched(self):
        params = band_parameters(7)
        state = AnnealState.start(np.arange(7), energy_function(params, ObjectiveMode.BAND))
        before = state.sigma.copy()
        swap_delta(state, 0, 3)
        self.assertTrue(np.array_equal(state.sigma, before))

    def test_bad_indices(self):
        state = AnnealState.start(np.arange(7), energy_function(band_parameters(7), ObjectiveMode.BAND))
        with self.assertRaises(IdenticalIndices):
            swap_delta(state, 2, 2)
        with self.assertRaises(IndexOutOfRange):
            swap_delta(state, 0, 7)

    def test_check_detects_drift(self):
        state = AnnealState.start(np.arange(7), energy_function(band_parameters(7), ObjectiveMode.BAND))
        state.profile = state.profile + 2
        with self.assertRaises(InvariantViolation):
            state.check()


class TestConfig(unittest.TestCase):

    def test_defaults(self):
        config = AnnealConfig(n=13, seed=1)
        self.assertEqual(config.initial_temperature, 13.0)
        self.assertEqual(config.steps_per_temperature, 1300)
        self.assertEqual(config.objective_mode, ObjectiveMode.BAND)
        self.assertEqual(config.reheat_temperature, 13.0 / 4)
        self.assertEqual(AnnealConfig(n=4, seed=1, freeze_temperature=2.0).reheat_temperature, 2.0)

    def test_rejects_bad_values(self):
        with self.assertRaises(WrongResidue):
            AnnealConfig(n=6, seed=1)
        with self.assertRaises(ValueError):
            AnnealConfig(n=7, seed=-1)
        with self.assertRaises(ValueError):
            AnnealConfig(n=7, seed=1, cooling_factor=1.0)
        with self.assertRaises(ValueError):
            AnnealConfig(n=7, seed=1, freeze_temperature=0.0)

    def test_replica_streams_differ(self):
        a = replica_rng(5, 0).permutation(20)
        b = replica_rng(5, 1).permutation(20)
        self.assertFalse(np.array_equal(a, b))
        self.assertTrue(np.array_equal(a, replica_rng(5, 0).permutation(20)))


class TestSearch(unittest.TestCase):

    def assert_certificate(self, outcome, n):
        self.assertIsInstance(outcome, NearPPCertificate)
        self.assertEqual(outcome.imbalance3, lower_bound3(n))
        self.assertEqual(classify(Permutation(outcome.sigma)), Classification.NEAR_PERFECT)
        self.assertEqual(outcome.profile, shift_profile(Permutation(outcome.sigma)).values)
        params = band_parameters(n)
        self.assertEqual(outcome.profile.count(params.a + 2), params.k)
        self.assertEqual(outcome.profile.count(params.a), n - 1 - params.k)

    def test_small_orders(self):
        for n in (4, 7, 10, 13):
            self.assert_certificate(search(AnnealConfig(n=n, seed=2024, time_limit=60)), n)

    def test_imbalance_objective(self):
        outcome = search(AnnealConfig(n=10, seed=3, objective_mode='imbalance', time_limit=60))
        self.assert_certificate(outcome, 10)
        self.assertEqual(outcome.objective, 'imbalance')

    def test_deterministic_for_fixed_seed(self):
        a = run_replica(AnnealConfig(n=13, seed=99))
        b = run_replica(AnnealConfig(n=13, seed=99))
        self.assertEqual(a.sigma, b.sigma)
        self.assertEqual(a.steps, b.steps)

    def test_invariant_checks_during_search(self):
        outcome = run_replica(AnnealConfig(n=16, seed=8, check_interval=50, time_limit=60))
        self.assert_certificate(outcome, 16)

    def test_restart_limit_failure(self):
        # below the freeze temperature with one proposal per level, every non-improving level is stale
        config = AnnealConfig(n=52, seed=4, initial_temperature=0.5, reheat_temperature=0.5,
                              steps_per_temperature=1, stagnation_window=1, restart_limit=1)
        outcome = run_replica(config)
        self.assertIsInstance(outcome, SearchFailure)
        self.assertEqual(outcome.reason, 'restart-limit')
        self.assertEqual(outcome.restart_count, 1)
        self.assertGreater(outcome.best_energy, 0)

    def test_time_limit_failure(self):
        outcome = search(AnnealConfig(n=52, seed=4, time_limit=1e-9))
        self.assertIsInstance(outcome, SearchFailure)
        self.assertEqual(outcome.reason, 'time-limit')
        self.assertEqual(outcome.steps, 52 * 100)

    def test_no_reheat_while_hot(self):
        config = AnnealConfig(n=31, seed=6, steps_per_temperature=10, stagnation_window=1, restart_limit=1)
        levels_to_freeze = math.ceil(math.log(config.freeze_temperature / config.initial_temperature)
                                     / math.log(config.cooling_factor))
        outcome = run_replica(config)
        if isinstance(outcome, SearchFailure):
            self.assertEqual(outcome.reason, 'restart-limit')
            self.assertGreaterEqual(outcome.steps, levels_to_freeze * config.steps_per_temperature)
        else:
            self.assert_certificate(outcome, 31)

    def test_parallel_replicas(self):
        outcome = search(AnnealConfig(n=13, seed=21, thread_count=2, time_limit=60))
        self.assert_certificate(outcome, 13)

    def test_default_schedule_order_twenty_two(self):
        self.assert_certificate(search(AnnealConfig(n=22, seed=0, time_limit=300)), 22)

    @unittest.skipUnless(SLOW_TESTS, "set LATIN_BALANCE_SLOW_TESTS=1 for the larger orders")
    def test_larger_orders(self):
        for n in (19, 25, 28, 31):
            with self.subTest(n=n):
                self.assert_certificate(search(AnnealConfig(n=n, seed=0, time_limit=600)), n)


if __name__ == '__main__':
    unittest.main()

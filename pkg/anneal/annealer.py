"""
Simulated annealing over transpositions of a permutation
"""
import logging
import time
from multiprocessing import Manager
from typing import Union

import numpy as np

from anneal.certificate import NearPPCertificate, SearchFailure
from anneal.config import AnnealConfig
from anneal.objective import energy_function
from anneal.state import AnnealState
from config.settings import ANNEAL_MAX_BATCH
from core.bounds import band_parameters, lower_bound3
from core.errors import InvariantViolation
from core.latin import circulant, imbalance
from core.permutations import Classification, classify, shift_profile
from workers.pool import run_jobs

logger = logging.getLogger(__name__)

SearchOutcome = Union[NearPPCertificate, SearchFailure]


def replica_rng(seed: int, replica: int) -> np.random.Generator:
    """PCG64 stream derived from (seed, replica)"""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, replica])))


def _next_batch(size: int, accepted_at: int) -> int:
    """Grow the batch while proposals keep failing, shrink it towards the last waiting time"""
    if accepted_at < 0:
        return min(ANNEAL_MAX_BATCH, 2 * size)
    return max(1, min(ANNEAL_MAX_BATCH, 2 * (accepted_at + 1)))


def run_replica(config: AnnealConfig, replica: int = 0, stop_event=None) -> SearchOutcome:
    """One single-threaded annealing run.

    Temperature falls geometrically from initial_temperature. Once it is at
    or below freeze_temperature, a level that does not lower the best energy
    of the current cycle counts as stale; stagnation_window stale levels in a
    row reheat the current permutation to reheat_temperature, which counts as
    a restart.

    Proposals are scored in vectorised batches against the current sigma. The
    first accepted proposal is applied and the rest of the batch discarded,
    so the chain is the same Metropolis chain as one proposal at a time.
    Deterministic given (config, replica) as long as it is neither stopped
    nor timed out.
    """
    start = time.time()
    deadline = start + config.time_limit if config.time_limit else None
    n = config.n
    params = band_parameters(n)
    energy_of = energy_function(params, config.objective_mode)
    rng = replica_rng(config.seed, replica)

    state = AnnealState.start(rng.permutation(n), energy_of)
    overall_best = state.best_energy
    steps = 0
    batch = 1
    temperature = config.initial_temperature
    stale_levels = 0

    def failure(reason: str) -> SearchFailure:
        logger.info(f"Replica {replica} for n={n} gave up ({reason}); best energy {overall_best}")
        return SearchFailure(n=n, seed=config.seed, best_energy=overall_best,
                             restart_count=state.restart_count, steps=steps,
                             elapsed=time.time() - start, reason=reason, replica=replica)

    while state.energy != 0:
        cycle_best = state.best_energy
        level_end = steps + config.steps_per_temperature
        while steps < level_end and state.energy != 0:
            size = min(batch, level_end - steps)
            ps = rng.integers(n, size=size)
            qs = rng.integers(n - 1, size=size)
            qs += qs >= ps
            energies, profiles = state.propose_batch(ps, qs)
            uphill = np.maximum(energies - state.energy, 0)
            hits = np.flatnonzero(rng.random(size) < np.exp(-uphill / temperature))
            accepted_at = int(hits[0]) if hits.size else -1
            if accepted_at >= 0:
                state.accept(int(ps[accepted_at]), int(qs[accepted_at]),
                             int(energies[accepted_at]), profiles[accepted_at].copy())
            used = accepted_at + 1 if accepted_at >= 0 else size
            if config.check_interval and (steps + used) // config.check_interval > steps // config.check_interval:
                state.step_count = steps + used
                state.check()
            steps += used
            batch = _next_batch(size, accepted_at)
        state.step_count = steps
        if state.energy == 0:
            break

        if state.best_energy < cycle_best:
            overall_best = min(overall_best, state.best_energy)
            stale_levels = 0
            logger.debug(f"Replica {replica}: energy {state.best_energy} at step {steps} (T={temperature:.3f})")
        elif temperature <= config.freeze_temperature:
            stale_levels += 1

        temperature *= config.cooling_factor
        if deadline is not None and time.time() > deadline:
            return failure('time-limit')
        if stop_event is not None and stop_event.is_set():
            return failure('stopped')

        if stale_levels >= config.stagnation_window:
            if state.restart_count >= config.restart_limit:
                return failure('restart-limit')
            state.restart_count += 1
            logger.debug(f"Replica {replica}: reheat {state.restart_count} after {steps} steps "
                         f"(energy {state.energy}, best {overall_best})")
            temperature = config.reheat_temperature
            state.best_energy = state.energy
            stale_levels = 0

    if stop_event is not None:
        stop_event.set()
    return _certify_state(config, state, replica, steps, time.time() - start)



def _certify_state(config: AnnealConfig, state: AnnealState, replica: int, steps: int,
                   elapsed: float) -> NearPPCertificate:
    sigma = state.permutation
    profile = shift_profile(sigma)
    if profile.values != tuple(state.profile.tolist()):
        raise InvariantViolation("maintained profile disagrees with the recomputed one")
    if classify(sigma) != Classification.NEAR_PERFECT:
        raise InvariantViolation("zero energy reached by a permutation that is not near-perfect")
    report = imbalance(circulant(sigma))
    if report.imbalance3 != lower_bound3(config.n):
        raise InvariantViolation(f"near-perfect circulant has imbalance3 {report.imbalance3}")
    return NearPPCertificate(
        n=config.n,
        sigma=sigma.image,
        profile=profile.values,
        imbalance3=report.imbalance3,
        seed=config.seed,
        steps=steps,
        elapsed=elapsed,
        replica=replica,
        restarts=state.restart_count,
        objective=config.objective_mode.value,
    )


def search(config: AnnealConfig) -> SearchOutcome:
    """Find a near-perfect permutation of order config.n.

    With thread_count > 1, independent replicas run with seeds derived from
    (seed, replica) and stop once any of them succeeds; the lowest-index
    successful replica is reported.
    """
    logger.info(f"🔍 Annealing for a near-perfect permutation of order {config.n} (seed {config.seed})")
    if config.thread_count <= 1:
        outcome = run_replica(config, 0)
    else:
        with Manager() as manager:
            found = manager.Event()
            jobs = [(config, replica, found) for replica in range(config.thread_count)]
            outcomes = run_jobs(run_replica, jobs, threads=config.thread_count)
        outcome = _pick_outcome(config, outcomes)

    if isinstance(outcome, NearPPCertificate):
        logger.info(f"✅ n={config.n}: near-PP found after {outcome.steps} steps "
                    f"({outcome.restarts} restarts, {outcome.elapsed:.2f}s)")
    return outcome


def _pick_outcome(config: AnnealConfig, outcomes) -> SearchOutcome:
    successes = [o for o in outcomes if isinstance(o, NearPPCertificate)]
    if successes:
        return min(successes, key=lambda c: c.replica)
    failures = [o for o in outcomes if isinstance(o, SearchFailure)]
    errors = [o for o in outcomes if isinstance(o, BaseException)]
    if not failures and errors:
        raise errors[0]
    best = min(failures, key=lambda f: f.best_energy)
    return SearchFailure(n=config.n, seed=config.seed, best_energy=best.best_energy,
                         restart_count=sum(f.restart_count for f in failures),
                         steps=sum(f.steps for f in failures),
                         elapsed=max(f.elapsed for f in failures), reason=best.reason)

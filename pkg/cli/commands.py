"""
Command implementations: each returns a process exit code
"""
import csv
import functools
import io
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Optional

import numpy as np

from anneal.annealer import search
from anneal.certificate import NearPPCertificate
from anneal.config import AnnealConfig
from certify.falsify import falsify_bound
from certify.table import format_thirds, reproduce_table, table_orders
from certify.verifier import verify_near_pp, verify_square_claims
from config.settings import DEFAULT_THREADS, ENUM_PERFECT_MAX_N, TABLE_BUDGET_SECONDS, TOOL_VERSION
from core.bounds import lower_bound3
from core.errors import (
    InvalidPermutation, InvariantViolation, LatinBalanceError, ParseError, ValidationError,
)
from core.latin import circulant, imbalance
from core.permutations import Permutation, inversion_map, power_map
from enumeration.latin import min_imbalance_exhaustive, enumerate_latin
from enumeration.perfect import enumerate_perfect
from enumeration.tasks import EnumerationMode, EnumerationTask
from reports.renderer import render
from storage.documents import (
    PermutationDocument, SquareDocument, certificate_to_dict, dumps, format_grid,
    load_document, permutation_document, save_certificate, save_file_data,
    save_manifest, square_document, write_jsonl,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PARSE = 3
EXIT_TIMEOUT = 4
EXIT_FAILURE = 5


def exit_codes(func):
    """Map toolkit errors raised by a command onto the stable exit codes"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ParseError as e:
            logger.error(f"Parse error: {e}")
            print(f"parse error: {e}", file=sys.stderr)
            return EXIT_PARSE
        except InvariantViolation as e:
            logger.error(f"Invariant violated: {e}")
            print(f"verification failed: {e}", file=sys.stderr)
            return EXIT_FAILURE
        except (ValidationError, LatinBalanceError, ValueError) as e:
            logger.error(f"Invalid input: {e}")
            print(f"invalid input: {e}", file=sys.stderr)
            return EXIT_VALIDATION
    return wrapper


def emit(text: str, stream=None):
    (stream or sys.stdout).write(text)


def fresh_seed() -> int:
    return int(np.random.SeedSequence().generate_state(1, dtype=np.uint64)[0])


def _square_from_document(doc):
    if isinstance(doc, SquareDocument):
        return doc.square
    if isinstance(doc, PermutationDocument):
        return circulant(doc.permutation)
    if isinstance(doc, NearPPCertificate):
        try:
            return circulant(Permutation(doc.sigma))
        except InvalidPermutation as e:
            raise ValidationError(str(e)) from None
    raise ParseError("document does not describe a square")


@exit_codes
def cmd_imbalance(square_file: str, fmt: str = 'text') -> int:
    doc = load_document(square_file)
    square = _square_from_document(doc)
    report = imbalance(square)
    if fmt == 'json':
        data = asdict(report)
        data['I'] = format_thirds(report.imbalance3)
        data['fixed_sum_ok'] = report.fixed_sum_ok
        emit(dumps(data))
    else:
        emit(render('imbalance.txt.j2', report=report))
    return EXIT_OK


def _open_stream(output: Optional[str]):
    if output in (None, '-'):
        return sys.stdout, False
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path.open('w', encoding='utf-8'), True


def _enumeration_output(result, fmt: str) -> None:
    if fmt == 'json':
        emit(dumps({'n': result.n, 'mode': result.mode.value, 'total_count': result.total_count,
                    'canonical_count': result.canonical_count, 'exhausted': result.exhausted,
                    'elapsed': result.elapsed}))
    else:
        emit(render('enumeration.txt.j2', result=result), stream=sys.stderr if fmt == 'quiet' else None)


@exit_codes
def cmd_enum_pp(n: int, count_only: bool = True, threads: int = DEFAULT_THREADS,
                timeout: Optional[float] = None, force: bool = False,
                output: Optional[str] = None, fmt: str = 'text') -> int:
    if n > ENUM_PERFECT_MAX_N and not force:
        print(f"refusing to enumerate n={n}: exhaustive search hits a combinatorial wall at n=18; "
              f"pass --force to try anyway", file=sys.stderr)
        return EXIT_VALIDATION

    task = EnumerationTask(n=n, mode=EnumerationMode.PERFECT_PERMUTATIONS, count_only=True,
                           time_limit=timeout, thread_count=threads)
    if count_only or output is None:
        result = enumerate_perfect(task)
    else:
        stream, owned = _open_stream(output)
        try:
            result = enumerate_perfect(task, on_item=lambda sigma: write_jsonl(
                stream, [permutation_document(sigma, tool_version=TOOL_VERSION)]))
        finally:
            if owned:
                stream.close()
    _enumeration_output(result, 'quiet' if output == '-' and fmt == 'text' else fmt)
    return EXIT_OK if result.exhausted else EXIT_TIMEOUT


@exit_codes
def cmd_enum_latin(n: int, threads: int = DEFAULT_THREADS, timeout: Optional[float] = None,
                   output: Optional[str] = None, fmt: str = 'text') -> int:
    task = EnumerationTask(n=n, mode=EnumerationMode.ALL_LATIN_SQUARES, count_only=True,
                           time_limit=timeout, thread_count=threads)
    if output is None:
        result = enumerate_latin(task)
    else:
        stream, owned = _open_stream(output)
        try:
            result = enumerate_latin(task, on_item=lambda square: write_jsonl(stream, [square_document(square)]))
        finally:
            if owned:
                stream.close()
    _enumeration_output(result, 'quiet' if output == '-' and fmt == 'text' else fmt)
    return EXIT_OK if result.exhausted else EXIT_TIMEOUT


@exit_codes
def cmd_min_exhaustive(n: int, fmt: str = 'text') -> int:
    value, witness = min_imbalance_exhaustive(n)
    count = enumerate_latin(EnumerationTask(n=n, mode=EnumerationMode.ALL_LATIN_SQUARES)).total_count
    if fmt == 'json':
        emit(dumps({'n': n, 'squares': count, 'imbalance3': value, 'I': format_thirds(value),
                    'witness': [list(row) for row in witness.cells]}))
    else:
        emit(render('min_exhaustive.txt.j2', n=n, count=count, imbalance3=value,
                    grid=format_grid(witness).rstrip('\n')))
    return EXIT_OK


@exit_codes
def cmd_search(n: int, seed: Optional[int] = None, output: Optional[str] = None,
               threads: int = 1, record_time: bool = False, fmt: str = 'text', **overrides) -> int:
    if seed is None:
        seed = fresh_seed()
        print(f"seed = {seed}", file=sys.stderr)
    overrides = {k: v for k, v in overrides.items() if v is not None}
    config = AnnealConfig(n=n, seed=seed, thread_count=threads, **overrides)
    outcome = search(config)

    if not isinstance(outcome, NearPPCertificate):
        if fmt == 'json':
            emit(dumps(asdict(outcome)))
        else:
            emit(render('search.txt.j2', cert=None, failure=outcome, verified=False))
        return EXIT_FAILURE

    report = verify_near_pp(outcome)
    if output:
        save_certificate(output, outcome, include_elapsed=record_time)
    if fmt == 'json':
        data = certificate_to_dict(outcome, include_elapsed=record_time)
        data['verified'] = report.passed
        emit(dumps(data))
    else:
        emit(render('search.txt.j2', cert=outcome, failure=None, verified=report.passed))
    return EXIT_OK if report.passed else EXIT_FAILURE


@exit_codes
def cmd_table(n_max: int, budget: float = TABLE_BUDGET_SECONDS, csv_path: Optional[str] = None,
              seed: int = 0, threads: int = 1, explore: bool = False, fmt: str = 'text') -> int:
    manifest = reproduce_table(n_max, budget, seed=seed, threads=threads, explore=explore)
    if csv_path:
        save_manifest(csv_path, manifest)
    expected = {n: format_thirds(lower_bound3(n)) for n in table_orders(n_max)}
    matched = all(row.ok and row.i_star == expected[row.n] for row in manifest.rows)
    if fmt == 'json':
        emit(dumps({'seed': seed, 'budget': budget, 'rows': [
            {'n': row.n, 'I_star': row.i_star, 'expected': expected[row.n], 'seconds': row.seconds,
             'status': row.status, 'detail': row.detail} for row in manifest.rows]}))
    else:
        emit(render('table_summary.txt.j2', manifest=manifest, expected=expected))
    return EXIT_OK if matched else EXIT_FAILURE


@exit_codes
def cmd_verify(path: str, fmt: str = 'text', verbose: bool = False) -> int:
    doc = load_document(path)
    if isinstance(doc, NearPPCertificate):
        report = verify_near_pp(doc)
        if fmt == 'json':
            emit(dumps({'type': 'near-pp-certificate', 'n': report.n, 'passed': report.passed,
                        'profile': list(report.profile or ()), 'classification': report.classification,
                        'imbalance3': report.imbalance3, 'lower_bound3': report.lower_bound3,
                        'mismatches': [{'field': m.field, 'claimed': m.claimed, 'actual': m.actual}
                                       for m in report.mismatches]}))
        else:
            emit(render('verification.txt.j2', report=report))
        return EXIT_OK if report.passed else EXIT_FAILURE

    square = _square_from_document(doc)
    report = verify_square_claims(square)
    if fmt == 'json':
        data = {'type': 'square', 'n': report.n, 'passed': report.passed, 'imbalance3': report.imbalance3,
                'all_even': report.all_even, 'distance_sum': report.distance_sum,
                'expected_distance_sum': report.expected_distance_sum}
        if report.bound is not None:
            data['bound'] = {'a': report.bound.a, 'sum_x': report.bound.sum_x,
                             'expected_sum_x': report.bound.expected_sum_x,
                             'lower_bound3': report.bound.lower_bound3,
                             'total_slack': report.bound.total_slack,
                             'pairs': [asdict(p) for p in report.bound.pairs]}
        emit(dumps(data))
    else:
        emit(render('square_verification.txt.j2', report=report, verbose=verbose))
    return EXIT_OK if report.passed else EXIT_FAILURE


@exit_codes
def cmd_family(kind: str, n_min: int, n_max: int, exponent: int = 3, csv_path: Optional[str] = None,
               fmt: str = 'text') -> int:
    """Circulant imbalance of an algebraic permutation family over a range of orders"""
    rows = []
    for n in range(max(2, n_min), n_max + 1):
        try:
            sigma = inversion_map(n) if kind == 'inversion' else power_map(n, exponent)
        except InvalidPermutation:
            continue
        report = imbalance(circulant(sigma))
        rows.append({'n': n, 'imbalance3': report.imbalance3, 'lower_bound3': report.lower_bound3})

    family = 'inversion' if kind == 'inversion' else f'power{exponent}'
    if csv_path:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['n', 'imbalance3', 'I'])
        for row in rows:
            writer.writerow([row['n'], row['imbalance3'], format_thirds(row['imbalance3'])])
        save_file_data(csv_path, buffer.getvalue())
    if fmt == 'json':
        emit(dumps({'family': family, 'rows': [dict(row, I=format_thirds(row['imbalance3'])) for row in rows]}))
    else:
        emit(render('family.txt.j2', family=family, rows=rows))
    return EXIT_OK


@exit_codes
def cmd_falsify(n: int, samples: int, seed: Optional[int] = None, fmt: str = 'text') -> int:
    if seed is None:
        seed = fresh_seed()
        print(f"seed = {seed}", file=sys.stderr)
    result = falsify_bound(n, samples, np.random.default_rng(seed))
    if fmt == 'json':
        emit(dumps({'n': n, 'samples': samples, 'seed': seed, 'min_imbalance3': result.min_imbalance3,
                    'lower_bound3': result.lower_bound3, 'violations': len(result.violations)}))
    else:
        emit(render('falsify.txt.j2', result=result, seed=seed))
    return EXIT_OK if not result.violations else EXIT_FAILURE

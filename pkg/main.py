"""
Latin Square Balance Toolkit - Main Entry Point
"""
import argparse
import logging
import sys

from config.settings import DEFAULT_THREADS, LOG_FILE, LOG_LEVEL, TABLE_BUDGET_SECONDS


# Configure logging
def setup_logging(log_level=None):
    """Set up logging with the specified level; log lines go to stderr and the optional log file"""
    level = getattr(logging, log_level or LOG_LEVEL)
    handlers = [logging.StreamHandler()]
    if LOG_FILE:
        handlers.append(logging.FileHandler(LOG_FILE))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )
    return logging.getLogger(__name__)


def _add_format(parser):
    parser.add_argument('--format', dest='fmt', choices=['text', 'json'], default='text',
                        help='Output format')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Latin Square Balance Toolkit')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='Set the logging level')
    parser.add_argument('--threads', type=int, default=DEFAULT_THREADS,
                        help='Worker processes for enumeration, search replicas and table rows')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('imbalance', help='Imbalance report for a square, permutation or certificate file')
    p.add_argument('square_file')
    _add_format(p)

    p = sub.add_parser('enum-pp', help='Count (and optionally list) perfect permutations')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--count-only', action='store_true')
    p.add_argument('--output', help="JSON-lines file for the permutations ('-' for stdout)")
    p.add_argument('--timeout', type=float)
    p.add_argument('--force', action='store_true', help='Allow n above the enumeration guard')
    _add_format(p)

    p = sub.add_parser('enum-latin', help='Count (and optionally list) all Latin squares of order n')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--output', help="JSON-lines file for the squares ('-' for stdout)")
    p.add_argument('--timeout', type=float)
    _add_format(p)

    p = sub.add_parser('min-exhaustive', help='Minimum imbalance over all squares of order n <= 5')
    p.add_argument('--n', type=int, required=True)
    _add_format(p)

    p = sub.add_parser('search', help='Anneal for a near-perfect permutation')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--seed', type=int)
    p.add_argument('--output', help='Certificate JSON path')
    p.add_argument('--initial-temperature', type=float)
    p.add_argument('--cooling', dest='cooling_factor', type=float)
    p.add_argument('--freeze-temperature', type=float, help='Stagnation is counted only at or below this temperature')
    p.add_argument('--reheat-temperature', type=float, help='Temperature a stagnating run is reheated to')
    p.add_argument('--steps-per-temperature', type=int)
    p.add_argument('--stagnation-window', type=int)
    p.add_argument('--restart-limit', type=int)
    p.add_argument('--time-limit', type=float)
    p.add_argument('--check-interval', type=int)
    p.add_argument('--objective', dest='objective_mode', choices=['band', 'imbalance'])
    p.add_argument('--record-time', action='store_true', help='Store elapsed seconds in the certificate')
    _add_format(p)

    p = sub.add_parser('table', help='Reproduce the existence table for n = 1 mod 3')
    p.add_argument('--n-max', type=int, required=True)
    p.add_argument('--budget', type=float, default=TABLE_BUDGET_SECONDS, help='Seconds per row')
    p.add_argument('--csv', dest='csv_path', help='Manifest CSV path')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--explore', action='store_true', help='Allow n beyond the published range')
    _add_format(p)

    p = sub.add_parser('verify', help='Verify a certificate or walk the bound on a square')
    p.add_argument('path')
    p.add_argument('--verbose', action='store_true', help='List every row pair')
    _add_format(p)

    p = sub.add_parser('family', help='Circulant imbalance of an algebraic permutation family')
    p.add_argument('--kind', choices=['power', 'inversion'], default='power')
    p.add_argument('--exponent', type=int, default=3)
    p.add_argument('--n-min', type=int, default=4)
    p.add_argument('--n-max', type=int, required=True)
    p.add_argument('--csv', dest='csv_path')
    _add_format(p)

    p = sub.add_parser('falsify', help='Random squares checked against the lower bound')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--samples', type=int, default=100)
    p.add_argument('--seed', type=int)
    _add_format(p)
    return parser


def dispatch(args) -> int:
    from cli import commands

    if args.command == 'imbalance':
        return commands.cmd_imbalance(args.square_file, fmt=args.fmt)
    if args.command == 'enum-pp':
        return commands.cmd_enum_pp(args.n, count_only=args.count_only, threads=args.threads,
                                    timeout=args.timeout, force=args.force, output=args.output, fmt=args.fmt)
    if args.command == 'enum-latin':
        return commands.cmd_enum_latin(args.n, threads=args.threads, timeout=args.timeout,
                                       output=args.output, fmt=args.fmt)
    if args.command == 'min-exhaustive':
        return commands.cmd_min_exhaustive(args.n, fmt=args.fmt)
    if args.command == 'search':
        return commands.cmd_search(
            args.n, seed=args.seed, output=args.output, threads=args.threads,
            record_time=args.record_time, fmt=args.fmt,
            initial_temperature=args.initial_temperature, cooling_factor=args.cooling_factor,
            freeze_temperature=args.freeze_temperature, reheat_temperature=args.reheat_temperature,
            steps_per_temperature=args.steps_per_temperature, stagnation_window=args.stagnation_window,
            restart_limit=args.restart_limit, time_limit=args.time_limit,
            check_interval=args.check_interval, objective_mode=args.objective_mode,
        )
    if args.command == 'table':
        return commands.cmd_table(args.n_max, budget=args.budget, csv_path=args.csv_path, seed=args.seed,
                                  threads=args.threads, explore=args.explore, fmt=args.fmt)
    if args.command == 'verify':
        return commands.cmd_verify(args.path, fmt=args.fmt, verbose=args.verbose)
    if args.command == 'family':
        return commands.cmd_family(args.kind, args.n_min, args.n_max, exponent=args.exponent,
                                   csv_path=args.csv_path, fmt=args.fmt)
    if args.command == 'falsify':
        return commands.cmd_falsify(args.n, args.samples, seed=args.seed, fmt=args.fmt)
    raise ValueError(f"unknown command {args.command}")


def main_cli(argv=None):
    """CLI entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Set up logging
    logger = setup_logging(args.log_level)
    logger.debug(f"Running {args.command} with {args.threads} threads")

    try:
        return dispatch(args)
    except KeyboardInterrupt:
        logger.info("Process interrupted by user")
        return 1
    except Exception as e:
        logger.error(f"Error running {args.command}: {e}")
        return 1


# Entry point for running the script directly
if __name__ == "__main__":
    sys.exit(main_cli())

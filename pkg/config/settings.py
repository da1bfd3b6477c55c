"""
Runtime settings for the Latin square balance toolkit
"""
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

TOOL_VERSION = '0.1.0'
FORMAT_VERSION = 1

# Parallelism and logging
DEFAULT_THREADS = max(1, int(os.getenv('LATIN_BALANCE_THREADS', 1)))
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
LOG_FILE = os.getenv('LATIN_BALANCE_LOG_FILE', 'latin_balance.log')
DEBUG_CHECKS = os.getenv('LATIN_BALANCE_DEBUG', '0') == '1'
SLOW_TESTS = os.getenv('LATIN_BALANCE_SLOW_TESTS', '0') == '1'

# Guards against combinatorial explosion
ENUM_PERFECT_MAX_N = 17      # exhaustive search hits a wall at n = 18
ENUM_LATIN_MAX_N = 6
EXHAUSTIVE_MIN_MAX_N = 5
NAIVE_ORACLE_MAX_N = 8
TABLE_MAX_N = 52
MAX_SAFE_ORDER = 10_000      # imbalance3 < n**4 stays inside int64 below this

# Simulated annealing defaults
ANNEAL_COOLING_FACTOR = float(os.getenv('LATIN_BALANCE_COOLING', 0.995))
ANNEAL_STEPS_FACTOR = 100    # steps_per_temperature = factor * n
ANNEAL_STAGNATION_WINDOW = 50    # levels at or below the freeze temperature
ANNEAL_FREEZE_TEMPERATURE = float(os.getenv('LATIN_BALANCE_FREEZE_TEMPERATURE', 1.0))
ANNEAL_MAX_BATCH = 256       # proposals scored per vectorised batch
ANNEAL_RESTART_LIMIT = 1000
ANNEAL_CHECK_INTERVAL = 10_000
PRNG_ALGORITHM = 'PCG64'

# Table reproduction
TABLE_BUDGET_SECONDS = float(os.getenv('LATIN_BALANCE_TABLE_BUDGET', 600))

"""
Command-line surface of the toolkit
"""
from cli.commands import (
    EXIT_FAILURE, EXIT_OK, EXIT_PARSE, EXIT_TIMEOUT, EXIT_VALIDATION,
    cmd_enum_latin, cmd_enum_pp, cmd_falsify, cmd_family, cmd_imbalance,
    cmd_min_exhaustive, cmd_search, cmd_table, cmd_verify,
)

"""
Exception hierarchy for the Latin square balance toolkit
"""


class LatinBalanceError(Exception):
    """Base class for every error raised by the toolkit"""


class ValidationError(LatinBalanceError):
    """An object failed structural validation"""


class DimensionMismatch(ValidationError):
    def __init__(self, message='cells must form a non-empty square array'):
        super().__init__(message)


class SymbolOutOfRange(ValidationError):
    def __init__(self, row, column, symbol, n):
        self.row = row
        self.column = column
        self.symbol = symbol
        super().__init__(f"symbol {symbol} at ({row}, {column}) is outside 0..{n - 1}")


class RowViolation(ValidationError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} is not a bijection")


class ColumnViolation(ValidationError):
    def __init__(self, column):
        self.column = column
        super().__init__(f"column {column} is not a bijection")


class InvalidPermutation(ValidationError):
    def __init__(self, message):
        super().__init__(message)


class IndexOutOfRange(LatinBalanceError):
    def __init__(self, index, n):
        self.index = index
        super().__init__(f"index {index} is outside 0..{n - 1}")


class IdenticalIndices(LatinBalanceError):
    def __init__(self, index):
        super().__init__(f"swap positions must differ (both are {index})")


class OrderTooSmall(LatinBalanceError):
    def __init__(self, n, minimum=2):
        super().__init__(f"order {n} is below the minimum {minimum}")


class OrderTooLarge(LatinBalanceError):
    def __init__(self, n, maximum):
        super().__init__(f"order {n} exceeds the supported maximum {maximum}")


class WrongResidue(LatinBalanceError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"order {n} is not congruent to 1 mod 3")


class WrongMode(LatinBalanceError):
    def __init__(self, expected, actual):
        super().__init__(f"expected a {expected} task, got {actual}")


class InvariantViolation(LatinBalanceError):
    """An identity that always holds was observed to fail: a bug, not bad input"""


class ParseError(LatinBalanceError):
    """A file could not be parsed as any supported document"""

"""Error codes and exceptions raised by loopsmith."""

from enum import Enum


class ErrorCode(str, Enum):
    """Stable error codes surfaced by the library and the CLI."""

    NOT_SQUARE = "NOT_SQUARE"
    ENTRY_OUT_OF_RANGE = "ENTRY_OUT_OF_RANGE"
    ROW_NOT_PERMUTATION = "ROW_NOT_PERMUTATION"
    COLUMN_NOT_PERMUTATION = "COLUMN_NOT_PERMUTATION"
    NO_IDENTITY = "NO_IDENTITY"
    INDEX_OUT_OF_RANGE = "INDEX_OUT_OF_RANGE"
    BAD_BLOCK = "BAD_BLOCK"
    PAIR_UNCOVERED = "PAIR_UNCOVERED"
    PAIR_DUPLICATED = "PAIR_DUPLICATED"
    NOT_STEINER = "NOT_STEINER"
    CRITERION_HOLDS = "CRITERION_HOLDS"
    SYNTAX = "SYNTAX"
    INCONSISTENT = "INCONSISTENT"
    BAD_CONFIG = "BAD_CONFIG"


class LoopsmithError(Exception):
    """Base class for every error loopsmith raises on purpose.

    Args:
        code: Machine-readable error code
        message: Human-readable explanation
        detail: The integers the code refers to (row, column, pair, line...)
    """

    def __init__(self, code: ErrorCode, message: str, detail: tuple[int, ...] = ()):
        super().__init__(f"{code.value}: {message}")
        self.code = code
        self.message = message
        self.detail = detail


class TableError(LoopsmithError):
    """A raw Cayley table is not a loop with identity 1."""


class ElementError(LoopsmithError):
    """An element index lies outside 1..order."""


class TripleSystemError(LoopsmithError):
    """A block list is not a Steiner triple system, or a loop is not Steiner."""


class ConstructionError(LoopsmithError):
    """A construction was asked for something that does not exist."""


class FormatError(LoopsmithError):
    """Text input does not follow the table or block-list format."""

    def __init__(self, line: int, message: str):
        super().__init__(ErrorCode.SYNTAX, f"line {line}: {message}", (line,))
        self.line = line


class ConsistencyError(LoopsmithError):
    """Two computations that must agree did not."""

    def __init__(self, message: str):
        super().__init__(ErrorCode.INCONSISTENT, message)


class ConfigError(LoopsmithError):
    """An environment setting could not be used."""

    def __init__(self, message: str):
        super().__init__(ErrorCode.BAD_CONFIG, message)

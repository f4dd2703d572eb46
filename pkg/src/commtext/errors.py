"""Exception hierarchy shared across the pipeline.

Exit-code mapping used by the CLI: ConfigError -> 2, DataError (and
subclasses) -> 3, anything else -> 4.
"""


class CommtextError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(CommtextError):
    """Invalid configuration or argument validation failure."""


class DataError(CommtextError):
    """Invalid or inconsistent input data."""


class ParseError(DataError):
    """Malformed input file; message carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ShortfallError(DataError):
    """A category lacks enough messages to build a balanced dataset."""

    def __init__(self, category: int, needed: int, available: int):
        super().__init__(
            f"category {category}: need {needed} messages, only {available} available "
            f"(shortfall {needed - available})"
        )
        self.category = category
        self.needed = needed
        self.available = available

"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to, so the command layer never
has to special-case messages.
"""

from __future__ import annotations


class MmvcError(Exception):
    exit_code = 1


class InputError(MmvcError):
    """Malformed input: bad file, violated precondition, invalid argument."""

    exit_code = 2


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(InputError):
    pass


class NotConnectedError(PreconditionError):
    pass


class UnsupportedPatternError(InputError):
    pass


class NotInClassError(MmvcError):
    """The input graph contains the forbidden pattern of the claimed class."""

    exit_code = 3

    def __init__(self, message: str, embedding: tuple[int, ...] | None = None):
        self.embedding = embedding
        super().__init__(message)


class InstanceTooLargeError(MmvcError):
    exit_code = 4


class TheoremContradictionError(MmvcError):
    """A guarantee that should hold on a verified in-class input failed."""

    exit_code = 5


class GenerationFailedError(MmvcError):
    pass

"""Exception taxonomy shared by the library, the service and the CLI.

Three families matter to callers: input errors (bad text, bad files),
domain errors (mathematically meaningless requests, e.g. the order of the
zero ideal), and internal errors (invariants of the algorithms violated).
The CLI maps them to distinct exit codes; the service maps them to
distinct response payloads.
"""

from __future__ import annotations


class DesingError(Exception):
    """Base class for every error raised by this package."""


class InputError(DesingError):
    """Malformed user input: expression text, ideal files, points."""


class ParseError(InputError):
    """Syntax error in polynomial or file text, with a position."""

    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif position is not None:
            where = f" (at {position})"
        super().__init__(message + where)


class UnknownVariableError(InputError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown variable {name!r}")


class ContextMismatchError(DesingError):
    """Operands built over different rings or incompatible orders."""


class DomainError(DesingError):
    """The requested value does not exist for this input."""


class NonRationalFrameError(DomainError):
    """Frame extraction would need a field extension of the rationals."""


class InternalError(DesingError):
    """An algorithmic invariant failed; indicates a bug, not bad input."""

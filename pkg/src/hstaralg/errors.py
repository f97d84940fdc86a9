"""Exception hierarchy.

Every error carries an optional ``witness`` (a matrix, a triple, an equation
name) that is enough to reproduce the failure with a single library call.
The CLI maps the classes onto exit codes via ``exit_code``.
"""

from __future__ import annotations

from typing import Any


class HStarError(Exception):
    exit_code = 2

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class InputError(HStarError, ValueError):
    """Malformed or inconsistent input (shape, semiring mix, bad table)."""

    exit_code = 2


class UnsupportedError(HStarError):
    """Operation not available for this semiring (e.g. enumeration over nat)."""

    exit_code = 2


class CapError(HStarError):
    """An enumeration budget was exceeded."""

    exit_code = 3

    def __init__(self, message: str, witness: Any = None, partial: int | None = None):
        super().__init__(message, witness)
        self.partial = partial


class CheckFailure(HStarError):
    """A mathematical check failed; ``witness`` names the violated equation."""

    exit_code = 1


class PreconditionError(CheckFailure):
    def __init__(self, hypothesis: str, message: str, witness: Any = None):
        super().__init__(f"{hypothesis}: {message}", witness)
        self.hypothesis = hypothesis


class TheoremViolation(CheckFailure):
    pass


class ConsistencyError(CheckFailure):
    pass


class ClassificationError(CheckFailure):
    def __init__(self, component: int, axiom: str, witness: Any = None):
        super().__init__(f"component {component} is not a group: {axiom} fails", witness)
        self.component = component
        self.axiom = axiom

"""Exception hierarchy shared by every module."""


class MatroidError(Exception):
    """Base class for all errors raised by matroidx."""


class InvalidElementError(MatroidError, ValueError):
    """An element id or label does not belong to the matroid or base."""

    def __init__(self, element, context=""):
        self.element = element
        msg = f"invalid element {element!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class PreconditionError(MatroidError, ValueError):
    """An operation was called outside its domain (dependent set, wrong rank, ...)."""

    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


class NotSpannedError(PreconditionError):
    """``I + x`` is independent, so ``x`` has no support in ``I``."""


class StructuralError(MatroidError, ValueError):
    """An exchange sequence is malformed (repeats, wrong membership, length mismatch)."""


class InternalConsistencyError(MatroidError, RuntimeError):
    """A step that is guaranteed to succeed did not; points at a broken oracle."""


class StepBudgetExceeded(MatroidError, RuntimeError):
    """An exhaustive search ran out of its step budget."""


class ParseError(MatroidError, ValueError):
    def __init__(self, msg, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {msg}" if where else msg)


class ConfigError(MatroidError, ValueError):
    """Bad corpus configuration (unknown check, family, out-of-range caps)."""


class ReplayError(MatroidError, ValueError):
    """A finding's witness cannot be re-executed."""

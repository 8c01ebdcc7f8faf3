"""Shared exception types."""


class TPAlgebraError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(TPAlgebraError):
    """Operands have incompatible dimensions, arities or variable counts."""


class InvalidFractionError(TPAlgebraError):
    """A fraction with a zero denominator was constructed or used."""


class PreconditionError(TPAlgebraError):
    """An operation's documented precondition failed (with witness, if any)."""


class CapacityError(TPAlgebraError):
    """A linear system exceeds the configured unknown limit."""


class TableError(TPAlgebraError):
    """A structure-constant table is malformed (bad index, unit axiom, parity)."""

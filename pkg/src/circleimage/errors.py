"""Exception hierarchy.

Input problems derive from :class:`InputError` (CLI exit code 2); broken
internal invariants derive from :class:`InternalConsistencyError` (exit 3).
"""


class InputError(ValueError):
    """Invalid or degenerate user input."""


class DegenerateInputError(InputError):
    """Constant polynomial or similar input outside the supported family."""


class PoleError(InputError, ZeroDivisionError):
    """Evaluation at z = 0 of a polynomial with negative exponents."""


class InternalConsistencyError(RuntimeError):
    """A mathematical invariant that must hold was found violated."""


class RealizationError(InternalConsistencyError):
    """Substituting w = x + iy left a nonzero imaginary coefficient."""


class ConstructionError(RuntimeError):
    """The gap-point construction could not certify its margin."""

"""Exception types shared across the library."""


class InputError(ValueError):
    """Malformed input: bad vertex ids, loops, overlapping parts, parse errors."""


class PreconditionError(ValueError):
    """A documented operation precondition does not hold for the given input."""


class BudgetExceeded(RuntimeError):
    """An exact search ran out of its node budget before reaching a verdict.

    This is always inconclusive, never a wrong answer.
    """


class HallRatioViolation(RuntimeError):
    """A subgraph witnesses a Hall ratio larger than the promised bound."""


class InvariantViolation(RuntimeError):
    """An internal invariant that the theory guarantees was observed to fail.

    Raising this signals an implementation bug, not a property of the input.
    """


class ConstructionError(RuntimeError):
    """A randomized construction degenerated (for example zero-width blocks)."""

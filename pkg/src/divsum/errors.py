"""Shared exception types.

Precondition violations raise plain ``ValueError`` with a message naming
the violated condition.  ``ConsistencyError`` is reserved for failures of
internal cross-checks that should never occur in a correct build (an exact
result with a nonzero imaginary residue, or two independent evaluations of
the same quantity disagreeing); the CLI maps it to exit status 1.
"""


class ConsistencyError(ArithmeticError):
    """Two routes to the same value disagreed, or an exactness check failed."""

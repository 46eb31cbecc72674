"""Exceptions shared across the package.

Both are ValueError subclasses so callers that only care about "bad input"
can catch the base class; the CLI maps them to distinct exit codes.
"""


class DegeneratePointsError(ValueError):
    """Evaluation points violate a genericity precondition.

    Raised for coincident points (vanishing Vandermonde), poles x_a = y_b of
    Cauchy-type kernels, and opposite points x_a + x_b = 0 of the BKP kernel.
    """


class WindowError(ValueError):
    """A coefficient or mode window is too small for the requested operation.

    Silent truncation is never allowed: any access outside a declared window
    raises instead of returning zero.
    """

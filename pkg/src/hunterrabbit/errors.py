"""Exception types shared across the package.

The CLI maps InputError to exit code 2 and CapacityError to exit code 3;
everything else is a genuine crash.
"""


class InputError(ValueError):
    """Caller passed arguments outside an operation's contract."""


class CapacityError(RuntimeError):
    """Requested size exceeds an enforced resource ceiling."""


class ContractViolation(RuntimeError):
    """A caller-asserted promise (e.g. a Lipschitz bound) was observed to fail."""


class PrecisionError(ValueError):
    """Grid or tolerance settings too coarse for the requested quantity."""


class ConvergenceError(RuntimeError):
    """An iterative computation hit its cap without meeting its tolerance."""

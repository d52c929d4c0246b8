"""Exception hierarchy shared across the package."""


class PolarSwitchError(Exception):
    """Base class."""


class UsageError(PolarSwitchError, ValueError):
    """Bad arguments: mismatched spaces, unknown labels, out-of-range parameters."""


class DomainError(PolarSwitchError, ArithmeticError):
    """Mathematically invalid input: zero inverse, degenerate form, singular Gram matrix."""


class ResourceError(PolarSwitchError, RuntimeError):
    """A configured cap (group size, materialised two-graph order) would be exceeded."""


class VerificationError(PolarSwitchError, AssertionError):
    """A built object disagrees with the formula it must satisfy."""

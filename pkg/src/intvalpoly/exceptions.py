"""Exception types raised by intvalpoly."""


class IntValPolyError(Exception):
    """Base class for all errors raised by this package."""


class CoveredError(IntValPolyError, ValueError):
    """Every element of a residue class lies in one of the avoided classes."""

    reason = "covered"


class NotBalancedError(IntValPolyError, ValueError):
    """A construction that needs a balanced root set received an unbalanced one."""

    reason = "not-balanced"

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class EqualizingError(IntValPolyError, ArithmeticError):
    """The equalizing system violated an internal invariant.

    ``reason`` is ``"singular"`` or ``"nonpositive-solution"``. For a genuine
    partition matrix neither can happen, so this signals a bug; the offending
    matrix is attached for the report.
    """

    def __init__(self, reason, rows):
        super().__init__(f"{reason}: partition matrix {rows!r}")
        self.reason = reason
        self.rows = rows


class RootInRError(IntValPolyError, ValueError):
    """A linear polynomial ax - b with a unit has its root in R."""

    reason = "root-in-R"


class NotImagePrimitiveError(IntValPolyError, ValueError):
    """The oracle was handed a polynomial that is not image-primitive."""

    reason = "not-image-primitive"


class PoolTooShallowError(IntValPolyError, ValueError):
    """The candidate pool for a P-ordering cannot separate enough elements."""

    reason = "pool-too-shallow"

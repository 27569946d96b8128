"""Exception types shared across the package."""


class ArityMismatch(ValueError):
    """Operands live in group rings with different exponent or arity."""


class ModulusMismatch(ValueError):
    """Cyclotomic operands have different prime moduli."""


class NotAUnit(ValueError):
    """Inversion was requested for a non-invertible element."""


class NotSymmetric(ValueError):
    """An operation required a symmetric two-variable element."""


class NotSquare(ValueError):
    """An operation required a square matrix."""


class ContainmentViolation(ValueError):
    """Subquotient input where the image is not contained in the kernel."""


class InvalidAction(ValueError):
    """Group-module action matrices fail invertibility, commutation or order."""


class NotInvariant(ValueError):
    """Multiplication left the span of the supplied basis."""


class UnsupportedExponent(ValueError):
    """The requested exponent is outside the implemented range."""

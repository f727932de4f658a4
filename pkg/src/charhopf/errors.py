"""Exception types raised by the engine."""


class ZeroDivisorError(ZeroDivisionError):
    """Division by an exactly-zero Scalar."""


class SpecializationError(ValueError):
    """A substitution sends a denominator factor to zero."""


class UndefinedScaledElement(ValueError):
    """A braced element's normalizing denominator vanishes."""


class InhomogeneousBracket(ValueError):
    """Skew bracket operand is not homogeneous in every generator."""


class ModeError(ValueError):
    """Operation requires a different parameter mode (free vs G2)."""

"""Exception types raised by qwortho.

All of them derive from ``ValueError`` or ``ArithmeticError`` so callers that
only care about "bad input" vs "numerics broke down" can catch the builtins.
"""


class UnitarityError(ValueError):
    """A proposed coin is not a 2x2 unitary."""


class HypothesisError(ValueError):
    """A theorem hypothesis (e.g. ``abcd != 0``) does not hold for the input."""


class DepthUnstableError(ArithmeticError):
    """A continued fraction hit a (near) zero denominator during evaluation."""


class InversionError(ArithmeticError):
    """Stieltjes inversion did not settle across the epsilon schedule."""


class IllConditionedError(ArithmeticError):
    """Moment-to-recurrence recovery lost positivity or precision."""

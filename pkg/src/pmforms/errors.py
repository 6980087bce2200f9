"""Shared exception types."""


class OddMonomialCount(ValueError):
    """The support block has an odd number of monomials, so no sign
    assignment can vanish there and the closed forms do not apply."""


class CapExceeded(RuntimeError):
    """Exhaustive enumeration would exceed the configured class cap."""


class BudgetExceeded(RuntimeError):
    """Exact evaluation would exceed the configured term/point budget."""


class BoundExceeded(RuntimeError):
    """Search space larger than the configured dimension bound."""


class DigitClash(ValueError):
    """The two powers of two in the logarithmic ell rule coincide for
    this degree; the rule's shared-digit guarantee fails and no fix is
    invented."""


class PrecisionExhausted(RuntimeError):
    """A directed-rounding comparison stayed indeterminate up to the
    configured precision cap."""

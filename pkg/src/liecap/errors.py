"""Exception types shared across the engine.

The CLI maps EngineError (and plain ValueError / ZeroDivisionError from scalar
arithmetic) to exit status 1; verification mismatches are not exceptions.
"""


class EngineError(Exception):
    """Base class for domain errors raised by the engine."""


class FieldError(EngineError):
    """Unusable field description or scalar outside the declared field."""


class ShapeError(EngineError):
    """Dimension or ambient-space mismatch between operands."""


class NotNilpotentError(EngineError):
    """Lower central series stabilized above zero."""


class NotIdealError(EngineError):
    """Subspace handed to quotient() is not an ideal."""


class ScopeError(EngineError):
    """Input is outside a classification's hypotheses (e.g. dim L^2 > 2)."""


class ResourceError(EngineError):
    """A construction would exceed the configured size guard."""

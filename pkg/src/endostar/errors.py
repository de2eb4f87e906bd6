"""Exceptions raised by the engine.

Every error derives from :class:`EndostarError` and from the closest builtin, so
``except ValueError`` keeps working for callers that do not know this package.
"""


class EndostarError(Exception):
    """Root of all engine errors."""


class ConfigError(EndostarError, ValueError):
    """A run configuration failed validation."""


class UnsupportedPairError(EndostarError, ValueError):
    """The group instance cannot classify or intersect the given subgroups."""


class EmptyDomainError(EndostarError, ValueError):
    """A search was asked to look inside an empty set."""


class WitnessNotFoundError(EndostarError, LookupError):
    """An enumeration hit its cap before finding a witness."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (gave up after {bound} candidates)")
        self.bound = bound


class NotDiagonalError(EndostarError, ValueError):
    """An element with a non-identity degree term was given where a diagonal one is required."""


class NotSelfAdjointError(EndostarError, ValueError):
    """The element is not equal to its adjoint."""


class ThetaZeroError(EndostarError, ValueError):
    """The conditional expectation of the element vanishes."""


class HypothesisViolationError(EndostarError, ValueError):
    """No power of the endomorphism maps G into every configured base subgroup."""


class VerificationFailure(EndostarError, AssertionError):
    """A certificate identity did not hold."""

    def __init__(self, identity: str, detail: str = ""):
        super().__init__(f"{identity} failed" + (f": {detail}" if detail else ""))
        self.identity = identity


class WindowTooSmallError(EndostarError, ValueError):
    """The window leaves no basis vector on which the configured operators stay inside."""


class ExpressionSyntaxError(EndostarError, ValueError):
    """An algebra expression could not be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position

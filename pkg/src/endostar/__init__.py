"""Exact computations in crossed products of a group by an injective endomorphism."""

from .algebra import AlgebraElement, DiagonalNorm, Monomial, StarAlgebra
from .certificate import Certificate, Certifier
from .config import RunConfig
from .errors import (
    ConfigError,
    EmptyDomainError,
    EndostarError,
    ExpressionSyntaxError,
    HypothesisViolationError,
    NotDiagonalError,
    NotSelfAdjointError,
    ThetaZeroError,
    UnsupportedPairError,
    VerificationFailure,
    WindowTooSmallError,
    WitnessNotFoundError,
)
from .expr import format_expr, parse_expr
from .groups import get_instance
from .semigroup import Semigroup

__all__ = [
    "AlgebraElement",
    "Certificate",
    "Certifier",
    "ConfigError",
    "DiagonalNorm",
    "EmptyDomainError",
    "EndostarError",
    "ExpressionSyntaxError",
    "HypothesisViolationError",
    "Monomial",
    "NotDiagonalError",
    "NotSelfAdjointError",
    "RunConfig",
    "Semigroup",
    "StarAlgebra",
    "ThetaZeroError",
    "UnsupportedPairError",
    "VerificationFailure",
    "WindowTooSmallError",
    "WitnessNotFoundError",
    "format_expr",
    "get_instance",
    "parse_expr",
]

"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "QBundleError",
    "InvalidSpecError",
    "NotFanoError",
    "NonTerminationError",
    "NotNormalFormError",
    "SingularPairingError",
    "NonIntegralDualError",
    "ZeroPolynomialError",
    "ExpressionError",
    "ExpressionSyntaxError",
    "NegativeExponentError",
    "UnknownIdentifierError",
]


class QBundleError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidSpecError(QBundleError):
    """Bundle description violates n >= 1, r >= 2 or m_i >= 1."""


class NotFanoError(QBundleError):
    """Quantum structure requested for a bundle with c1 > n + r."""


class NonTerminationError(QBundleError):
    """Rewriting exceeded the step bound (expected only off the Fano range)."""

    def __init__(self, message: str, steps: int):
        super().__init__(message)
        self.steps = steps


class NotNormalFormError(QBundleError):
    """A polynomial was expected to be a classical normal form but is not."""


class SingularPairingError(QBundleError):
    """The pairing matrix is singular; signals an upstream bug."""


class NonIntegralDualError(QBundleError):
    """A dual class came out non-integral; signals a convention bug."""


class ZeroPolynomialError(QBundleError):
    """The degree of the zero polynomial was requested."""


class ExpressionError(QBundleError):
    """Base class for expression parsing errors; carries a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


class ExpressionSyntaxError(ExpressionError):
    """Malformed input, with the set of tokens that would have been accepted."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        super().__init__(message, offset)
        self.expected = tuple(expected)


class NegativeExponentError(ExpressionError):
    """Exponents must be non-negative integer literals."""


class UnknownIdentifierError(ExpressionError):
    """Identifier other than xi, h, q1, q2."""

    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown identifier {name!r} at byte {offset}", offset)
        self.name = name

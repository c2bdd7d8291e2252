"""Base classes for exceptions."""

from typing import Any


class RostlabError(Exception):
    """Base of every error raised on purpose by this package."""

    def __init__(self, /, log_msg: str | None = None, *args: tuple[Any], **kwargs: dict[Any, Any]) -> None:
        """Constructor.

        Arguments:
            log_msg: Additional information for the logs
            *args: Self-explanatory
            **kwargs: Self-explanatory
        """
        self.log_msg = log_msg
        super().__init__(log_msg, *args, **kwargs)


class UsageError(RostlabError):
    """The caller asked for something that is not defined. The CLI exits with code 2."""


class ComputationError(RostlabError):
    """The input is well formed but does not meet a mathematical precondition."""


class InvalidTower(UsageError):
    """Tower parameters are malformed (q not a prime power, ell not prime, precision < 1)."""


class RootsOfUnityMissing(UsageError):
    """ell^n does not divide q - 1."""


class BadCharacteristic(UsageError):
    """ell divides q."""


class DepthUnsupported(UsageError):
    """Tower depth outside the supported range."""


class FieldMismatch(UsageError, ValueError):
    """Operands live in different fields."""


class DegreeUnsupported(UsageError):
    """Cohomological degree outside the supported range."""


class DivisionByZero(ComputationError, ZeroDivisionError):
    """Inverting or taking the class of zero."""


class NotAUnit(ComputationError):
    """A residue was requested for an element of nonzero valuation."""


class NotAPower(ComputationError):
    """A root was requested of an element that has none in the field."""


class NotInBaseField(ComputationError):
    """An element of an extension does not descend to the base field."""


class DepthZero(ComputationError):
    """A residue was requested over a finite field."""


class NotUnramified(ComputationError):
    """Specialization was requested for a class with nonzero residue."""


class NotAField(ComputationError):
    """The requested Kummer radicand is already a power, so the extension is not a field."""


class UnsupportedShape(ComputationError):
    """The extension or compositum falls outside the supported presentations."""


class PreconditionViolated(ComputationError):
    """An input object violates the hypotheses of the requested construction."""


class ZeroEntry(ComputationError):
    """A quadratic form was given a zero diagonal entry."""


class OddDimension(ComputationError):
    """Similarity factors were requested for an odd-dimensional form."""


class ParseError(UsageError):
    """An expression, symbol or directive could not be parsed."""


class ConfigError(UsageError):
    """A session config file is inconsistent."""


class InternalVerificationFailed(RostlabError):
    """A constructed object failed its own re-verification. Always a bug."""

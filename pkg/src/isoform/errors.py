"""Exception hierarchy shared by all isoform modules.

Exception class names double as the error names printed by the CLI
("error = <Name>: <detail>") and returned by the service, so they are
part of the external interface and must stay stable.
"""


class IsoformError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(IsoformError):
    """Malformed textual input.  Carries the character position when known."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class FieldMismatch(IsoformError):
    """Operands belong to different fields; values never coerce across fields."""


class DimensionMismatch(IsoformError):
    """Vector/matrix shapes are incompatible."""


class DivisionByZero(IsoformError, ZeroDivisionError):
    """Division or inversion of zero in a field."""


class PreconditionViolated(IsoformError):
    """An operation's stated precondition does not hold for the input."""


class NormNotRepresented(IsoformError):
    """The norm equation x*conj(x) = c has no solution (or none within bound)."""


class DimensionTooSmall(IsoformError):
    """The form's dimension is below the minimum the construction needs."""


class UnsupportedField(IsoformError):
    """The operation makes no claim over this field kind."""


class SearchSpaceTooLarge(IsoformError):
    """An exhaustive enumeration would exceed its configured cap."""


class SingularGenerator(IsoformError):
    """A group generator matrix is not invertible."""


class GroupTooLarge(IsoformError):
    """Group closure exceeded the element cap."""


class CharacteristicDividesOrder(IsoformError):
    """char(k) divides |G|, so averaging by 1/|G| is impossible."""


class NotInvariant(IsoformError):
    """The subspace is not stable under the group action."""


class NoIsotropicVector(IsoformError):
    """No isotropic vector exists (or none was found within bound)."""

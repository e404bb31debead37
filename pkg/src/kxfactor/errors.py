"""Exception types shared across the package.

Input-contract errors (bad user input) derive from InputError so the CLI
and service can map them to exit code 2 / HTTP 400.  Everything else is an
internal invariant violation.
"""


class KxError(Exception):
    pass


class InputError(KxError):
    """Violation of a documented input assumption."""


class ParseError(InputError):
    pass


class NotMonic(InputError):
    pass


class Inseparable(InputError):
    pass


class ZeroConstantTerm(InputError):
    pass


class PlaceInvalid(InputError):
    pass


class SubspaceSpecError(InputError):
    pass


class ZeroInversion(KxError):
    pass


class NotInSubfield(KxError):
    pass


class DivisionByZeroPoly(KxError):
    pass


class PoleAtPoint(KxError):
    pass


class NonUnitSeries(KxError):
    pass


class OrderOutOfRange(KxError):
    pass


class NotIntegralAtPlace(KxError):
    pass


class RingMismatch(KxError):
    pass


class NotCoprime(KxError):
    pass


class BadFactorization(KxError):
    pass


class NonUnitDerivativePivot(KxError):
    pass


class SplitDepthExceeded(KxError):
    pass


class RankMismatch(KxError):
    pass


class ZeroPolynomial(KxError):
    pass


class SearchSpaceTooLarge(KxError):
    pass

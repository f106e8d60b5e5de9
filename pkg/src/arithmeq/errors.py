"""Exception hierarchy shared across the package."""


class ArithmeqError(Exception):
    """Base class for all domain errors raised by this package."""


class DegreeError(ArithmeqError):
    """Polynomial degree outside the range an operation supports."""


class SquarefreeError(ArithmeqError):
    """Operation requires a squarefree polynomial."""


class NotPrimeError(ArithmeqError):
    """A modulus or residue characteristic was expected to be prime."""


class MonicError(ArithmeqError):
    """Defining polynomials of number fields must be monic."""


class ReducibleError(ArithmeqError):
    """Defining polynomials of number fields must be irreducible."""


class AlgebraError(ArithmeqError):
    """Structure constants do not describe a valid commutative algebra."""


class ElementNotInGroup(ArithmeqError):
    """Permutation is not an element of the ambient group."""


class GroupTooLarge(ArithmeqError):
    """Generated group exceeds the materialization cap."""


class InconsistencyError(ArithmeqError):
    """Fixed-point counts do not come from any residue-degree multiset."""


class PlaceError(ArithmeqError):
    """A place reference does not resolve against the field's places."""


class FormError(ArithmeqError):
    """Missing or insufficient real-form data for a group scheme."""


class ParseError(ArithmeqError):
    """Malformed input file."""

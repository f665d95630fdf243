"""Exception types raised by the engine.

Every failure that signals a broken mathematical claim has its own class so
tests and the CLI can tell a theorem failure from bad input.
"""


class HopfCyclicError(Exception):
    pass


class ShapeMismatch(HopfCyclicError, ValueError):
    pass


class FieldMismatch(HopfCyclicError, ValueError):
    pass


class Singular(HopfCyclicError, ArithmeticError):
    pass


class NotPreserved(HopfCyclicError):
    """An operator does not map the designated subspace into the target one."""


class NotWellDefined(HopfCyclicError):
    """An operator does not map a relation span into the target relation span."""


class NotAGroup(HopfCyclicError, ValueError):
    pass


class NotModularPair(HopfCyclicError, ValueError):
    pass


class NotInInvolution(HopfCyclicError, ValueError):
    pass


class SAYDViolation(HopfCyclicError, ValueError):
    pass


class MismatchWithHatDual(HopfCyclicError):
    pass


class IdentificationFailure(HopfCyclicError):
    pass


class NotInvertible(HopfCyclicError):
    pass


class NormalizationError(HopfCyclicError, ValueError):
    pass


class NotAComplex(HopfCyclicError):
    pass


class NotCyclic(HopfCyclicError, ValueError):
    pass


class InputError(HopfCyclicError, ValueError):
    """Malformed user data; the message names the offending block and index."""

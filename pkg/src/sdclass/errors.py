"""Exception types raised across the package."""
from __future__ import annotations


class SDClassError(Exception):
    """Base class for every error raised by sdclass."""


class RankDeficient(SDClassError, ValueError):
    pass


class DimensionMismatch(SDClassError, ValueError):
    pass


class NotSelfDual(SDClassError, ValueError):
    pass


class OddLength(SDClassError, ValueError):
    pass


class EqualLastColumns(SDClassError, ValueError):
    """The last two coordinates agree on every codeword, so no parent exists."""


class NotAutomorphism(SDClassError, ValueError):
    pass


class EvenWeightVector(SDClassError, ValueError):
    pass


class NonDivisor(SDClassError, ArithmeticError):
    """An automorphism group order does not divide n!; signals a group bug."""


class DatabaseError(SDClassError, ValueError):
    """A class database file is malformed or inconsistent."""

"""Exception hierarchy.

Errors that come from a failed check carry the offending ``CheckReport`` on
``.report`` so callers can inspect the witnesses.
"""

from __future__ import annotations


class OqkitError(Exception):
    """Base class for every error raised by this package."""

    def __init__(self, message: str = "", report=None):
        super().__init__(message)
        self.report = report


class MalformedTable(OqkitError):
    pass


class TooLarge(OqkitError):
    pass


class NotOrtholattice(OqkitError):
    pass


class NotOrthomodular(OqkitError):
    pass


class InternalInconsistency(OqkitError):
    """Two independent evaluations of the same law disagreed."""


class PreconditionFailed(OqkitError):
    pass


class TheoremViolation(OqkitError):
    """A consequence of axioms that passed did not hold; indicates a bug."""


class NotConstant(OqkitError):
    pass


class OrderLawViolation(OqkitError):
    pass


class Unbounded(OqkitError):
    pass


class InvalidQca(OqkitError):
    pass


class InvalidCqia(OqkitError):
    pass


class DimensionMismatch(OqkitError):
    pass


class ZeroGenerator(OqkitError):
    pass


class EmptyGenerator(OqkitError):
    pass


class ParseError(OqkitError):
    pass


class ValidationError(OqkitError):
    pass

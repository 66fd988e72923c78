"""Exception types shared across the package.

Every domain failure raises a subclass of ContactSurgeryError so callers
(and the CLI exit-code mapping) can distinguish input problems from
computational ones.
"""

from __future__ import annotations


class ContactSurgeryError(Exception):
    """Base class for all domain errors raised by this package."""


class NotInCatalog(ContactSurgeryError):
    """Requested knot name is not present in the loaded catalog."""


class InvalidCableParameters(ContactSurgeryError):
    """Cable parameters must satisfy q > p >= 1 with gcd(p, q) = 1."""


class IncompleteData(ContactSurgeryError):
    """An operation needs a knot invariant that is recorded as unknown."""


class NotRealizable(ContactSurgeryError):
    """Requested classical invariants violate the Bennequin bound."""


class OutOfRange(ContactSurgeryError):
    """Argument outside the domain of the continued fraction expansion."""


class UnsupportedCoefficient(ContactSurgeryError):
    """Surgery coefficients in the open interval (0, 1) are rejected."""


class InvalidCoefficient(ContactSurgeryError):
    """Surgery coefficient zero (or unparseable) is not a valid input."""


class NotRationalHomologySphere(ContactSurgeryError):
    """The linking matrix is singular, so the d3 invariant is undefined."""


class UnknownCurve(ContactSurgeryError):
    """A monodromy word letter refers to a curve not in the alphabet."""


class PatternMismatch(ContactSurgeryError):
    """The word does not match the rewrite pattern at the given position."""


class InvalidStabilization(ContactSurgeryError):
    """Stabilization or destabilization data is inconsistent."""


class CannotCapLastBoundary(ContactSurgeryError):
    """A surface must keep at least one boundary component."""


class DiagramFormatError(ContactSurgeryError):
    """A diagram, open book or catalog file failed syntactic or semantic
    validation; the message carries the offending field path."""


class Contradiction(ContactSurgeryError):
    """Ledger closure produced both Zero and NonZero at some framing."""

    def __init__(self, offset, zero_rule: str, nonzero_rule: str):
        self.offset = offset
        self.zero_rule = zero_rule
        self.nonzero_rule = nonzero_rule
        where = "all framings" if offset is None else f"f_S{offset:+d}"
        super().__init__(
            f"status clash at {where}: Zero by {zero_rule}, NonZero by {nonzero_rule}"
        )

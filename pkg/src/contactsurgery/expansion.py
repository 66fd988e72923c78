"""Expansion of rational contact surgery coefficients into (+1)/(-1) chains.

A contact r-surgery on a Legendrian knot is traded for a chain of
contact (-1)-surgeries (plus a single (+1)-surgery when r >= 1) through
the negative continued fraction expansion of 1 - r.  Each chain link is
a pushoff of its predecessor carrying a prescribed number of
stabilizations; enumerating the stabilization sign choices produces the
whole set of presentations, all-negative choice first.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidCoefficient,
    OutOfRange,
    UnsupportedCoefficient,
)
from .legendrian import (
    NEGATIVE,
    POSITIVE,
    Framing,
    LegendrianKnot,
    stabilize_many,
)

ROLE_PLUS_ONE = "originalPlusOne"
ROLE_CHAIN = "chainLink"


def negative_continued_fraction(x) -> tuple[int, ...]:
    """Terms a_0, ..., a_m >= 2 with x = a_0 - 1/(a_1 - 1/(... - 1/a_m)).

    The expansion with all terms >= 2 exists and is unique exactly for
    rational x > 1; the leading term is ceil(x).
    """
    x = Fraction(x)
    if x <= 1:
        raise OutOfRange(f"negative continued fraction needs x > 1, got {x}")
    terms = []
    while True:
        a = math.ceil(x)
        terms.append(a)
        if x == a:
            return tuple(terms)
        x = 1 / (a - x)


def evaluate_continued_fraction(terms) -> Fraction:
    """Evaluate [a_0, ..., a_m] = a_0 - 1/(a_1 - 1/(... - 1/a_m))."""
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a - 1 / value
    return value


@dataclass(frozen=True)
class Component:
    """One link component of a surgery presentation."""

    role: str
    legendrian: LegendrianKnot
    coefficient: int
    stab_signs: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.role not in (ROLE_PLUS_ONE, ROLE_CHAIN):
            raise ValueError(f"unknown component role {self.role!r}")
        if self.coefficient not in (1, -1):
            raise ValueError("contact coefficient must be +1 or -1")


@dataclass(frozen=True)
class ContactSurgeryPresentation:
    """An ordered chain of components presenting a contact surgery.

    At most one component carries the +1 coefficient; it precedes the
    chain, and every chain link is a pushoff of its predecessor.
    """

    components: tuple[Component, ...] = ()
    overtwisted: bool = False

    def __post_init__(self) -> None:
        plus_ones = [i for i, c in enumerate(self.components) if c.coefficient == 1]
        if len(plus_ones) > 1:
            raise ValueError("at most one +1 component is allowed")
        if plus_ones and plus_ones[0] != 0:
            raise ValueError("the +1 component must precede the chain")
        for i, comp in enumerate(self.components):
            if comp.coefficient == 1 and comp.role != ROLE_PLUS_ONE:
                raise ValueError(f"components[{i}]: +1 coefficient on a chain link")
            if comp.coefficient == -1 and comp.role != ROLE_CHAIN:
                raise ValueError(f"components[{i}]: chain links carry -1")

    def tb_rot_profile(self) -> tuple[tuple[int, int], ...]:
        return tuple((c.legendrian.tb, c.legendrian.rot) for c in self.components)


def _sign_run(total: int, plus_count: int) -> tuple[str, ...]:
    # Stabilizations commute, so a choice is a multiset; canonical order
    # puts the negatives first, which sorts lexicographically with - < +.
    return (NEGATIVE,) * (total - plus_count) + (POSITIVE,) * plus_count


def _chain_presentations(
    base: LegendrianKnot,
    one_minus_r: Fraction,
    prefix: tuple[Component, ...],
) -> tuple[ContactSurgeryPresentation, ...]:
    terms = negative_continued_fraction(one_minus_r)
    stab_counts = [a - 2 for a in terms]
    presentations = []
    for choice in itertools.product(*(range(k + 1) for k in stab_counts)):
        current = base
        chain = []
        for stabs, plus_count in zip(stab_counts, choice):
            signs = _sign_run(stabs, plus_count)
            current = stabilize_many(current, signs)
            chain.append(
                Component(ROLE_CHAIN, current, -1, stab_signs=signs)
            )
        presentations.append(
            ContactSurgeryPresentation(prefix + tuple(chain))
        )
    return tuple(presentations)


def expand(knot: LegendrianKnot, r) -> tuple[ContactSurgeryPresentation, ...]:
    """All (+1)/(-1) presentations of contact r-surgery on the given knot.

    r must be a nonzero rational with r < 0 or r >= 1.  The result is
    ordered lexicographically over stabilization sign sequences with
    '-' < '+', so the all-negative presentation comes first; its length
    is the product of (a_i - 1) over the continued fraction terms.
    """
    r = Fraction(r)
    if r == 0:
        raise InvalidCoefficient("surgery coefficient 0 is not allowed")
    if 0 < r < 1:
        raise UnsupportedCoefficient(
            f"coefficients in (0, 1) are not supported, got {r}"
        )
    if r == 1:
        return (
            ContactSurgeryPresentation(
                (Component(ROLE_PLUS_ONE, knot, 1),)
            ),
        )
    if r < 0:
        # The chain starts at a pushoff of the knot, which copies (tb, rot).
        return _chain_presentations(knot, 1 - r, prefix=())
    plus_one = Component(ROLE_PLUS_ONE, knot, 1)
    residual = Fraction(r.numerator, r.denominator - r.numerator)
    return _chain_presentations(knot, 1 - residual, prefix=(plus_one,))


def all_negative_presentation(
    knot: LegendrianKnot, n: int
) -> ContactSurgeryPresentation:
    """The all-negative member of expand(knot, n) for a positive integer n.

    One (+1)-surgery on the knot plus (n - 1) copies of its negative
    stabilization; for n = 1 there is no chain.
    """
    if n < 1:
        raise InvalidCoefficient(f"integer coefficient must be >= 1, got {n}")
    components = [Component(ROLE_PLUS_ONE, knot, 1)]
    if n > 1:
        # One stabilized pushoff, then unstabilized parallel copies of it,
        # matching the chain produced by expand(knot, n).
        stabilized = stabilize_many(knot, (NEGATIVE,))
        components.append(
            Component(ROLE_CHAIN, stabilized, -1, stab_signs=(NEGATIVE,))
        )
        for _ in range(n - 2):
            components.append(Component(ROLE_CHAIN, stabilized, -1))
    return ContactSurgeryPresentation(tuple(components))


def presentation_for_framing(
    knot: LegendrianKnot, framing: Framing
) -> ContactSurgeryPresentation:
    """Presentation of the canonical contact structure on surgery with the
    given framing, built from the all-negative stabilization choice.

    For framings f <= tb the result is known to be overtwisted and is
    flagged as such; the knot is first stabilized down to tb = f - 1.
    """
    f = framing.offset
    if f > knot.tb:
        return all_negative_presentation(knot, f - knot.tb)
    drop = knot.tb - (f - 1)
    stabilized = stabilize_many(knot, (NEGATIVE,) * drop)
    base = all_negative_presentation(stabilized, 1)
    return ContactSurgeryPresentation(base.components, overtwisted=True)


@dataclass(frozen=True)
class Slope:
    """Boundary slope of a convex torus, reduced, with -infinity allowed."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator < 0:
            raise ValueError("denominator must be non-negative")
        if self.denominator == 0:
            if abs(self.numerator) != 1:
                raise ValueError("infinite slope stores numerator +1 or -1")
        elif math.gcd(abs(self.numerator), self.denominator) != 1:
            raise ValueError("slope must be in lowest terms")

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def value(self) -> Fraction | None:
        return None if self.is_infinite else Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        if self.is_infinite:
            return "-inf" if self.numerator < 0 else "+inf"
        return f"{self.numerator}/{self.denominator}"


def _twist(num: int, den: int, h: int) -> tuple[int, int]:
    # Slope change under h meridional twists of the solid torus.
    new_num, new_den = num, den + num * h
    if new_den < 0:
        new_num, new_den = -new_num, -new_den
    g = math.gcd(abs(new_num), abs(new_den))
    if g:
        new_num //= g
        new_den //= g
    return new_num, new_den


def normalize_slope(n: int) -> Slope:
    """Normalize the integer slope n into (-infinity, -1], giving -n/(n-1).

    For n = 1 the normalized slope is -infinity, encoded as -1/0.
    """
    if n < 1:
        raise ValueError(f"slope normalization expects n >= 1, got {n}")
    for h in range(0, -4, -1):
        num, den = _twist(n, 1, h)
        if den == 0:
            # The -infinity end of the normalization range (n = 1 case).
            return Slope(-1, 0)
        if Fraction(num, den) <= -1:
            return Slope(num, den)
    raise AssertionError("slope normalization did not terminate")


def gluing_pullback(n: int) -> tuple[int, int]:
    """Pull the meridional direction (0, 1) back through the surgery gluing.

    The gluing matrix is ((n, -1), (1, 0)); the pullback of (0, 1) is
    (1, n), the dividing-set direction on the solid torus boundary.
    """
    a, b, c, d = n, -1, 1, 0
    det = a * d - b * c
    if det != 1:
        raise AssertionError("gluing matrix must have determinant 1")
    # Inverse of ((a, b), (c, d)) applied to the column (0, 1).
    return (-b, a)

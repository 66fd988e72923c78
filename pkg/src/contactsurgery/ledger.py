"""Per-framing vanishing/nonvanishing bookkeeping and the tightness classifier.

A ledger records, for one framed subject (a Legendrian or transverse
knot in a tagged contact manifold), which framings are known to carry a
Zero or NonZero invariant.  The framed invariants form a thread under
the framing-lowering maps, so the closure is monotone:

    NonZero at f propagates to every framing above f,
    Zero at f propagates to every framing below f,

and a framing that ends up both Zero and NonZero is a Contradiction,
never silently resolved.

Built-in rules (provenance ids recorded with each fact):

    R1  Zero at every framing f <= tb for a Legendrian subject.
    R2  Zero at all framings when the subject is a positive stabilization.
    R3  Zero at all framings when the complement is overtwisted or has
        positive Giroux torsion.
    R4  Zero at all framings for a binding of an open book supporting a
        structure with vanishing invariant on a rational homology sphere.
    R5  NonZero at f_S + 2g for a self-linking-maximizing binding in the
        standard tight 3-sphere (sl = 2g - 1).
    R6  NonZero at tb + 1 for a Legendrian in the standard 3-sphere with
        tb = 2*slice_genus - 1 > 0.
    E1  NonZero at tb + 1 for the maximal Legendrian unknot (tb = -1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .catalog import KnotType
from .errors import Contradiction, IncompleteData
from .legendrian import Framing, LegendrianKnot, TransverseKnot
from .openbook import BindingVerdict, InvariantStatus, binding_vanishing_rule

STANDARD_TIGHT_S3 = "S3-standard"


class LedgerVerdict(enum.Enum):
    ZERO = "Zero"
    NOT_ALL_ZERO = "NotAllZero"
    UNKNOWN = "Unknown"


class Fact(NamedTuple):
    """One recorded status; offset None means 'at every framing'."""

    offset: int | None
    status: InvariantStatus
    rule: str


COBORDISM_KINDS = ("Wf", "Xkn", "Zcap")


@dataclass(frozen=True)
class CobordismRecord:
    """Bookkeeping for the cobordisms behind the propagation maps.

    A 'Wf' record is the framing-lowering step, built on a normal circle
    framed one below the Seifert framing, so it always carries framing
    offset -1.  An 'Xkn' record is the handle attachment realizing the
    surgery; a 'Zcap' record is the capping cobordism, which is the Xkn
    cobordism upside down with reversed orientation (checked by
    is_reverse_of).
    """

    kind: str
    source: str
    target: str
    framing_offset: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in COBORDISM_KINDS:
            raise ValueError(f"unknown cobordism kind {self.kind!r}")
        if self.kind == "Wf" and self.framing_offset != -1:
            raise ValueError(
                "a framing-step cobordism uses the normal circle framed f_S-1"
            )

    def is_reverse_of(self, other: "CobordismRecord") -> bool:
        return (
            self.kind == "Zcap"
            and other.kind == "Xkn"
            and self.source == other.target
            and self.target == other.source
        )


@dataclass(frozen=True)
class LedgerSubject:
    """What the ledger is about, with the caller-asserted geometric flags."""

    legendrian: LegendrianKnot | None = None
    transverse: TransverseKnot | None = None
    manifold: str = STANDARD_TIGHT_S3
    positively_stabilized: bool = False
    complement_overtwisted_or_torsion: bool = False
    binding: bool = False
    ambient_invariant: InvariantStatus = InvariantStatus.NONZERO
    ambient_b1: int = 0

    def knot_type(self) -> KnotType | None:
        for knot in (self.legendrian, self.transverse):
            if knot is not None and knot.knot_type is not None:
                return knot.knot_type
        return None


@dataclass(frozen=True)
class LedgerState:
    """An immutable fact set; the monotone closure is derived on demand."""

    subject: LedgerSubject | None = None
    facts: tuple[Fact, ...] = ()

    def zero_ceiling(self) -> int | None:
        """Largest framing offset known Zero (None if no Zero facts)."""
        offsets = [
            f.offset
            for f in self.facts
            if f.status is InvariantStatus.ZERO and f.offset is not None
        ]
        return max(offsets) if offsets else None

    def zero_everywhere(self) -> bool:
        return any(
            f.status is InvariantStatus.ZERO and f.offset is None for f in self.facts
        )

    def nonzero_floor(self) -> int | None:
        """Smallest framing offset known NonZero (None if no NonZero facts)."""
        offsets = [
            f.offset for f in self.facts if f.status is InvariantStatus.NONZERO
        ]
        if any(o is None for o in offsets):
            raise ValueError("NonZero facts need a concrete framing")
        return min(offsets) if offsets else None

    def check_consistent(self) -> None:
        floor = self.nonzero_floor()
        if floor is None:
            return
        if self.zero_everywhere():
            rule_zero = next(
                f.rule
                for f in self.facts
                if f.status is InvariantStatus.ZERO and f.offset is None
            )
            rule_nonzero = self._nonzero_rule_at(floor)
            raise Contradiction(None, rule_zero, rule_nonzero)
        ceiling = self.zero_ceiling()
        if ceiling is not None and floor <= ceiling:
            rule_zero = next(
                f.rule
                for f in self.facts
                if f.status is InvariantStatus.ZERO
                and f.offset is not None
                and f.offset >= floor
            )
            raise Contradiction(floor, rule_zero, self._nonzero_rule_at(floor))

    def _nonzero_rule_at(self, offset: int) -> str:
        return next(
            f.rule
            for f in self.facts
            if f.status is InvariantStatus.NONZERO and f.offset == offset
        )

    def status_at(self, framing: Framing | int) -> InvariantStatus:
        offset = framing.offset if isinstance(framing, Framing) else framing
        if self.zero_everywhere():
            return InvariantStatus.ZERO
        ceiling = self.zero_ceiling()
        if ceiling is not None and offset <= ceiling:
            return InvariantStatus.ZERO
        floor = self.nonzero_floor()
        if floor is not None and offset >= floor:
            return InvariantStatus.NONZERO
        return InvariantStatus.UNKNOWN

    def provenance_at(self, framing: Framing | int) -> str | None:
        offset = framing.offset if isinstance(framing, Framing) else framing
        status = self.status_at(offset)
        if status is InvariantStatus.UNKNOWN:
            return None
        if status is InvariantStatus.ZERO:
            everywhere = [
                f.rule
                for f in self.facts
                if f.status is InvariantStatus.ZERO and f.offset is None
            ]
            if everywhere:
                return everywhere[0]
            justifying = [
                f
                for f in self.facts
                if f.status is InvariantStatus.ZERO
                and f.offset is not None
                and f.offset >= offset
            ]
        else:
            justifying = [
                f
                for f in self.facts
                if f.status is InvariantStatus.NONZERO and f.offset <= offset
            ]
        tightest = min(
            justifying, key=lambda f: abs(f.offset - offset)
        )
        return tightest.rule

    def window(self, lo: int, hi: int) -> list[tuple[int, InvariantStatus, str | None]]:
        return [
            (k, self.status_at(k), self.provenance_at(k)) for k in range(lo, hi + 1)
        ]


def assert_fact(
    state: LedgerState,
    framing: Framing | int | None,
    status: InvariantStatus,
    rule: str,
) -> LedgerState:
    """Record a fact and recompute the closure; raises Contradiction when
    the closure would assign both statuses to some framing."""
    if status not in (InvariantStatus.ZERO, InvariantStatus.NONZERO):
        raise ValueError("only Zero and NonZero facts can be asserted")
    offset = framing.offset if isinstance(framing, Framing) else framing
    if offset is None and status is not InvariantStatus.ZERO:
        raise ValueError("only Zero facts may cover all framings")
    updated = LedgerState(state.subject, state.facts + (Fact(offset, status, rule),))
    updated.check_consistent()
    return updated


def apply_rules(subject: LedgerSubject, state: LedgerState | None = None) -> LedgerState:
    """Assert every built-in rule whose preconditions the subject meets."""
    if state is None:
        state = LedgerState(subject=subject)
    knot_type = subject.knot_type()
    legendrian = subject.legendrian

    if legendrian is not None:
        state = assert_fact(state, legendrian.tb, InvariantStatus.ZERO, "R1")
    if subject.positively_stabilized:
        state = assert_fact(state, None, InvariantStatus.ZERO, "R2")
    if subject.complement_overtwisted_or_torsion:
        state = assert_fact(state, None, InvariantStatus.ZERO, "R3")
    if subject.binding:
        verdict = binding_vanishing_rule(subject.ambient_invariant, subject.ambient_b1)
        if verdict is BindingVerdict.FORCES_ZERO:
            state = assert_fact(state, None, InvariantStatus.ZERO, "R4")
    if (
        subject.transverse is not None
        and subject.binding
        and subject.manifold == STANDARD_TIGHT_S3
        and knot_type is not None
        and subject.transverse.sl == 2 * knot_type.genus - 1
        and knot_type.genus >= 1
    ):
        state = assert_fact(
            state, 2 * knot_type.genus, InvariantStatus.NONZERO, "R5"
        )
    if (
        legendrian is not None
        and subject.manifold == STANDARD_TIGHT_S3
        and knot_type is not None
        and legendrian.tb == 2 * knot_type.slice_genus - 1
        and legendrian.tb > 0
    ):
        state = assert_fact(state, legendrian.tb + 1, InvariantStatus.NONZERO, "R6")
    if (
        legendrian is not None
        and subject.manifold == STANDARD_TIGHT_S3
        and knot_type is not None
        and knot_type.genus == 0
        and legendrian.tb == -1
    ):
        state = assert_fact(state, legendrian.tb + 1, InvariantStatus.NONZERO, "E1")
    return state


def inverse_limit_status(state: LedgerState) -> LedgerVerdict:
    """Verdict on the inverse-limit element defined by the framed family.

    Zero when every component vanishes; NotAllZero when some framing is
    known NonZero (so the element of the product is nonzero); Unknown
    otherwise.  The rules never certify nonvanishing of every component,
    so no stronger verdict is ever claimed.
    """
    state.check_consistent()
    if state.zero_everywhere():
        return LedgerVerdict.ZERO
    if state.nonzero_floor() is not None:
        return LedgerVerdict.NOT_ALL_ZERO
    return LedgerVerdict.UNKNOWN


RULE_MAX_SELF_LINKING = "max-self-linking"
RULE_MAX_THURSTON_BENNEQUIN = "max-thurston-bennequin"


class TightRange(NamedTuple):
    """All rational coefficients r >= anchor, with the certifying rule."""

    anchor: int
    rule: str


@dataclass(frozen=True)
class TightnessReport:
    """Union of upward-closed ranges of surgery coefficients certified to
    carry tight contact structures, with per-range provenance."""

    knot: KnotType
    ranges: tuple[TightRange, ...]
    sl_tb_gap: int | None = None

    def covers(self, r) -> bool:
        r = Fraction(r)
        return any(r >= rng.anchor for rng in self.ranges)

    def anchor(self) -> int | None:
        return min((rng.anchor for rng in self.ranges), default=None)


def tight_surgery_ranges(knot: KnotType) -> TightnessReport:
    """Certified-tight rational surgery coefficients for a knot type.

    A self-linking-maximizing knot type (max_sl = 2*genus - 1, genus >= 1)
    certifies every r >= 2*genus; a Legendrian with tb = 2*slice_genus - 1 > 0
    certifies every r >= max_tb + 1.  Integer anchors extend to rational
    coefficients by subsequent negative-coefficient surgeries, which
    preserve nonvanishing of the invariant.
    """
    if knot.max_sl is None and knot.max_tb is None:
        raise IncompleteData(
            f"{knot.name}: neither max_sl nor max_tb is recorded"
        )
    ranges = []
    if (
        knot.max_sl is not None
        and knot.genus >= 1
        and knot.max_sl == 2 * knot.genus - 1
    ):
        ranges.append(TightRange(2 * knot.genus, RULE_MAX_SELF_LINKING))
    if (
        knot.max_tb is not None
        and knot.max_tb == 2 * knot.slice_genus - 1
        and knot.max_tb > 0
    ):
        ranges.append(TightRange(knot.max_tb + 1, RULE_MAX_THURSTON_BENNEQUIN))
    gap = None
    if knot.max_sl is not None and knot.max_tb is not None:
        gap = knot.max_sl - knot.max_tb
    return TightnessReport(knot=knot, ranges=tuple(ranges), sl_tb_gap=gap)

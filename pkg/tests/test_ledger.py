import itertools
import random
from fractions import Fraction

import pytest

from contactsurgery.catalog import (
    KnotType,
    UNKNOT,
    cable_of_trefoil,
    connected_sum,
    torus_knot,
)
from contactsurgery.errors import Contradiction, IncompleteData
from contactsurgery.ledger import (
    CobordismRecord,
    LedgerState,
    LedgerSubject,
    LedgerVerdict,
    RULE_MAX_SELF_LINKING,
    RULE_MAX_THURSTON_BENNEQUIN,
    apply_rules,
    assert_fact,
    inverse_limit_status,
    tight_surgery_ranges,
)
from contactsurgery.legendrian import Framing, LegendrianKnot, TransverseKnot
from contactsurgery.openbook import InvariantStatus as Status


def test_upward_propagation():
    state = assert_fact(LedgerState(), Framing(0), Status.NONZERO, "seed")
    assert state.status_at(5) is Status.NONZERO
    assert state.status_at(0) is Status.NONZERO
    assert state.status_at(-1) is Status.UNKNOWN


def test_downward_propagation():
    state = assert_fact(LedgerState(), Framing(0), Status.ZERO, "seed")
    assert state.status_at(-3) is Status.ZERO
    assert state.status_at(1) is Status.UNKNOWN


def test_contradiction_carries_both_provenances():
    state = assert_fact(LedgerState(), 4, Status.NONZERO, "nz-rule")
    with pytest.raises(Contradiction) as info:
        assert_fact(state, 5, Status.ZERO, "z-rule")
    assert info.value.zero_rule == "z-rule"
    assert info.value.nonzero_rule == "nz-rule"


def test_order_independence():
    rng = random.Random(3)
    for _ in range(30):
        facts = [
            (rng.randrange(-5, 6), rng.choice((Status.ZERO, Status.NONZERO)))
            for _ in range(4)
        ]
        results = set()
        for perm in itertools.permutations(facts):
            state = LedgerState()
            try:
                for offset, status in perm:
                    state = assert_fact(state, offset, status, "r")
                results.add(tuple(state.status_at(k) for k in range(-7, 8)))
            except Contradiction:
                results.add("contradiction")
        assert len(results) == 1


def test_closure_idempotent():
    base = assert_fact(LedgerState(), 2, Status.NONZERO, "r")
    again = assert_fact(base, 2, Status.NONZERO, "r")
    assert [base.status_at(k) for k in range(-4, 6)] == [
        again.status_at(k) for k in range(-4, 6)
    ]


def test_no_nonzero_then_zero_pair_in_rule_ledgers():
    cable = cable_of_trefoil(2, 3)
    subject = LedgerSubject(
        legendrian=LegendrianKnot(6, -1, cable),
        transverse=TransverseKnot(7, cable),
        binding=True,
    )
    state = apply_rules(subject)
    window = [state.status_at(k) for k in range(-10, 20)]
    seen_nonzero = False
    for status in window:
        if status is Status.NONZERO:
            seen_nonzero = True
        assert not (seen_nonzero and status is Status.ZERO)


def test_rule_r1_and_r5_on_cable():
    cable = cable_of_trefoil(2, 3)
    state = apply_rules(
        LedgerSubject(
            legendrian=LegendrianKnot(6, -1, cable),
            transverse=TransverseKnot(7, cable),
            binding=True,
        )
    )
    assert state.status_at(6) is Status.ZERO
    assert state.provenance_at(6) == "R1"
    assert state.status_at(7) is Status.UNKNOWN
    assert state.status_at(8) is Status.NONZERO
    assert state.provenance_at(8) == "R5"
    assert inverse_limit_status(state) is LedgerVerdict.NOT_ALL_ZERO


def test_rule_r2_positive_stabilization():
    state = apply_rules(
        LedgerSubject(legendrian=LegendrianKnot(-4, 3), positively_stabilized=True)
    )
    assert all(state.status_at(k) is Status.ZERO for k in range(-20, 21))
    assert inverse_limit_status(state) is LedgerVerdict.ZERO


def test_rule_r3_overtwisted_complement():
    state = apply_rules(
        LedgerSubject(
            legendrian=LegendrianKnot(-3, 0, UNKNOT),
            complement_overtwisted_or_torsion=True,
        )
    )
    assert inverse_limit_status(state) is LedgerVerdict.ZERO


def test_inconsistent_subject_surfaces_contradiction():
    # The maximal Legendrian unknot cannot have overtwisted complement;
    # asserting both is bad input and must clash rather than resolve.
    with pytest.raises(Contradiction):
        apply_rules(
            LedgerSubject(
                legendrian=LegendrianKnot(-1, 0, UNKNOT),
                complement_overtwisted_or_torsion=True,
            )
        )


def test_rule_r4_binding_of_vanishing_structure():
    state = apply_rules(
        LedgerSubject(
            transverse=TransverseKnot(-1, UNKNOT),
            binding=True,
            ambient_invariant=Status.ZERO,
            ambient_b1=0,
        )
    )
    assert inverse_limit_status(state) is LedgerVerdict.ZERO
    assert state.provenance_at(0) == "R4"


def test_rule_r4_skipped_when_b1_positive():
    state = apply_rules(
        LedgerSubject(
            transverse=TransverseKnot(-1, UNKNOT),
            binding=True,
            ambient_invariant=Status.ZERO,
            ambient_b1=1,
        )
    )
    assert inverse_limit_status(state) is LedgerVerdict.UNKNOWN


def test_rule_r6_trefoil():
    trefoil = torus_knot(2, 3)
    state = apply_rules(LedgerSubject(legendrian=LegendrianKnot(1, 0, trefoil)))
    assert state.status_at(2) is Status.NONZERO
    assert state.provenance_at(2) == "R6"
    assert state.status_at(1) is Status.ZERO  # R1 at tb


def test_rule_e1_unknot():
    state = apply_rules(LedgerSubject(legendrian=LegendrianKnot(-1, 0, UNKNOT)))
    assert state.status_at(0) is Status.NONZERO
    assert state.provenance_at(0) == "E1"
    assert state.status_at(-1) is Status.ZERO


def test_empty_ledger_unknown():
    assert inverse_limit_status(LedgerState()) is LedgerVerdict.UNKNOWN


def test_window_rendering():
    state = apply_rules(LedgerSubject(legendrian=LegendrianKnot(-1, 0, UNKNOT)))
    rows = state.window(-3, 2)
    assert [r[0] for r in rows] == list(range(-3, 3))
    statuses = {k: status for k, status, _ in rows}
    assert statuses[-1] is Status.ZERO
    assert statuses[0] is Status.NONZERO


def test_tight_surgeries_cable():
    report = tight_surgery_ranges(cable_of_trefoil(2, 3))
    assert report.anchor() == 8
    assert [rng.rule for rng in report.ranges] == [RULE_MAX_SELF_LINKING]
    assert report.covers(8)
    assert report.covers(Fraction(17, 2))
    assert not report.covers(Fraction(15, 2))


def test_tight_surgeries_trefoil_both_routes():
    report = tight_surgery_ranges(torus_knot(2, 3))
    rules = sorted(rng.rule for rng in report.ranges)
    assert rules == sorted((RULE_MAX_SELF_LINKING, RULE_MAX_THURSTON_BENNEQUIN))
    assert all(rng.anchor == 2 for rng in report.ranges)


def test_tight_surgeries_unknot_empty():
    assert tight_surgery_ranges(UNKNOT).ranges == ()


def test_tight_surgeries_upward_closed():
    report = tight_surgery_ranges(cable_of_trefoil(3, 4))
    anchor = report.anchor()
    for step in range(0, 12):
        assert report.covers(anchor + Fraction(step, 3))


def test_tight_surgeries_gap_tracks_summands():
    cable = cable_of_trefoil(2, 3)
    total = cable
    for copies in range(2, 6):
        total = connected_sum(total, cable)
        assert tight_surgery_ranges(total).sl_tb_gap == copies


def test_tight_surgeries_incomplete_data():
    with pytest.raises(IncompleteData):
        tight_surgery_ranges(KnotType("mystery", genus=2, slice_genus=1))


def test_cobordism_records():
    step = CobordismRecord("Wf", "Y_f-1", "Y_f", framing_offset=-1)
    assert step.kind == "Wf"
    with pytest.raises(ValueError):
        CobordismRecord("Wf", "Y_f-1", "Y_f", framing_offset=0)
    with pytest.raises(ValueError):
        CobordismRecord("mystery", "a", "b")
    handle = CobordismRecord("Xkn", "Y", "Y_surgered")
    cap = CobordismRecord("Zcap", "Y_surgered", "Y")
    assert cap.is_reverse_of(handle)
    assert not handle.is_reverse_of(cap)
    assert not CobordismRecord("Zcap", "Y", "Y_surgered").is_reverse_of(handle)

import itertools
from fractions import Fraction

import pytest

from contactsurgery.errors import (
    InvalidCoefficient,
    OutOfRange,
    UnsupportedCoefficient,
)
from contactsurgery.expansion import (
    ROLE_PLUS_ONE,
    Slope,
    all_negative_presentation,
    evaluate_continued_fraction,
    expand,
    gluing_pullback,
    negative_continued_fraction,
    normalize_slope,
    presentation_for_framing,
)
from contactsurgery.legendrian import Framing, LegendrianKnot, stabilize


def brute_force_expansion(x: Fraction, max_len=6, max_term=6):
    """All-terms->=2 expansions found by exhaustive search (test oracle)."""
    found = []
    for length in range(1, max_len + 1):
        for terms in itertools.product(range(2, max_term + 1), repeat=length):
            if evaluate_continued_fraction(terms) == x:
                found.append(terms)
    return found


def test_continued_fraction_closed_form():
    for n in range(2, 11):
        x = Fraction(2 * n - 1, n - 1)
        assert negative_continued_fraction(x) == (3,) + (2,) * (n - 2)


def test_continued_fraction_single_term():
    assert negative_continued_fraction(2) == (2,)
    assert negative_continued_fraction(5) == (5,)


def test_continued_fraction_against_brute_force():
    x = Fraction(17, 5)
    matches = brute_force_expansion(x)
    assert matches == [(4, 2, 3)]
    assert negative_continued_fraction(x) == (4, 2, 3)


def test_continued_fraction_leading_term_is_ceiling():
    for x in (Fraction(9, 7), Fraction(23, 6), Fraction(31, 30)):
        terms = negative_continued_fraction(x)
        assert terms[0] == -((-x.numerator) // x.denominator)
        assert evaluate_continued_fraction(terms) == x


def test_continued_fraction_domain():
    with pytest.raises(OutOfRange):
        negative_continued_fraction(1)
    with pytest.raises(OutOfRange):
        negative_continued_fraction(Fraction(1, 2))


def test_expand_rejects_bad_coefficients():
    knot = LegendrianKnot(-1, 0)
    with pytest.raises(InvalidCoefficient):
        expand(knot, 0)
    with pytest.raises(UnsupportedCoefficient):
        expand(knot, Fraction(1, 2))


def test_expand_plus_one():
    knot = LegendrianKnot(-1, 0)
    (presentation,) = expand(knot, 1)
    assert len(presentation.components) == 1
    comp = presentation.components[0]
    assert comp.role == ROLE_PLUS_ONE
    assert comp.coefficient == 1
    assert (comp.legendrian.tb, comp.legendrian.rot) == (-1, 0)


def test_expand_integer_coefficient_two_choices():
    knot = LegendrianKnot(-1, 0)
    for n in range(2, 9):
        presentations = expand(knot, n)
        assert len(presentations) == 2
        assert presentations[0] == all_negative_presentation(knot, n)


def test_expand_negative_counts():
    knot = LegendrianKnot(-1, 0)
    assert len(expand(knot, -2)) == 2  # 1 - r = 3 = [3]
    terms = negative_continued_fraction(1 - Fraction(-9, 7))
    expected = 1
    for a in terms:
        expected *= a - 1
    assert len(expand(knot, Fraction(-9, 7))) == expected


def test_expand_positive_rational():
    knot = LegendrianKnot(-1, 0)
    presentations = expand(knot, Fraction(3, 2))
    # residual surgery is 3/(2-3) = -3 and 1 - (-3) = 4 = [4]: three choices
    assert len(presentations) == 3
    for presentation in presentations:
        assert presentation.components[0].role == ROLE_PLUS_ONE
        chain = presentation.components[1:]
        assert len(chain) == 1
        assert all(c.coefficient == -1 for c in chain)
        assert chain[0].legendrian.tb == -3  # two stabilizations of a pushoff


def test_all_negative_comes_first_lexicographically():
    knot = LegendrianKnot(-1, 0)
    presentations = expand(knot, Fraction(-9, 4))

    def key(presentation):
        # lexicographic with '-' < '+'
        order = {"-": 0, "+": 1}
        return tuple(
            tuple(order[s] for s in c.stab_signs) for c in presentation.components
        )

    keys = [key(p) for p in presentations]
    assert keys == sorted(keys)
    assert all(
        all(s == "-" for s in c.stab_signs) for c in presentations[0].components
    )


def test_all_negative_presentation_shape():
    knot = LegendrianKnot(-1, 0)
    presentation = all_negative_presentation(knot, 2)
    assert presentation.tb_rot_profile() == ((-1, 0), (-2, -1))
    assert [c.coefficient for c in presentation.components] == [1, -1]

    single = all_negative_presentation(knot, 1)
    assert len(single.components) == 1
    assert single.components[0].coefficient == 1


def test_presentation_for_framing_above_tb():
    knot = LegendrianKnot(-1, 0)
    presentation = presentation_for_framing(knot, Framing(1))
    assert presentation == all_negative_presentation(knot, 2)
    assert not presentation.overtwisted


def test_presentation_for_framing_at_or_below_tb_is_overtwisted():
    knot = LegendrianKnot(-1, 0)
    presentation = presentation_for_framing(knot, Framing(-1))
    assert presentation.overtwisted
    (comp,) = presentation.components
    assert comp.coefficient == 1
    assert comp.legendrian.tb == -2  # stabilized to tb = f - 1


def test_presentation_well_defined_under_pre_stabilization():
    knot = LegendrianKnot(-1, 0)
    target = presentation_for_framing(knot, Framing(2))
    for extra in range(1, 4):
        stabilized = knot
        for _ in range(extra):
            stabilized = stabilize(stabilized, "-")
        other = presentation_for_framing(stabilized, Framing(2))
        assert len(other.components) == len(target.components) + extra


def test_normalize_slope_values():
    assert normalize_slope(2) == Slope(-2, 1)
    assert normalize_slope(3) == Slope(-3, 2)
    assert normalize_slope(1).is_infinite
    assert str(normalize_slope(1)) == "-inf"
    for n in range(2, 11):
        slope = normalize_slope(n)
        assert slope.value() == Fraction(-n, n - 1)
        assert slope.value() <= -1


def test_gluing_pullback():
    for n in range(1, 8):
        assert gluing_pullback(n) == (1, n)

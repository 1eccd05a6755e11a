import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dotgates.combinatorics import (
    binomial,
    combined_probability,
    draw_probability,
    draw_ways,
    format_decimal,
    format_fraction,
    gf_expand,
)
from dotgates.enumeration import enumerate_hands
from dotgates.tiles import Hand, dual, parse_hand

from oracles import brute_count_by_size

NINE_GATES = parse_hand("1112345678999")


def test_binomial():
    assert binomial(36, 13) == 2310789600
    assert binomial(17, 0) == 1
    assert binomial(4, 2) == 6
    for bad in [(3, -1), (3, 4)]:
        with pytest.raises(ValueError):
            binomial(*bad)


@pytest.mark.parametrize(
    "text, ways",
    [("1112345678999", 4**9), ("3334567888999", 4**7), ("3334556677888", 4**3 * 6**3)],
)
def test_draw_ways(text, ways):
    assert draw_ways(parse_hand(text)) == ways


def test_draw_probability():
    p = draw_probability(NINE_GATES)
    assert p == Fraction(262144, 2310789600)
    assert format_decimal(p, 11) == "0.00011344347"
    assert draw_probability(Hand.empty()) == 1
    assert draw_probability(Hand((4,) * 9)) == 1


def test_combined_probability():
    assert combined_probability([NINE_GATES]) == draw_probability(NINE_GATES)
    assert combined_probability(enumerate_hands(13)) == 1
    with pytest.raises(ValueError):
        combined_probability([NINE_GATES, NINE_GATES])
    with pytest.raises(ValueError):
        combined_probability([NINE_GATES, parse_hand("11")])


def test_gf_against_brute_force():
    coeffs = gf_expand(4, 9)
    assert coeffs == brute_count_by_size()
    assert (coeffs[0], coeffs[13], coeffs[14], coeffs[36]) == (1, 93600, 118800, 1)


@pytest.mark.parametrize("copies, ranks", [(0, 3), (1, 5), (2, 4), (4, 3)])
def test_gf_small_cases_by_product(copies, ranks):
    expected = [0] * (copies * ranks + 1)
    for combo in itertools.product(range(copies + 1), repeat=ranks):
        expected[sum(combo)] += 1
    assert gf_expand(copies, ranks) == expected


def test_gf_symmetry_and_total():
    c = gf_expand()
    assert c == c[::-1]
    assert sum(c) == 5**9


@pytest.mark.parametrize("m", [13, 14, 17])
def test_ways_sum_to_binomial(m):
    assert sum(draw_ways(h) for h in enumerate_hands(m)) == binomial(36, m)


@given(st.tuples(*[st.integers(0, 4)] * 9).map(Hand))
def test_ways_dual_invariant(h):
    assert draw_ways(dual(h)) == draw_ways(h)


@pytest.mark.parametrize(
    "p, places, text",
    [
        (Fraction(1, 8), 2, "0.12"),  # exact half rounds to even
        (Fraction(3, 8), 2, "0.38"),
        (Fraction(5, 2), 0, "2"),
        (Fraction(231424, 2310789600), 4, "0.0001"),
        (Fraction(1), 6, "1.000000"),
        (Fraction(-1, 3), 3, "-0.333"),
    ],
)
def test_format_decimal(p, places, text):
    assert format_decimal(p, places) == text


def test_format_fraction_keeps_unreduced():
    assert format_fraction(262144, 2310789600) == "262144/2310789600 ≈ 0.000113"

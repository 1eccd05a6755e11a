import itertools

import pytest

from dotgates.combinatorics import combined_probability, format_decimal
from dotgates.decomposition import MeldSolver
from dotgates.gates import (
    GateHistogram,
    classify_all,
    hands_with_gate_count,
    iter_gate_records,
    triples_coverage,
    winning_tiles,
)
from dotgates.tiles import dual, format_hand, parse_hand

from oracles import brute_winning
from reference_values import EIGHT_GATES, GATES_AVOIDING_159


@pytest.fixture(scope="module")
def c13():
    return classify_all(13)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1112345678999", set(range(1, 10))),
        ("3334567888999", set(range(2, 10))),
        ("1111222233345", {3, 4, 6}),
        ("5677788889999", {4, 6, 7}),
        ("1112223334447", {7}),
        ("1112223334445", {2, 3, 4, 5, 6}),
        ("1", {1}),
        ("1111", set()),
        ("1112", {2, 3}),
    ],
)
def test_winning_tiles_examples(text, expected):
    assert winning_tiles(parse_hand(text)) == expected


@pytest.mark.parametrize("text", ["", "11", "11111111111111"[:14]])
def test_winning_tiles_rejects_size(text):
    with pytest.raises(ValueError):
        winning_tiles(parse_hand(text))


def test_winning_tiles_against_brute_force_size_7():
    for rec in iter_gate_records(7):
        c = list(rec.hand.counts)
        expected = set()
        for r in range(9):
            if c[r] < 4:
                c[r] += 1
                if brute_winning(tuple(c)):
                    expected.add(r + 1)
                c[r] -= 1
        assert rec.winning == expected


def test_size_one_every_hand_one_gate():
    cl = classify_all(1)
    assert cl.histogram.num_hands[1] == 9
    assert all(r.winning == {r.hand.counts.index(1) + 1} for r in cl.records)


def test_histogram_totals(c13):
    h = c13.histogram
    assert h.total_hands == 93600
    assert sum(h.probabilities) == 1
    assert [r.hand for r in c13.records] == sorted(r.hand for r in c13.records)


def test_full_house_never_a_gate(c13):
    for rec in c13.records:
        for r in rec.winning:
            assert rec.hand[r] < 4


def test_eight_gates(c13):
    eight = hands_with_gate_count(13, 8)
    assert {format_hand(r.hand): r.missing for r in eight} == {k: (v,) for k, v in EIGHT_GATES.items()}
    assert all({2, 5, 8} <= r.winning for r in eight)
    assert sum(r.ways for r in eight) == 231424
    assert format_decimal(combined_probability(r.hand for r in eight), 4) == "0.0001"


def test_eight_gates_missing_tally():
    # the annotations give five hands missing rank 1 and five missing rank 9
    tally = {}
    for m in EIGHT_GATES.values():
        tally[m] = tally.get(m, 0) + 1
    assert tally == {1: 5, 3: 2, 4: 1, 6: 1, 7: 2, 9: 5}


def test_hands_avoiding_1_5_9():
    # the eight listed hands all win on exactly 2,3,4,6,7,8, so they sit in the six-gates class
    six = [r for r in hands_with_gate_count(13, 6) if not r.winning & {1, 5, 9}]
    assert sorted(format_hand(r.hand) for r in six) == sorted(GATES_AVOIDING_159)
    assert all(r.hand[5] == 4 and r.winning == {2, 3, 4, 6, 7, 8} for r in six)
    five = [r for r in hands_with_gate_count(13, 5) if not r.winning & {1, 5, 9}]
    assert len(five) == 46
    assert not {format_hand(r.hand) for r in five} & set(GATES_AVOIDING_159)


def test_pairs_and_singletons_realized(c13):
    sets = {r.winning for r in c13.records}
    for i, j in itertools.combinations(range(1, 10), 2):
        assert frozenset({i, j}) in sets
    for k in range(1, 10):
        assert frozenset({k}) in sets


def test_triples_coverage_shape():
    cov = triples_coverage()
    assert len(cov) == 84
    assert cov[(1, 2, 3)] is True
    assert cov[(1, 2, 9)] is False


def test_histogram_merge_guard():
    with pytest.raises(ValueError):
        GateHistogram(13).merge(GateHistogram(16))


def test_parallel_matches_serial(c13):
    par = classify_all(13, jobs=3)
    assert par.histogram == c13.histogram
    assert par.records == c13.records


def test_dual_equivariance_size_10():
    solver = MeldSolver()
    for rec in iter_gate_records(10):
        assert winning_tiles(dual(rec.hand), solver) == {10 - r for r in rec.winning}


def test_hands_with_gate_count_rejects():
    with pytest.raises(ValueError):
        hands_with_gate_count(13, 10)
    with pytest.raises(ValueError):
        classify_all(14)

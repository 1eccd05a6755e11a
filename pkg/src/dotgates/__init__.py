"""Exhaustive analysis of single-suit (dot tile) Mahjong hands."""

from dotgates.combinatorics import (
    binomial,
    combined_probability,
    draw_probability,
    draw_ways,
    format_decimal,
    gf_expand,
)
from dotgates.decomposition import (
    Decomposition,
    Meld,
    count_winning,
    decompose_melds_exact,
    greedy_four_sets,
    is_winning,
)
from dotgates.enumeration import count_hands, enumerate_hands, enumerate_partition
from dotgates.gates import (
    GateHistogram,
    GateRecord,
    classify_all,
    hands_with_gate_count,
    triples_coverage,
    winning_tiles,
)
from dotgates.tiles import NUM_RANKS, Hand, HandError, canonical_key, dual, format_hand, parse_hand

__version__ = "0.1.0"

__all__ = [
    "NUM_RANKS",
    "Decomposition",
    "GateHistogram",
    "GateRecord",
    "Hand",
    "HandError",
    "Meld",
    "binomial",
    "canonical_key",
    "classify_all",
    "combined_probability",
    "count_hands",
    "count_winning",
    "decompose_melds_exact",
    "draw_probability",
    "draw_ways",
    "dual",
    "enumerate_hands",
    "enumerate_partition",
    "format_decimal",
    "format_hand",
    "gf_expand",
    "greedy_four_sets",
    "hands_with_gate_count",
    "is_winning",
    "parse_hand",
    "triples_coverage",
    "winning_tiles",
]

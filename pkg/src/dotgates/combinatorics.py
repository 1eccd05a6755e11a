"""Exact counting and probability over the 36-tile dot pool.

Probabilities are ``fractions.Fraction`` values throughout; decimals are only
produced by ``format_decimal`` for display.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction

from dotgates.tiles import MAX_COPIES, NUM_RANKS, POOL_SIZE, Hand

# C(4, n) for n = 0..4
_WAYS = tuple(math.comb(MAX_COPIES, n) for n in range(MAX_COPIES + 1))


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        raise ValueError(f"binomial requires 0 <= k <= n, got n={n}, k={k}")
    return math.comb(n, k)


def draw_ways(h: Hand) -> int:
    """Number of physical draws from the pool realizing the pattern of ``h``."""
    ways = 1
    for n in h.counts:
        ways *= _WAYS[n]
    return ways


def draw_probability(h: Hand) -> Fraction:
    return Fraction(draw_ways(h), binomial(POOL_SIZE, h.size))


def combined_probability(hands: Iterable[Hand]) -> Fraction:
    """Probability that a uniform draw of the common size realizes any of ``hands``."""
    hands = list(hands)
    if not hands:
        raise ValueError("combined_probability needs at least one hand")
    sizes = {h.size for h in hands}
    if len(sizes) != 1:
        raise ValueError(f"hands have mixed sizes {sorted(sizes)}")
    if len(set(hands)) != len(hands):
        raise ValueError("duplicate hands")
    total = sum(draw_ways(h) for h in hands)
    return Fraction(total, binomial(POOL_SIZE, sizes.pop()))


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def gf_expand(max_copies: int = MAX_COPIES, num_ranks: int = NUM_RANKS) -> list[int]:
    """Coefficients of ``(1 + X + ... + X**max_copies) ** num_ranks``.

    >>> gf_expand(4, 9)[13]
    93600
    """
    if max_copies < 0 or num_ranks < 1:
        raise ValueError("need max_copies >= 0 and num_ranks >= 1")
    factor = [1] * (max_copies + 1)
    coeffs = [1]
    for _ in range(num_ranks):
        coeffs = poly_mul(coeffs, factor)
    return coeffs


def format_decimal(p: Fraction, places: int = 6) -> str:
    """Render ``p`` with ``places`` decimals, rounding half to even exactly."""
    if places < 0:
        raise ValueError("places must be non-negative")
    scaled = round(Fraction(p) * 10**places)  # Fraction.__round__ is half-even
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_fraction(numerator: int, denominator: int, places: int = 6) -> str:
    """``"num/den ≈ 0.dddddd"`` with the fraction left unreduced."""
    return f"{numerator}/{denominator} ≈ {format_decimal(Fraction(numerator, denominator), places)}"

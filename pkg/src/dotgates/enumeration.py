"""Streaming enumeration of all hands of a given size.

Hands come out in ascending ``canonical_key`` order, i.e. lexicographic on the
count tuple.  The walk splits the nine ranks into a 4-rank prefix and a 5-rank
suffix, each pre-bucketed by tile total, so nothing outside the target size is
ever built.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from functools import lru_cache

from dotgates.combinatorics import gf_expand
from dotgates.tiles import MAX_COPIES, NUM_RANKS, POOL_SIZE, Hand

_SPLIT = 4


@lru_cache(maxsize=None)
def _blocks(width: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # blocks[s] = every count tuple of this width summing to s, lexicographic
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(width * MAX_COPIES + 1)]
    for combo in itertools.product(range(MAX_COPIES + 1), repeat=width):
        buckets[sum(combo)].append(combo)
    return tuple(tuple(b) for b in buckets)


def _check_size(size: int) -> None:
    if not 0 <= size <= POOL_SIZE:
        raise ValueError(f"hand size must be in 0..{POOL_SIZE}, got {size}")


def iter_counts(size: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield raw count tuples; ``first`` restricts the rank-1 count."""
    _check_size(size)
    heads = _blocks(_SPLIT)
    tails = _blocks(NUM_RANKS - _SPLIT)
    max_tail = (NUM_RANKS - _SPLIT) * MAX_COPIES
    prefixes = itertools.chain.from_iterable(heads[max(0, size - max_tail): size + 1])
    for prefix in sorted(prefixes) if first is None else sorted(p for p in prefixes if p[0] == first):
        for suffix in tails[size - sum(prefix)]:
            yield prefix + suffix


def enumerate_hands(size: int) -> Iterator[Hand]:
    """Every hand of ``size`` tiles, each once, in canonical order."""
    trusted = Hand._trusted
    for counts in iter_counts(size):
        yield trusted(counts)


def enumerate_partition(size: int, first: int) -> Iterator[Hand]:
    """The sub-stream of ``enumerate_hands(size)`` whose rank-1 count is ``first``.

    Concatenating partitions 0..4 in order reproduces the full stream.
    """
    if not 0 <= first <= MAX_COPIES:
        raise ValueError(f"partition index must be in 0..{MAX_COPIES}")
    trusted = Hand._trusted
    for counts in iter_counts(size, first):
        yield trusted(counts)


def count_hands(size: int) -> int:
    _check_size(size)
    return _coefficients()[size]


@lru_cache(maxsize=1)
def _coefficients() -> tuple[int, ...]:
    return tuple(gf_expand(MAX_COPIES, NUM_RANKS))

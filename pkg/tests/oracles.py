"""Independent reference implementations used only by the tests.

These deliberately avoid the library's pruning rules so they can catch
mistakes in them.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

ALL_MELDS = [("pung", r) for r in range(1, 10)] + [("chow", r) for r in range(1, 8)]


def meld_ranks(meld):
    kind, r = meld
    return (r, r, r) if kind == "pung" else (r, r + 1, r + 2)


@lru_cache(maxsize=None)
def brute_cover_exists(counts: tuple[int, ...]) -> bool:
    """Try every meld anywhere, full backtracking, no ordering assumption."""
    if not any(counts):
        return True
    for meld in ALL_MELDS:
        c = list(counts)
        ok = True
        for r in meld_ranks(meld):
            c[r - 1] -= 1
            if c[r - 1] < 0:
                ok = False
        if ok and brute_cover_exists(tuple(c)):
            return True
    return False


def brute_winning(counts: tuple[int, ...]) -> bool:
    for j in range(9):
        if counts[j] >= 2:
            c = list(counts)
            c[j] -= 2
            if brute_cover_exists(tuple(c)):
                return True
    return False


def brute_count_by_size() -> list[int]:
    """Hand counts per size by scanning all 5**9 vectors."""
    out = [0] * 37
    for combo in itertools.product(range(5), repeat=9):
        out[sum(combo)] += 1
    return out

"""Winning-hand decomposition: one pair plus ``k`` melds.

The exact solver walks the lowest occupied rank.  If it holds three or more
copies, a pung there is taken and no other branch is tried: any meld cover
that instead spends those copies on chows ``r, r+1, r+2`` can swap three
such chows for three pungs.  Otherwise a chow starting at that rank is the
only way to use it.  Results are memoized per count vector.

``greedy_four_sets`` is a literal rank-by-rank greedy kept for comparison
against the exact solver; nothing published depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from dotgates.combinatorics import draw_ways
from dotgates.enumeration import iter_counts
from dotgates.tiles import NUM_RANKS, Hand, canonical_key


class MeldKind(str, Enum):
    PUNG = "pung"
    CHOW = "chow"


@dataclass(frozen=True, slots=True)
class Meld:
    kind: MeldKind
    start: int  # rank of a pung, lowest rank of a chow

    def __post_init__(self) -> None:
        top = NUM_RANKS if self.kind is MeldKind.PUNG else NUM_RANKS - 2
        if not 1 <= self.start <= top:
            raise ValueError(f"{self.kind.value} cannot start at rank {self.start}")

    @property
    def ranks(self) -> tuple[int, int, int]:
        s = self.start
        if self.kind is MeldKind.PUNG:
            return (s, s, s)
        return (s, s + 1, s + 2)

    def __str__(self) -> str:
        return "".join(map(str, self.ranks))


@dataclass(frozen=True, slots=True)
class Decomposition:
    pair: int
    melds: tuple[Meld, ...]

    def counts(self) -> tuple[int, ...]:
        c = [0] * NUM_RANKS
        c[self.pair - 1] += 2
        for m in self.melds:
            for r in m.ranks:
                c[r - 1] += 1
        return tuple(c)

    def __str__(self) -> str:
        return " ".join([str(self.pair) * 2, *map(str, self.melds)])


def _pung(r: int) -> Meld:
    return Meld(MeldKind.PUNG, r)


def _chow(r: int) -> Meld:
    return Meld(MeldKind.CHOW, r)


class MeldSolver:
    """Exact meld-cover search with an optional memo table.

    One instance per worker; the table is never shared across processes.
    """

    def __init__(self, memoize: bool = True) -> None:
        self.memoize = memoize
        self._memo: dict[int, tuple[Meld, ...] | None] = {}
        self._memo[0] = ()
        self._wins: dict[int, bool] = {}

    def cover(self, counts: tuple[int, ...]) -> tuple[Meld, ...] | None:
        """Melds exactly covering ``counts`` (size must be a multiple of 3)."""
        if not self.memoize:
            return self._solve(counts)
        key = canonical_key(counts)
        try:
            return self._memo[key]
        except KeyError:
            pass
        result = self._solve(counts)
        self._memo[key] = result
        return result

    def _solve(self, counts: tuple[int, ...]) -> tuple[Meld, ...] | None:
        r = next((i for i, n in enumerate(counts) if n), None)
        if r is None:
            return ()
        c = list(counts)
        if c[r] >= 3:
            c[r] -= 3
            rest = self.cover(tuple(c))
            return None if rest is None else (_pung(r + 1), *rest)
        if r > NUM_RANKS - 3 or not c[r + 1] or not c[r + 2]:
            return None
        c[r] -= 1
        c[r + 1] -= 1
        c[r + 2] -= 1
        rest = self.cover(tuple(c))
        return None if rest is None else (_chow(r + 1), *rest)

    def winning(self, counts: tuple[int, ...]) -> Decomposition | None:
        """First decomposition by ascending pair rank, or None."""
        c = list(counts)
        for j in range(NUM_RANKS):
            if c[j] >= 2:
                c[j] -= 2
                melds = self.cover(tuple(c))
                c[j] += 2
                if melds is not None:
                    return Decomposition(j + 1, melds)
        return None


    def wins(self, counts: tuple[int, ...]) -> bool:
        """Boolean form of ``winning``, cached separately from the meld memo."""
        if not self.memoize:
            return self.winning(counts) is not None
        key = canonical_key(counts)
        hit = self._wins.get(key)
        if hit is None:
            hit = self._wins[key] = self.winning(counts) is not None
        return hit


_default_solver = MeldSolver()


def decompose_melds_exact(counts: Hand, k: int) -> list[Meld] | None:
    if counts.size != 3 * k:
        raise ValueError(f"a cover by {k} melds needs {3 * k} tiles, hand has {counts.size}")
    melds = _default_solver.cover(counts.counts)
    return None if melds is None else list(melds)


def _check_winning_size(size: int) -> None:
    if size < 2 or size % 3 != 2:
        raise ValueError(f"winning hands have 3k+2 tiles, got {size}")


def is_winning(h: Hand) -> Decomposition | None:
    """Return a pair-plus-melds witness for ``h`` or None."""
    _check_winning_size(h.size)
    return _default_solver.winning(h.counts)


def greedy_set_count(h: Hand) -> int:
    """Sets removed by the rank-by-rank greedy: at each rank one pung if
    possible, then as many chows starting there as the three ranks allow."""
    hand = list(h.counts)
    found = 0
    for i in range(NUM_RANKS):
        if hand[i] >= 3:
            hand[i] -= 3
            found += 1
        if i + 2 < len(hand):
            m = min(hand[i], hand[i + 1], hand[i + 2])
            hand[i] -= m
            hand[i + 1] -= m
            hand[i + 2] -= m
            found += m
    return found


def greedy_four_sets(counts: Hand) -> bool:
    if counts.size != 12:
        raise ValueError(f"greedy_four_sets needs 12 tiles, got {counts.size}")
    return greedy_set_count(counts) == 4


def count_winning(size: int) -> int:
    _check_winning_size(size)
    solver = MeldSolver()
    return sum(1 for c in iter_counts(size) if solver.wins(c))


def winning_ways(size: int) -> tuple[int, int]:
    """(winning pattern count, winning physical draws) over all hands of ``size``."""
    _check_winning_size(size)
    solver = MeldSolver()
    patterns = ways = 0
    for c in iter_counts(size):
        if solver.winning(c) is not None:
            patterns += 1
            ways += draw_ways(Hand._trusted(c))
    return patterns, ways


def greedy_sweep(size: int = 14) -> list[tuple[Hand, int, bool, bool]]:
    """Compare greedy and exact four-meld tests over every hand and pair choice.

    Returns the disagreements as ``(hand, pair_rank, greedy, exact)``.
    """
    _check_winning_size(size)
    solver = MeldSolver()
    bad = []
    for counts in iter_counts(size):
        c = list(counts)
        for j in range(NUM_RANKS):
            if c[j] < 2:
                continue
            c[j] -= 2
            rest = Hand._trusted(tuple(c))
            c[j] += 2
            greedy = greedy_set_count(rest) == (size - 2) // 3
            exact = solver.cover(rest.counts) is not None
            if greedy != exact:
                bad.append((Hand._trusted(counts), j + 1, greedy, exact))
    return bad

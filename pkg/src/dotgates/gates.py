"""Winning-tile ("gate") analysis of hands one tile short of winning.

For a hand of 3k+1 tiles, rank r is a gate when fewer than four copies of r
are held and the hand plus one r decomposes into a pair and k+1 melds.
``classify_all`` runs this over every hand of a size and aggregates the
results per gate count.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from dotgates.combinatorics import binomial, draw_ways
from dotgates.decomposition import MeldSolver, _default_solver
from dotgates.enumeration import count_hands, enumerate_partition
from dotgates.tiles import MAX_COPIES, NUM_RANKS, POOL_SIZE, Hand

RANKS = tuple(range(1, NUM_RANKS + 1))


@dataclass(frozen=True, slots=True)
class GateRecord:
    hand: Hand
    winning: frozenset[int]
    ways: int

    @property
    def gates(self) -> int:
        return len(self.winning)

    @property
    def missing(self) -> tuple[int, ...]:
        """Ranks that do not complete the hand."""
        return tuple(r for r in RANKS if r not in self.winning)


@dataclass
class GateHistogram:
    size: int
    num_hands: list[int] = field(default_factory=lambda: [0] * (NUM_RANKS + 1))
    total_ways: list[int] = field(default_factory=lambda: [0] * (NUM_RANKS + 1))

    def add(self, record: GateRecord) -> None:
        self.num_hands[record.gates] += 1
        self.total_ways[record.gates] += record.ways

    def merge(self, other: GateHistogram) -> GateHistogram:
        if other.size != self.size:
            raise ValueError("cannot merge histograms of different hand sizes")
        return GateHistogram(
            self.size,
            [a + b for a, b in zip(self.num_hands, other.num_hands)],
            [a + b for a, b in zip(self.total_ways, other.total_ways)],
        )

    @property
    def denominator(self) -> int:
        return binomial(POOL_SIZE, self.size)

    def probability(self, g: int) -> Fraction:
        return Fraction(self.total_ways[g], self.denominator)

    @property
    def probabilities(self) -> list[Fraction]:
        return [self.probability(g) for g in range(NUM_RANKS + 1)]

    @property
    def total_hands(self) -> int:
        return sum(self.num_hands)


@dataclass(frozen=True)
class Classification:
    histogram: GateHistogram
    records: tuple[GateRecord, ...]

    def with_gates(self, g: int) -> list[GateRecord]:
        return [r for r in self.records if r.gates == g]


def _check_size(size: int) -> None:
    if size < 1 or size % 3 != 1 or size > POOL_SIZE:
        raise ValueError(f"gate analysis needs 3k+1 tiles (1..{POOL_SIZE}), got {size}")


def winning_tiles(h: Hand, solver: MeldSolver | None = None) -> frozenset[int]:
    """Ranks whose addition turns ``h`` into a winning hand."""
    _check_size(h.size)
    solver = solver or _default_solver
    counts = list(h.counts)
    out = []
    for i in range(NUM_RANKS):
        if counts[i] == MAX_COPIES:
            continue
        counts[i] += 1
        if solver.wins(tuple(counts)):
            out.append(i + 1)
        counts[i] -= 1
    return frozenset(out)


def _classify_partition(size: int, first: int) -> tuple[GateHistogram, list[GateRecord]]:
    solver = MeldSolver()
    hist = GateHistogram(size)
    records = []
    for h in enumerate_partition(size, first):
        rec = GateRecord(h, winning_tiles(h, solver), draw_ways(h))
        hist.add(rec)
        records.append(rec)
    return hist, records


def iter_gate_records(size: int) -> Iterator[GateRecord]:
    """Stream records in canonical order without holding them all."""
    _check_size(size)
    solver = MeldSolver()
    for first in range(MAX_COPIES + 1):
        for h in enumerate_partition(size, first):
            yield GateRecord(h, winning_tiles(h, solver), draw_ways(h))


def classify_all(size: int, jobs: int = 1) -> Classification:
    """Gate histogram and per-hand records for every hand of ``size``.

    With ``jobs > 1`` the five rank-1 partitions run in separate processes.
    Partial histograms are summed and records concatenated in partition
    order, so the result does not depend on ``jobs``.
    """
    _check_size(size)
    if jobs > 1:
        return _classify_cached(size, min(jobs, MAX_COPIES + 1))
    return _classify_cached(size, 1)


@lru_cache(maxsize=8)
def _classify_cached(size: int, jobs: int) -> Classification:
    parts = range(MAX_COPIES + 1)
    if jobs == 1:
        results = [_classify_partition(size, f) for f in parts]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify_partition, itertools.repeat(size), parts))
    hist = GateHistogram(size)
    records: list[GateRecord] = []
    for part_hist, part_records in results:
        hist = hist.merge(part_hist)
        records.extend(part_records)
    records.sort(key=lambda r: r.hand.counts)
    if hist.total_hands != count_hands(size):
        raise AssertionError("classification lost or duplicated hands")
    return Classification(hist, tuple(records))


def hands_with_gate_count(size: int, g: int, jobs: int = 1) -> list[GateRecord]:
    if not 0 <= g <= NUM_RANKS:
        raise ValueError(f"gate count must be in 0..{NUM_RANKS}")
    return classify_all(size, jobs).with_gates(g)


def triples_coverage(jobs: int = 1) -> dict[tuple[int, int, int], bool]:
    """For each 3-subset of ranks, whether some 13-tile hand has exactly it as gates."""
    seen = {
        tuple(sorted(r.winning)) for r in classify_all(13, jobs).records if r.gates == 3
    }
    return {t: t in seen for t in itertools.combinations(RANKS, 3)}

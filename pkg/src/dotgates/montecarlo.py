"""Seeded Monte Carlo check of the exact gate and winning probabilities.

Each trial draws ``size`` distinct physical tiles from the 36-tile pool
(tile index t has rank t // 4 + 1).  Trials are processed in fixed blocks of
``BLOCK`` draws; block b uses ``PCG64(SeedSequence(seed, spawn_key=(b,)))``,
so the result is the same whichever worker handles which block.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from dotgates.combinatorics import binomial, draw_ways
from dotgates.decomposition import MeldSolver
from dotgates.enumeration import iter_counts
from dotgates.gates import classify_all
from dotgates.tiles import MAX_COPIES, NUM_RANKS, POOL_SIZE, Hand

BLOCK = 65536
RNG_NAME = "numpy PCG64, SeedSequence(seed, spawn_key=(block,)), block=65536"
MIN_EXPECTED = 10

_PLACE = 5 ** np.arange(NUM_RANKS - 1, -1, -1, dtype=np.int64)
_TILE_PLACE = np.repeat(_PLACE, MAX_COPIES)  # place value of each physical tile


@dataclass(frozen=True)
class McConfig:
    size: int
    trials: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not 1 <= self.size <= POOL_SIZE or self.size % 3 == 0:
            raise ValueError(f"size must be 3k+1 (gates) or 3k+2 (winning rate), got {self.size}")

    @property
    def mode(self) -> str:
        return "gates" if self.size % 3 == 1 else "winning"


@dataclass(frozen=True)
class McClass:
    label: str
    count: int
    frequency: float
    exact: Fraction
    stderr: float
    z: float | None  # None when the expected count is below MIN_EXPECTED

    @property
    def flagged(self) -> bool:
        return self.z is None


@dataclass(frozen=True)
class McReport:
    config: McConfig
    classes: tuple[McClass, ...]

    @property
    def max_abs_z(self) -> float:
        zs = [abs(c.z) for c in self.classes if c.z is not None]
        return max(zs) if zs else 0.0


@lru_cache(maxsize=4)
def _label_table(size: int) -> tuple[np.ndarray, tuple[str, ...], tuple[Fraction, ...]]:
    """Class index per canonical key, class labels, and exact class probabilities."""
    table = np.full(5**NUM_RANKS, -1, dtype=np.int8)
    if size % 3 == 1:
        cl = classify_all(size)
        for rec in cl.records:
            table[int(np.dot(rec.hand.counts, _PLACE))] = rec.gates
        labels = tuple(f"{g}-gates" for g in range(NUM_RANKS + 1))
        exact = tuple(cl.histogram.probabilities)
    else:
        solver = MeldSolver()
        win_ways = 0
        for c in iter_counts(size):
            won = solver.wins(c)
            table[int(np.dot(c, _PLACE))] = int(won)
            if won:
                win_ways += draw_ways(Hand._trusted(c))
        p = Fraction(win_ways, binomial(POOL_SIZE, size))
        labels = ("not-winning", "winning")
        exact = (1 - p, p)
    return table, labels, exact


def sample_keys(size: int, n: int, seed: int, block: int) -> np.ndarray:
    """Canonical keys of ``n`` random draws for one block."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))
    picks = rng.random((n, POOL_SIZE)).argpartition(size - 1, axis=1)[:, :size]
    return _TILE_PLACE[picks].sum(axis=1)


def _count_block(size: int, n: int, seed: int, block: int) -> np.ndarray:
    table, labels, _ = _label_table(size)
    classes = table[sample_keys(size, n, seed, block)]
    if (classes < 0).any():
        raise AssertionError("sampled a pattern missing from the class table")
    return np.bincount(classes, minlength=len(labels))


def sample_gate_distribution(cfg: McConfig, jobs: int = 1) -> McReport:
    blocks = [(b, min(BLOCK, cfg.trials - b * BLOCK)) for b in range(math.ceil(cfg.trials / BLOCK))]
    _, labels, exact = _label_table(cfg.size)
    if jobs > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_count_block, cfg.size, n, cfg.seed, b) for b, n in blocks]
            parts = [f.result() for f in futures]
    else:
        parts = [_count_block(cfg.size, n, cfg.seed, b) for b, n in blocks]
    counts = np.sum(parts, axis=0)

    n = cfg.trials
    classes = []
    for label, k, p in zip(labels, counts.tolist(), exact):
        freq = k / n
        pf = float(p)
        se = math.sqrt(pf * (1 - pf) / n)
        z = None if n * pf < MIN_EXPECTED or se == 0 else (freq - pf) / se
        classes.append(McClass(label, k, freq, p, se, z))
    return McReport(cfg, tuple(classes))

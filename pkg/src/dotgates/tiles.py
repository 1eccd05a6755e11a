"""Hand model for the 36 dot tiles.

A hand is stored as a count vector ``(n_1, ..., n_9)`` where ``n_j`` is the
number of copies of the j-dot tile, ``0 <= n_j <= 4``.  Two text forms are
accepted:

    digits   "1112345678999"       one digit per tile, any order
    counts   "3,1,1,1,1,1,1,1,3"   the nine multiplicities

``format_hand`` always emits the sorted digit form.
"""

from __future__ import annotations

from dataclasses import dataclass

NUM_RANKS = 9
MAX_COPIES = 4
POOL_SIZE = NUM_RANKS * MAX_COPIES

# base-5 place values, rank 1 most significant
_PLACE = tuple(5 ** (NUM_RANKS - 1 - i) for i in range(NUM_RANKS))


class HandError(ValueError):
    """Raised for malformed hand text or impossible count vectors."""


@dataclass(frozen=True, slots=True, order=True)
class Hand:
    """Immutable multiset of dot tiles.

    ``counts[j - 1]`` holds the copies of rank ``j``.  Ordering compares the
    count tuples lexicographically, which agrees with ``canonical_key``.
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        if len(counts) != NUM_RANKS:
            raise HandError(f"expected {NUM_RANKS} counts, got {len(counts)}")
        for rank, n in enumerate(counts, start=1):
            if not isinstance(n, int) or isinstance(n, bool):
                raise HandError(f"count for rank {rank} is not an integer: {n!r}")
            if not 0 <= n <= MAX_COPIES:
                raise HandError(f"count for rank {rank} must be in 0..{MAX_COPIES}, got {n}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def _trusted(cls, counts: tuple[int, ...]) -> Hand:
        # skips validation; callers guarantee a valid 9-tuple
        h = object.__new__(cls)
        object.__setattr__(h, "counts", counts)
        return h

    @classmethod
    def empty(cls) -> Hand:
        return cls._trusted((0,) * NUM_RANKS)

    @property
    def size(self) -> int:
        return sum(self.counts)

    def __getitem__(self, rank: int) -> int:
        """Copies of ``rank`` (1-based)."""
        if not 1 <= rank <= NUM_RANKS:
            raise IndexError(f"rank {rank} out of range 1..{NUM_RANKS}")
        return self.counts[rank - 1]

    def add(self, rank: int, copies: int = 1) -> Hand:
        """Return a new hand with ``copies`` more tiles of ``rank``.

        Negative ``copies`` removes tiles.  Raises HandError if the result
        would leave 0..4.
        """
        c = list(self.counts)
        c[rank - 1] += copies
        return Hand(tuple(c))

    def __str__(self) -> str:
        return format_hand(self)


def parse_hand(text: str) -> Hand:
    """Parse digit-string or comma-separated count notation."""
    text = text.strip()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != NUM_RANKS:
            raise HandError(f"count notation needs {NUM_RANKS} entries, got {len(parts)}")
        try:
            counts = tuple(int(p) for p in parts)
        except ValueError:
            raise HandError(f"non-integer count in {text!r}") from None
        return Hand(counts)

    counts = [0] * NUM_RANKS
    for ch in text:
        if ch.isspace():
            continue
        if ch not in "123456789":
            raise HandError(f"invalid tile {ch!r}; ranks are 1-9")
        counts[int(ch) - 1] += 1
    for rank, n in enumerate(counts, start=1):
        if n > MAX_COPIES:
            raise HandError(f"rank {rank} occurs {n} times; only {MAX_COPIES} copies exist")
    return Hand._trusted(tuple(counts))


def format_hand(h: Hand) -> str:
    return "".join(str(rank) * n for rank, n in enumerate(h.counts, start=1))


def format_counts(h: Hand) -> str:
    return ",".join(map(str, h.counts))


def dual(h: Hand) -> Hand:
    """Reflect ranks j -> 10 - j."""
    return Hand._trusted(h.counts[::-1])


def canonical_key(h: Hand | tuple[int, ...]) -> int:
    counts = h.counts if isinstance(h, Hand) else h
    return sum(n * p for n, p in zip(counts, _PLACE))


def from_key(key: int) -> Hand:
    """Inverse of ``canonical_key``."""
    if not 0 <= key < 5**NUM_RANKS:
        raise HandError(f"key {key} out of range")
    digits = []
    for _ in range(NUM_RANKS):
        key, d = divmod(key, 5)
        digits.append(d)
    return Hand._trusted(tuple(reversed(digits)))

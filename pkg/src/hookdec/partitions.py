"""Integer partitions, skew shapes and bipartitions.

Partitions are immutable tuples of positive parts with no trailing zeros;
the empty partition is ``Partition()``.  Cell-wise comparisons read missing
parts as 0, following Young-diagram semantics.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidPartition, NonDistinctParts, SizeMismatch

__all__ = [
    "Partition",
    "FrobeniusCoordinates",
    "SkewShape",
    "Bipartition",
    "conjugate",
    "contains",
    "intersection",
    "distance",
    "distance_l1",
    "double_rows",
    "double_diagonal",
    "oplus",
    "enumerate_partitions",
    "enumerate_bipartitions",
    "num_standard_tableaux",
    "inner_corners",
    "rectangle",
    "hook",
    "parse_partition",
    "format_partition",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros in the input are dropped, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  Any other zero or an increase raises
    :class:`InvalidPartition`.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool):
                raise InvalidPartition(f"part {p!r} is not an integer")
            if p <= 0:
                raise InvalidPartition(f"parts must be positive, got {tuple(parts)}")
            if i and p > parts[i - 1]:
                raise InvalidPartition(f"parts must be weakly decreasing, got {tuple(parts)}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Zero-indexed part, reading missing parts as 0."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def has_distinct_parts(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff the diagram of ``mu`` lies inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def intersection(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    return Partition(min(a, b) for a, b in zip(lam, mu))


def distance(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of cells of ``lam`` outside ``mu``, for partitions of equal size."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"distance needs equal sizes, got {lam.size} and {mu.size}")
    return lam.size - intersection(lam, mu).size


def distance_l1(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Half the L1 distance between part vectors; agrees with :func:`distance`."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"distance needs equal sizes, got {lam.size} and {mu.size}")
    k = max(len(lam), len(mu))
    total = sum(abs(lam.part(i) - mu.part(i)) for i in range(k))
    return total // 2


def double_rows(lam: Sequence[int]) -> Partition:
    """Double every part: ``(2, 1) -> (4, 2)``."""
    return Partition(2 * p for p in lam)


def double_diagonal(lam: Sequence[int]) -> Partition:
    """Partition with Frobenius arms ``lam_i`` and legs ``lam_i - 1``.

    Only defined when the parts of ``lam`` are distinct.
    """
    lam = Partition(lam)
    if not lam.has_distinct_parts():
        raise NonDistinctParts(f"{tuple(lam)} has repeated parts")
    return FrobeniusCoordinates(tuple(lam), tuple(p - 1 for p in lam)).to_partition()


@dataclass(frozen=True)
class FrobeniusCoordinates:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.arms) != len(self.legs):
            raise InvalidPartition("arms and legs must have the same length")
        for seq in (self.arms, self.legs):
            if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise InvalidPartition(f"{seq} is not strictly decreasing and non-negative")

    @classmethod
    def from_partition(cls, lam: Sequence[int]) -> "FrobeniusCoordinates":
        lam = Partition(lam)
        conj = conjugate(lam)
        d = sum(1 for i, p in enumerate(lam) if p >= i + 1)
        return cls(
            tuple(lam[i] - i - 1 for i in range(d)),
            tuple(conj[i] - i - 1 for i in range(d)),
        )

    @property
    def rank(self) -> int:
        return len(self.arms)

    def to_partition(self) -> Partition:
        d = self.rank
        rows = [self.arms[i] + i + 1 for i in range(d)]
        # below the diagonal, row i holds one cell per column whose leg reaches it
        depth = self.legs[0] + 1 if d else 0
        for i in range(d, depth):
            rows.append(sum(1 for j in range(d) if self.legs[j] + j >= i))
        return Partition(rows)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise InvalidPartition(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i, row in enumerate(self.outer)
            for j in range(self.inner.part(i), row)
        ]

    def __str__(self) -> str:
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


class Bipartition(NamedTuple):
    first: Partition
    second: Partition

    @property
    def size(self) -> int:
        return sum(self.first) + sum(self.second)


def oplus(lam: Sequence[int], mu: Sequence[int]) -> SkewShape:
    """Skew shape with ``lam`` above-right of ``mu``, sharing no row or column."""
    lam, mu = Partition(lam), Partition(mu)
    shift = mu.part(0)
    outer = Partition([p + shift for p in lam] + list(mu))
    inner = Partition([shift] * len(lam))
    return SkewShape(outer, inner)


def _partitions_bounded(n: int, largest: int, max_length: int | None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    rest = None if max_length is None else max_length - 1
    for first in range(min(n, largest), 0, -1):
        for tail in _partitions_bounded(n - first, first, rest):
            yield (first,) + tail


@lru_cache(maxsize=None)
def _enumerate(n: int, max_length: int | None) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n, max_length))


def enumerate_partitions(n: int, max_length: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` with at most ``max_length`` parts.

    Order is decreasing lexicographic: ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _enumerate(n, max_length)


def enumerate_bipartitions(n: int) -> Iterator[Bipartition]:
    """Bipartitions of ``n`` ordered by size of the second component, then lexicographically."""
    for j in range(n + 1):
        for mu in enumerate_partitions(n - j):
            for nu in enumerate_partitions(j):
                yield Bipartition(mu, nu)


@lru_cache(maxsize=None)
def num_standard_tableaux(lam: Partition) -> int:
    """Hook-length formula; ``f^() = 1``."""
    lam = Partition(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, j in lam.cells():
        hooks *= lam[i] - j + conj[j] - i - 1
    return factorial(lam.size) // hooks


def inner_corners(lam: Sequence[int]) -> int:
    return len(set(lam))


def rectangle(k: int, m: int) -> Partition:
    """The partition ``(k^m)``: ``m`` parts equal to ``k``."""
    return Partition([k] * m)


def hook(n: int, t: int) -> Partition:
    """The hook ``(n - t, 1^t)``."""
    return Partition([n - t] + [1] * t)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; ``"-"`` is the empty partition.  Input must already be sorted."""
    text = text.strip()
    if text == "-":
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidPartition(f"cannot parse partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise InvalidPartition(f"parts must be positive in {text!r}")
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam)) if len(lam) else "-"

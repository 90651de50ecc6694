"""Symmetric group characters via the Murnaghan-Nakayama rule.

Values are exact integers.  Inner products return ``int`` when integral and
``Fraction`` otherwise.
"""
from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import ResourceLimit, SizeMismatch
from .partitions import (
    Partition,
    SkewShape,
    contains,
    enumerate_partitions,
    hook,
)

__all__ = [
    "DEFAULT_TABLE_CAP",
    "ClassFunction",
    "CharacterTable",
    "z_factor",
    "class_size",
    "mn_value",
    "character",
    "character_table",
    "install_table",
    "inner_product",
    "kronecker",
    "kronecker_expansion",
    "product_height",
    "product_width",
    "diagonal_class",
    "diagonal_restriction_value",
]

DEFAULT_TABLE_CAP = 8


def z_factor(rho: Sequence[int]) -> int:
    """Order of the centralizer of a permutation with cycle type ``rho``."""
    counts = Counter(rho)
    return prod(i**m * factorial(m) for i, m in counts.items())


def class_size(rho: Sequence[int]) -> int:
    return factorial(sum(rho)) // z_factor(rho)


def _remove_rim_hooks(outer: Partition, r: int):
    """Yield ``(smaller, height)`` for every rim hook of size ``r`` removable from ``outer``.

    Works on beta-numbers: a rim hook of size r is a bead moved from b to b - r.
    """
    L = len(outer)
    beads = [outer[i] + L - 1 - i for i in range(L)]
    occupied = set(beads)
    for idx, b in enumerate(beads):
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < b)
        moved = sorted((target if c == b else c for c in beads), reverse=True)
        yield Partition(moved[i] - (L - 1 - i) for i in range(L)), height


@lru_cache(maxsize=None)
def _mn(outer: Partition, inner: Partition, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if outer == inner else 0
    r, rest = rho[0], rho[1:]
    total = 0
    for smaller, height in _remove_rim_hooks(outer, r):
        if contains(smaller, inner):
            total += (-1) ** height * _mn(smaller, inner, rest)
    return total


def mn_value(shape: SkewShape | Sequence[int], rho: Sequence[int]) -> int:
    """Character of the (skew) shape at cycle type ``rho``.

    Border strips are stripped from the outer boundary, largest cycle first.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(Partition(shape))
    rho = Partition(sorted(rho, reverse=True))
    if shape.size != rho.size:
        raise SizeMismatch(f"shape has {shape.size} cells but cycle type has size {rho.size}")
    return _mn(shape.outer, shape.inner, tuple(rho))


@dataclass(frozen=True)
class ClassFunction:
    """Integer (or rational) values on the conjugacy classes of ``S_n``.

    ``values[k]`` is the value at ``enumerate_partitions(n)[k]``.
    """

    n: int
    values: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != len(enumerate_partitions(self.n)):
            raise SizeMismatch(f"expected {len(enumerate_partitions(self.n))} values for n={self.n}")

    @property
    def classes(self) -> tuple[Partition, ...]:
        return enumerate_partitions(self.n)

    def at(self, rho: Sequence[int]) -> int:
        return self.values[self.classes.index(Partition(rho))]

    def _check(self, other: "ClassFunction") -> None:
        if other.n != self.n:
            raise SizeMismatch(f"class functions of S_{self.n} and S_{other.n}")

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.n, (a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.n, (a * other for a in self.values))

    __rmul__ = __mul__

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.n, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.n, (a - b for a, b in zip(self.values, other.values)))

    @property
    def degree(self):
        """Value at the identity class."""
        return self.values[-1]


_rows: dict[Partition, ClassFunction] = {}
_rows_lock = threading.Lock()


def character(lam: Sequence[int]) -> ClassFunction:
    """The irreducible character ``chi^lam`` as a class function."""
    lam = Partition(lam)
    row = _rows.get(lam)
    if row is None:
        row = ClassFunction(
            lam.size, (_mn(lam, Partition(), tuple(rho)) for rho in enumerate_partitions(lam.size))
        )
        with _rows_lock:
            row = _rows.setdefault(lam, row)
    return row


def install_table(table: "CharacterTable") -> None:
    """Seed the row cache with a table loaded from elsewhere (e.g. disk)."""
    with _rows_lock:
        for lam, row in zip(table.partitions, table.rows):
            _rows.setdefault(lam, row)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    rows: tuple[ClassFunction, ...]

    @property
    def classes(self) -> tuple[Partition, ...]:
        return self.partitions

    def __getitem__(self, lam: Sequence[int]) -> ClassFunction:
        return self.rows[self.partitions.index(Partition(lam))]

    def value(self, lam: Sequence[int], rho: Sequence[int]) -> int:
        return self[lam].at(rho)


def character_table(n: int, cap: int | None = DEFAULT_TABLE_CAP) -> CharacterTable:
    """All irreducible characters of ``S_n``; rows and columns in enumeration order."""
    if n < 1:
        raise ValueError("n must be positive")
    if cap is not None and n > cap:
        raise ResourceLimit(f"character table of S_{n} exceeds cap n <= {cap}")
    return _table(n)


@lru_cache(maxsize=None)
def _table(n: int) -> CharacterTable:
    parts = enumerate_partitions(n)
    return CharacterTable(n, parts, tuple(character(lam) for lam in parts))


def inner_product(phi: ClassFunction, psi: ClassFunction) -> int | Fraction:
    if phi.n != psi.n:
        raise SizeMismatch(f"class functions of S_{phi.n} and S_{psi.n}")
    total = sum(
        Fraction(a * b, z_factor(rho))
        for rho, a, b in zip(phi.classes, phi.values, psi.values)
    )
    return total.numerator if total.denominator == 1 else total


def _require_same_size(*parts: Partition) -> int:
    sizes = {p.size for p in parts}
    if len(sizes) != 1:
        raise SizeMismatch(f"partitions of different sizes {sorted(sizes)}")
    return sizes.pop()


def kronecker(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Kronecker coefficient: multiplicity of the trivial character in the triple product."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _require_same_size(lam, mu, nu)
    return inner_product(character(lam) * character(mu), character(nu))


@lru_cache(maxsize=None)
def kronecker_expansion(lam: Partition, mu: Partition) -> Mapping[Partition, int]:
    """Nonzero ``nu -> kronecker(lam, mu, nu)``."""
    lam, mu = Partition(lam), Partition(mu)
    n = _require_same_size(lam, mu)
    prod_char = character(lam) * character(mu)
    out = {}
    for nu in enumerate_partitions(n):
        c = inner_product(prod_char, character(nu))
        if c:
            out[nu] = c
    return MappingProxyType(out)


def product_height(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Largest length of a constituent of the inner tensor product."""
    return max(len(nu) for nu in kronecker_expansion(Partition(lam), Partition(mu)))


def product_width(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Largest first part of a constituent of the inner tensor product."""
    return max(nu[0] for nu in kronecker_expansion(Partition(lam), Partition(mu)))


def diagonal_class(rho: Sequence[int]) -> Partition:
    """Cycle type in ``S_2n`` of ``(pi, pi)`` when ``pi`` has cycle type ``rho``."""
    return Partition(sorted(list(rho) * 2, reverse=True))


def diagonal_restriction_value(lam: Sequence[int], rho: Sequence[int]) -> int:
    """``chi^lam`` at the diagonal image of the class ``rho`` of ``S_n``."""
    lam, rho = Partition(lam), Partition(sorted(rho, reverse=True))
    if lam.size != 2 * rho.size:
        raise SizeMismatch(f"{tuple(lam)} is not a partition of 2*{rho.size}")
    return _mn(lam, Partition(), tuple(diagonal_class(rho)))


def hook_character(n: int, t: int) -> ClassFunction:
    return character(hook(n, t))

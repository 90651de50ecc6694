"""Littlewood-Richardson coefficients by tableau enumeration.

Convention: an LR tableau of skew shape ``outer/inner`` is a semistandard
filling (rows weakly increase left to right, columns strictly increase top
to bottom) whose reverse reading word, read right to left along rows from
the top row down, is a lattice word.  The number of such tableaux with
content ``nu`` is ``c^outer_{inner, nu}``.

All results are cached with :func:`functools.lru_cache`; the cache stores
fully built immutable values only, so concurrent readers never see a
partial entry.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence

from .errors import IndexOutOfRange, OddSize, SizeMismatch
from .partitions import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    double_diagonal,
    double_rows,
    enumerate_partitions,
    oplus,
)

__all__ = [
    "SchurExpansion",
    "skew_schur_expansion",
    "schur_product",
    "lr_coefficient",
    "extended_lr",
    "sigma_rect",
    "sigma_square",
    "sigma_square_graded",
    "distinct_part_partitions",
]


@dataclass(frozen=True)
class SchurExpansion:
    """A Schur-positive symmetric function ``sum(coeff * s_lambda)``.

    Zero coefficients are never stored; indexing a missing key yields 0.
    """

    degree: int
    entries: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {Partition(k): v for k, v in self.entries.items() if v}
        for k, v in clean.items():
            if k.size != self.degree:
                raise SizeMismatch(f"{tuple(k)} has size {k.size}, expected {self.degree}")
            if v < 0:
                raise ValueError(f"negative coefficient {v} at {tuple(k)}")
        object.__setattr__(self, "entries", MappingProxyType(clean))

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self.entries.get(Partition(lam), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self.entries, reverse=True))

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> list[tuple[Partition, int]]:
        return [(k, self.entries[k]) for k in self]

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SchurExpansion):
            return self.degree == other.degree and dict(self.entries) == dict(other.entries)
        if isinstance(other, Mapping):
            return dict(self.entries) == {Partition(k): v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.entries.items())))


def _lr_fillings(outer: Partition, inner: Partition) -> Counter:
    """Count LR tableaux of shape ``outer/inner`` by content."""
    rows = [(inner.part(i), outer[i]) for i in range(len(outer))]
    cells = [(i, j) for i, (lo, hi) in enumerate(rows) for j in range(hi - 1, lo - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    content = [0] * (len(outer) + 1)  # content[v] for v = 1..len(outer)
    result: Counter = Counter()

    def place(k: int) -> None:
        if k == len(cells):
            result[Partition(content[1:])] += 1
            return
        i, j = cells[k]
        # row weakly increasing: bounded above by the cell to the right
        upper = filling.get((i, j + 1), len(outer))
        # column strict: bounded below by the cell above
        lower = filling.get((i - 1, j), 0) + 1
        for v in range(lower, upper + 1):
            if v > 1 and content[v] + 1 > content[v - 1]:
                continue
            content[v] += 1
            filling[(i, j)] = v
            place(k + 1)
            del filling[(i, j)]
            content[v] -= 1

    place(0)
    return result


@lru_cache(maxsize=None)
def _skew_expansion(outer: Partition, inner: Partition) -> SchurExpansion:
    return SchurExpansion(outer.size - inner.size, _lr_fillings(outer, inner))


def skew_schur_expansion(shape: SkewShape) -> SchurExpansion:
    """Schur expansion of the skew Schur function ``s_{outer/inner}``."""
    return _skew_expansion(shape.outer, shape.inner)


def schur_product(mu: Sequence[int], nu: Sequence[int]) -> SchurExpansion:
    """``s_mu * s_nu``, as the skew Schur function of the disjoint union shape."""
    return skew_schur_expansion(oplus(mu, nu))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^lam_{mu,nu}``; 0 whenever sizes do not add up or ``mu`` is not inside ``lam``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.size + nu.size != lam.size or not contains(lam, mu) or not contains(lam, nu):
        return 0
    return _skew_expansion(lam, mu)[nu]


@lru_cache(maxsize=None)
def _product_expansion(factors: tuple[Partition, ...]) -> SchurExpansion:
    """Expansion of ``s_f1 * s_f2 * ...``, multiplied left to right."""
    if not factors:
        return SchurExpansion(0, {Partition(): 1})
    if len(factors) == 1:
        return SchurExpansion(factors[0].size, {factors[0]: 1})
    head = _product_expansion(factors[:-1])
    last = factors[-1]
    acc: Counter = Counter()
    for lam, c in head.entries.items():
        for nu, d in schur_product(lam, last).entries.items():
            acc[nu] += c * d
    return SchurExpansion(head.degree + last.size, acc)


def extended_lr(
    lam: Sequence[int],
    alpha: Sequence[int],
    beta: Sequence[int],
    gamma: Sequence[int],
    delta: Sequence[int],
) -> int:
    """Multiplicity of ``s_lam`` in ``s_alpha s_beta s_gamma s_delta``."""
    lam = Partition(lam)
    factors = tuple(Partition(p) for p in (alpha, beta, gamma, delta))
    if sum(f.size for f in factors) != lam.size:
        return 0
    return _product_expansion(factors)[lam]


def _check_index(i: int, n: int, name: str = "i") -> None:
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"{name}={i} outside 0..{n}")


def sigma_rect(lam: Sequence[int], mu: Sequence[int], i: int) -> int:
    """Sum over ``alpha |- n-i``, ``beta |- i`` of ``c^lam_{alpha,beta} c^mu_{alpha,beta'}``."""
    lam, mu = Partition(lam), Partition(mu)
    n = lam.size
    if mu.size != n:
        raise SizeMismatch(f"sizes {n} and {mu.size} differ")
    _check_index(i, n)
    total = 0
    for alpha in enumerate_partitions(n - i):
        if not (contains(lam, alpha) and contains(mu, alpha)):
            continue
        left = _skew_expansion(lam, alpha)
        right = _skew_expansion(mu, alpha)
        for beta, c in left.entries.items():
            total += c * right[conjugate(beta)]
    return total


@lru_cache(maxsize=None)
def distinct_part_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(p for p in enumerate_partitions(n) if p.has_distinct_parts())


@lru_cache(maxsize=None)
def _square_sigma_table(n: int) -> Mapping[tuple[int, int], SchurExpansion]:
    """For each ``(i, j)``, the sum of ``s_{2.a} s_{(2.b)'} s_{2*g} s_{(2*d)'}``.

    ``i = |g| + |d|`` counts the sign-side sizes and ``j = |b| + |d|`` the
    skew-symmetric factors, with ``|a| + |b| + |g| + |d| = n`` and ``g, d``
    having distinct parts.
    """
    table: dict[tuple[int, int], Counter] = {}
    for i in range(n + 1):
        for sa in range(n - i + 1):
            sb = n - i - sa
            for sg in range(i + 1):
                sd = i - sg
                j = sb + sd
                acc = table.setdefault((i, j), Counter())
                for a in enumerate_partitions(sa):
                    for b in enumerate_partitions(sb):
                        for g in distinct_part_partitions(sg):
                            for d in distinct_part_partitions(sd):
                                factors = (
                                    double_rows(a),
                                    conjugate(double_rows(b)),
                                    double_diagonal(g),
                                    conjugate(double_diagonal(d)),
                                )
                                for lam, c in _product_expansion(factors).entries.items():
                                    acc[lam] += c
    return MappingProxyType({key: SchurExpansion(2 * n, acc) for key, acc in table.items()})


def _half_size(lam: Partition) -> int:
    if lam.size % 2:
        raise OddSize(f"{tuple(lam)} has odd size {lam.size}")
    return lam.size // 2


def sigma_square(lam: Sequence[int], i: int) -> int:
    """Square-matrix sigma sum at sign-side size ``i`` for ``lam |- 2n``."""
    lam = Partition(lam)
    n = _half_size(lam)
    _check_index(i, n)
    table = _square_sigma_table(n)
    return sum(table[(i, j)][lam] for j in range(n + 1) if (i, j) in table)


def sigma_square_graded(lam: Sequence[int], i: int, j: int) -> int:
    """Refinement of :func:`sigma_square` by the number ``j`` of skew-symmetric factors."""
    lam = Partition(lam)
    n = _half_size(lam)
    _check_index(i, n)
    _check_index(j, n, "j")
    expansion = _square_sigma_table(n).get((i, j))
    return expansion[lam] if expansion is not None else 0

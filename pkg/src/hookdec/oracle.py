"""Brute-force recomputation of the theorem-level multiplicities.

Everything here is computed from symmetric group character tables and
explicit enumeration.  This module must not import :mod:`hookdec.lr`,
:mod:`hookdec.hooks` or :mod:`hookdec.bn`; ``tests/test_oracle.py`` enforces
that.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .characters import (
    ClassFunction,
    character,
    character_table,
    diagonal_restriction_value,
    inner_product,
    mn_value,
    z_factor,
)
from .errors import IndexOutOfRange, OddSize, ResourceLimit, SizeMismatch
from .partitions import Partition, enumerate_partitions, hook

__all__ = [
    "RECT_CAP",
    "SQUARE_CAP",
    "oracle_lr_coefficient",
    "oracle_rect_multiplicity",
    "oracle_sym_square",
    "oracle_hook_square",
    "oracle_matching_character",
    "perfect_matchings",
    "class_representative",
    "fixed_matchings",
    "verify_d0a",
]

RECT_CAP = 6
SQUARE_CAP = 4


def _cap(n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise ResourceLimit(f"oracle n={n} exceeds cap {cap}")


def oracle_rect_multiplicity(lam: Sequence[int], mu: Sequence[int], t: int, cap: int | None = RECT_CAP) -> int:
    """``C(n-1,t)`` times the Kronecker coefficient against the hook ``(n-t,1^t)``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"sizes {lam.size} and {mu.size} differ")
    n = lam.size
    if not 0 <= t <= n - 1:
        raise IndexOutOfRange(f"t={t} outside 0..{n - 1}")
    _cap(n, cap)
    table = character_table(n, cap=None)
    return comb(n - 1, t) * inner_product(table[lam] * table[mu], table[hook(n, t)])


def oracle_lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``<chi^lam restricted to S_a x S_b, chi^mu x chi^nu>`` summed over class pairs."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.size + nu.size != lam.size:
        return 0
    total = Fraction(0)
    for r1 in enumerate_partitions(mu.size):
        for r2 in enumerate_partitions(nu.size):
            joint = sorted(tuple(r1) + tuple(r2), reverse=True)
            total += Fraction(
                mn_value(lam, joint) * mn_value(mu, r1) * mn_value(nu, r2),
                z_factor(r1) * z_factor(r2),
            )
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral coefficient {total}")
    return int(total)


def _diagonal_pairing(lam: Partition, weight: ClassFunction) -> int:
    """``<weight, chi^lam restricted to the diagonal S_n>`` by class-sum averaging."""
    total = sum(
        Fraction(w * diagonal_restriction_value(lam, rho), z_factor(rho))
        for rho, w in zip(weight.classes, weight.values)
    )
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"non-integral multiplicity {total} for {tuple(lam)}")
    return int(total)


def _half(lam: Partition, cap: int | None) -> int:
    if lam.size % 2:
        raise OddSize(f"{tuple(lam)} has odd size {lam.size}")
    n = lam.size // 2
    _cap(n, cap)
    return n


def oracle_sym_square(lam: Sequence[int], cap: int | None = SQUARE_CAP) -> int:
    """Multiplicity of the trivial character of the diagonal ``S_n`` in ``chi^lam``."""
    lam = Partition(lam)
    n = _half(lam, cap)
    return _diagonal_pairing(lam, character(Partition([n])))


def oracle_hook_square(lam: Sequence[int], t: int, cap: int | None = SQUARE_CAP) -> int:
    lam = Partition(lam)
    n = _half(lam, cap)
    if not 0 <= t <= n - 1:
        raise IndexOutOfRange(f"t={t} outside 0..{n - 1}")
    return comb(n - 1, t) * _diagonal_pairing(lam, character(hook(n, t)))


def perfect_matchings(points: Sequence[int]) -> Iterator[frozenset]:
    """All perfect matchings of ``points`` as frozensets of 2-element frozensets."""
    points = list(points)
    if not points:
        yield frozenset()
        return
    first, rest = points[0], points[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for m in perfect_matchings(remaining):
            yield m | {frozenset((first, partner))}


def class_representative(rho: Sequence[int], reverse: bool = False) -> tuple[int, ...]:
    """A permutation (as an image tuple) of cycle type ``rho``.

    Cycles are laid out left to right in decreasing length, each cycle
    sending ``a -> a+1 -> ... -> a``.  ``reverse=True`` orients every cycle
    the other way, giving a second representative of the same class.
    """
    perm = []
    start = 0
    for length in sorted(rho, reverse=True):
        block = list(range(start, start + length))
        if reverse:
            block = block[-1:] + block[:-1]
        else:
            block = block[1:] + block[:1]
        perm.extend(block)
        start += length
    return tuple(perm)


def fixed_matchings(perm: Sequence[int], matchings: Sequence[frozenset]) -> int:
    return sum(
        1
        for m in matchings
        if all(frozenset(perm[x] for x in pair) in m for pair in m)
    )


def oracle_matching_character(n: int, cap: int | None = SQUARE_CAP) -> ClassFunction:
    """Permutation character of ``S_2n`` on perfect matchings of ``2n`` points."""
    if n < 1:
        raise ValueError("n must be positive")
    _cap(n, cap)
    matchings = list(perfect_matchings(range(2 * n)))
    return ClassFunction(
        2 * n,
        (fixed_matchings(class_representative(rho), matchings) for rho in enumerate_partitions(2 * n)),
    )


def verify_d0a(n: int, cap: int | None = SQUARE_CAP) -> bool:
    """The matching character is multiplicity-free with constituents ``2.lam``, ``lam |- n``."""
    chi = oracle_matching_character(n, cap)
    doubled = {Partition(2 * p for p in lam) for lam in enumerate_partitions(n)}
    return all(
        inner_product(chi, character(mu)) == (1 if mu in doubled else 0)
        for mu in enumerate_partitions(2 * n)
    )

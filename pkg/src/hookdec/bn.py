"""Hyperoctahedral group quantities used by the square-matrix formulas.

Irreducible characters of ``B_n`` are indexed by bipartitions ``(mu, nu)``.
Only dimensions, the value at a single sign change, the eigenvalue of the
central sum of sign changes, and the restriction to ``S_n`` are provided.
"""
from __future__ import annotations

from math import comb, factorial

from .errors import ResourceLimit
from .lr import SchurExpansion, skew_schur_expansion
from .partitions import (
    Bipartition,
    Partition,
    conjugate,
    double_diagonal,
    double_rows,
    enumerate_bipartitions,
    enumerate_partitions,
    num_standard_tableaux,
    oplus,
)

__all__ = [
    "DEFAULT_CAP",
    "bipartition_dimension",
    "sigma1_value",
    "central_eigenvalue",
    "restrict_to_sn",
    "check_d2",
    "check_d0_dimensions",
]

DEFAULT_CAP = 8


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _as_bipartition(b) -> Bipartition:
    first, second = b
    return Bipartition(Partition(first), Partition(second))


def bipartition_dimension(b) -> int:
    mu, nu = _as_bipartition(b)
    n = mu.size + nu.size
    return comb(n, nu.size) * num_standard_tableaux(mu) * num_standard_tableaux(nu)


def sigma1_value(b) -> int:
    """Character value at the signed permutation negating a single letter."""
    mu, nu = _as_bipartition(b)
    n = mu.size + nu.size
    if n < 1:
        raise ValueError("bipartition must have positive size")
    f = num_standard_tableaux(mu) * num_standard_tableaux(nu)
    return (_binom(n - 1, nu.size) - _binom(n - 1, nu.size - 1)) * f


def central_eigenvalue(b) -> int:
    """Scalar by which the sum of all single sign changes acts: ``n - 2|nu|``."""
    mu, nu = _as_bipartition(b)
    return mu.size - nu.size


def restrict_to_sn(b) -> SchurExpansion:
    """Decomposition of the restriction to ``S_n``, via the skew shape ``mu (+) nu``."""
    mu, nu = _as_bipartition(b)
    return skew_schur_expansion(oplus(mu, nu))


def _check_cap(n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise ResourceLimit(f"n={n} exceeds cap {cap}")


def check_d2(n: int, variant: str = "trivial", cap: int | None = DEFAULT_CAP) -> bool:
    """Induce the trivial (or sign) character of ``S_n`` to ``B_n`` and check its constituents.

    By reciprocity the multiplicity of ``(mu, nu)`` is the coefficient of the
    trivial (sign) Schur function in the restriction; it must be 1 exactly when
    both ``mu`` and ``nu`` are single rows (single columns) and 0 otherwise.
    """
    if variant not in ("trivial", "sign"):
        raise ValueError(f"unknown variant {variant!r}")
    _check_cap(n, cap)
    target = Partition([n]) if variant == "trivial" else Partition([1] * n)
    for mu, nu in enumerate_bipartitions(n):
        if variant == "trivial":
            expected = int(len(mu) <= 1 and len(nu) <= 1)
        else:
            expected = int(mu.part(0) <= 1 and nu.part(0) <= 1)
        if restrict_to_sn((mu, nu))[target] != expected:
            return False
    return True


def check_d0_dimensions(n: int, cap: int | None = DEFAULT_CAP) -> bool:
    """Degrees of the four inductions from ``B_n`` to ``S_2n`` all equal ``(2n)!/(2^n n!)``."""
    _check_cap(n, cap)
    expected = factorial(2 * n) // (2**n * factorial(n))
    f = num_standard_tableaux
    everything = enumerate_partitions(n)
    distinct = [lam for lam in everything if lam.has_distinct_parts()]
    sums = (
        sum(f(double_rows(lam)) for lam in everything),
        sum(f(conjugate(double_rows(lam))) for lam in everything),
        sum(f(double_diagonal(lam)) for lam in distinct),
        sum(f(conjugate(double_diagonal(lam))) for lam in distinct),
    )
    return all(s == expected for s in sums)

"""Multiplicities of irreducibles in hook components of matrix tensor powers.

Rectangular case: ``M_{k,m}^{(x)n}`` under ``GL_k x GL_m``, component of the
hook ``(n-t, 1^t)``.  Square case: ``M_k^{(x)n}`` under the two-sided
``GL_k`` action ``g.m.g^T``, optionally graded by the number ``j`` of
skew-symmetric tensor factors.

Every alternating sum has an equivalent suffix form.  Both are evaluated
and compared while :data:`CHECK_BOTH_FORMS` is true.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Mapping, Sequence

from .errors import IndexOutOfRange, OddSize, ResourceLimit, SizeMismatch
from .lr import lr_coefficient, sigma_rect, sigma_square, sigma_square_graded
from .partitions import (
    Partition,
    conjugate,
    distance,
    enumerate_partitions,
    inner_corners,
)

__all__ = [
    "CHECK_BOTH_FORMS",
    "DEFAULT_CAP",
    "MultiplicityTable",
    "FormMismatch",
    "hook_binomial",
    "mult_rect",
    "mult_rect_forms",
    "mult_rect_table",
    "mult_sym_square",
    "mult_sym_square_graded",
    "mult_hook_square",
    "mult_hook_square_forms",
    "mult_hook_square_graded",
    "mult_hook_square_graded_forms",
    "mult_square_table",
    "check_duality_rect",
    "check_duality_square",
    "check_distance_bounds",
    "corner_formula_check",
]

CHECK_BOTH_FORMS = True
DEFAULT_CAP = 8


class FormMismatch(AssertionError):
    """The prefix and suffix alternating sums disagree."""


@dataclass(frozen=True)
class MultiplicityTable:
    """Nonzero multiplicities keyed by a partition or a pair of partitions.

    ``context`` records the parameters (``kind``, ``n``, ``k``, ``m``, ``t``,
    and ``j`` when graded).  Keys are stored in enumeration order.
    """

    context: Mapping[str, object]
    entries: Mapping[object, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def items(self):
        return self.entries.items()


def hook_binomial(n: int, t: int) -> int:
    """Dimension of the Specht module of the hook ``(n-t, 1^t)``."""
    if n < 1 or not 0 <= t <= n - 1:
        raise IndexOutOfRange(f"t={t} outside 0..{n - 1}")
    return comb(n - 1, t)


def _alternating_forms(sigma: Callable[[int], int], n: int, t: int) -> tuple[int, int]:
    prefix = sum((-1) ** (t - i) * sigma(i) for i in range(t + 1))
    suffix = sum((-1) ** (i - t - 1) * sigma(i) for i in range(t + 1, n + 1))
    c = comb(n - 1, t)
    return c * prefix, c * suffix


def _agree(forms: tuple[int, int], what: str) -> int:
    prefix, suffix = forms
    if prefix != suffix:
        raise FormMismatch(f"{what}: prefix form {prefix} != suffix form {suffix}")
    return prefix


def _rect_args(lam, mu, t) -> tuple[Partition, Partition, int]:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"sizes {lam.size} and {mu.size} differ")
    n = lam.size
    if n < 1 or not 0 <= t <= n - 1:
        raise IndexOutOfRange(f"t={t} outside 0..{n - 1}")
    return lam, mu, n


def mult_rect_forms(lam: Sequence[int], mu: Sequence[int], t: int) -> tuple[int, int]:
    """Both alternating-sum expressions for :func:`mult_rect`."""
    lam, mu, n = _rect_args(lam, mu, t)
    return _alternating_forms(lambda i: sigma_rect(lam, mu, i), n, t)


def mult_rect(lam: Sequence[int], mu: Sequence[int], t: int) -> int:
    """Multiplicity of ``V^lam_k (x) V^mu_m`` in the hook-``t`` component of ``M_{k,m}^{(x)n}``.

    Valid whenever ``len(lam) <= k`` and ``len(mu) <= m``; the value itself
    does not depend on ``k`` and ``m``.
    """
    lam, mu, n = _rect_args(lam, mu, t)
    if CHECK_BOTH_FORMS:
        return _agree(mult_rect_forms(lam, mu, t), f"mult_rect{(tuple(lam), tuple(mu), t)}")
    return comb(n - 1, t) * sum((-1) ** (t - i) * sigma_rect(lam, mu, i) for i in range(t + 1))


def _check_cap(n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise ResourceLimit(f"n={n} exceeds cap {cap}")


def mult_rect_table(n: int, k: int, m: int, t: int, cap: int | None = DEFAULT_CAP) -> MultiplicityTable:
    if k < 1 or m < 1:
        raise IndexOutOfRange("k and m must be positive")
    if n < 1 or not 0 <= t <= n - 1:
        raise IndexOutOfRange(f"t={t} outside 0..{n - 1}")
    _check_cap(n, cap)
    entries = {}
    for lam in enumerate_partitions(n, k):
        for mu in enumerate_partitions(n, m):
            c = mult_rect(lam, mu, t)
            if c:
                entries[(lam, mu)] = c
    return MultiplicityTable({"kind": "rect", "n": n, "k": k, "m": m, "t": t}, entries)


def _half(lam: Partition) -> int:
    if lam.size % 2:
        raise OddSize(f"{tuple(lam)} has odd size {lam.size}")
    return lam.size // 2


def mult_sym_square_graded(lam: Sequence[int], i: int) -> int:
    """Multiplicity of ``V^lam_k`` in the part of ``Sym^n(M_k)`` with ``i`` skew-symmetric factors."""
    lam = Partition(lam)
    n = _half(lam)
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"i={i} outside 0..{n}")
    return sum(
        lr_coefficient(lam, [2 * p for p in mu], conjugate(Partition(2 * p for p in nu)))
        for mu in enumerate_partitions(n - i)
        for nu in enumerate_partitions(i)
    )


def mult_sym_square(lam: Sequence[int]) -> int:
    """Multiplicity of ``V^lam_k`` in ``Sym^n(M_k)`` for ``lam |- 2n``."""
    lam = Partition(lam)
    n = _half(lam)
    return sum(mult_sym_square_graded(lam, i) for i in range(n + 1))


def _square_args(lam, t) -> tuple[Partition, int]:
    lam = Partition(lam)
    n = _half(lam)
    if n < 1 or not 0 <= t <= n - 1:
        raise IndexOutOfRange(f"t={t} outside 0..{n - 1}")
    return lam, n


def mult_hook_square_forms(lam: Sequence[int], t: int) -> tuple[int, int]:
    lam, n = _square_args(lam, t)
    return _alternating_forms(lambda i: sigma_square(lam, i), n, t)


def mult_hook_square(lam: Sequence[int], t: int) -> int:
    """Multiplicity of ``V^lam_k`` in the hook-``t`` component of ``M_k^{(x)n}``."""
    lam, n = _square_args(lam, t)
    if CHECK_BOTH_FORMS:
        return _agree(mult_hook_square_forms(lam, t), f"mult_hook_square{(tuple(lam), t)}")
    return comb(n - 1, t) * sum((-1) ** (t - i) * sigma_square(lam, i) for i in range(t + 1))


def mult_hook_square_graded_forms(lam: Sequence[int], t: int, j: int) -> tuple[int, int]:
    lam, n = _square_args(lam, t)
    if not 0 <= j <= n:
        raise IndexOutOfRange(f"j={j} outside 0..{n}")
    return _alternating_forms(lambda i: sigma_square_graded(lam, i, j), n, t)


def mult_hook_square_graded(lam: Sequence[int], t: int, j: int) -> int:
    """As :func:`mult_hook_square`, restricted to ``j`` skew-symmetric factors."""
    forms = mult_hook_square_graded_forms(lam, t, j)
    if CHECK_BOTH_FORMS:
        return _agree(forms, f"mult_hook_square_graded{(tuple(Partition(lam)), t, j)}")
    return forms[0]


def mult_square_table(
    n: int, k: int | None, t: int, j: int | None = None, cap: int | None = DEFAULT_CAP // 2
) -> MultiplicityTable:
    """Nonzero square-case multiplicities over ``lam |- 2n`` with at most ``k`` rows."""
    if n < 1 or not 0 <= t <= n - 1:
        raise IndexOutOfRange(f"t={t} outside 0..{n - 1}")
    if j is not None and not 0 <= j <= n:
        raise IndexOutOfRange(f"j={j} outside 0..{n}")
    _check_cap(n, cap)
    entries = {}
    for lam in enumerate_partitions(2 * n, k):
        c = mult_hook_square(lam, t) if j is None else mult_hook_square_graded(lam, t, j)
        if c:
            entries[lam] = c
    context = {"kind": "square", "n": n, "k": k, "t": t}
    if j is not None:
        context["j"] = j
    return MultiplicityTable(context, entries)


def check_duality_rect(n: int, cap: int | None = DEFAULT_CAP) -> bool:
    """Swapping ``mu`` for its conjugate exchanges hook ``t`` with ``n-1-t``."""
    _check_cap(n, cap)
    parts = enumerate_partitions(n)
    return all(
        mult_rect(lam, mu, t) == mult_rect(lam, conjugate(mu), n - 1 - t)
        for lam in parts
        for mu in parts
        for t in range(n)
    )


def check_duality_square(n: int, cap: int | None = DEFAULT_CAP // 2) -> bool:
    """Conjugating ``lam`` preserves Sym^n, swaps the grading ``i <-> n-i`` and ``j <-> n-j``."""
    _check_cap(n, cap)
    for lam in enumerate_partitions(2 * n):
        lc = conjugate(lam)
        if mult_sym_square(lam) != mult_sym_square(lc):
            return False
        for i in range(n + 1):
            if mult_sym_square_graded(lam, i) != mult_sym_square_graded(lc, n - i):
                return False
        for t in range(n):
            for j in range(n + 1):
                if mult_hook_square_graded(lam, t, j) != mult_hook_square_graded(lc, t, n - j):
                    return False
    return True


def check_distance_bounds(n: int, k: int, m: int, cap: int | None = DEFAULT_CAP) -> bool:
    """Every nonzero multiplicity has ``d(lam,mu) <= t``, ``d(lam,mu') <= n-1-t`` and ``d(lam,mu) < km``."""
    _check_cap(n, cap)
    for t in range(n):
        for (lam, mu), _ in mult_rect_table(n, k, m, t, cap=cap).items():
            d = distance(lam, mu)
            if d > t or distance(lam, conjugate(mu)) > n - 1 - t or d > k * m - 1:
                return False
    return True


def corner_formula_check(n: int, cap: int | None = DEFAULT_CAP) -> bool:
    """Closed forms at ``t = 1`` and, through conjugation of ``mu``, at ``t = n-2``."""
    if n < 2:
        raise IndexOutOfRange("corner formula needs n >= 2")
    _check_cap(n, cap)
    parts = enumerate_partitions(n)
    for lam in parts:
        for mu in parts:
            if lam == mu:
                expected = (n - 1) * (inner_corners(lam) - 1)
            else:
                expected = (n - 1) * (distance(lam, mu) == 1)
            if mult_rect(lam, mu, 1) != expected:
                return False
            if mult_rect(lam, conjugate(mu), n - 2) != expected:
                return False
    return True

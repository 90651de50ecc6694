"""Verification suites: every formula against its brute-force counterpart.

Each suite is a generator of ``(name, passed)`` pairs so the CLI can print
progress as it goes.
"""
from __future__ import annotations

from math import factorial
from typing import Callable, Iterator

from . import bn, hooks, lr, oracle
from .characters import product_height, product_width
from .errors import ResourceLimit
from .partitions import (
    conjugate,
    double_rows,
    enumerate_bipartitions,
    enumerate_partitions,
    intersection,
)

Check = tuple[str, bool]

RECT_CAP = 6
SQUARE_CAP = 4
MATCHING_CAP = 3


def _guard(name: str, fn: Callable[[], bool]) -> Check:
    try:
        return name, bool(fn())
    except hooks.FormMismatch:
        return name, False


def rect_suite(max_n: int, oracle_cap: int | None = RECT_CAP) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(n)

        def boundary() -> bool:
            return all(
                hooks.mult_rect(lam, mu, 0) == (lam == mu)
                and hooks.mult_rect(lam, mu, n - 1) == (lam == conjugate(mu))
                for lam in parts
                for mu in parts
            )

        def forms() -> bool:
            return all(
                sum((-1) ** i * lr.sigma_rect(lam, mu, i) for i in range(n + 1)) == 0
                and all(
                    len(set(hooks.mult_rect_forms(lam, mu, t))) == 1
                    for t in range(n)
                )
                for lam in parts
                for mu in parts
            )

        def against_oracle() -> bool:
            return all(
                hooks.mult_rect(lam, mu, t) == oracle.oracle_rect_multiplicity(lam, mu, t, cap=oracle_cap)
                for lam in parts
                for mu in parts
                for t in range(n)
            )

        yield _guard(f"rect.boundary n={n}", boundary)
        yield _guard(f"rect.prefix_suffix n={n}", forms)
        if oracle_cap is None or n <= oracle_cap:
            yield _guard(f"rect.oracle n={n}", against_oracle)
        yield _guard(f"rect.duality n={n}", lambda: hooks.check_duality_rect(n, cap=None))
        if n >= 2:
            yield _guard(f"rect.corners n={n}", lambda: hooks.corner_formula_check(n, cap=None))


def square_suite(max_n: int) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(2 * n)
        doubled = {double_rows(mu) for mu in enumerate_partitions(n)}
        doubled_conj = {conjugate(p) for p in doubled}

        def sym_oracle() -> bool:
            return all(hooks.mult_sym_square(lam) == oracle.oracle_sym_square(lam, cap=None) for lam in parts)

        def boundary() -> bool:
            return all(
                hooks.mult_sym_square_graded(lam, 0) == (lam in doubled)
                and hooks.mult_sym_square_graded(lam, n) == (lam in doubled_conj)
                for lam in parts
            )

        def hook_oracle() -> bool:
            return all(
                hooks.mult_hook_square(lam, t) == oracle.oracle_hook_square(lam, t, cap=None)
                for lam in parts
                for t in range(n)
            )

        def graded_sum() -> bool:
            return all(
                sum(hooks.mult_hook_square_graded(lam, t, j) for j in range(n + 1)) == hooks.mult_hook_square(lam, t)
                for lam in parts
                for t in range(n)
            ) and all(
                sum(hooks.mult_sym_square_graded(lam, i) for i in range(n + 1)) == hooks.mult_sym_square(lam)
                for lam in parts
            )

        def forms() -> bool:
            for lam in parts:
                if sum((-1) ** i * lr.sigma_square(lam, i) for i in range(n + 1)):
                    return False
                for t in range(n):
                    if len(set(hooks.mult_hook_square_forms(lam, t))) != 1:
                        return False
                    for j in range(n + 1):
                        if len(set(hooks.mult_hook_square_graded_forms(lam, t, j))) != 1:
                            return False
            return True

        yield _guard(f"square.sym_oracle n={n}", sym_oracle)
        yield _guard(f"square.boundary n={n}", boundary)
        yield _guard(f"square.hook_oracle n={n}", hook_oracle)
        yield _guard(f"square.graded_sum n={n}", graded_sum)
        yield _guard(f"square.prefix_suffix n={n}", forms)
        yield _guard(f"square.duality n={n}", lambda: hooks.check_duality_square(n, cap=None))


def bn_suite(max_n: int, matching_cap: int = MATCHING_CAP, dims_cap: int = SQUARE_CAP) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        bips = list(enumerate_bipartitions(n))
        if n <= matching_cap:
            yield _guard(f"bn.matching_character n={n}", lambda: oracle.verify_d0a(n, cap=None))
        if n <= dims_cap:
            yield _guard(f"bn.induced_degrees n={n}", lambda: bn.check_d0_dimensions(n, cap=None))
        yield _guard(f"bn.restriction_trivial n={n}", lambda: bn.check_d2(n, "trivial", cap=None))
        yield _guard(f"bn.restriction_sign n={n}", lambda: bn.check_d2(n, "sign", cap=None))
        yield _guard(
            f"bn.eigenvalue n={n}",
            lambda: all(
                n * bn.sigma1_value(b) == bn.central_eigenvalue(b) * bn.bipartition_dimension(b) for b in bips
            ),
        )
        yield _guard(
            f"bn.group_order n={n}",
            lambda: sum(bn.bipartition_dimension(b) ** 2 for b in bips) == 2**n * factorial(n),
        )


def bounds_suite(max_n: int) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(n)
        yield _guard(
            f"bounds.distance n={n}",
            lambda: all(
                hooks.check_distance_bounds(n, k, m, cap=None)
                for k in range(1, n + 1)
                for m in range(1, n + 1)
            ),
        )
        yield _guard(
            f"bounds.regev n={n}",
            lambda: all(product_height(lam, mu) <= len(lam) * len(mu) for lam in parts for mu in parts),
        )
        yield _guard(
            f"bounds.dvir n={n}",
            lambda: all(
                product_width(lam, mu) == intersection(lam, mu).size
                and product_height(lam, mu) == intersection(lam, conjugate(mu)).size
                for lam in parts
                for mu in parts
            ),
        )


SUITES = ("rect", "square", "bn", "bounds")


def run(suite: str, max_n: int, unsafe_max_n: int | None = None) -> Iterator[Check]:
    """Run one suite (or ``"all"``); square-matrix checks are clamped to their own cap."""
    rect_cap = unsafe_max_n if unsafe_max_n is not None else RECT_CAP
    square_cap = unsafe_max_n if unsafe_max_n is not None else SQUARE_CAP
    if max_n > rect_cap:
        raise ResourceLimit(f"--max-n {max_n} exceeds cap {rect_cap}; pass --unsafe-max-n to override")
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name == "rect":
            yield from rect_suite(max_n, oracle_cap=None if unsafe_max_n is not None else RECT_CAP)
        elif name == "square":
            yield from square_suite(min(max_n, square_cap))
        elif name == "bn":
            yield from bn_suite(max_n, dims_cap=max(SQUARE_CAP, square_cap))
        elif name == "bounds":
            yield from bounds_suite(max_n)
        else:
            raise ValueError(f"unknown suite {name!r}")

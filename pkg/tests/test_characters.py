from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from conftest import P
from hookdec.characters import (
    ClassFunction,
    character,
    character_table,
    class_size,
    diagonal_restriction_value,
    inner_product,
    kronecker,
    kronecker_expansion,
    mn_value,
    product_height,
    product_width,
    z_factor,
)
from hookdec.errors import ResourceLimit, SizeMismatch
from hookdec.lr import skew_schur_expansion
from hookdec.partitions import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    enumerate_partitions,
    intersection,
    num_standard_tableaux,
)


def cycle_type(perm):
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def test_class_sizes_by_enumeration():
    for n in range(1, 7):
        counts = {}
        for perm in permutations(range(n)):
            rho = cycle_type(perm)
            counts[rho] = counts.get(rho, 0) + 1
        for rho in enumerate_partitions(n):
            assert class_size(rho) == counts[rho] == factorial(n) // z_factor(rho)


def test_mn_examples():
    assert mn_value(P(2, 1), P(1, 1, 1)) == 2
    assert mn_value(P(2, 1), P(3)) == -1
    for rho in enumerate_partitions(5):
        assert mn_value(P(5), rho) == 1
    with pytest.raises(SizeMismatch):
        mn_value(P(2, 1), P(2))


def test_mn_order_of_cycles_is_irrelevant():
    lam = P(4, 2, 1)
    assert mn_value(lam, (1, 3, 2, 1)) == mn_value(lam, (3, 2, 1, 1))


def test_sign_character():
    for n in range(1, 7):
        for rho in enumerate_partitions(n):
            sign = (-1) ** (n - len(rho))
            assert mn_value(Partition([1] * n), rho) == sign
            for lam in enumerate_partitions(n):
                assert mn_value(conjugate(lam), rho) == sign * mn_value(lam, rho)


def test_character_table_small():
    t1 = character_table(1)
    assert t1.rows[0].values == (1,)
    t3 = character_table(3)
    assert [row.degree for row in t3.rows] == [1, 2, 1]
    assert sum(row.degree**2 for row in character_table(5).rows) == 120
    with pytest.raises(ResourceLimit):
        character_table(9)
    assert character_table(9, cap=None).n == 9


def test_row_and_column_orthogonality_up_to_7():
    for n in range(1, 8):
        table = character_table(n)
        for a in table.rows:
            assert a.degree in [num_standard_tableaux(lam) for lam in table.partitions]
            for b in table.rows:
                assert inner_product(a, b) == (a is b)
        for i, rho in enumerate(table.classes):
            for j, _ in enumerate(table.classes):
                col = sum(row.values[i] * row.values[j] for row in table.rows)
                assert col == (z_factor(rho) if i == j else 0)


def test_inner_product_examples():
    chi = character(P(2, 1))
    trivial = character(P(3))
    assert inner_product(chi * chi, trivial) == 1
    assert inner_product(ClassFunction(3, (1, 0, 0)), trivial) == Fraction(1, 3)
    with pytest.raises(SizeMismatch):
        inner_product(chi, character(P(2)))


def test_kronecker_examples():
    assert kronecker(P(2, 1), P(2, 1), P(2, 1)) == 1
    for n in range(1, 7):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                assert kronecker(lam, mu, P(n)) == (lam == mu)
                assert kronecker(lam, mu, Partition([1] * n)) == (lam == conjugate(mu))
    with pytest.raises(SizeMismatch):
        kronecker(P(2), P(2), P(1))


def test_kronecker_symmetries_up_to_6():
    for n in range(1, 7):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                for nu, c in kronecker_expansion(lam, mu).items():
                    assert kronecker(mu, nu, lam) == c
                    assert kronecker(nu, lam, mu) == c
                    assert kronecker(conjugate(lam), conjugate(mu), nu) == c


def test_height_width_examples():
    assert product_height(P(2, 1), P(2, 1)) == 3
    assert product_width(P(2, 1), P(2, 1)) == 3
    for lam in enumerate_partitions(5):
        assert product_height(lam, P(5)) == len(lam)


def test_regev_and_dvir_up_to_6():
    for n in range(1, 7):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                h = product_height(lam, mu)
                assert h <= len(lam) * len(mu)
                assert h == intersection(lam, conjugate(mu)).size
                assert product_width(lam, mu) == intersection(lam, mu).size


def test_skew_character_matches_lr_expansion_up_to_6():
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            for a in range(n + 1):
                for mu in enumerate_partitions(a):
                    if not contains(lam, mu):
                        continue
                    shape = SkewShape(lam, mu)
                    values = ClassFunction(n - a, (mn_value(shape, rho) for rho in enumerate_partitions(n - a))) if n > a else None
                    expansion = skew_schur_expansion(shape)
                    if values is None:
                        assert expansion == {Partition(): 1}
                        continue
                    for nu in enumerate_partitions(n - a):
                        assert inner_product(values, character(nu)) == expansion[nu]


def test_diagonal_restriction_examples():
    for rho in enumerate_partitions(3):
        assert diagonal_restriction_value(P(6), rho) == 1
    assert diagonal_restriction_value(P(1, 1, 1, 1), P(1, 1)) == 1
    assert diagonal_restriction_value(P(2, 2), P(2)) == 2 == mn_value(P(2, 2), P(2, 2))
    with pytest.raises(SizeMismatch):
        diagonal_restriction_value(P(2, 1), P(1))

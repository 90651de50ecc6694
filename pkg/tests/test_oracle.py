import ast
from math import factorial
from pathlib import Path

import pytest

from conftest import P
from hookdec import oracle
from hookdec.errors import ResourceLimit
from hookdec.oracle import (
    class_representative,
    fixed_matchings,
    oracle_hook_square,
    oracle_matching_character,
    oracle_rect_multiplicity,
    oracle_sym_square,
    perfect_matchings,
    verify_d0a,
)
from hookdec.partitions import Partition, enumerate_partitions


def test_oracle_imports_no_formula_modules():
    tree = ast.parse(Path(oracle.__file__).read_text())
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported.add(node.module)
        elif isinstance(node, ast.Import):
            imported.update(alias.name for alias in node.names)
    assert imported & {"lr", "hooks", "bn", "hookdec.lr", "hookdec.hooks", "hookdec.bn"} == set()
    assert {"characters", "partitions"} <= imported


def test_rect_oracle_examples():
    assert oracle_rect_multiplicity(P(2, 1), P(2, 1), 1) == 2
    for lam in enumerate_partitions(4):
        for mu in enumerate_partitions(4):
            assert oracle_rect_multiplicity(lam, mu, 0) == (lam == mu)
    # chi^(3,1) chi^(2,2) = chi^(3,1) + chi^(2,1,1)
    assert oracle_rect_multiplicity(P(3, 1), P(2, 2), 1) == 3
    with pytest.raises(ResourceLimit):
        oracle_rect_multiplicity(P(7), P(7), 0)


def test_sym_square_oracle_examples():
    assert oracle_sym_square(P(2)) == 1
    assert oracle_sym_square(P(1, 1)) == 1
    # (chi^(2,2)(1^4) + chi^(2,2)(2,2)) / 2 = (2 + 2) / 2
    assert oracle_sym_square(P(2, 2)) == 2
    with pytest.raises(ResourceLimit):
        oracle_sym_square(P(10))


def test_hook_square_oracle_examples():
    for lam in enumerate_partitions(6):
        assert oracle_hook_square(lam, 0) == oracle_sym_square(lam)
    assert oracle_hook_square(P(1, 1), 0) == 1
    # C(1,1) * (chi^(3,1)(1^4) - chi^(3,1)(2,2)) / 2 = (3 + 1) / 2
    assert oracle_hook_square(P(3, 1), 1) == 2


def test_perfect_matching_counts():
    for n in range(1, 5):
        assert len(list(perfect_matchings(range(2 * n)))) == factorial(2 * n) // (2**n * factorial(n))


def test_matching_character_values():
    assert oracle_matching_character(1).values == (1, 1)
    chi2 = oracle_matching_character(2)
    assert chi2.at(P(1, 1, 1, 1)) == 3
    chi4 = oracle_matching_character(4)
    assert chi4.degree == 105
    assert all(0 <= v <= 105 for v in chi4.values)


def test_matching_character_is_a_class_function():
    for n in (2, 3):
        matchings = list(perfect_matchings(range(2 * n)))
        for rho in enumerate_partitions(2 * n)[:2]:
            a = fixed_matchings(class_representative(rho), matchings)
            b = fixed_matchings(class_representative(rho, reverse=True), matchings)
            assert a == b


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verify_d0a(n):
    assert verify_d0a(n)

import pytest
from hypothesis import given, settings

from conftest import P, partition_pairs
from hookdec import hooks
from hookdec.errors import IndexOutOfRange, OddSize, ResourceLimit, SizeMismatch
from hookdec.hooks import (
    check_distance_bounds,
    check_duality_rect,
    check_duality_square,
    corner_formula_check,
    hook_binomial,
    mult_hook_square,
    mult_hook_square_graded,
    mult_rect,
    mult_rect_table,
    mult_square_table,
    mult_sym_square,
    mult_sym_square_graded,
)
from hookdec.characters import kronecker
from hookdec.oracle import oracle_hook_square, oracle_sym_square
from hookdec.partitions import (
    Partition,
    conjugate,
    contains,
    distance,
    double_rows,
    enumerate_partitions,
    hook,
    inner_corners,
    rectangle,
)


def horizontal_strip(outer, inner):
    return contains(outer, inner) and all(outer.part(i + 1) <= inner.part(i) for i in range(len(outer)))


def vertical_strip(outer, inner):
    return horizontal_strip(conjugate(outer), conjugate(inner))


def test_hook_binomial():
    assert hook_binomial(6, 0) == 1
    assert hook_binomial(6, 5) == 1
    assert hook_binomial(5, 2) == 6
    with pytest.raises(IndexOutOfRange):
        hook_binomial(5, 5)


def test_mult_rect_examples():
    assert mult_rect(P(2, 1), P(2, 1), 1) == 2
    assert mult_rect(P(2, 1), P(2, 1), 1) == hook_binomial(3, 1) * kronecker(P(2, 1), P(2, 1), P(2, 1))
    assert mult_rect(P(3), P(1, 1, 1), 2) == 1
    assert mult_rect(P(1), P(1), 0) == 1


def test_mult_rect_errors():
    with pytest.raises(SizeMismatch):
        mult_rect(P(2), P(1), 0)
    with pytest.raises(IndexOutOfRange):
        mult_rect(P(1), P(1), 1)
    with pytest.raises(IndexOutOfRange):
        mult_rect(P(2, 1), P(2, 1), -1)


@settings(max_examples=80, deadline=None)
@given(partition_pairs(max_n=6))
def test_mult_rect_is_binomial_times_kronecker(pair):
    lam, mu = pair
    n = lam.size
    for t in range(n):
        assert mult_rect(lam, mu, t) == hook_binomial(n, t) * kronecker(lam, mu, hook(n, t))


def test_prefix_form_only_mode(monkeypatch):
    monkeypatch.setattr(hooks, "CHECK_BOTH_FORMS", False)
    assert mult_rect(P(2, 1), P(2, 1), 1) == 2
    assert mult_hook_square(P(2, 2), 1) == mult_hook_square_graded(P(2, 2), 1, 0) + mult_hook_square_graded(
        P(2, 2), 1, 1
    ) + mult_hook_square_graded(P(2, 2), 1, 2)


def test_mismatched_forms_are_reported(monkeypatch):
    monkeypatch.setattr(hooks, "sigma_rect", lambda lam, mu, i: i)
    with pytest.raises(hooks.FormMismatch):
        mult_rect(P(2, 1), P(2, 1), 1)


def test_rect_table_boundaries():
    for n in range(1, 6):
        for k in range(1, 4):
            for m in range(1, 4):
                diag = mult_rect_table(n, k, m, 0)
                assert dict(diag.items()) == {
                    (lam, lam): 1 for lam in enumerate_partitions(n, min(k, m))
                }
                anti = mult_rect_table(n, k, m, n - 1)
                assert dict(anti.items()) == {
                    (lam, conjugate(lam)): 1
                    for lam in enumerate_partitions(n)
                    if contains(rectangle(m, k), lam)
                }


def test_rect_table_t1_support():
    table = mult_rect_table(3, 2, 2, 1)
    keys = set(dict(table.items()))
    assert keys == {(P(3), P(2, 1)), (P(2, 1), P(3)), (P(2, 1), P(2, 1))}
    assert all(distance(lam, mu) <= 1 for lam, mu in keys)
    # (3),(3) is at distance 0 but the single-corner formula gives 2 * (1 - 1) = 0
    assert table[(P(3), P(3))] == 0
    assert all(v > 0 for _, v in table.items())


def test_table_caps():
    with pytest.raises(ResourceLimit):
        mult_rect_table(9, 2, 2, 0)
    with pytest.raises(ResourceLimit):
        mult_square_table(5, 3, 0)


def test_mult_sym_square_examples():
    assert mult_sym_square(P(2)) == 1
    assert mult_sym_square(P(1, 1)) == 1
    assert mult_sym_square(P(3, 1)) == 1 == oracle_sym_square(P(3, 1))
    for n in range(1, 5):
        for mu in enumerate_partitions(n):
            assert mult_sym_square(double_rows(mu)) >= 1
    with pytest.raises(OddSize):
        mult_sym_square(P(2, 1))


def test_sym_square_graded_boundaries():
    for n in range(1, 5):
        doubled = {double_rows(mu) for mu in enumerate_partitions(n)}
        for lam in enumerate_partitions(2 * n):
            assert mult_sym_square_graded(lam, 0) == (lam in doubled)
            assert mult_sym_square_graded(lam, n) == (conjugate(lam) in doubled)
            assert sum(mult_sym_square_graded(lam, i) for i in range(n + 1)) == mult_sym_square(lam)
    with pytest.raises(IndexOutOfRange):
        mult_sym_square_graded(P(2), 2)


def test_mult_hook_square_examples():
    for lam in enumerate_partitions(6):
        assert mult_hook_square(lam, 0) == mult_sym_square(lam)
    assert mult_hook_square(P(2), 0) == 1
    assert mult_hook_square(P(2, 2), 1) == oracle_hook_square(P(2, 2), 1)
    with pytest.raises(IndexOutOfRange):
        mult_hook_square(P(2), 1)
    with pytest.raises(OddSize):
        mult_hook_square(P(3), 0)


def test_mult_hook_square_graded_examples():
    assert mult_hook_square_graded(P(2), 0, 0) == 1
    assert mult_hook_square_graded(P(1, 1), 0, 1) == 1
    assert mult_hook_square_graded(P(2), 0, 1) == 0
    with pytest.raises(IndexOutOfRange):
        mult_hook_square_graded(P(2), 0, 2)


def test_square_graded_t0_is_sym_graded():
    for n in range(1, 5):
        for lam in enumerate_partitions(2 * n):
            for j in range(n + 1):
                assert mult_hook_square_graded(lam, 0, j) == mult_sym_square_graded(lam, j)


def test_square_graded_sums_and_conjugation():
    for n in range(1, 5):
        for lam in enumerate_partitions(2 * n):
            for t in range(n):
                graded = [mult_hook_square_graded(lam, t, j) for j in range(n + 1)]
                assert sum(graded) == mult_hook_square(lam, t)
                assert graded == [mult_hook_square_graded(conjugate(lam), t, n - j) for j in range(n + 1)]


def test_square_table():
    table = mult_square_table(2, 4, 1)
    expected = {lam: mult_hook_square(lam, 1) for lam in enumerate_partitions(4)}
    assert dict(table.items()) == {k: v for k, v in expected.items() if v}
    graded = mult_square_table(2, 2, 0, j=0)
    assert dict(graded.items()) == {P(4): 1, P(2, 2): 1}
    assert graded.context["j"] == 0


def test_duality_checks():
    for n in range(1, 8):
        assert check_duality_rect(n)
    for n in range(1, 5):
        assert check_duality_square(n)


def test_distance_bounds():
    assert check_distance_bounds(3, 2, 2)
    assert check_distance_bounds(6, 3, 3)
    for n in range(1, 6):
        assert check_distance_bounds(n, 1, 1)
        survivors = {
            (lam, mu, t): c
            for t in range(n)
            for (lam, mu), c in mult_rect_table(n, 1, 1, t).items()
        }
        assert survivors == {(P(n), P(n), 0): 1}


def test_corner_formula():
    assert mult_rect(P(2, 1), P(2, 1), 1) == 2 * (2 - 1)
    assert mult_rect(P(2), P(2), 1) == 0
    for n in range(2, 7):
        assert corner_formula_check(n)
    with pytest.raises(IndexOutOfRange):
        corner_formula_check(1)


@pytest.mark.parametrize("n", range(3, 8))
def test_t2_strip_criterion(n):
    """Nonzero-ness at t = 2, and its mirror at t = n - 3.

    Equal shapes: nonzero iff at least two inner corners.  Shapes at
    distance at least 2: nonzero iff some alpha |- n-2 makes one quotient a
    horizontal strip and the other a vertical strip.
    """
    parts = enumerate_partitions(n)
    for lam in parts:
        for mu in parts:
            value = mult_rect(lam, mu, 2)
            if n > 3:
                assert value == mult_rect(lam, conjugate(mu), n - 3)
            if lam == mu:
                assert bool(value) == (inner_corners(lam) >= 2)
            elif distance(lam, mu) >= 2:
                strips = any(
                    (horizontal_strip(lam, a) and vertical_strip(mu, a))
                    or (vertical_strip(lam, a) and horizontal_strip(mu, a))
                    for a in enumerate_partitions(n - 2)
                )
                assert bool(value) == strips

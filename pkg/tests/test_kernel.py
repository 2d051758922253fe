import itertools
from fractions import Fraction

import pytest

from binsums.kernel import (
    KernelParams,
    KernelTable,
    kernel_row,
    kernel_table,
    kernel_value,
    t_value,
    v_value,
)
from binsums.exact import binomial

PARAM_SWEEP = [(-1, 0), (1, 0), (1, 1), (2, -3)]


def walk_oracle(n, k, a, b):
    """Sum over step sequences in {-1, 0, 1}^n ending at k, weighted a per
    diagonal step and b per flat step."""
    a, b = Fraction(a), Fraction(b)
    total = Fraction(0)
    for steps in itertools.product((-1, 0, 1), repeat=n):
        if sum(steps) == k:
            flats = steps.count(0)
            total += a ** (n - flats) * b**flats
    return total


def test_paper_table_rows():
    params = KernelParams(-1, 0)
    assert kernel_row(params, 0) == {0: 1}
    assert kernel_row(params, 1) == {-1: -1, 1: -1}
    assert kernel_row(params, 2) == {-2: 1, 0: 2, 2: 1}


@pytest.mark.parametrize("a, b", [(0, 0), (3, 7), (Fraction(1, 2), -1)])
def test_row_zero(a, b):
    assert kernel_row((a, b), 0) == {0: 1}


def test_kernel_value_examples():
    assert kernel_value((1, 0), 4, 0) == 6 == binomial(4, 2)
    assert kernel_value((-1, 0), 2, 0) == 2
    assert kernel_value((2, 3), 1, 0) == 3
    assert kernel_value((2, 3), 1, 5) == 0


@pytest.mark.parametrize("a, b", PARAM_SWEEP + [(Fraction(2, 3), Fraction(-1, 5)), (0, 2)])
def test_table_matches_walk_oracle(a, b):
    table = KernelTable((a, b))
    for n in range(7):
        for k in range(-n - 1, n + 2):
            assert table.value(n, k) == walk_oracle(n, k, a, b)


@pytest.mark.parametrize("a, b", PARAM_SWEEP)
def test_table_invariants(a, b):
    kp = KernelParams(a, b)
    table = kernel_table(kp)
    for n in range(41):
        row = table.row(n)
        assert all(abs(k) <= n for k in row)
        for k in range(-n - 2, n + 3):
            assert table.value(n, -k) == table.value(n, k)
        assert sum(row.values()) == (2 * kp.a + kp.b) ** n
        if n:
            for k in range(-n, n + 1):
                expected = (kp.a * table.value(n - 1, k - 1) + kp.b * table.value(n - 1, k)
                            + kp.a * table.value(n - 1, k + 1))
                assert table.value(n, k) == expected


def test_zero_a_degenerates():
    table = KernelTable((0, 3))
    for n in range(6):
        assert table.row(n) == {0: 3**n}


def test_table_extends_on_demand():
    table = KernelTable((1, 1), n_max=3)
    assert table.n_built == 3
    assert table[10, 0] == kernel_value((1, 1), 10, 0)
    assert table.n_built == 10
    assert table.dense_row(1) == [1, 1, 1]


def test_negative_row_rejected():
    with pytest.raises(ValueError):
        kernel_value((1, 0), -1, 0)


def test_t_values():
    assert (t_value(0, 0), t_value(0, 1), t_value(0, 5), t_value(2, 0)) == (1, -1, 0, 2)
    assert t_value(0, -1) == 0


def test_v_values():
    assert (v_value(0, 0), v_value(0, 1), v_value(0, 2), v_value(3, 0)) == (1, 1, 0, 3)
    assert [k for k in range(-5, 6) if v_value(0, k)] == [0, 1]


def test_t_decomposes_into_kernel():
    for n in range(41):
        for k in range(-n - 2, n + 3):
            assert t_value(n, k) == kernel_value((-1, 0), n, k) - kernel_value((-1, 0), n, k - 1)


def test_v_decomposes_into_kernel():
    for n in range(41):
        for k in range(-n - 2, n + 3):
            assert v_value(n, k) == kernel_value((1, 0), n, k) + kernel_value((1, 0), n, k - 1)


def test_t_recurrence():
    for n in range(1, 41):
        for k in range(-n - 3, n + 4):
            assert t_value(n, k) == -t_value(n - 1, k - 1) - t_value(n - 1, k + 1)


def test_v_recurrence():
    for n in range(1, 41):
        for k in range(-n - 3, n + 4):
            assert v_value(n, k) == v_value(n - 1, k - 1) + v_value(n - 1, k + 1)

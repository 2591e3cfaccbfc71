from fractions import Fraction as F
from math import factorial

import pytest

from moduli_hilbert.checks import TABLE2
from moduli_hilbert.exact_series import NEG_INF, coeff_of, degree_sequence, taylor_coeff
from moduli_hilbert.fj_series import (
    F0,
    FjTable,
    compute_fj,
    expected_degree_sequence,
    verify_degree_bound,
    verify_integral_identity,
)


@pytest.fixture(scope="module")
def table():
    return compute_fj(10)


def test_first_entries_match_closed_forms(table):
    assert table[0] == F0
    for j in range(4):
        assert table[j] == TABLE2[j]
    assert coeff_of(table[3], 4, 0) == F(512, 3)


def test_series_starts_at_x_squared(table):
    for f in table.entries:
        assert f(0) == 0
        assert taylor_coeff(f, 0) == taylor_coeff(f, 1) == 0
        assert taylor_coeff(f, 2) == F(1, 2)


def test_leading_frequency(table):
    for j, f in enumerate(table.entries):
        assert f.max_frequency == j + 1
        assert f.poly(j + 1).coeffs == (F((j + 1) ** (2 * j), factorial(j + 1)),)


@pytest.mark.parametrize("j", [0, 1, 5, 8])
def test_integral_identity(table, j):
    assert verify_integral_identity(j, table)


def test_integral_identity_detects_a_wrong_entry():
    t = compute_fj(2)
    broken = FjTable(entries=list(t.entries), integrals=[[f] for f in t.entries])
    broken.entries[2] = t[2] + TABLE2[0]
    broken.integrals[2] = [broken.entries[2]]
    assert not verify_integral_identity(1, broken)


@pytest.mark.parametrize("j", [1, 2, 7, 10])
def test_degree_sequence(table, j):
    assert verify_degree_bound(j, table)


def test_expected_degree_sequence():
    assert expected_degree_sequence(1) == (NEG_INF, 2, 0)
    assert expected_degree_sequence(2) == (NEG_INF, 4, 2, 0)
    assert degree_sequence(F0) == (1, 0)


def test_incremental_extension_is_stable():
    t = compute_fj(3)
    first = list(t.entries)
    t.extend(6)
    assert t.entries[:4] == first
    assert t.entries == compute_fj(6).entries


def test_preconditions():
    t = compute_fj(2)
    with pytest.raises(ValueError):
        verify_integral_identity(2, t)
    with pytest.raises(ValueError):
        verify_degree_bound(0, t)
    with pytest.raises(ValueError):
        compute_fj(-1)

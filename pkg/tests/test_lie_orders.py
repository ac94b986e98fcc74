"""Order formulas checked against brute-force counts and known values."""
from __future__ import annotations

import random

import pytest

from systolic import (
    DomainError,
    LieType,
    Series,
    dimension_exponent,
    group_order,
    is_prime_power,
    order_vs_exponent_check,
)
from ._brute import sl2_count, sl3_count, sp4_count_q2, su3_count_q2


# ---------------------------------------------------------------------------
# brute-force agreement


def test_sl2_orders_match_matrix_scan():
    t = LieType(Series.SPLIT_A, 1)
    assert group_order(t, 2) == sl2_count(2) == 6
    assert group_order(t, 3) == sl2_count(3) == 24
    assert group_order(t, 5) == sl2_count(5) == 120


def test_sl3_order_matches_matrix_scan():
    assert group_order(LieType(Series.SPLIT_A, 2), 2) == sl3_count(2) == 168


def test_su3_order_matches_hermitian_scan():
    assert group_order(LieType(Series.TWISTED_A, 2), 2) == su3_count_q2() == 216


def test_sp4_order_matches_symplectic_scan():
    assert group_order(LieType(Series.BC, 2), 2) == sp4_count_q2() == 720


# ---------------------------------------------------------------------------
# known orders, both D series at the smallest tabulated rank


def test_split_d4_order_over_f2():
    assert group_order(LieType(Series.SPLIT_D, 4), 2) == 174182400


def test_twisted_d4_order_over_f2():
    assert group_order(LieType(Series.TWISTED_D, 4), 2) == 197406720


def test_twisted_a_alternating_signs():
    # rank 2 at q: q^3 (q^2-1)(q^3+1)
    for q in (2, 3, 4, 5):
        expected = q ** 3 * (q ** 2 - 1) * (q ** 3 + 1)
        assert group_order(LieType(Series.TWISTED_A, 2), q) == expected


def test_bc_order_closed_form():
    # rank 3 at q: q^9 (q^2-1)(q^4-1)(q^6-1)
    for q in (2, 3, 4):
        expected = q ** 9 * (q ** 2 - 1) * (q ** 4 - 1) * (q ** 6 - 1)
        assert group_order(LieType(Series.BC, 3), q) == expected


# ---------------------------------------------------------------------------
# dimension exponents


@pytest.mark.parametrize(
    "series,rank,exponent",
    [
        (Series.SPLIT_A, 1, 3),
        (Series.SPLIT_A, 2, 8),
        (Series.SPLIT_A, 5, 35),
        (Series.TWISTED_A, 2, 8),
        (Series.TWISTED_A, 4, 24),
        (Series.BC, 2, 10),
        (Series.BC, 3, 21),
        (Series.SPLIT_D, 4, 28),
        (Series.TWISTED_D, 2, 6),
        (Series.TWISTED_D, 3, 15),
        (Series.TWISTED_D, 4, 28),
    ],
)
def test_dimension_exponents(series, rank, exponent):
    assert dimension_exponent(LieType(series, rank)) == exponent


def test_order_bounded_by_exponent_sampled():
    rng = random.Random(1821)
    types = [
        LieType(Series.SPLIT_A, rng.randint(1, 6)),
        LieType(Series.TWISTED_A, rng.randint(2, 6)),
        LieType(Series.BC, rng.randint(2, 5)),
        LieType(Series.SPLIT_D, rng.randint(4, 6)),
        LieType(Series.TWISTED_D, rng.randint(4, 6)),
    ]
    primes = [2, 3, 5, 7, 11, 13]
    for t in types:
        e = dimension_exponent(t)
        for _ in range(8):
            q = rng.choice(primes)
            assert group_order(t, q) <= q ** e


def test_order_vs_exponent_check_runs_clean():
    for series in Series:
        rank = max(2, _floor := {Series.SPLIT_D: 4, Series.TWISTED_D: 4}.get(series, 2))
        assert order_vs_exponent_check(LieType(series, rank), 32)


def test_order_vs_exponent_check_rejects_small_q_max():
    with pytest.raises(DomainError):
        order_vs_exponent_check(LieType(Series.SPLIT_A, 1), 1)


# ---------------------------------------------------------------------------
# rank floors and synthetic twisted-D ranks


def test_rank_floors_raise():
    with pytest.raises(DomainError):
        LieType(Series.SPLIT_A, 0)
    with pytest.raises(DomainError):
        LieType(Series.TWISTED_A, 1)
    with pytest.raises(DomainError):
        LieType(Series.BC, 1)
    with pytest.raises(DomainError):
        LieType(Series.SPLIT_D, 3)
    with pytest.raises(DomainError):
        LieType(Series.TWISTED_D, 1)


def test_twisted_d_low_rank_has_exponent_but_no_order():
    t = LieType(Series.TWISTED_D, 2)
    assert not t.tabulated
    assert dimension_exponent(t) == 6
    with pytest.raises(DomainError, match="no order formula"):
        group_order(t, 2)


def test_tabulated_flag():
    assert LieType(Series.TWISTED_D, 4).tabulated
    assert not LieType(Series.TWISTED_D, 3).tabulated
    assert LieType(Series.SPLIT_A, 1).tabulated


# ---------------------------------------------------------------------------
# argument validation


def test_group_order_rejects_q_below_two():
    with pytest.raises(DomainError):
        group_order(LieType(Series.SPLIT_A, 1), 1)


def test_group_order_warns_on_composite_q():
    with pytest.warns(UserWarning, match="not a prime power"):
        group_order(LieType(Series.SPLIT_A, 1), 6)


def test_is_prime_power():
    assert is_prime_power(2)
    assert is_prime_power(4)
    assert is_prime_power(27)
    assert is_prime_power(121)
    assert not is_prime_power(1)
    assert not is_prime_power(6)
    assert not is_prime_power(12)
    assert not is_prime_power(100)

"""Orders of the classical semisimple groups over a finite field F_q.

Each supported series has a closed-form product formula for the number of
F_q points, together with a dimension exponent e such that the order is at
most q^e for every q >= 2.  The exponent is what ``congruence_bounds`` uses
to bound subgroup indices by powers of an ideal norm, so both pieces live
here side by side.

All arithmetic is exact (Python integers).
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

from .errors import DomainError


class Series(enum.Enum):
    SPLIT_A = "1A"
    TWISTED_A = "2A"
    BC = "BC"
    SPLIT_D = "1D"
    TWISTED_D = "2D"


# Smallest rank at which the order formula applies.
_MIN_TABULATED_RANK = {
    Series.SPLIT_A: 1,
    Series.TWISTED_A: 2,
    Series.BC: 2,
    Series.SPLIT_D: 4,
    Series.TWISTED_D: 4,
}


@dataclass(frozen=True)
class LieType:
    """A classical series tag together with a rank.

    ``TWISTED_D`` is additionally constructible at ranks 2 and 3: the
    low-dimensional odd orthogonal lattices reuse its exponent m(2m-1)
    even though the order formula itself starts at rank 4.  Such a type
    is accepted by :func:`dimension_exponent` but rejected by
    :func:`group_order`.
    """

    series: Series
    rank: int

    def __post_init__(self) -> None:
        floor = 2 if self.series is Series.TWISTED_D else _MIN_TABULATED_RANK[self.series]
        if self.rank < floor:
            raise DomainError(f"rank {self.rank} too small for series {self.series.value}")

    @property
    def tabulated(self) -> bool:
        """Whether the closed-form order formula applies at this rank."""
        return self.rank >= _MIN_TABULATED_RANK[self.series]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_prime_power(q: int) -> bool:
    """True iff q = p^k for a prime p and k >= 1."""
    if q < 2:
        return False
    for p in range(2, q + 1):
        if p * p > q:
            return _is_prime(q)
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


def group_order(t: LieType, q: int) -> int:
    """Exact order of the group of F_q points for the given classical type.

    q is accepted as any integer >= 2.  The formulas are polynomial
    identities in q, so a non prime power only triggers a warning: the
    downstream index bounds always apply them to prime norms.
    """
    if q < 2:
        raise DomainError(f"q must be at least 2, got {q}")
    if not t.tabulated:
        raise DomainError(f"no order formula for {t.series.value} at rank {t.rank}")
    if not is_prime_power(q):
        warnings.warn(f"q={q} is not a prime power; the order formula is formal here",
                      stacklevel=2)
    r = t.rank
    if t.series is Series.SPLIT_A:
        order = q ** (r * (r + 1) // 2)
        for j in range(1, r + 1):
            order *= q ** (j + 1) - 1
        return order
    if t.series is Series.TWISTED_A:
        # Unitary factor signs alternate with j: q^(j+1) - (-1)^(j+1).
        order = q ** (r * (r + 1) // 2)
        for j in range(1, r + 1):
            order *= q ** (j + 1) - (-1) ** (j + 1)
        return order
    if t.series is Series.BC:
        order = q ** (r * r)
        for j in range(1, r + 1):
            order *= q ** (2 * j) - 1
        return order
    # Both D series share all factors except the sign on q^r.
    sign = -1 if t.series is Series.SPLIT_D else 1
    order = q ** (r * (r - 1)) * (q ** r + sign)
    for j in range(1, r):
        order *= q ** (2 * j) - 1
    return order


def dimension_exponent(t: LieType) -> int:
    """The exponent e with group_order(t, q) <= q^e for all q >= 2."""
    r = t.rank
    if t.series in (Series.SPLIT_A, Series.TWISTED_A):
        return r * (r + 2)
    if t.series is Series.BC:
        return r * (2 * r + 1)
    return r * (2 * r - 1)


def order_vs_exponent_check(t: LieType, q_max: int) -> bool:
    """Exact check of group_order(t, q) <= q^dimension_exponent(t).

    Runs over every prime power q <= q_max.
    """
    if q_max < 2:
        raise DomainError(f"q_max must be at least 2, got {q_max}")
    e = dimension_exponent(t)
    for q in range(2, q_max + 1):
        if not is_prime_power(q):
            continue
        if group_order(t, q) > q ** e:
            return False
    return True

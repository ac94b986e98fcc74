"""Exact minimal traces in principal congruence subgroups of SL(2, Z).

For level N, an integer t with |t| > 2 is the trace of a hyperbolic
element of the level-N subgroup iff some a = 1 mod N satisfies
a*(t - a) = 1 mod N^2; the witness [[a, N], [(a*(t-a)-1)/N, t-a]] then
has determinant 1 and is congruent to the identity mod N.  A necessary
condition, t = 2 mod N^2, makes the search over t cheap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .length_trace import sl2_length_lower

MAX_LEVEL = 200


@dataclass(frozen=True)
class TraceWitness:
    """A matrix in the level-N subgroup realizing the signed trace."""

    level: int
    trace: int
    matrix: tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class SystoleResult:
    level: int
    t_min: int
    systole: float


@dataclass(frozen=True)
class GrowthTable:
    """Systoles over a level range, their margins over 2*log(N), and the
    least-squares slope of systole against log(N) (None for one row)."""

    rows: tuple[SystoleResult, ...]
    margins: tuple[float, ...]
    slope: float | None


def is_in_gamma(matrix: tuple[tuple[int, int], tuple[int, int]], level: int) -> bool:
    """Membership in the principal congruence subgroup of the level."""
    if level < 1:
        raise DomainError(f"level must be at least 1, got {level}")
    (a, b), (c, d) = matrix
    if a * d - b * c != 1:
        return False
    return (a - 1) % level == 0 and (d - 1) % level == 0 \
        and b % level == 0 and c % level == 0


def _realizing_unit(t: int, level: int) -> int | None:
    """Least a >= 1 with a = 1 mod N and a*(t - a) = 1 mod N^2, or None."""
    nsq = level * level
    for k in range(level):
        a = 1 + k * level
        if (a * (t - a) - 1) % nsq == 0:
            return a
    return None


def min_hyperbolic_trace(level: int) -> TraceWitness:
    """The hyperbolic element of least |trace| in the level-N subgroup.

    Scans |t| = 3, 4, ... with the positive sign first, filtered by the
    congruence t = 2 mod N^2 before the unit search.  Terminates for
    every level because t = N^2 + 2 is realized by [[1, N], [N, N^2+1]].
    """
    if not 1 <= level <= MAX_LEVEL:
        raise DomainError(f"level must be between 1 and {MAX_LEVEL}, got {level}")
    nsq = level * level
    t_abs = 3
    while True:
        for t in (t_abs, -t_abs):
            if (t - 2) % nsq != 0:
                continue
            a = _realizing_unit(t, level)
            if a is None:
                continue
            d = t - a
            matrix = ((a, level), ((a * d - 1) // level, d))
            return TraceWitness(level, t, matrix)
        t_abs += 1


def systole_of_gamma(level: int) -> SystoleResult:
    """Length of the shortest closed geodesic on the level-N cover of the
    modular surface, from the minimal trace."""
    witness = min_hyperbolic_trace(level)
    t_min = abs(witness.trace)
    return SystoleResult(level, t_min, sl2_length_lower(float(t_min)).value)


def growth_table(level_from: int, level_to: int) -> GrowthTable:
    """Systole per level over an inclusive range, with margins over the
    2*log(N) baseline and the fitted slope in log(N)."""
    if not 1 <= level_from <= level_to <= MAX_LEVEL:
        raise DomainError(
            f"levels must satisfy 1 <= from <= to <= {MAX_LEVEL}, "
            f"got {level_from}..{level_to}")
    rows = tuple(systole_of_gamma(n) for n in range(level_from, level_to + 1))
    margins = tuple(r.systole - 2.0 * math.log(r.level) for r in rows)
    slope = None
    if len(rows) > 1:
        logs = np.array([math.log(r.level) for r in rows])
        sys_vals = np.array([r.systole for r in rows])
        slope = float(np.polyfit(logs, sys_vals, 1)[0])
    return GrowthTable(rows, margins, slope)

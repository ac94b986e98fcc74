"""Lower bounds on translation lengths of hyperbolic isometries from traces.

Curvature normalization: the real and complex hyperbolic bounds are stated
for metrics of curvature -1 (holomorphic sectional curvature -4 in the
complex case), and the SL(n,R) bound for the symmetric-space metric under
which the embedded hyperbolic plane has curvature -1.

A trace that is too small to force a positive displacement yields a
flagged zero instead of an error, so bound chains degrade gracefully.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class LengthBound:
    """A translation-length lower bound.

    ``informative`` is False when the input trace carries no information
    (the bound value is then 0).  ``log_form`` carries the weaker purely
    logarithmic variant where one exists, for comparison against the
    arccosh form.
    """

    value: float
    informative: bool
    log_form: float | None = None


def so_length_lower(trace_abs: float, n: int) -> LengthBound:
    """Length bound for a hyperbolic isometry of H^n from |trace| of its
    (n+1) x (n+1) orthogonal representative: 2*log((|tr| - (n-1))/2)."""
    if n < 2:
        raise DomainError(f"hyperbolic dimension must be at least 2, got {n}")
    arg = (trace_abs - (n - 1)) / 2.0
    if arg <= 1.0:
        return LengthBound(0.0, False)
    return LengthBound(2.0 * math.log(arg), True)


def su_length_lower(trace_abs: float, n: int) -> LengthBound:
    """Length bound for complex hyperbolic space of complex dimension n.

    The formula coincides with the real hyperbolic one: the rotational
    eigenvalues sit on the unit circle, leaving 2*log((|tr| - (n-1))/2).
    """
    return so_length_lower(trace_abs, n)


def sl_length_lower(trace_abs: float, n: int) -> LengthBound:
    """Length bound sqrt(2)*arccosh(|tr|/n) for hyperbolic A in SL(n,R).

    The weaker sqrt(2)*log(|tr|/n) is recorded in ``log_form``.
    """
    if n < 2:
        raise DomainError(f"matrix size must be at least 2, got {n}")
    ratio = trace_abs / n
    if ratio <= 1.0:
        return LengthBound(0.0, False)
    return LengthBound(SQRT2 * math.acosh(ratio), True,
                       log_form=SQRT2 * math.log(ratio))


def sl2_length_lower(trace_abs: float) -> LengthBound:
    """Exact translation length 2*arccosh(|tr|/2) of a hyperbolic element
    of SL(2,R).

    This is sharp, not merely a bound, which is what the congruence
    oracle needs; the logarithmic form 2*log(|tr|/2) it dominates is kept
    in ``log_form``.
    """
    ratio = trace_abs / 2.0
    if ratio <= 1.0:
        return LengthBound(0.0, False)
    return LengthBound(2.0 * math.acosh(ratio), True,
                       log_form=2.0 * math.log(ratio))


def length_from_eigenvalue(lambda_modulus: float) -> float:
    """Translation length 2*log|lambda| from the expanding eigenvalue."""
    if lambda_modulus < 1.0:
        raise DomainError(f"expanding eigenvalue must have modulus >= 1, got {lambda_modulus}")
    return 2.0 * math.log(lambda_modulus)

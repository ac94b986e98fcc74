"""The inequality chain from an ideal norm to a systole/volume lower bound.

An arithmetic lattice family is abstracted to the parameters the chain
actually consumes: the symmetric-space family, the degree f of the defining
field over Q, and the size s of the integral matrix embedding.  A prime
ideal is abstracted to (norm, f).  The chain is then

    norm N  ->  trace lower bound N/(2s)^(f-1) - s
            ->  translation-length lower bound (family-specific)
            ->  sys >= A*log(N) - c            (A = 2, or sqrt(2) for SL)
            ->  sys >= C*log(vol) - d          (C = A / dimension exponent)

with every step recorded in a :class:`BoundCertificate` and the constants
c, d, and their validity thresholds made explicit.

The quaternion-algebra admissibility test used to certify lattice data for
the odd-dimensional orthogonal construction lives here as well.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import length_trace
from .errors import DomainError
from .lie_orders import LieType, Series, dimension_exponent


class Family(enum.Enum):
    REAL_HYP_ODD = "so-odd"
    REAL_HYP_EVEN = "so-even"
    COMPLEX_HYP = "su"
    SPECIAL_LINEAR = "sl"


class Subtype(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    MIXED = "mixed"


@dataclass(frozen=True)
class LatticeSpec:
    """Parameters of an arithmetic lattice family.

    ``param`` means m for the orthogonal families (hyperbolic dimension
    2m-1 or 2m), n for complex hyperbolic space, and the matrix size for
    the special linear family.  ``field_degree`` is the degree f over Q
    of the totally real defining field.
    """

    family: Family
    param: int
    field_degree: int = 1
    subtype: Subtype | None = None
    base_volume: float | None = None

    def __post_init__(self) -> None:
        if self.field_degree < 1:
            raise DomainError(f"field degree must be at least 1, got {self.field_degree}")
        if self.family is Family.COMPLEX_HYP:
            if self.param < 2:
                raise DomainError("complex hyperbolic dimension must be at least 2")
            if self.subtype is None:
                raise DomainError("complex hyperbolic lattices need a subtype")
        else:
            if self.subtype is not None:
                raise DomainError(f"subtype is only meaningful for {Family.COMPLEX_HYP}")
            if self.family is Family.SPECIAL_LINEAR:
                if self.param < 2:
                    raise DomainError("special linear matrix size must be at least 2")
            elif self.param < 2:
                raise DomainError("orthogonal family parameter m must be at least 2")
        if self.base_volume is not None and not self.base_volume > 0:
            raise DomainError("base volume must be positive")

    @classmethod
    def real_hyp_odd(cls, m: int, field_degree: int = 1,
                     base_volume: float | None = None) -> "LatticeSpec":
        """SO(1, 2m-1) via the quaternionic construction, embedded in size 4m."""
        return cls(Family.REAL_HYP_ODD, m, field_degree, None, base_volume)

    @classmethod
    def real_hyp_even(cls, m: int, field_degree: int = 1,
                      base_volume: float | None = None) -> "LatticeSpec":
        """SO(1, 2m) via a quadratic form in 2m+1 variables."""
        return cls(Family.REAL_HYP_EVEN, m, field_degree, None, base_volume)

    @classmethod
    def complex_hyp(cls, n: int, subtype: Subtype, field_degree: int = 1,
                    base_volume: float | None = None) -> "LatticeSpec":
        """SU(n, 1), embedded in size 2n+2 by restriction of scalars."""
        return cls(Family.COMPLEX_HYP, n, field_degree, subtype, base_volume)

    @classmethod
    def special_linear(cls, size: int, field_degree: int = 1,
                       base_volume: float | None = None) -> "LatticeSpec":
        """SL(size, R) lattices, embedded at their own matrix size."""
        return cls(Family.SPECIAL_LINEAR, size, field_degree, None, base_volume)

    @property
    def embedding_size(self) -> int:
        """Size s of the integral matrix embedding; the trace chain uses 2s."""
        if self.family is Family.REAL_HYP_ODD:
            return 4 * self.param
        if self.family is Family.REAL_HYP_EVEN:
            return 2 * self.param + 1
        if self.family is Family.COMPLEX_HYP:
            return 2 * self.param + 2
        return self.param

    @property
    def hyperbolic_dimension(self) -> int | None:
        """Dimension n entering the rank-one length bound; None for SL."""
        if self.family is Family.REAL_HYP_ODD:
            return 2 * self.param - 1
        if self.family is Family.REAL_HYP_EVEN:
            return 2 * self.param
        if self.family is Family.COMPLEX_HYP:
            return self.param
        return None


@dataclass(frozen=True)
class IdealData:
    """A prime ideal abstracted to its norm and the field degree f over Q.

    Pass ``prime=True`` to have the norm verified prime by trial division.
    """

    norm: int
    field_degree: int = 1
    prime: bool = False

    def __post_init__(self) -> None:
        if self.norm < 2:
            raise DomainError(f"ideal norm must be at least 2, got {self.norm}")
        if self.field_degree < 1:
            raise DomainError(f"field degree must be at least 1, got {self.field_degree}")
        if self.prime:
            d = 2
            while d * d <= self.norm:
                if self.norm % d == 0:
                    raise DomainError(f"norm {self.norm} flagged prime but divisible by {d}")
                d += 1


@dataclass(frozen=True)
class ExactConstant:
    """A rational number, optionally scaled by sqrt(2), kept exact."""

    rational: Fraction
    sqrt2: bool = False

    def value(self) -> float:
        v = float(self.rational)
        return v * math.sqrt(2.0) if self.sqrt2 else v

    def __str__(self) -> str:
        if not self.sqrt2:
            return str(self.rational)
        p, q = self.rational.numerator, self.rational.denominator
        head = "sqrt(2)" if p == 1 else f"{p}*sqrt(2)"
        return head if q == 1 else f"{head}/{q}"


@dataclass(frozen=True)
class CertStep:
    """One link of a bound chain: a label, the formula used, its value."""

    label: str
    ref: str
    value: float | int


@dataclass(frozen=True)
class BoundCertificate:
    """An ordered, recomputable chain of inequality steps.

    ``final_bound`` equals the value of the last step.  The constants
    express the certified statement: final >= C*log(X) - c for all ideals
    of norm >= threshold, where X is the norm (systole certificates) or
    the volume (volume certificates).
    """

    steps: tuple[CertStep, ...]
    final_bound: float
    C: ExactConstant
    c: float
    threshold: int

    @property
    def informative(self) -> bool:
        return self.final_bound > 0.0

    def to_json_dict(self) -> dict:
        """Serializable form; exact integers become decimal strings."""
        return {
            "steps": [
                {"label": s.label, "ref": s.ref,
                 "value": str(s.value) if isinstance(s.value, int) else s.value}
                for s in self.steps
            ],
            "final_bound": self.final_bound,
            "C": str(self.C),
            "c": self.c,
            "threshold": self.threshold,
        }


def lie_type_of(spec: LatticeSpec) -> LieType:
    """The finite-group series governing reduction modulo an ideal."""
    if spec.family is Family.REAL_HYP_ODD:
        return LieType(Series.TWISTED_D, spec.param)
    if spec.family is Family.REAL_HYP_EVEN:
        return LieType(Series.BC, spec.param)
    if spec.family is Family.COMPLEX_HYP:
        return LieType(Series.TWISTED_A, spec.param)
    return LieType(Series.SPLIT_A, spec.param - 1)


def trace_lower_from_ideal(spec: LatticeSpec, ideal: IdealData) -> float:
    """Lower bound N/(2s)^(f-1) - s for |trace| of a nontrivial element
    of the level-I congruence subgroup.

    The diagonal of such an element is 1 + c_i with all c_i in I, the
    Galois conjugate traces are bounded by the embedding size s by
    compactness, and the norm of the ideal divides the norm of sum(c_i);
    dividing out the conjugate factors leaves the stated bound.
    """
    if ideal.field_degree != spec.field_degree:
        raise DomainError(
            f"ideal field degree {ideal.field_degree} != lattice field degree {spec.field_degree}")
    s = spec.embedding_size
    return ideal.norm / float((2 * s) ** (spec.field_degree - 1)) - s


def explicit_c_constant(spec: LatticeSpec) -> tuple[float, int]:
    """The explicit constant c and threshold N0 in sys >= A*log(N) - c.

    A is 2 for the rank-one families and sqrt(2) for special linear.
    N0 is the least norm at which the linear term N/(2s)^(f-1) reaches
    twice the total subtracted constant, so that inside the logarithm at
    most a factor 2 is given away; c then absorbs that factor:

        rank one:  c = 2*log(4*(2s)^(f-1)),        N0 = 2*(s+n)*(2s)^(f-1)
        SL:        c = sqrt(2)*log(2s*(2s)^(f-1)), N0 = 2*s*(2s)^(f-1)

    For every N >= N0 the certificate's final bound dominates
    A*log(N) - c.
    """
    s = spec.embedding_size
    scale = (2 * s) ** (spec.field_degree - 1)
    if spec.family is Family.SPECIAL_LINEAR:
        return length_trace.SQRT2 * math.log(2 * s * scale), 2 * s * scale
    n = spec.hyperbolic_dimension
    return 2.0 * math.log(4 * scale), 2 * (s + n) * scale


def systole_lower_from_ideal(spec: LatticeSpec, ideal: IdealData) -> BoundCertificate:
    """Certificate chaining the trace bound into the family's length bound.

    The final bound is the systole lower bound in the curvature
    normalization of :mod:`systolic.length_trace`; it is a flagged zero
    whenever the norm is too small for the logarithm to be positive.
    For the special linear family the chain uses the logarithmic form of
    the length bound, which is the one the explicit constant c matches.
    """
    trace = trace_lower_from_ideal(spec, ideal)
    s = spec.embedding_size
    f = spec.field_degree
    c, threshold = explicit_c_constant(spec)
    steps = [
        CertStep("ideal_norm", "N", ideal.norm),
        CertStep("trace_lower", f"N/(2*s)^(f-1) - s with s={s}, f={f}", trace),
    ]
    if spec.family is Family.SPECIAL_LINEAR:
        bound = length_trace.sl_length_lower(max(trace, 0.0), s) if trace > 0 \
            else length_trace.LengthBound(0.0, False)
        value = bound.log_form if bound.informative else 0.0
        steps.append(CertStep("systole_lower", f"sqrt(2)*log(t/{s}) for t > {s}, else 0", value))
        constant = ExactConstant(Fraction(1), sqrt2=True)
    else:
        n = spec.hyperbolic_dimension
        bound = length_trace.so_length_lower(trace, n)
        value = bound.value
        steps.append(CertStep("systole_lower",
                              f"2*log((t - (n-1))/2) with n={n} for t > n+1, else 0", value))
        constant = ExactConstant(Fraction(2))
    return BoundCertificate(tuple(steps), value, constant, c, threshold)


def index_upper_bound(spec: LatticeSpec, ideal: IdealData) -> int:
    """Exact integer N^e bounding the index of the level-I subgroup,
    where e is the dimension exponent of the reduction's group type."""
    return ideal.norm ** dimension_exponent(lie_type_of(spec))


def gromov_constant(spec: LatticeSpec) -> ExactConstant:
    """The constant C in sys >= C*log(vol) - d for the family, exact.

    Values: 4/(n(n+1)) for SO(1,n); 4/(n(n+2)) for SU(n,1) of the first
    type and 2/(n(n+2)) for the other types; sqrt(2)/(n(n+2)) for
    SL(n+1,R).
    """
    if spec.family in (Family.REAL_HYP_ODD, Family.REAL_HYP_EVEN):
        n = spec.hyperbolic_dimension
        return ExactConstant(Fraction(4, n * (n + 1)))
    if spec.family is Family.COMPLEX_HYP:
        n = spec.param
        num = 4 if spec.subtype is Subtype.FIRST else 2
        return ExactConstant(Fraction(num, n * (n + 2)))
    n = spec.param - 1
    return ExactConstant(Fraction(1, n * (n + 2)), sqrt2=True)


def systole_volume_bound(spec: LatticeSpec, ideal: IdealData) -> BoundCertificate:
    """Certificate for sys >= C*log(vol) - d on the level-I cover.

    C here is the chain constant A/e (A = 2 or sqrt(2), e the dimension
    exponent), which is what the recorded steps actually prove; for the
    first-type complex hyperbolic family :func:`gromov_constant` reports
    the stronger published value 4/(n(n+2)) that rests on a sharper trace
    estimate outside this chain.  d = c + C*log(vol(M)) keeps the
    certified inequality equivalent to the norm form, with the same
    threshold.  Below the threshold the certificate is a flagged zero.
    """
    if spec.base_volume is None:
        raise DomainError("volume bound needs base_volume on the lattice spec")
    base = systole_lower_from_ideal(spec, ideal)
    e = dimension_exponent(lie_type_of(spec))
    if spec.family is Family.SPECIAL_LINEAR:
        chain_c = ExactConstant(Fraction(1, e), sqrt2=True)
    else:
        chain_c = ExactConstant(Fraction(2, e))
    c, threshold = explicit_c_constant(spec)
    d = c + chain_c.value() * math.log(spec.base_volume)
    index = index_upper_bound(spec, ideal)
    log_vol_upper = math.log(spec.base_volume) + e * math.log(ideal.norm)
    final = chain_c.value() * log_vol_upper - d if ideal.norm >= threshold else 0.0
    steps = base.steps + (
        CertStep("index_bound", f"N^{e}", index),
        CertStep("volume_log_upper", f"log(vol0) + {e}*log(N) with vol0={spec.base_volume}",
                 log_vol_upper),
        CertStep("volume_form_bound", f"C*volume_log_upper - d with C={chain_c}, d={d}",
                 final),
    )
    return BoundCertificate(steps, final, chain_c, d, threshold)


def quaternion_norm(p: float, q: float, s: float, a: float, b: float) -> float:
    """Reduced norm p^2 - a*q^2 + a*b*s^2 of the element p + q*i + s*k of
    the quaternion algebra with i^2 = a, j^2 = b."""
    return p * p - a * q * q + a * b * s * s


def epsilon_ab(p: float, q: float, s: float, a: float, b: float) -> int:
    """Three-valued sign invariant of an invertible element p + q*i + s*k.

    Returns 1 when b*N > 0; 2 when b*N < 0 and either (b < 0 and p > 0)
    or (b > 0 and (a+1)*q + (a-1)*s*sqrt(b) > 0); 0 otherwise.  N is the
    reduced norm, required nonzero beyond tolerance 1e-12.
    """
    if a == 0 or b == 0:
        raise DomainError("algebra parameters a, b must be nonzero")
    norm = quaternion_norm(p, q, s, a, b)
    if abs(norm) <= 1e-12:
        raise DomainError("element is not invertible (norm vanishes)")
    if b * norm > 0:
        return 1
    if b < 0 and p > 0:
        return 2
    if b > 0 and (a + 1) * q + (a - 1) * s * math.sqrt(b) > 0:
        return 2
    return 0


def check_admissibility(eps_rows: list[list[int]]) -> bool:
    """Row-sum test on a table of epsilon values, one row per embedding.

    The first row (the identity embedding) must sum to exactly 1; every
    other row must sum to 0 or to twice the row length.
    """
    if not eps_rows:
        raise DomainError("epsilon table must have at least one row")
    m = len(eps_rows[0])
    if m < 1:
        raise DomainError("epsilon rows must be nonempty")
    for row in eps_rows:
        if len(row) != m:
            raise DomainError("epsilon table rows must all have the same length")
        for v in row:
            if v not in (0, 1, 2):
                raise DomainError(f"epsilon values must be 0, 1 or 2, got {v}")
    if sum(eps_rows[0]) != 1:
        return False
    return all(sum(row) in (0, 2 * m) for row in eps_rows[1:])

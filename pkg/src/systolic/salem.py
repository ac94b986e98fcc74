"""Complex Salem polynomials: detection, Mahler measure, bounded search.

A monic integer polynomial is treated as complex Salem when it is
irreducible over the rationals, exactly four of its roots lie off the
unit circle and form {l, conj(l), 1/l, 1/conj(l)} with l non-real and
|l| > 1, and every remaining root lies on the circle.  Any such
polynomial is self-reciprocal and has even degree, which the bounded
search exploits.

Numerics are quarantined: cyclotomic factors are stripped by exact
integer division before any root is computed, candidate factors from the
irreducibility search are certified by exact division, and the circle
classification refuses (indeterminate verdict) instead of guessing when
a root lands inside the tolerance band.
"""
from __future__ import annotations

import functools
import itertools
import math
import os
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import DomainError, SearchBudgetError, ToleranceError

DEFAULT_TOL = 1e-8
MAX_DEGREE = 16
BUDGET_ENV = "SYSTOLE_SEARCH_BUDGET"
DEFAULT_BUDGET = 10 ** 8


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coefficients ascending, trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if not c:
            c = (0,)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial((0,))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial | None":
        """Quotient self/divisor when the division is exact, else None.

        The divisor must be monic, which keeps all intermediate values
        integral.
        """
        if divisor.is_zero:
            raise DomainError("division by the zero polynomial")
        if not divisor.is_monic:
            raise DomainError("exact division needs a monic divisor")
        if self.is_zero:
            return IntPolynomial((0,))
        if self.degree < divisor.degree:
            return None
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * (self.degree - dd + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + dd]
            if c == 0:
                continue
            quot[i] = c
            for j, b in enumerate(divisor.coeffs):
                rem[i + j] -= c * b
        if any(rem):
            return None
        return IntPolynomial(tuple(quot))

    def evaluate(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def evaluate_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reciprocal(self) -> "IntPolynomial":
        """z^deg * p(1/z) as an integer polynomial."""
        return IntPolynomial(self.coeffs[::-1])


def poly_from_string(text: str) -> IntPolynomial:
    """Parse the comma-separated ascending coefficient format.

    Rejects empty input, non-integer tokens, the zero polynomial, and a
    zero leading coefficient (the format is canonical).
    """
    parts = [t.strip() for t in text.split(",")]
    if any(not t for t in parts):
        raise DomainError("empty coefficient token")
    coeffs = []
    for t in parts:
        try:
            coeffs.append(int(t))
        except ValueError:
            raise DomainError(f"coefficient is not an integer: {t!r}") from None
    if coeffs[-1] == 0:
        raise DomainError("leading coefficient must be nonzero")
    return IntPolynomial(tuple(coeffs))


def poly_to_string(p: IntPolynomial) -> str:
    return ",".join(str(c) for c in p.coeffs)


def _euler_phi(k: int) -> int:
    out, rem, d = 1, k, 2
    while d * d <= rem:
        if rem % d == 0:
            power = 1
            while rem % d == 0:
                rem //= d
                power *= d
            out *= power - power // d
        d += 1
    if rem > 1:
        out *= rem - 1
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPolynomial:
    """The k-th cyclotomic polynomial, by exact division of x^k - 1."""
    if k < 1:
        raise DomainError(f"cyclotomic index must be positive, got {k}")
    p = IntPolynomial((-1,) + (0,) * (k - 1) + (1,))
    for d in range(1, k):
        if k % d == 0:
            q = p.exact_div(cyclotomic(d))
            assert q is not None
            p = q
    return p


def divide_cyclotomic(p: IntPolynomial) -> tuple[IntPolynomial, tuple[tuple[int, IntPolynomial], ...]]:
    """Strip every cyclotomic factor by exact division.

    Returns (core, removed) with p = core * product of removed factors as
    an exact integer identity; removed lists (k, k-th cyclotomic) with
    multiplicity.  Indices run to 2*deg^2, which covers every k with
    phi(k) <= deg.
    """
    if not p.is_monic:
        raise DomainError("cyclotomic stripping needs a monic polynomial")
    core = p
    removed: list[tuple[int, IntPolynomial]] = []
    k = 1
    while core.degree >= 1 and k <= 2 * core.degree ** 2:
        if _euler_phi(k) <= core.degree:
            q = core.exact_div(cyclotomic(k))
            if q is not None:
                core = q
                removed.append((k, cyclotomic(k)))
                continue
        k += 1
    return core, tuple(removed)


@dataclass(frozen=True)
class RootEntry:
    re: float
    im: float
    multiplicity: int
    residual: float
    classification: str

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    @property
    def circle_distance(self) -> float:
        return abs(abs(self.value) - 1.0)


@dataclass(frozen=True)
class RootProfile:
    """Clustered roots with residuals and circle classification."""

    entries: tuple[RootEntry, ...]
    tol: float

    def expanded(self) -> list[complex]:
        out: list[complex] = []
        for e in self.entries:
            out.extend([e.value] * e.multiplicity)
        return out


def _polish(coeffs: tuple[int, ...], deriv: tuple[int, ...], z: complex) -> tuple[complex, float]:
    def val(cs: tuple[int, ...], w: complex) -> complex:
        acc = 0j
        for c in reversed(cs):
            acc = acc * w + c
        return acc

    best, best_res = z, abs(val(coeffs, z))
    for _ in range(60):
        dv = val(deriv, z)
        if dv == 0:
            break
        step = val(coeffs, z) / dv
        z = z - step
        res = abs(val(coeffs, z))
        if res < best_res:
            best, best_res = z, res
        if abs(step) < 1e-15 * (1.0 + abs(z)):
            break
    return best, best_res


def roots(p: IntPolynomial, tol: float = DEFAULT_TOL) -> RootProfile:
    """All complex roots, Newton-polished against the exact coefficients.

    Roots closer than 1e-5 are merged into one entry carrying the
    multiplicity; classification is on/inside/outside with the circle
    band |abs(root) - 1| <= tol counting as on.
    """
    if p.degree < 1:
        raise DomainError("root profile needs degree at least 1")
    deriv = tuple(i * c for i, c in enumerate(p.coeffs) if i > 0)
    raw = np.roots(p.coeffs[::-1])
    scale = 1.0 + float(sum(abs(c) for c in p.coeffs))
    polished: list[tuple[complex, float]] = []
    for z0 in raw:
        z, res = _polish(p.coeffs, deriv, complex(z0))
        if res > 1e-6 * scale:
            raise ToleranceError(
                f"root polishing stalled at residual {res:.3e} for {poly_to_string(p)}")
        polished.append((z, res))
    clusters: list[list[tuple[complex, float]]] = []
    for z, res in sorted(polished, key=lambda t: (t[0].real, t[0].imag)):
        for cluster in clusters:
            if abs(z - cluster[0][0]) <= 1e-5:
                cluster.append((z, res))
                break
        else:
            clusters.append([(z, res)])
    entries = []
    for cluster in clusters:
        mean = sum(z for z, _ in cluster) / len(cluster)
        residual = max(r for _, r in cluster)
        if abs(abs(mean) - 1.0) <= tol:
            kind = "on"
        elif abs(mean) < 1.0:
            kind = "inside"
        else:
            kind = "outside"
        entries.append(RootEntry(mean.real, mean.imag, len(cluster), residual, kind))
    entries.sort(key=lambda e: (e.re, e.im))
    return RootProfile(tuple(entries), tol)


def _measure_from_profile(p: IntPolynomial, profile: RootProfile) -> float:
    out = float(abs(p.coeffs[-1]))
    for e in profile.entries:
        out *= max(1.0, abs(e.value)) ** e.multiplicity
    return out


def mahler_measure(p: IntPolynomial) -> float:
    """|leading coefficient| times the product of root moduli above 1."""
    if p.is_zero:
        raise DomainError("Mahler measure of the zero polynomial")
    if p.degree == 0:
        return float(abs(p.coeffs[0]))
    return _measure_from_profile(p, roots(p))


def self_reciprocal_check(p: IntPolynomial) -> bool:
    """True iff z^deg * p(1/z) = p(z) exactly (palindromic coefficients)."""
    return p.coeffs == p.coeffs[::-1]


@dataclass(frozen=True)
class SalemVerdict:
    """Outcome of the complex Salem test, with enough context to audit it."""

    poly: IntPolynomial
    core: IntPolynomial
    cyclotomic_removed: tuple[int, ...]
    is_complex_salem: bool
    lam: complex | None
    mahler: float
    irreducibility: str
    indeterminate: bool = False
    diagnostic: str = ""

    def to_json_dict(self) -> dict:
        lam = None
        if self.lam is not None:
            lam = {"re": self.lam.real, "im": self.lam.imag, "abs": abs(self.lam)}
        return {
            "poly": poly_to_string(self.poly),
            "is_complex_salem": self.is_complex_salem,
            "lambda": lam,
            "mahler": self.mahler,
            "cyclotomic_removed": list(self.cyclotomic_removed),
            "irreducibility": self.irreducibility,
            "indeterminate": self.indeterminate,
            "diagnostic": self.diagnostic,
        }


def find_integer_factor(p: IntPolynomial, profile: RootProfile | None = None,
                        tol: float = DEFAULT_TOL) -> IntPolynomial | None:
    """A proper monic integer factor recovered from a root subset, or None.

    Every subset of roots of size <= deg/2 is multiplied out, rounded to
    integer coefficients, and checked by exact division; any true monic
    factor appears among these subsets as long as root errors stay below
    the 1/4 rounding margin, so None certifies irreducibility.
    """
    if p.degree < 2:
        return None
    if profile is None:
        profile = roots(p, tol)
    zs = profile.expanded()
    seen: set[tuple[int, ...]] = set()
    for size in range(1, p.degree // 2 + 1):
        for idx in itertools.combinations(range(len(zs)), size):
            coeffs = [1 + 0j]
            for i in idx:
                shifted = [0j] + coeffs
                for j, c in enumerate(coeffs):
                    shifted[j] -= zs[i] * c
                coeffs = shifted
            rounded = []
            ok = True
            for c in coeffs:
                r = round(c.real)
                if abs(c.real - r) > 0.25 or abs(c.imag) > 0.25:
                    ok = False
                    break
                rounded.append(int(r))
            if not ok:
                continue
            cand = tuple(rounded)
            if cand in seen:
                continue
            seen.add(cand)
            candidate = IntPolynomial(cand)
            if candidate.degree < 1 or candidate.degree >= p.degree:
                continue
            if p.exact_div(candidate) is not None:
                return candidate
    return None


def _conjugate_quadruple(off: list[RootEntry], tol: float) -> tuple[complex | None, str | None]:
    """Extract l from the four off-circle entries, or explain the failure."""
    outside = [e.value for e in off if e.classification == "outside"]
    inside = [e.value for e in off if e.classification == "inside"]
    if len(outside) != 2:
        return None, f"{len(outside)} roots outside the unit circle, need exactly 2"
    lam = max(outside, key=lambda z: z.imag)
    other = min(outside, key=lambda z: z.imag)
    pair_tol = 100.0 * tol
    if abs(lam.imag) <= tol:
        return None, "the off-circle roots are real"
    if abs(other - lam.conjugate()) > pair_tol:
        return None, "outside roots are not a conjugate pair"
    t1, t2 = 1.0 / lam, 1.0 / lam.conjugate()
    a, b = inside
    mismatch = min(max(abs(a - t1), abs(b - t2)), max(abs(a - t2), abs(b - t1)))
    if mismatch > pair_tol:
        return None, "inside roots are not the inverses of the outside pair"
    return lam, None


def is_complex_salem(p: IntPolynomial, tol: float = DEFAULT_TOL) -> SalemVerdict:
    """Full verdict for a monic integer polynomial.

    True requires: no cyclotomic factor, exactly four off-circle roots
    forming the non-real quadruple, all other roots on the circle, and
    irreducibility certified by root-subset reconstruction.  A root in
    the band (tol, 2*tol] from the circle yields an indeterminate
    verdict instead of a guess.
    """
    if not p.is_monic:
        raise DomainError("complex Salem test needs a monic polynomial")
    core, removed_pairs = divide_cyclotomic(p)
    removed = tuple(k for k, _ in removed_pairs)
    if core.degree == 0:
        return SalemVerdict(p, core, removed, False, None, 1.0, "skipped",
                            diagnostic="every irreducible factor is cyclotomic")
    profile = roots(core, tol)
    mahler = _measure_from_profile(core, profile)
    band = [e for e in profile.entries if tol < e.circle_distance <= 2.0 * tol]
    if band:
        worst = min(band, key=lambda e: e.circle_distance)
        return SalemVerdict(
            p, core, removed, False, None, mahler, "skipped", indeterminate=True,
            diagnostic=(f"root near {worst.re:.9g}{worst.im:+.9g}i sits "
                        f"{worst.circle_distance:.3e} from the unit circle, inside the "
                        f"ambiguity band (tol {tol:g})"))
    off = [e for e in profile.entries if e.classification != "on"]
    off_mult = sum(e.multiplicity for e in off)
    lam: complex | None = None
    problem: str | None = None
    if off_mult != 4:
        problem = f"{off_mult} roots off the unit circle, need exactly 4"
    elif any(e.multiplicity != 1 for e in off):
        problem = "off-circle roots are not distinct"
    else:
        lam, problem = _conjugate_quadruple(off, tol)
    if problem is not None:
        return SalemVerdict(p, core, removed, False, None, mahler, "skipped",
                            diagnostic=problem)
    if removed:
        return SalemVerdict(
            p, core, removed, False, lam, mahler, "skipped",
            diagnostic="cyclotomic factors removed: "
                       + ",".join(str(k) for k in removed))
    factor = find_integer_factor(core, profile)
    if factor is not None:
        return SalemVerdict(p, core, removed, False, lam, mahler, "root-subsets",
                            diagnostic=f"reducible: divisible by {poly_to_string(factor)}")
    assert lam is not None
    if abs(mahler - abs(lam) ** 2) > 1e-9 * max(1.0, mahler):
        raise ToleranceError(
            f"Mahler measure {mahler!r} and |lambda|^2 {abs(lam) ** 2!r} disagree "
            f"beyond 1e-9 for {poly_to_string(p)}")
    vacuous = all(e.classification != "on" for e in profile.entries)
    diag = "no roots on the unit circle (degree-4 case)" if vacuous else ""
    return SalemVerdict(p, core, removed, True, lam, mahler, "root-subsets",
                        diagnostic=diag)


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def charge(self, worst_case: int) -> None:
        self.used += 1
        if self.used > self.limit:
            raise SearchBudgetError(
                f"enumeration exceeded the node budget {self.limit}; the current "
                f"call may need up to {worst_case} nodes, rerun with {BUDGET_ENV} "
                f"at least that large")


def _resolve_budget(budget: int | None) -> int:
    if budget is None:
        raw = os.environ.get(BUDGET_ENV)
        if raw is None:
            return DEFAULT_BUDGET
        try:
            budget = int(raw)
        except ValueError:
            raise DomainError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if budget < 1:
        raise DomainError(f"search budget must be positive, got {budget}")
    return budget


def _validate_search_args(degree: int, mahler_max: float) -> None:
    if degree % 2 != 0 or not 4 <= degree <= MAX_DEGREE:
        raise DomainError(f"degree must be even and in [4, {MAX_DEGREE}], got {degree}")
    if not mahler_max > 1.0:
        raise DomainError(f"mahler_max must exceed 1, got {mahler_max}")


def _enumerate_degree(degree: int, mahler_max: float, height: int | None,
                      tol: float, budget: _Budget) -> list[SalemVerdict]:
    d = degree
    h = d // 2
    bounds = [0]
    for i in range(1, h + 1):
        b = int(comb(d, i) * mahler_max + 1e-9)
        if height is not None:
            b = min(b, height)
        bounds.append(b)
    worst = 1
    for b in bounds[1:]:
        worst *= 2 * b + 1
    limits = [0.0] + [
        (d - 4) + 2.0 * (mahler_max ** (k / 2.0) + mahler_max ** (-k / 2.0)) + 1e-9
        for k in range(1, d + 1)
    ]
    coeff = [0] * (d + 1)
    coeff[0] = 1
    sums = [0.0] * (d + 1)
    hits: dict[tuple[int, ...], SalemVerdict] = {}

    def leaf() -> None:
        # coeff[i] holds the coefficient of x^(d-i); extend by palindromy.
        for j in range(h + 1, d + 1):
            coeff[j] = coeff[d - j]
        for k in range(h + 1, d + 1):
            acc = -float(k * coeff[k])
            for i in range(1, k):
                acc -= coeff[i] * sums[k - i]
            if abs(acc) > limits[k]:
                return
            sums[k] = acc
        ascending = tuple(coeff[d - j] for j in range(d + 1))
        if sum(ascending) < 1:
            return
        if sum(c if j % 2 == 0 else -c for j, c in enumerate(ascending)) < 1:
            return
        poly = IntPolynomial(ascending)
        _, removed = divide_cyclotomic(poly)
        if removed:
            return
        verdict = is_complex_salem(poly, tol)
        if verdict.indeterminate:
            raise ToleranceError(
                f"ambiguous circle classification for {poly_to_string(poly)} "
                f"during enumeration; {verdict.diagnostic}")
        if verdict.is_complex_salem and verdict.mahler <= mahler_max * (1.0 + 1e-9):
            hits[poly.coeffs] = verdict

    def descend(k: int) -> None:
        partial = 0.0
        for i in range(1, k):
            partial += coeff[i] * sums[k - i]
        # |s_k| = |-k*v - partial| <= limits[k] solved for v, then boxed.
        lo = max(-bounds[k], math.ceil((-limits[k] - partial) / k))
        hi = min(bounds[k], math.floor((limits[k] - partial) / k))
        for v in range(lo, hi + 1):
            budget.charge(worst)
            coeff[k] = v
            sums[k] = -float(k * v) - partial
            if k == h:
                leaf()
            else:
                descend(k + 1)
        coeff[k] = 0

    descend(1)
    return sorted(hits.values(), key=lambda v: (v.mahler, v.poly.coeffs))


def enumerate_complex_salem(degree: int, mahler_max: float,
                            height_override: int | None = None,
                            budget: int | None = None,
                            tol: float = DEFAULT_TOL) -> list[SalemVerdict]:
    """All complex Salem polynomials of the degree with measure <= mahler_max.

    Exhaustive over monic self-reciprocal integer polynomials whose i-th
    coefficient is bounded by binom(degree, i)*mahler_max (capped at
    height_override when given); branches that no polynomial with the
    target root structure can reach are pruned through Newton power-sum
    bounds.  Node consumption above the budget raises a refusal naming
    the requirement.
    """
    _validate_search_args(degree, mahler_max)
    if height_override is not None and height_override < 0:
        raise DomainError(f"height_override must be nonnegative, got {height_override}")
    return _enumerate_degree(degree, mahler_max, height_override, tol,
                             _Budget(_resolve_budget(budget)))


@dataclass(frozen=True)
class MinimalSearchResult:
    degree_max: int
    mahler_max: float
    best: SalemVerdict | None
    note: str

    def to_json_dict(self) -> dict:
        return {
            "degree_max": self.degree_max,
            "mahler_max": self.mahler_max,
            "found": self.best is not None,
            "verdict": None if self.best is None else self.best.to_json_dict(),
            "note": self.note,
        }


def minimal_complex_salem(degree_max: int, mahler_max: float,
                          budget: int | None = None,
                          tol: float = DEFAULT_TOL) -> MinimalSearchResult:
    """Least Mahler measure over even degrees 4..degree_max, below the cutoff.

    One node budget is shared across the per-degree searches.  The note
    always states the cutoff: minimality is never claimed beyond it.
    """
    if not 4 <= degree_max <= MAX_DEGREE:
        raise DomainError(f"degree_max must lie in [4, {MAX_DEGREE}], got {degree_max}")
    if not mahler_max > 1.0:
        raise DomainError(f"mahler_max must exceed 1, got {mahler_max}")
    shared = _Budget(_resolve_budget(budget))
    best: SalemVerdict | None = None
    for d in range(4, degree_max + 1, 2):
        for verdict in _enumerate_degree(d, mahler_max, None, tol, shared):
            if best is None or (verdict.mahler, verdict.poly.coeffs) \
                    < (best.mahler, best.poly.coeffs):
                best = verdict
    if best is None:
        note = (f"no complex Salem polynomial of even degree <= {degree_max} has "
                f"Mahler measure <= {mahler_max:g}")
    else:
        note = (f"minimal Mahler measure over even degrees 4..{degree_max}; "
                f"exhaustive only below the cutoff {mahler_max:g}")
    return MinimalSearchResult(degree_max, mahler_max, best, note)


@dataclass(frozen=True)
class SystoleBoundResult:
    n: int
    degree_bound: int
    mahler_max: float
    bound: float | None
    witness: SalemVerdict | None
    note: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "degree_bound": self.degree_bound,
            "mahler_max": self.mahler_max,
            "bound": self.bound,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "note": self.note,
        }


def salem_systole_bound(n: int, mahler_max: float, budget: int | None = None,
                        tol: float = DEFAULT_TOL) -> SystoleBoundResult:
    """Uniform geodesic-length lower bound 2*log|l| from the minimal search.

    The relevant eigenvalue of a short hyperbolic isometry is a complex
    Salem number of degree <= 4(n+1) over the rationals, so the minimum
    over that degree range bounds the translation length 2*log|l| from
    below.  The search is exhaustive only up to the Mahler cutoff, and
    the note says so; with no candidate below the cutoff no number is
    emitted.
    """
    if not 1 <= n <= 3:
        raise DomainError(f"n must lie in 1..3 (degree bound 4(n+1) <= {MAX_DEGREE}), got {n}")
    degree_bound = 4 * (n + 1)
    if mahler_max <= 1.0:
        return SystoleBoundResult(
            n, degree_bound, mahler_max, None, None,
            "no Salem number has Mahler measure <= 1; no bound emitted")
    search = minimal_complex_salem(degree_bound, mahler_max, budget, tol)
    if search.best is None:
        return SystoleBoundResult(
            n, degree_bound, mahler_max, None, None,
            f"no complex Salem polynomial of degree <= {degree_bound} has Mahler "
            f"measure <= {mahler_max:g}; lengths below 2*log(sqrt({mahler_max:g})) "
            f"are ruled out only for eigenvalues within this cutoff")
    lam = search.best.lam
    assert lam is not None
    bound = 2.0 * math.log(abs(lam))
    return SystoleBoundResult(
        n, degree_bound, mahler_max, bound, search.best,
        f"lower bound 2*log|lambda| for closed geodesics whose eigenvalue is a "
        f"complex Salem number of degree <= {degree_bound}; minimal only below "
        f"the Mahler cutoff {mahler_max:g}")

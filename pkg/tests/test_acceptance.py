"""Acceptance gate: eight criteria, one printed pass/fail line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines; each criterion also carries its runtime ceiling.
"""
from __future__ import annotations

import math
import random
import time
from fractions import Fraction

from systolic import (
    ExactConstant,
    Family,
    IdealData,
    IntPolynomial,
    LatticeSpec,
    LieType,
    Series,
    Subtype,
    check_admissibility,
    dimension_exponent,
    enumerate_complex_salem,
    epsilon_ab,
    explicit_c_constant,
    gromov_constant,
    group_order,
    is_complex_salem,
    is_in_gamma,
    is_prime_power,
    min_hyperbolic_trace,
    roots,
    self_reciprocal_check,
    systole_lower_from_ideal,
    systole_of_gamma,
)
from ._brute import (
    min_hyperbolic_trace_in_ball,
    sl2_count,
    sl2z_ball,
    sl3_count,
    sp4_count_q2,
    su3_count_q2,
)


def _report(k: int, description: str, limit_s: float, fn) -> None:
    t0 = time.perf_counter()
    try:
        fn()
        elapsed = time.perf_counter() - t0
        assert elapsed < limit_s, f"runtime {elapsed:.1f}s exceeds {limit_s:.0f}s"
    except Exception as exc:
        print(f"[FAIL] criterion {k}: {description} -- {exc!r}")
        raise
    print(f"[PASS] criterion {k}: {description} ({elapsed:.1f}s)")


def test_criterion_1_orders_vs_brute_force():
    def check():
        assert group_order(LieType(Series.SPLIT_A, 1), 2) == sl2_count(2) == 6
        assert group_order(LieType(Series.SPLIT_A, 1), 3) == sl2_count(3) == 24
        assert group_order(LieType(Series.SPLIT_A, 2), 2) == sl3_count(2) == 168
        assert group_order(LieType(Series.TWISTED_A, 2), 2) == su3_count_q2() == 216
        assert group_order(LieType(Series.BC, 2), 2) == sp4_count_q2() == 720

    _report(1, "order formulas equal exhaustive matrix-group counts", 60.0, check)


def test_criterion_2_gromov_constants_exact():
    def check():
        for m in range(2, 7):
            n = 2 * m - 1
            assert gromov_constant(LatticeSpec.real_hyp_odd(m)) == \
                ExactConstant(Fraction(4, n * (n + 1)))
            n = 2 * m
            assert gromov_constant(LatticeSpec.real_hyp_even(m)) == \
                ExactConstant(Fraction(4, n * (n + 1)))
        for n in range(2, 7):
            assert gromov_constant(LatticeSpec.complex_hyp(n, Subtype.FIRST)) == \
                ExactConstant(Fraction(4, n * (n + 2)))
            assert gromov_constant(LatticeSpec.complex_hyp(n, Subtype.SECOND)) == \
                ExactConstant(Fraction(2, n * (n + 2)))
            assert gromov_constant(LatticeSpec.complex_hyp(n, Subtype.MIXED)) == \
                ExactConstant(Fraction(2, n * (n + 2)))
        for size in range(2, 8):
            n = size - 1
            assert gromov_constant(LatticeSpec.special_linear(size)) == \
                ExactConstant(Fraction(1, n * (n + 2)), sqrt2=True)
        # the rank-one special linear value at n = 1
        assert gromov_constant(LatticeSpec.special_linear(2)) == \
            ExactConstant(Fraction(1, 3), sqrt2=True)

    _report(2, "volume-form constants reproduce exactly in rational arithmetic",
            10.0, check)


def test_criterion_3_reference_polynomials():
    def check():
        polys = [
            IntPolynomial((1, 1, 1, -1, 1, 1, 1)),
            IntPolynomial((1, 0, 0, 1, 1, 1, 0, 0, 1)),
            IntPolynomial((1, 1, 0, 0, 0, -1, 0, 0, 0, 1, 1)),
        ]
        for p in polys:
            verdict = is_complex_salem(p)
            assert verdict.is_complex_salem
            assert self_reciprocal_check(p)
            profile = roots(p)
            assert all(e.residual <= 1e-9 for e in profile.entries)

    _report(3, "degree 6/8/10 reference polynomials verify as complex Salem",
            5.0, check)


def test_criterion_4_search_recovers_references():
    def check():
        t0 = time.perf_counter()
        out6 = enumerate_complex_salem(6, 100.0, height_override=1)
        assert time.perf_counter() - t0 < 120.0
        assert any(v.poly.coeffs == (1, 1, 1, -1, 1, 1, 1) for v in out6)
        t0 = time.perf_counter()
        out8 = enumerate_complex_salem(8, 100.0, height_override=1)
        assert time.perf_counter() - t0 < 120.0
        assert any(v.poly.coeffs == (1, 0, 0, 1, 1, 1, 0, 0, 1) for v in out8)

    _report(4, "height-1 exhaustive search recovers both reference polynomials",
            240.0, check)


def test_criterion_5_modular_growth():
    def check():
        logs, sys_vals = [], []
        for n in range(2, 51):
            witness = min_hyperbolic_trace(n)
            result = systole_of_gamma(n)
            assert result.systole >= 2.0 * math.log(n)
            assert (witness.trace - 2) % (n * n) == 0
            assert is_in_gamma(witness.matrix, n)
            logs.append(math.log(n))
            sys_vals.append(result.systole)
        mean_x = sum(logs) / len(logs)
        mean_y = sum(sys_vals) / len(sys_vals)
        slope = sum((x - mean_x) * (y - mean_y) for x, y in zip(logs, sys_vals)) \
            / sum((x - mean_x) ** 2 for x in logs)
        assert 3.8 <= slope <= 4.2, f"slope {slope}"
        ball = sl2z_ball(14)
        for n in range(1, 7):
            brute = min_hyperbolic_trace_in_ball(ball, n)
            assert brute is not None
            assert brute >= abs(min_hyperbolic_trace(n).trace)

    _report(5, "congruence systoles grow at 4*log(N) and word search finds "
               "nothing smaller", 60.0, check)


def test_criterion_6_bound_chain_soundness():
    def check():
        rng = random.Random(2026)
        base_specs = [
            (Family.REAL_HYP_ODD, 2, None),
            (Family.REAL_HYP_EVEN, 2, None),
            (Family.COMPLEX_HYP, 2, Subtype.FIRST),
            (Family.COMPLEX_HYP, 2, Subtype.SECOND),
            (Family.SPECIAL_LINEAR, 2, None),
            (Family.SPECIAL_LINEAR, 3, None),
        ]
        for family, param, subtype in base_specs:
            for f in (1, 2):
                spec = LatticeSpec(family, param, f, subtype)
                c, threshold = explicit_c_constant(spec)
                a = math.sqrt(2.0) if family is Family.SPECIAL_LINEAR else 2.0
                s = spec.embedding_size
                lo, hi = math.log(threshold), math.log(10 ** 6)
                norms = {threshold, 10 ** 6}
                while len(norms) < 1000:
                    norms.add(round(math.exp(rng.uniform(lo, hi))))
                prev_norm, prev_bound = None, None
                for n in sorted(norms):
                    cert = systole_lower_from_ideal(spec, IdealData(n, f))
                    # step coherence at 1e-12 relative
                    trace = n / float((2 * s) ** (f - 1)) - s
                    assert abs(cert.steps[1].value - trace) <= 1e-12 * abs(trace)
                    assert cert.final_bound == cert.steps[-1].value
                    # soundness of the explicit constant
                    assert cert.final_bound >= a * math.log(n) - c - 1e-9
                    # monotonicity in the norm
                    if prev_bound is not None:
                        assert cert.final_bound >= prev_bound - 1e-12
                    prev_norm, prev_bound = n, cert.final_bound

    _report(6, "certificates are coherent, monotone, and dominate A*log(N) - c",
            10.0, check)


def test_criterion_7_index_bound_consistency():
    def check():
        ranks = {
            Series.SPLIT_A: range(1, 7),
            Series.TWISTED_A: range(2, 7),
            Series.BC: range(2, 6),
            Series.SPLIT_D: range(4, 6),
            Series.TWISTED_D: range(4, 6),
        }
        for series, rank_range in ranks.items():
            for rank in rank_range:
                t = LieType(series, rank)
                e = dimension_exponent(t)
                for q in (2, 3, 4, 5, 7, 8, 9):
                    assert is_prime_power(q)
                    assert group_order(t, q) <= q ** e

    _report(7, "group orders never exceed q^(dimension exponent)", 10.0, check)


def test_criterion_8_epsilon_admissibility():
    def check():
        assert epsilon_ab(1, 0, 0, -1, -1) == 2
        assert epsilon_ab(1, 0, 0, 2, 3) == 1
        assert epsilon_ab(0, -1, 0, 2, 1) == 0
        rng = random.Random(2027)
        for _ in range(100):
            m = rng.randint(1, 6)
            rows = [[rng.choice((0, 1, 2)) for _ in range(m)]
                    for _ in range(rng.randint(1, 5))]
            expected = sum(rows[0]) == 1 and all(
                sum(r) in (0, 2 * m) for r in rows[1:])
            assert check_admissibility(rows) is expected

    _report(8, "epsilon cases give {2,1,0} and admissibility matches row sums",
            10.0, check)

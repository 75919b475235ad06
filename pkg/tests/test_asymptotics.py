import cmath
import math

import mpmath
import pytest

from conftest import TEST_SPECS
from wrt_torus.asymptotics import (A_breakdown, A_via_H, A_via_Stilde, B_of_n, assemble, b_range,
                                   convergence_sweep, expansion_report, g_term, loglog_slope,
                                   normalized_residual, sum_l_identity_check, vanishing_sum_check,
                                   window_stats)
from wrt_torus.errors import DegenerateError, ValidationError
from wrt_torus.numtheory import SurgerySpec

S237 = SurgerySpec(2, 3, 7)
S2313 = SurgerySpec(2, 3, 13)
S3519 = SurgerySpec(3, 5, 19)


def test_g_term_symmetries():
    # the g-reflection sign (-1)^{ab+m+1} uses the St parity g = p - m mod 2
    for spec in TEST_SPECS:
        ab, N = spec.ab, spec.N
        for n in (3, 7, 15):
            for g in range(0, 2 * N + 1):
                for m in range(0, 2 * ab + 1):
                    G = g_term(g, m, n, spec)
                    if (g - spec.p + m) % 2 == 0:
                        assert abs(g_term(2 * N - g, m, n, spec) - (-1) ** (ab + m + 1) * G) < 1e-12
                    assert abs(g_term(g, 2 * ab - m, n, spec) - (-1) ** (ab + m) * G) < 1e-12
                    if g % N == 0:
                        assert G == 0


def test_A_trivial_when_p_minus_ab_is_1():
    for n in (3, 5, 51):
        assert A_via_Stilde(n, S237) == 0
        assert A_via_H(n, S237) == 0


def test_A_oracles():
    want = complex(0.2078759068158631104409591019610886629762, -0.554578510231206642849627769552989781476)
    assert abs(A_via_Stilde(5, S2313) - want) < 1e-13
    assert abs(A_via_H(5, S2313) - want) < 1e-13
    want = complex(-0.2648438485124005708280197014861714470445, -0.2581337301972069433314352433271810700977)
    assert abs(A_via_Stilde(3, S3519) - want) < 1e-13
    assert abs(A_via_H(3, S3519) - want) < 1e-13
    hi = A_via_H(3, S3519, precision=150)
    with mpmath.workprec(150):
        assert abs(hi - mpmath.mpc("-0.2648438485124005708280197014861714470445",
                                   "-0.2581337301972069433314352433271810700977")) < mpmath.mpf(10) ** -36


def test_A_dual_on_other_specs():
    for spec in TEST_SPECS:
        for n in range(3, 100, 2):
            assert abs(A_via_H(n, spec) - A_via_Stilde(n, spec)) < 1e-10


def test_B_oracles():
    assert list(b_range(S237)) == [1, 2, 3]
    want = complex(-0.09654821485689689915484357815993673350023, 0.4230053679075239674069537242505172850493)
    assert abs(B_of_n(5, S237) - want) < 1e-13
    want = complex(-0.6110803689170376769656015402361047984943, -0.1112155346274754642611758382962189217017)
    assert abs(B_of_n(3, S2313) - want) < 1e-13


def test_B_modulus_prefactor():
    # the unit prefactor e^{n(1-p) pi i/4} does not change |B|; compare n and n+8p,
    # which share every l-phase and differ only in that prefactor
    for spec in (S237, S2313, S3519):
        for n in (3, 5, 9):
            assert abs(abs(B_of_n(n, spec)) - abs(B_of_n(n + 8 * spec.p, spec))) < 1e-12


def test_report_consistency():
    rep = expansion_report(S2313.with_n(3))
    assert abs(rep.approx - assemble(3, 13, rep.A, rep.B)) == 0
    assert rep.residual >= 0
    assert rep.residual == normalized_residual(3, 13, rep.tau_exact, rep.A, rep.B)
    assert abs(sum(t for *_, t in rep.irr_terms) - rep.A) < 1e-14
    row = rep.csv_row()
    assert list(row) == ["n", "tau_re", "tau_im", "A_re", "A_im", "B_re", "B_im", "residual", "n_times_residual"]
    js = rep.to_json()
    assert {"tau", "A", "B", "approx", "residual", "irreducible_terms", "abelian_terms"} <= set(js)
    assert len(js["irreducible_terms"]) == len(A_breakdown(3, S2313))


def test_report_trend_3519():
    r5 = expansion_report(S3519.with_n(5)).residual
    r51 = expansion_report(S3519.with_n(51)).residual
    assert math.isfinite(r51) and r51 < 10 * r5


def test_report_237_n101():
    rep = expansion_report(S237.with_n(101))
    assert rep.A == 0
    assert rep.residual < 1.0 / 101


def test_sweep_small():
    res = convergence_sweep(S2313, range(51, 102, 2))
    assert [r.n for r in res.reports] == list(range(51, 102, 2))
    assert -1.5 <= res.slope <= -0.5
    again = convergence_sweep(S2313, range(51, 102, 2), workers=2)
    assert [r.residual for r in again.reports] == [r.residual for r in res.reports]
    with pytest.raises(ValidationError):
        convergence_sweep(S2313, [51])
    with pytest.raises(ValidationError):
        convergence_sweep(S2313, [51, 52])


def test_slope_and_windows():
    ns = [10, 20, 40, 80]
    assert abs(loglog_slope(ns, [1 / n for n in ns]) + 1) < 1e-12
    assert window_stats([1, 2, 3, 4, 5], [1, 2, 3, 4, 5]) == (1.5, 4, 2, 5)


@pytest.mark.parametrize("a,b,n", [(2, 3, 5), (3, 5, 7)])
def test_vanishing_examples(a, b, n):
    for parity in ("even", "odd"):
        assert abs(vanishing_sum_check(a, b, n, parity)) < 1e-12


def test_vanishing_rejects_bad_input():
    with pytest.raises(ValidationError):
        vanishing_sum_check(2, 4, 5, "even")
    with pytest.raises(ValidationError):
        vanishing_sum_check(2, 3, 4, "even")


def test_sum_l_examples():
    z = 0.3 + 0.4j
    h = 0.1 - 0.2j
    lhs, rhs = sum_l_identity_check(2, 1, z, h)
    assert abs(lhs - cmath.exp(-2 * z) * cmath.sinh(2 * h)) < 1e-14
    assert abs(lhs - rhs) < 1e-12
    lhs, rhs = sum_l_identity_check(2, 5, 0.3 + 0.4j, 1j * math.pi / 7)
    assert abs(lhs - rhs) <= 1e-10
    lhs, rhs = sum_l_identity_check(3, 4, 0.1 + 0.9j, 1j * math.pi / 11)
    assert abs(lhs - rhs) <= 1e-10
    with pytest.raises(DegenerateError):
        sum_l_identity_check(2, 3, 0.5, 0.5)

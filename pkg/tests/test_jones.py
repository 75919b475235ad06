import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from wrt_torus.errors import PoleError, ValidationError
from wrt_torus.jones import KnotParam, alexander, colored_jones, jones_at_root, jtilde, jtilde_sum
from wrt_torus.phase import PhaseUnit, to_complex

TREFOIL = KnotParam(2, 3)


def test_knot_param_validation():
    with pytest.raises(ValidationError):
        KnotParam(2, 4)
    with pytest.raises(ValidationError):
        KnotParam(0, 3)


@pytest.mark.parametrize("q", [PhaseUnit(4, 7), PhaseUnit(2, 9), 2.0, 0.3 + 0.1j])
def test_k1_is_one(q):
    for a, b in [(2, 3), (3, 5), (4, 7)]:
        assert abs(colored_jones(1, KnotParam(a, b), q) - 1) < 1e-13


def test_k2_trefoil_expansion():
    assert abs(colored_jones(2, TREFOIL, 2.0) - 9 / 16) < 1e-14
    for q in (PhaseUnit(4, 11), PhaseUnit(3, 8)):
        z = to_complex(q)
        assert abs(colored_jones(2, TREFOIL, q) - (z ** -1 + z ** -3 - z ** -4)) < 1e-13


def test_k3_trefoil_oracle():
    # independent 150-bit evaluation
    want = complex(-2.123489801858733530525004884004239810632, -2.972474616235441344910789069190405472307)
    assert abs(colored_jones(3, TREFOIL, PhaseUnit(4, 7)) - want) < 1e-13
    hi = colored_jones(3, TREFOIL, PhaseUnit(4, 7), precision=150)
    with mpmath.workprec(150):
        err = abs(hi - mpmath.mpc("-2.123489801858733530525004884004239810632",
                                  "-2.972474616235441344910789069190405472307"))
    assert err < mpmath.mpf(10) ** -38


def test_pole():
    with pytest.raises(PoleError):
        colored_jones(7, TREFOIL, PhaseUnit(4, 7))
    with pytest.raises(PoleError):
        jones_at_root(5, TREFOIL, 5)
    with pytest.raises(PoleError):
        colored_jones(2, TREFOIL, 1.0)


@pytest.mark.parametrize("a,b,n,k", [(2, 3, 5, 2), (3, 5, 7, 3), (2, 3, 7, 1)])
def test_dual_path_examples(a, b, n, k):
    knot = KnotParam(a, b)
    assert abs(jones_at_root(k, knot, n) - colored_jones(k, knot, PhaseUnit(4, n))) < 1e-12


def test_jones_at_root_k1():
    assert abs(jones_at_root(1, KnotParam(3, 7), 9) - 1) < 1e-14


def test_symmetry_and_conjugation():
    for a, b in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (5, 7), (2, 7)]:
        for n in range(3, 50, 2):
            for k in range(1, 13):
                if 2 * k % n == 0:
                    continue
                q = PhaseUnit(4, n)
                j = colored_jones(k, KnotParam(a, b), q)
                assert abs(j - colored_jones(k, KnotParam(b, a), q)) < 1e-12
                assert abs(colored_jones(k, KnotParam(a, b), q.conjugate()) - j.conjugate()) < 1e-12


def test_jtilde_consistency():
    knot = KnotParam(3, 5)
    n = 11
    q = PhaseUnit(4, n)
    for k in range(1, 9):
        # jtilde_sum(k) = sin(2k pi/n) e^{ab(k^2-1) pi i/n} J_k(e^{4 pi i/n}) = jtilde / (2i)
        via_q = jtilde(k, knot, q) / 2j
        assert abs(jtilde_sum(k, knot, n) - via_q) < 1e-12


def test_jtilde_sum_precision_paths_agree():
    knot = KnotParam(2, 7)
    lo = jtilde_sum(17, knot, 41)
    hi = jtilde_sum(17, knot, 41, precision=120)
    assert abs(lo - complex(hi)) < 1e-13


def test_vanishing_factor_identity():
    # sum over a full period of l vanishes when ab is even
    for a, b in [(2, 3), (2, 5), (4, 3), (2, 7), (6, 5)]:
        for n in range(3, 100, 2):
            s = sum(to_complex(PhaseUnit(b * l * (a * l + 2), n))
                    * (to_complex(PhaseUnit(2 * (a * l + 1), n)) - to_complex(PhaseUnit(-2 * (a * l + 1), n)))
                    for l in range(n))
            assert abs(s) < 1e-10


def test_alexander_examples():
    assert abs(alexander(TREFOIL, 2.0) - 1.5) < 1e-14
    for a, b in [(2, 3), (3, 5), (4, 7)]:
        assert alexander(KnotParam(a, b), 1) == 1
        assert alexander(KnotParam(a, b), PhaseUnit(0, 1)) == 1
    z = alexander(KnotParam(2, 5), PhaseUnit(2, 7))
    assert abs(z - (-0.6920214716300958696278148970020691401973)) < 1e-13


def test_alexander_pole():
    with pytest.raises(PoleError):
        alexander(TREFOIL, PhaseUnit(1, 1))  # t = -1 makes t^{a/2} - t^{-a/2} vanish for a = 2


@settings(max_examples=60)
@given(st.floats(0.2, 5.0), st.floats(-3.0, 3.0))
def test_alexander_reciprocal_symmetry(r, theta):
    t = cmath.rect(r, theta)
    for knot in (TREFOIL, KnotParam(3, 5)):
        try:
            u, v = alexander(knot, t), alexander(knot, 1 / t)
        except PoleError:
            continue
        if abs(u) > 1e6:
            continue
        assert abs(u - v) <= 1e-9 * max(1.0, abs(u))


def test_alexander_is_polynomial():
    # T(2,3): t - 1 + 1/t
    for t in (0.5, 3.0, 1.5 + 0.5j):
        assert abs(alexander(TREFOIL, t) - (t - 1 + 1 / t)) < 1e-12

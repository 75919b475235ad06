import math

import mpmath
import pytest

from wrt_torus.numtheory import SurgerySpec
from wrt_torus.phase import complex_to_json
from wrt_torus.wrt import omega_unknot_plus, tau_hat, tau_prefactor

# independent 150-bit double-sum oracle (k and j loops inlined)
ORACLE = {
    (2, 3, 7, 3): ("1", "0"),
    (2, 3, 7, 5): ("0.1909830056250525758977065828171809411398", "0.5877852522924731291687059546390727685977"),
    (3, 5, 19, 3): ("1", "0"),
    (3, 5, 19, 5): ("0.8090169943749474241022934171828190588602", "-0.5877852522924731291687059546390727685977"),
    (2, 3, 13, 9): ("-1.737825950142842489661287228990981491744", "-1.166792870145309240042266965977940035616"),
}


@pytest.mark.parametrize("key", sorted(ORACLE))
def test_tau_oracle_binary64(key):
    re, im = ORACLE[key]
    got = tau_hat(SurgerySpec(*key)).value
    assert abs(got - complex(float(re), float(im))) < 1e-12


@pytest.mark.parametrize("key", sorted(ORACLE))
def test_tau_oracle_150_bits(key):
    re, im = ORACLE[key]
    got = tau_hat(SurgerySpec(*key), precision=150).value
    with mpmath.workprec(150):
        assert abs(got - mpmath.mpc(re, im)) < mpmath.mpf(10) ** -36


def test_tau_is_deterministic():
    s = SurgerySpec(3, 5, 19, 41)
    assert tau_hat(s).value == tau_hat(s).value


def test_workers_do_not_change_value():
    s = SurgerySpec(2, 5, 13, 61)
    assert tau_hat(s, workers=3).value == tau_hat(s, workers=1).value


def test_swap_invariance():
    for a, b, p in [(2, 3, 7), (3, 5, 17), (4, 5, 23)]:
        for n in (5, 11, 31):
            x = tau_hat(SurgerySpec(a, b, p, n)).value
            y = tau_hat(SurgerySpec(b, a, p, n)).value
            assert abs(x - y) < 1e-12


def test_precision_stability():
    for a, b, p, n in [(2, 3, 7, 501), (3, 5, 19, 301), (2, 5, 13, 199)]:
        lo = tau_hat(SurgerySpec(a, b, p, n)).value
        hi = tau_hat(SurgerySpec(a, b, p, n), precision=150).value
        assert abs(lo - complex(hi)) <= 1e-10 * abs(complex(hi))


def test_omega_examples():
    for n in (3, 5, 7):
        s, c = omega_unknot_plus(n)
        assert abs(s - c) < 1e-12


def test_omega_all_odd():
    for n in range(3, 200, 2):
        s, c = omega_unknot_plus(n)
        assert abs(s - c) < 1e-10


def test_prefactor_n3():
    z = tau_prefactor(3)
    assert abs(abs(z) - 1 / (math.sqrt(3) * math.sin(2 * math.pi / 3))) < 1e-15


def test_json_shape():
    tv = tau_hat(SurgerySpec(2, 3, 7, 5))
    assert tv.to_json() == {"tau": complex_to_json(tv.value)}
    with pytest.raises(Exception):
        tau_hat(SurgerySpec(2, 3, 7))

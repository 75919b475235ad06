import math

from wrt_torus.numtheory import SurgerySpec


def small_specs(a_max=5, b_max=9, p_max=61):
    """Every valid (a,b,p) with a <= a_max, b <= b_max, ab < p <= p_max."""
    out = []
    for a in range(2, a_max + 1):
        for b in range(2, b_max + 1):
            if math.gcd(a, b) != 1:
                continue
            for p in range(a * b + 1, p_max + 1):
                if math.gcd(p, a * b) == 1:
                    out.append(SurgerySpec(a, b, p))
    return out


TEST_SPECS = [SurgerySpec(*t) for t in [(2, 3, 7), (2, 3, 13), (3, 5, 19), (2, 5, 13), (4, 3, 17),
                                        (2, 5, 17), (2, 7, 23), (3, 5, 16)]]

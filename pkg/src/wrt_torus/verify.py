"""Golden examples and property checks run by ``wrt-torus verify``.

Each check returns ``(ok, detail)``.  Checks are grouped so the command
line can run a subset.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, NamedTuple, Optional

from .asymptotics import A_via_H, A_via_Stilde, sum_l_identity_check, vanishing_sum_check
from .indexsets import (enumerate_H, enumerate_Q, enumerate_R, gamma, partition_H, partition_R,
                        theta, tilde_gamma, tilde_theta)
from .jones import KnotParam, colored_jones, jones_at_root
from .numtheory import SurgerySpec, gauss_sum, reciprocity_check
from .phase import PhaseUnit
from .reps import a2_region_su2, classify_rep, RepClass
from .wrt import omega_unknot_plus


class Check(NamedTuple):
    group: str
    name: str
    anchor: str
    run: Callable[[], tuple]


def _eq(got, want):
    if got == want:
        return True, "match"
    return False, f"got {got}, expected {want}"


def _swap_kl(labels):
    return sorted((h, l, k) for h, k, l in labels)


S3519 = SurgerySpec(3, 5, 19)
S4317 = SurgerySpec(4, 3, 17)


def _gamma_table(spec, sign):
    return {(k, l): gamma(sign, k, l, spec) for k in range(1, spec.a) for l in range(1, spec.b)
            if (k - l) % 2 == 0}


def _index_set_checks():
    s = S3519
    H = [(1, 1, 1), (1, 1, 3), (2, 2, 2), (2, 2, 4), (3, 1, 1), (3, 1, 3)]
    R = [(1, 2), (1, 4), (1, 8), (1, 14), (2, 1), (2, 7), (2, 11), (2, 13),
         (3, 2), (3, 4), (3, 8), (3, 14)]
    gt_plus = {(1, 1, 1): (3, 14), (1, 1, 3): (3, 2), (2, 2, 2): (2, 13), (2, 2, 4): (2, 1),
               (3, 1, 1): (1, 14), (3, 1, 3): (1, 2)}
    gt_minus = {(1, 1, 1): (3, 4), (1, 1, 3): (3, 8), (2, 2, 2): (2, 7), (2, 2, 4): (2, 11),
                (3, 1, 1): (1, 4), (3, 1, 3): (1, 8)}
    anchor = "worked example (a,b,p)=(3,5,19)"
    yield Check("index-sets", "H(3,5,19)", anchor, lambda: _eq([tuple(x) for x in enumerate_H(s)], H))
    yield Check("index-sets", "R(3,5,19)", anchor, lambda: _eq([tuple(x) for x in enumerate_R(s)], R))
    yield Check("index-sets", "Q+/Q- (3,5)", anchor,
                lambda: _eq((enumerate_Q(s, 1), enumerate_Q(s, -1)), ([1, 2, 13, 14], [4, 7, 8, 11])))
    yield Check("index-sets", "Gamma+ (3,5)", anchor,
                lambda: _eq(_gamma_table(s, 1), {(1, 1): 1, (1, 3): 13, (2, 2): 2, (2, 4): 14}))
    yield Check("index-sets", "Gamma- (3,5)", anchor,
                lambda: _eq(_gamma_table(s, -1), {(1, 1): 4, (1, 3): 7, (2, 2): 8, (2, 4): 11}))
    yield Check("index-sets", "Theta+- (3,5)", anchor,
                lambda: _eq((theta(1, 13, s), theta(-1, 8, s)), ((1, 3), (2, 2))))
    yield Check("index-sets", "tilde Gamma+ (3,5,19)", anchor,
                lambda: _eq({tuple(x): tuple(tilde_gamma(1, x, s)) for x in enumerate_H(s)}, gt_plus))
    yield Check("index-sets", "tilde Gamma- (3,5,19)", anchor,
                lambda: _eq({tuple(x): tuple(tilde_gamma(-1, x, s)) for x in enumerate_H(s)}, gt_minus))
    yield Check("index-sets", "tilde Theta inverts tilde Gamma (3,5,19)", anchor,
                lambda: _eq(all(tuple(tilde_theta(sg, pt, s)) == h
                                for sg, tab in ((1, gt_plus), (-1, gt_minus)) for h, pt in tab.items()),
                            True))

    def r_parts():
        P = partition_R(s)
        return [sorted(map(tuple, x)) for x in P]

    # The minus-sign triangles follow the defining inequality m/ab < g/(p-ab);
    # (2,7) satisfies 7/15 < 2/4 and so lies in the Delta part.
    yield Check("index-sets", "R partition (3,5,19)", anchor + " (minus parts from the defining inequality)",
                lambda: _eq(r_parts(), [[(1, 2), (2, 1), (3, 2)], [(1, 14), (2, 13), (3, 14)],
                                        [(2, 7), (3, 4), (3, 8)], [(1, 4), (1, 8), (2, 11)]]))

    def h_parts(spec):
        return [sorted(map(tuple, x)) for x in partition_H(spec)]

    yield Check("index-sets", "H partition (3,5,19)", "worked example (a,b,p)=(3,5,19), classification section",
                lambda: _eq(h_parts(s), [[(1, 1, 3), (2, 2, 4), (3, 1, 3)], [(1, 1, 1), (2, 2, 2), (3, 1, 1)],
                                         [(1, 1, 1), (1, 1, 3), (2, 2, 2)], [(2, 2, 4), (3, 1, 1), (3, 1, 3)]]))
    yield Check("index-sets", "H+Delta meets H-Delta in {(1,1,3)}", anchor,
                lambda: _eq(sorted(set(map(tuple, partition_H(s).plus_delta))
                                   & set(map(tuple, partition_H(s).minus_delta))), [(1, 1, 3)]))
    t = S4317
    anchor4 = "worked example (a,b,p)=(4,3,17), labels written with k and l exchanged"
    yield Check("index-sets", "H(4,3,17)", anchor4,
                lambda: _eq(_swap_kl(enumerate_H(t)),
                            [(1, 1, 1), (1, 1, 3), (2, 2, 2), (3, 1, 1), (3, 1, 3), (4, 2, 2)]))
    yield Check("index-sets", "H partition (4,3,17)", anchor4,
                lambda: _eq([_swap_kl(x) for x in partition_H(t)],
                            [[(1, 1, 1), (1, 1, 3), (2, 2, 2), (3, 1, 1), (4, 2, 2)], [(3, 1, 3)],
                             [(1, 1, 1)], [(1, 1, 3), (2, 2, 2), (3, 1, 1), (3, 1, 3), (4, 2, 2)]]))


def _classification_checks():
    def su2(spec):
        return sorted(tuple(x) for x in enumerate_H(spec) if classify_rep(x, spec) is RepClass.SU2)

    yield Check("classification", "SU(2) labels (3,5,19)", "worked example (a,b,p)=(3,5,19)",
                lambda: _eq(su2(S3519), [(1, 1, 3), (3, 1, 1)]))
    yield Check("classification", "SU(2) labels (4,3,17)", "worked example (a,b,p)=(4,3,17)",
                lambda: _eq(_swap_kl(su2(S4317)), [(1, 1, 3), (3, 1, 1)]))

    def region(abp):
        spec = SurgerySpec(*abp)
        bad = [tuple(x) for x in enumerate_H(spec)
               if (classify_rep(x, spec) is RepClass.SU2) != a2_region_su2(x, spec)]
        return not bad, f"mismatches: {bad}" if bad else "match"

    for abp in [(2, 3, 13), (2, 5, 17), (2, 7, 23)]:
        yield Check("classification", f"a=2 region test {abp}", "closed-form region for a = 2",
                    lambda abp=abp: region(abp))


def _lemma_checks(seed: Optional[int]):
    def vanish():
        worst = 0.0
        for a in range(1, 31):
            for b in range(1, 31):
                if a * b > 30 or math.gcd(a, b) != 1:
                    continue
                for n in range(3, 100, 2):
                    for par in ("even", "odd"):
                        worst = max(worst, abs(vanishing_sum_check(a, b, n, par)) / (2 * a * b))
        return worst <= 1e-10, f"max |sum|/(2ab) = {worst:.3g}"

    yield Check("lemmas", "vanishing sine sums", "ab <= 30, odd n <= 99", vanish)

    points = [(2, 5, 0.3 + 0.4j, math.pi * 1j / 7), (3, 4, 0.1 + 0.9j, math.pi * 1j / 11),
              (2, 1, 0.5 + 0.2j, 0.3j)]
    if seed is not None:
        rng = random.Random(seed)
        for _ in range(20):
            points.append((rng.randint(1, 6), rng.randint(1, 12),
                           complex(rng.uniform(-1, 1), rng.uniform(-2, 2)),
                           complex(rng.uniform(-0.5, 0.5), rng.uniform(-2, 2))))

    def sum_l():
        worst = 0.0
        for a, k, z, h in points:
            lhs, rhs = sum_l_identity_check(a, k, z, h)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
        return worst <= 1e-10, f"max relative gap {worst:.3g} over {len(points)} points"

    yield Check("lemmas", "finite l-sum identity", "spot points" + ("" if seed is None else f", seed {seed}"),
                sum_l)

    def recip():
        worst, count = 0.0, 0
        ws = {Fraction(0)}
        for a in range(1, 13):
            for b in range(1, 13):
                if math.gcd(a, b) == 1:
                    ws |= {Fraction(a + b, a * b), -Fraction(a + b, a * b),
                           Fraction(a - b, a * b), -Fraction(a - b, a * b)}
        for c in range(1, 21):
            for d in range(1, 21):
                for w in ws:
                    cond = c * d + 2 * c * w
                    if cond.denominator != 1 or cond.numerator % 2:
                        continue
                    lhs, rhs = reciprocity_check(c, d, w)
                    worst = max(worst, abs(lhs - rhs))
                    count += 1
        return worst <= 1e-10, f"max gap {worst:.3g} over {count} triples"

    yield Check("lemmas", "Gauss-sum reciprocity", "c, d <= 20", recip)


def _gauss_checks():
    def gauss():
        worst = 0.0
        for n in range(3, 200, 2):
            want = math.sqrt(n) * (1 if n % 4 == 1 else 1j)
            worst = max(worst, abs(gauss_sum(n, Fraction(2, n)) - want))
        return worst <= 1e-10, f"max gap {worst:.3g}"

    def omega():
        worst = max(abs(s - c) for s, c in (omega_unknot_plus(n) for n in range(3, 200, 2)))
        return worst <= 1e-10, f"max gap {worst:.3g}"

    yield Check("gauss", "Gauss sums at e^{2 pi i/n}", "odd n <= 199", gauss)
    yield Check("gauss", "unknot closed form", "odd n <= 199", omega)


def _dual_a_checks():
    for abp in [(2, 3, 13), (3, 5, 19), (2, 5, 13)]:
        def run(abp=abp):
            spec = SurgerySpec(*abp)
            worst = max(abs(A_via_H(n, spec) - A_via_Stilde(n, spec)) for n in range(3, 100, 2))
            return worst <= 1e-10, f"max gap {worst:.3g}"
        yield Check("dual-a", f"A(n) two routes {abp}", "odd n <= 99", run)


def _jones_checks():
    def dual():
        worst = 0.0
        for a, b in [(2, 3), (3, 5), (2, 5), (3, 4)]:
            knot = KnotParam(a, b)
            for n in range(3, 50, 2):
                for k in range(1, 13):
                    if 2 * k % n == 0:
                        continue
                    worst = max(worst, abs(colored_jones(k, knot, PhaseUnit(4, n))
                                           - jones_at_root(k, knot, n)))
        return worst <= 1e-12, f"max gap {worst:.3g}"

    yield Check("jones", "colored Jones two evaluation paths", "k <= 12, n <= 49", dual)


GROUPS = ("index-sets", "classification", "lemmas", "gauss", "dual-a", "jones")


def all_checks(only: Optional[str] = None, seed: Optional[int] = None) -> list:
    checks = [*_index_set_checks(), *_classification_checks(), *_lemma_checks(seed),
              *_gauss_checks(), *_dual_a_checks(), *_jones_checks()]
    if only:
        checks = [c for c in checks if c.group == only]
    return checks


def run_checks(checks) -> list:
    results = []
    for c in checks:
        try:
            ok, detail = c.run()
        except Exception as exc:  # a crash counts as a failure with its message
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((c, bool(ok), detail))
    return results

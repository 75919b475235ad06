"""The asymptotic expansion

    tau_n = (-1)^{p+1} n^{3/2}/(2 pi) (A(n) + B(n) n^{-1/2} + O(1/n))

and the diagnostics that compare it against the exact invariant.

``A(n)`` is available through two independent routes: the lattice sum of
``G(g, m)`` over St, and the sum over irreducible representations with
Chern-Simons phases and torsion amplitudes.  ``B(n)`` collects the
abelian representations.
"""

from __future__ import annotations

import cmath
import functools
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .errors import DegenerateError, ValidationError
from .indexsets import enumerate_Stilde, partition_H
from .numtheory import SurgerySpec
from .phase import DEFAULT_PRECISION, PhaseUnit, accumulate, complex_to_json, to_complex, working
from .reps import cs_pm_irr, t_abel, t_pm_irr
from .wrt import tau_hat


def _sinpi(x, precision):
    return to_complex(PhaseUnit.from_fraction(x), precision).imag


def _sqrt(x, precision):
    return math.sqrt(x) if precision == DEFAULT_PRECISION else mpmath.sqrt(x)


def _check_n(n: int):
    if n < 3 or n % 2 == 0:
        raise ValidationError("n must be odd and >= 3")


def g_term(g: int, m: int, n: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION):
    """``(-1)^m sin(m pi/a) sin(m pi/b) sin(g pi/N) e^{n pi i (-g^2/(4N) - m^2/(4ab))}``."""
    a, b, ab, N = spec.a, spec.b, spec.ab, spec.N
    with working(precision):
        amp = ((-1) ** m * _sinpi(Fraction(m, a), precision) * _sinpi(Fraction(m, b), precision)
               * _sinpi(Fraction(g, N), precision))
        ph = to_complex(PhaseUnit(n * (-g * g * ab - m * m * N), 4 * ab * N), precision)
        return amp * ph


def A_via_Stilde(n: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION):
    """``e^{(n+1) pi i/4} / sqrt(ab(p-ab)) * sum_{(g,m) in St} G(g, m)``."""
    _check_n(n)
    with working(precision):
        terms = [g_term(g, m, n, spec, precision) for g, m in enumerate_Stilde(spec)]
        if not terms:
            return _zero(precision)
        pre = to_complex(PhaseUnit(n + 1, 4), precision) / _sqrt(spec.ab * spec.N, precision)
        return pre * accumulate(terms)


def _zero(precision):
    return 0j if precision == DEFAULT_PRECISION else mpmath.mpc(0)


# (part name, sign, parity of the labels kept, weight)
_A_PARTS = (
    ("plus_delta", +1, 1, +1),
    ("minus_delta", -1, 1, +1),
    ("plus_nabla", +1, 0, -1),
    ("minus_nabla", -1, 0, -1),
)


def _key(spec: SurgerySpec) -> SurgerySpec:
    return spec.with_n(None)


@functools.lru_cache(maxsize=64)
def _irr_terms(spec: SurgerySpec, precision: int) -> tuple:
    """``(part, sign, label, weight * T, CS)`` for every label entering A."""
    parts = partition_H(spec)
    out = []
    for name, s, parity, weight in _A_PARTS:
        for lab in getattr(parts, name):
            if lab.h % 2 != parity:
                continue
            out.append((name, s, lab, weight * t_pm_irr(s, lab, spec, precision),
                        cs_pm_irr(s, lab, spec)))
    return tuple(out)


def A_breakdown(n: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION) -> list:
    """Per-label contributions to ``A(n)`` (the prefactor included)."""
    _check_n(n)
    with working(precision):
        pre = to_complex(PhaseUnit(n + 1, 4), precision) / 4
        return [(name, s, lab, pre * T * to_complex(PhaseUnit.from_fraction(n * cs.value), precision))
                for name, s, lab, T, cs in _irr_terms(_key(spec), precision)]


def A_via_H(n: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION):
    """``A(n)`` as a sum over irreducible representations:

    e^{(n+1) pi i/4}/4 * ( sum_{H+^Delta, odd} + sum_{H-^Delta, odd}
                           - sum_{H+^Nabla, even} - sum_{H-^Nabla, even} ) T e^{n CS pi i}
    """
    terms = [t for *_, t in A_breakdown(n, spec, precision)]
    if not terms:
        return _zero(precision)
    with working(precision):
        return accumulate(terms)


def b_range(spec: SurgerySpec) -> range:
    """Abelian labels ``1 <= l <= (p-1)/2`` entering ``B(n)``."""
    return range(1, (spec.p - 1) // 2 + 1)


@functools.lru_cache(maxsize=64)
def _abel_amplitudes(spec: SurgerySpec, precision: int) -> tuple:
    return tuple((l, t_abel(l, spec, precision)) for l in b_range(spec))


def B_breakdown(n: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION) -> list:
    _check_n(n)
    a, b, p = spec.a, spec.b, spec.p
    with working(precision):
        pre = 0.5j if precision == DEFAULT_PRECISION else mpmath.mpc(0, 0.5)
        pre = pre * (-1) ** (a + b + a * b) * to_complex(PhaseUnit(n * (1 - p), 4), precision)
        # the phase uses the unreduced value -l^2/p: with odd n it matters mod 2
        return [(l, pre * T * to_complex(PhaseUnit(-n * l * l, p), precision))
                for l, T in _abel_amplitudes(_key(spec), precision)]


def B_of_n(n: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION):
    """``(i/2) (-1)^{a+b+ab} e^{n(1-p) pi i/4} sum_l T^Abel(l) e^{-n l^2 pi i/p}``."""
    terms = [t for _, t in B_breakdown(n, spec, precision)]
    with working(precision):
        return accumulate(terms) if terms else _zero(precision)


@dataclass
class ExpansionReport:
    spec: SurgerySpec
    n: int
    precision: int
    tau_exact: complex
    A: complex
    B: complex
    approx: complex
    residual: float
    irr_terms: list = field(default_factory=list)
    abel_terms: list = field(default_factory=list)

    @property
    def n_times_residual(self) -> float:
        return self.n * self.residual

    def csv_row(self) -> dict:
        return {
            "n": self.n,
            "tau_re": repr(float(self.tau_exact.real)), "tau_im": repr(float(self.tau_exact.imag)),
            "A_re": repr(float(self.A.real)), "A_im": repr(float(self.A.imag)),
            "B_re": repr(float(self.B.real)), "B_im": repr(float(self.B.imag)),
            "residual": repr(float(self.residual)),
            "n_times_residual": repr(float(self.n_times_residual)),
        }

    def to_json(self) -> dict:
        prec = self.precision
        return {
            "tau": complex_to_json(self.tau_exact, prec),
            "A": complex_to_json(self.A, prec),
            "B": complex_to_json(self.B, prec),
            "approx": complex_to_json(self.approx, prec),
            "residual": str(self.residual) if prec > DEFAULT_PRECISION else repr(float(self.residual)),
            "n_times_residual": repr(float(self.n_times_residual)),
            "irreducible_terms": [
                {"part": name, "sign": "+" if s > 0 else "-", "label": list(lab),
                 "term": complex_to_json(t, prec)}
                for name, s, lab, t in self.irr_terms
            ],
            "abelian_terms": [{"l": l, "term": complex_to_json(t, prec)} for l, t in self.abel_terms],
        }


def assemble(n: int, p: int, A, B, precision: int = DEFAULT_PRECISION):
    """``(-1)^{p+1} n^{3/2}/(2 pi) (A + B n^{-1/2})``."""
    with working(precision):
        if precision == DEFAULT_PRECISION:
            return (-1) ** (p + 1) * n ** 1.5 / (2 * math.pi) * (A + B / math.sqrt(n))
        return (-1) ** (p + 1) * mpmath.mpf(n) ** 1.5 / (2 * mpmath.pi) * (A + B / mpmath.sqrt(n))


def normalized_residual(n: int, p: int, tau, A, B, precision: int = DEFAULT_PRECISION):
    """``|2 pi (-1)^{p+1} n^{-3/2} tau - A - n^{-1/2} B|``."""
    with working(precision):
        if precision == DEFAULT_PRECISION:
            return abs(2 * math.pi * (-1) ** (p + 1) * n ** -1.5 * tau - A - B / math.sqrt(n))
        return abs(2 * mpmath.pi * (-1) ** (p + 1) * mpmath.mpf(n) ** -1.5 * tau - A - B / mpmath.sqrt(n))


def expansion_report(spec: SurgerySpec, precision: int = DEFAULT_PRECISION) -> ExpansionReport:
    n = spec.require_n()
    tau = tau_hat(spec, precision).value
    irr = A_breakdown(n, spec, precision)
    abel = B_breakdown(n, spec, precision)
    with working(precision):
        A = accumulate([t for *_, t in irr]) if irr else _zero(precision)
        B = accumulate([t for _, t in abel]) if abel else _zero(precision)
    approx = assemble(n, spec.p, A, B, precision)
    res = normalized_residual(n, spec.p, tau, A, B, precision)
    return ExpansionReport(spec, n, precision, tau, A, B, approx, res, irr, abel)


@dataclass
class SweepResult:
    spec: SurgerySpec
    reports: list
    slope: float
    median_lower: float
    median_upper: float
    max_lower: float
    max_upper: float

    def summary(self) -> dict:
        return {"slope": self.slope, "median_lower": self.median_lower,
                "median_upper": self.median_upper, "max_lower": self.max_lower,
                "max_upper": self.max_upper}


def _report_for(args):
    spec, n, precision = args
    return expansion_report(spec.with_n(n), precision)


def loglog_slope(ns, values) -> float:
    """Least-squares slope of ``log(values)`` against ``log(ns)``."""
    x = np.log(np.asarray(ns, dtype=float))
    y = np.log(np.asarray(values, dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def window_stats(ns, values):
    """Median and max of ``values`` over the lower and upper halves of the
    sorted ``ns`` (the middle element, if any, goes to the upper half)."""
    half = len(ns) // 2
    lower, upper = list(values[:half]), list(values[half:])
    return (statistics.median(lower), statistics.median(upper), max(lower), max(upper))


def convergence_sweep(spec: SurgerySpec, n_values, precision: int = DEFAULT_PRECISION,
                      workers: int = 1) -> SweepResult:
    """Expansion reports for each odd ``n`` (sorted), plus the trend summary."""
    ns = sorted(set(n_values))
    if len(ns) < 2:
        raise ValidationError("a sweep needs at least two values of n")
    for n in ns:
        _check_n(n)
    base = _key(spec)
    jobs = [(base, n, precision) for n in ns]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            reports = list(ex.map(_report_for, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        reports = [_report_for(j) for j in jobs]
    res = [float(r.residual) for r in reports]
    nres = [float(r.n_times_residual) for r in reports]
    slope = loglog_slope(ns, res)
    ml, mu, xl, xu = window_stats(ns, nres)
    return SweepResult(base, reports, slope, ml, mu, xl, xu)


# -- analytic identities -------------------------------------------------------

def vanishing_sum_check(a: int, b: int, n: int, parity, precision: int = DEFAULT_PRECISION):
    """``sum_{0<=m<=2ab, m = parity mod 2} sin(m pi/a) sin(m pi/b) e^{-n m^2 pi i/(4ab)}``."""
    if math.gcd(a, b) != 1:
        raise ValidationError("gcd(a,b) != 1")
    if n % 2 == 0:
        raise ValidationError("n must be odd")
    par = {"even": 0, "odd": 1, 0: 0, 1: 1}[parity]
    ab = a * b
    with working(precision):
        terms = [_sinpi(Fraction(m, a), precision) * _sinpi(Fraction(m, b), precision)
                 * to_complex(PhaseUnit(-n * m * m, 4 * ab), precision)
                 for m in range(par, 2 * ab + 1, 2)]
        return accumulate(terms)


def sum_l_identity_check(a: int, k: int, z, h, precision: int = DEFAULT_PRECISION):
    """Both sides of

    sum_{l = -(k-1), -(k-3), ..., k-1} e^{-2(al+1)z} sinh(2(al+1)h)
      = e^{2(h-z)} sinh(2ka(z-h)) / (2 sinh(2a(z-h)))
        - e^{-2(h+z)} sinh(2ka(z+h)) / (2 sinh(2a(z+h)))
    """
    if precision == DEFAULT_PRECISION:
        exp, sinh = cmath.exp, cmath.sinh
        z, h = complex(z), complex(h)
    else:
        exp, sinh = mpmath.exp, mpmath.sinh
    with working(precision):
        d1, d2 = sinh(2 * a * (z - h)), sinh(2 * a * (z + h))
        if abs(d1) < 1e-12 or abs(d2) < 1e-12:
            raise DegenerateError(f"sinh(2a(z+-h)) vanishes at z={z}, h={h}")
        lhs = accumulate([exp(-2 * (a * l + 1) * z) * sinh(2 * (a * l + 1) * h)
                          for l in range(-(k - 1), k, 2)])
        rhs = (exp(2 * (h - z)) * sinh(2 * k * a * (z - h)) / (2 * d1)
               - exp(-2 * (h + z)) * sinh(2 * k * a * (z + h)) / (2 * d2))
    return lhs, rhs

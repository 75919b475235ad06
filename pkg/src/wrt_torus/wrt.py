"""The WRT invariant of ``p``-surgery on ``T(a, b)`` at ``q = e^{4*pi*i/n}``.

The invariant is the finite sum

    tau_n = e^{(3/n + (n+1)/4) pi i} / (sqrt(n) sin(2pi/n))
            * sum_{k=1}^{n-1} sin^2(2k pi/n) (-e^{pi i/n})^{p(k^2-1)} J_k(e^{4 pi i/n}).

``sin^2(2k pi/n) J_k`` is evaluated in its pole-free paired form
``sin(2k pi/n) e^{-ab(k^2-1) pi i/n} jtilde_sum(k)``, so no term ever
multiplies zero by infinity.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import mpmath

from .jones import KnotParam, jtilde_sum
from .numtheory import SurgerySpec
from .phase import DEFAULT_PRECISION, ComplexValue, PhaseUnit, accumulate, complex_to_json, \
    to_complex, working


@dataclass(frozen=True)
class TauValue:
    value: ComplexValue
    n: int
    spec: SurgerySpec
    precision: int

    def to_json(self) -> dict:
        return {"tau": complex_to_json(self.value, self.precision)}


def _sqrt(x, precision):
    return math.sqrt(x) if precision == DEFAULT_PRECISION else mpmath.sqrt(x)


def _k_terms(a: int, b: int, p: int, n: int, ks, precision: int) -> list:
    """Summands of the k-sum, without the global prefactor."""
    knot = KnotParam(a, b)
    out = []
    with working(precision):
        for k in ks:
            # (-e^{pi i/n})^{p(k^2-1)} e^{-ab(k^2-1) pi i/n} as one exact phase
            ph = PhaseUnit((k * k - 1) * (p * (n + 1) - a * b), n)
            s = to_complex(PhaseUnit(2 * k, n), precision).imag
            out.append(to_complex(ph, precision) * s * jtilde_sum(k, knot, n, precision))
    return out


def _chunks(n: int, workers: int):
    ks = list(range(1, n))
    size = -(-len(ks) // workers)
    return [ks[i:i + size] for i in range(0, len(ks), size)]


def tau_prefactor(n: int, precision: int = DEFAULT_PRECISION):
    """``e^{(3/n + (n+1)/4) pi i} / (sqrt(n) sin(2 pi/n))``."""
    with working(precision):
        ph = to_complex(PhaseUnit(12 + n * (n + 1), 4 * n), precision)
        return ph / (_sqrt(n, precision) * to_complex(PhaseUnit(2, n), precision).imag)


def tau_hat(spec: SurgerySpec, precision: int = DEFAULT_PRECISION, workers: int = 1) -> TauValue:
    """Exact-phase evaluation of the invariant for ``spec.n``.

    With ``workers > 1`` the k-range is split into contiguous chunks that
    are evaluated in separate processes.  The per-k terms are reassembled in
    k order before one compensated sum, so the result does not depend on
    the number of workers.
    """
    n = spec.require_n()
    a, b, p = spec.a, spec.b, spec.p
    if workers > 1 and n > 2:
        chunks = _chunks(n, workers)
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_k_terms, *zip(*[(a, b, p, n, c, precision) for c in chunks]))
            terms = [t for part in parts for t in part]
    else:
        terms = _k_terms(a, b, p, n, range(1, n), precision)
    with working(precision):
        value = tau_prefactor(n, precision) * accumulate(terms)
    if precision > DEFAULT_PRECISION:
        with mpmath.workprec(precision):
            value = +value
    return TauValue(value, n, spec, precision)


def omega_unknot_plus(n: int, precision: int = DEFAULT_PRECISION):
    """Sum form and closed form of the invariant of the +1-framed unknot.

    sum_form    = (A^2 - A^-2)^-2 sum_{k=1}^{n-1} (-A)^{k^2-1} (A^{2k} - A^{-2k})^2
    closed_form = sqrt(n)/sin(2pi/n) e^{-(3/n + (n+1)/4) pi i},   A = e^{pi i/n}.
    """
    with working(precision):
        def A(e):
            return to_complex(PhaseUnit(e, n), precision)

        terms = []
        for k in range(1, n):
            sign_phase = to_complex(PhaseUnit((k * k - 1) * (n + 1), n), precision)
            terms.append(sign_phase * (A(2 * k) - A(-2 * k)) ** 2)
        sum_form = accumulate(terms) / (A(2) - A(-2)) ** 2
        closed = (_sqrt(n, precision) / to_complex(PhaseUnit(2, n), precision).imag
                  * to_complex(PhaseUnit(-(12 + n * (n + 1)), 4 * n), precision))
    return sum_form, closed

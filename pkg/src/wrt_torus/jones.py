"""Colored Jones polynomials of torus knots and the Alexander polynomial.

Convention: ``T(2, 3)`` is the right-handed trefoil and

    J_k(q) = q^{-ab(k^2-1)/4} sum_j q^{bj(aj+1)}
             (q^{aj+1/2} - q^{-(aj+1/2)}) / (q^{k/2} - q^{-k/2})

with ``j`` running over ``-(k-1)/2, ..., (k-1)/2`` in unit steps.  With
this normalization ``J_2(T(2,3)) = q^{-1} + q^{-3} - q^{-4}``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .errors import PoleError, ValidationError
from .phase import DEFAULT_PRECISION, PhaseUnit, accumulate, cis_array, to_complex, working


@dataclass(frozen=True)
class KnotParam:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValidationError("a and b must be positive")
        if math.gcd(self.a, self.b) != 1:
            raise ValidationError("gcd(a,b) != 1")


def _power(q, x: Fraction, precision: int):
    """``q**x`` for rational ``x``.

    A :class:`PhaseUnit` ``e^{i*pi*t/d}`` is raised exactly to
    ``e^{i*pi*t*x/d}``; numeric ``q`` uses the principal branch.
    """
    if isinstance(q, PhaseUnit):
        return to_complex(PhaseUnit.from_fraction(q.exponent * x), precision)
    if precision > DEFAULT_PRECISION:
        return mpmath.power(q, mpmath.mpf(x.numerator) / x.denominator)
    return complex(q) ** float(x) if x.denominator != 1 else complex(q) ** x.numerator


def _halves(k: int):
    """``j = -(k-1)/2, ..., (k-1)/2`` as exact rationals."""
    return [Fraction(l, 2) for l in range(-(k - 1), k, 2)]


def colored_jones(k: int, knot: KnotParam, q, precision: int = DEFAULT_PRECISION):
    """``J_k(T(a,b); q)`` by direct summation of the Rosso-Jones formula.

    ``q`` is a :class:`PhaseUnit` (exact exponents) or a nonzero number.
    """
    if k < 1:
        raise ValidationError("k must be positive")
    a, b = knot.a, knot.b
    half = Fraction(1, 2)
    if isinstance(q, PhaseUnit):
        # q^{k/2} = q^{-k/2}  <=>  e^{i*pi*t*k/d} = 1
        if (q.exponent * k).denominator == 1 and (q.exponent * k).numerator % 2 == 0:
            raise PoleError(f"q^(k/2) = q^(-k/2) at k={k}, q=e^(i*pi*{q.exponent})")
    with working(precision):
        denom = _power(q, Fraction(k, 2), precision) - _power(q, Fraction(-k, 2), precision)
        if not isinstance(q, PhaseUnit) and abs(denom) == 0:
            raise PoleError(f"q^(k/2) = q^(-k/2) at k={k}, q={q}")
        terms = []
        for j in _halves(k):
            e = a * j + half
            terms.append(_power(q, b * j * (a * j + 1) + e, precision)
                         - _power(q, b * j * (a * j + 1) - e, precision))
        total = accumulate(terms)
        value = _power(q, Fraction(-a * b * (k * k - 1), 4), precision) * total / denom
    if precision > DEFAULT_PRECISION:
        with mpmath.workprec(precision):
            return +value
    return value


def _sin_pi(num: int, den: int, precision: int):
    """``sin(pi*num/den)`` with the argument reduced exactly first."""
    return to_complex(PhaseUnit(num, den), precision).imag


def jones_at_root(k: int, knot: KnotParam, n: int, precision: int = DEFAULT_PRECISION):
    """``J_k(e^{4*pi*i/n})`` through the sine-ratio form.

    With ``l = 2j`` the summand is
    ``e^{b*l*(a*l+2)*pi*i/n} * sin(2(a*l+1)*pi/n) / sin(2k*pi/n)``.
    """
    if 2 * k % n == 0:
        raise PoleError(f"sin(2k*pi/n) = 0 at k={k}, n={n}")
    num = jtilde_sum(k, knot, n, precision)
    phase = to_complex(PhaseUnit(-knot.a * knot.b * (k * k - 1), n), precision)
    return phase * num / _sin_pi(2 * k, n, precision)


def jtilde_sum(k: int, knot: KnotParam, n: int, precision: int = DEFAULT_PRECISION):
    """``sum_l e^{b l (a l + 2) pi i / n} sin(2(a l + 1) pi / n)`` over
    ``l = -(k-1), -(k-3), ..., k-1``.

    This is ``sin(2k*pi/n) e^{ab(k^2-1) pi i/n} J_k(e^{4 pi i/n})`` and has no
    pole, which is what the invariant sum uses.
    """
    a, b = knot.a, knot.b
    ls = range(-(k - 1), k, 2)
    if precision == DEFAULT_PRECISION:
        l = np.arange(-(k - 1), k, 2, dtype=np.int64)
        ph = b * l * (a * l + 2)
        s = np.sin(np.pi * (np.mod(2 * (a * l + 1), 2 * n) / n))
        return accumulate(cis_array(ph, n) * s)
    with working(precision):
        terms = [to_complex(PhaseUnit(b * l * (a * l + 2), n), precision)
                 * _sin_pi(2 * (a * l + 1), n, precision) for l in ls]
        return accumulate(terms)


def jtilde(k: int, knot: KnotParam, q, precision: int = DEFAULT_PRECISION):
    """Rescaled ``q^{ab(k^2-1)/4} (q^{k/2} - q^{-k/2}) J_k(q)``; pole free."""
    a, b = knot.a, knot.b
    half = Fraction(1, 2)
    terms = []
    for j in _halves(k):
        e = a * j + half
        terms.append(_power(q, b * j * (a * j + 1) + e, precision)
                     - _power(q, b * j * (a * j + 1) - e, precision))
    return accumulate(terms)


def alexander(knot: KnotParam, t, precision: int = DEFAULT_PRECISION):
    """Alexander polynomial of ``T(a,b)`` at ``t``, normalized so ``Delta(1) = 1``.

    ``t`` may be a :class:`PhaseUnit` (half powers taken exactly) or a
    number (principal square root).
    """
    a, b = knot.a, knot.b
    if isinstance(t, PhaseUnit):
        if t.numer == 0:
            return 1.0 if precision == DEFAULT_PRECISION else mpmath.mpf(1)

        def diff(x):
            return (to_complex(PhaseUnit.from_fraction(t.exponent * Fraction(x, 2)), precision)
                    - to_complex(PhaseUnit.from_fraction(-t.exponent * Fraction(x, 2)), precision))
    else:
        if t == 1:
            return 1.0 if precision == DEFAULT_PRECISION else mpmath.mpf(1)
        if precision > DEFAULT_PRECISION:
            s = mpmath.sqrt(mpmath.mpc(t))
        else:
            s = cmath.sqrt(complex(t))

        def diff(x):
            return s ** x - s ** (-x)
    if isinstance(t, PhaseUnit):
        # t^{x/2} = t^{-x/2} exactly when t.exponent * x is an even integer
        zero = any((t.exponent * x).denominator == 1 and (t.exponent * x).numerator % 2 == 0
                   for x in (a, b))
    else:
        zero = False
    den = diff(a) * diff(b)
    if zero or den == 0:
        raise PoleError(f"Alexander denominator vanishes at t={t}")
    return diff(a * b) * diff(1) / den

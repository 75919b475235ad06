"""Chern-Simons values, Reidemeister torsions and the SU(2)/SU(1,1)
classification of the representations of the surgered manifold.

Chern-Simons values are exact rationals tagged with their modulus (1 or
2).  Torsions are reported as magnitudes: the overall sign of the torsion
is not determined, while the signed amplitudes ``T_{+-}`` and ``T^Abel``
that enter the expansion carry the explicit sign of their defining
formulas.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DegenerateError, DomainError, ValidationError
from .indexsets import _sign, enumerate_H, gamma, in_H
from .jones import KnotParam, alexander
from .numtheory import SurgerySpec
from .phase import DEFAULT_PRECISION, PhaseUnit, to_complex, working

CLASSIFY_BITS = 150
DEGENERATE_BAND = 1e-12


@dataclass(frozen=True)
class RationalMod:
    """An exact rational modulo 1 or 2, stored as its representative in
    ``[0, modulus)``."""

    value: Fraction
    modulus: int = 1

    def __post_init__(self):
        if self.modulus not in (1, 2):
            raise ValidationError("modulus must be 1 or 2")
        v = Fraction(self.value)
        object.__setattr__(self, "value", v - self.modulus * math.floor(v / self.modulus))

    def __add__(self, other):
        if isinstance(other, RationalMod):
            if other.modulus != self.modulus:
                raise ValidationError("cannot add values with different moduli")
            other = other.value
        return RationalMod(self.value + Fraction(other), self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return RationalMod(-self.value, self.modulus)

    def __sub__(self, other):
        if isinstance(other, RationalMod):
            return self + (-other)
        return self + (-Fraction(other))

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator}"


@dataclass(frozen=True)
class TorsionValue:
    magnitude: float
    sign_ambiguous: bool = True


class RepClass(str, enum.Enum):
    SU2 = "SU2"
    SU11 = "SU11"


def _sinpi(x, precision=DEFAULT_PRECISION):
    """``sin(pi*x)`` for rational ``x`` with exact argument reduction."""
    return to_complex(PhaseUnit.from_fraction(x), precision).imag


def _cospi(x, precision=DEFAULT_PRECISION):
    return to_complex(PhaseUnit.from_fraction(x), precision).real


def _sqrt(x, precision):
    return math.sqrt(x) if precision == DEFAULT_PRECISION else mpmath.sqrt(x)


# -- abelian representations -------------------------------------------------

def _check_abel(l: int, spec: SurgerySpec):
    if not 0 < l < spec.p or 2 * l == spec.p:
        raise DomainError(f"l={l} out of range for p={spec.p}")


def cs_abel(l: int, spec: SurgerySpec) -> RationalMod:
    """``-l^2/p`` modulo 1."""
    _check_abel(l, spec)
    return RationalMod(Fraction(-l * l, spec.p), 1)


def t_abel(l: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION):
    """Signed amplitude
    ``(-1)^l 4 sin(2al pi/p) sin(2bl pi/p) sin(2l pi/p) / (sqrt(p) sin(2abl pi/p))``."""
    _check_abel(l, spec)
    a, b, p = spec.a, spec.b, spec.p
    with working(precision):
        num = (4 * _sinpi(Fraction(2 * a * l, p), precision) * _sinpi(Fraction(2 * b * l, p), precision)
               * _sinpi(Fraction(2 * l, p), precision))
        val = (-1) ** l * num / (_sqrt(p, precision) * _sinpi(Fraction(2 * a * b * l, p), precision))
    return val


def torsion_abel(l: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION) -> TorsionValue:
    """``p sin^2(2abl pi/p) / (16 sin^2(2al pi/p) sin^2(2bl pi/p) sin^2(2l pi/p))``."""
    _check_abel(l, spec)
    a, b, p = spec.a, spec.b, spec.p
    with working(precision):
        s = [_sinpi(Fraction(2 * x * l, p), precision) for x in (a * b, a, b, 1)]
        mag = p * s[0] ** 2 / (16 * s[1] ** 2 * s[2] ** 2 * s[3] ** 2)
    return TorsionValue(mag)


def torsion_abel_via_alexander(l: int, spec: SurgerySpec, precision: int = DEFAULT_PRECISION):
    """The same torsion assembled from the Alexander polynomial.

    The knot exterior twisted by the abelian representation has torsion
    ``(Delta(t)/(2 sinh(2l pi i/p)))^2`` at ``t = e^{4l pi i/p}``; gluing the
    solid torus multiplies by ``p`` and divides by ``tr^2 - 4`` with
    ``tr = 2 cos(2l pi/p)``.  Returns the magnitude.
    """
    _check_abel(l, spec)
    p = spec.p
    with working(precision):
        delta = alexander(KnotParam(spec.a, spec.b), PhaseUnit(4 * l, p), precision)
        two_sinh = 2j * _sinpi(Fraction(2 * l, p), precision)
        tor_mu = (delta / two_sinh) ** 2
        tr = 2 * _cospi(Fraction(2 * l, p), precision)
        value = p * tor_mu / (tr ** 2 - 4)
        return abs(value)


# -- irreducible representations ---------------------------------------------

def cs_irr_value(label, spec: SurgerySpec, cd=None) -> Fraction:
    """Unreduced ``-h^2/(4(p-ab)) - (adl - bck)^2/(4ab)`` for any triple."""
    h, k, l = label
    a, b = spec.a, spec.b
    c, d = (spec.c, spec.d) if cd is None else cd
    if a * d - b * c != 1:
        raise ValidationError(f"(c,d)={cd} does not satisfy ad - bc = 1")
    return Fraction(-h * h, 4 * spec.N) - Fraction((a * d * l - b * c * k) ** 2, 4 * spec.ab)


def cs_irr(label, spec: SurgerySpec, cd=None) -> RationalMod:
    """Chern-Simons value of the irreducible representation ``label`` mod 1."""
    if not in_H(label, spec):
        raise DomainError(f"{tuple(label)} is not in H")
    return RationalMod(cs_irr_value(label, spec, cd), 1)


def _gamma_case(s: int, label, spec: SurgerySpec):
    """``(x, odd)``: ``x = Gamma`` or ``ab - Gamma`` according to the parity
    of ``Gamma + ab + h``."""
    if not in_H(label, spec):
        raise DomainError(f"{tuple(label)} is not in H")
    h, k, l = label
    G = gamma(s, k, l, spec)
    if (G + spec.ab + h) % 2 == 0:
        return G, False
    return spec.ab - G, True


def cs_pm_irr(sign, label, spec: SurgerySpec) -> RationalMod:
    """``-(p-ab-h)^2/(4(p-ab)) - x^2/(4ab)`` modulo 2 with ``x`` from the
    parity case split."""
    x, _ = _gamma_case(_sign(sign), label, spec)
    h = label[0]
    N = spec.N
    return RationalMod(Fraction(-(N - h) ** 2, 4 * N) - Fraction(x * x, 4 * spec.ab), 2)


def t_pm_irr(sign, label, spec: SurgerySpec, precision: int = DEFAULT_PRECISION):
    """``(-1)^x 8 sin(x pi/a) sin(x pi/b) sin((p-ab-h) pi/(p-ab)) / sqrt(ab(p-ab))``."""
    x, _ = _gamma_case(_sign(sign), label, spec)
    h = label[0]
    a, b, N = spec.a, spec.b, spec.N
    with working(precision):
        num = (8 * _sinpi(Fraction(x, a), precision) * _sinpi(Fraction(x, b), precision)
               * _sinpi(Fraction(N - h, N), precision))
        return (-1) ** x * num / _sqrt(a * b * N, precision)


def torsion_irr(label, spec: SurgerySpec, precision: int = DEFAULT_PRECISION) -> TorsionValue:
    """``ab(p-ab) / (64 sin^2(k pi/a) sin^2(l pi/b) sin^2(h pi/(p-ab)))``.

    Accepts any triple with nonvanishing sines (reflected labels need not
    lie in H).
    """
    h, k, l = label
    a, b, N = spec.a, spec.b, spec.N
    if k % a == 0 or l % b == 0 or h % N == 0:
        raise DomainError(f"torsion undefined at {tuple(label)}")
    with working(precision):
        s = (_sinpi(Fraction(k, a), precision) * _sinpi(Fraction(l, b), precision)
             * _sinpi(Fraction(h, N), precision))
        return TorsionValue(a * b * N / (64 * s * s))


def reflect(label, spec: SurgerySpec) -> tuple:
    h, k, l = label
    return (spec.N - h, spec.a - k, spec.b - l)


# -- Chebyshev polynomials and classification ---------------------------------

def chebyshev_S(n: int, x):
    """``S_0 = 1, S_1 = x, S_{m+1} = x S_m - S_{m-1}``."""
    if n < 0:
        raise ValidationError("n must be non-negative")
    prev, cur = 1, x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev
    return cur


def classification_product(label, spec: SurgerySpec):
    """``(cos(h pi/N) - cos((adl+bck) pi/ab)) (cos(h pi/N) - cos((adl-bck) pi/ab))``
    at 150 bits."""
    h, k, l = label
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    with mpmath.workprec(CLASSIFY_BITS):
        ch = mpmath.cospi(mpmath.mpf(h) / spec.N)
        c1 = mpmath.cospi(mpmath.mpf(a * d * l + b * c * k) / spec.ab)
        c2 = mpmath.cospi(mpmath.mpf(a * d * l - b * c * k) / spec.ab)
        return (ch - c1) * (ch - c2)


def classify_rep(label, spec: SurgerySpec) -> RepClass:
    """SU2 if the cosine product is positive, SU11 if negative."""
    if not in_H(label, spec):
        raise DomainError(f"{tuple(label)} is not in H")
    prod = classification_product(label, spec)
    if abs(prod) < DEGENERATE_BAND:
        raise DegenerateError(f"cosine product {mpmath.nstr(prod, 5)} too close to 0 at {tuple(label)}")
    return RepClass.SU2 if prod > 0 else RepClass.SU11


def a2_region_su2(label, spec: SurgerySpec) -> bool:
    """Closed-form SU(2) test for ``a = 2``:
    ``h/(p-2b) < l/(2b)`` or ``l/(2b) + h/(p-2b) > 1``."""
    if spec.a != 2:
        raise ValidationError("region test applies to a = 2 only")
    h, _, l = label
    b, N = spec.b, spec.N
    return 2 * b * h < l * N or l * N + 2 * b * h > 2 * b * N


# -- tables --------------------------------------------------------------------

TABLE_COLUMNS = ["h", "k", "l", "class", "CS_plus", "CS_minus", "T_plus", "T_minus"]


def invariant_table(spec: SurgerySpec) -> list:
    """One row per label of H with the columns of :data:`TABLE_COLUMNS`."""
    rows = []
    for lab in enumerate_H(spec):
        rows.append({
            "h": lab.h, "k": lab.k, "l": lab.l,
            "class": classify_rep(lab, spec).value,
            "CS_plus": str(cs_pm_irr(+1, lab, spec)),
            "CS_minus": str(cs_pm_irr(-1, lab, spec)),
            "T_plus": repr(float(t_pm_irr(+1, lab, spec))),
            "T_minus": repr(float(t_pm_irr(-1, lab, spec))),
        })
    return rows

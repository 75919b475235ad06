"""Exact roots of unity and compensated complex summation.

A :class:`PhaseUnit` stores ``e^{i*pi*t/d}`` as the integer pair ``(t, d)``
with ``t`` reduced into ``[0, 2d)``.  Products and powers stay in exact
integer arithmetic, so exponents such as ``p*(k**2 - 1)`` never touch a
float before reduction.  Only :func:`to_complex` leaves the exact world.
"""

from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import mpmath
import numpy as np

from .errors import ValidationError

# Numeric carrier for evaluated sums: binary64 ``complex`` at the default
# precision, ``mpmath.mpc`` above it.
ComplexValue = Union[complex, mpmath.mpc]

DEFAULT_PRECISION = 53
_GUARD_BITS = 24


@dataclass(frozen=True)
class PhaseUnit:
    """The root of unity ``e^{i*pi*numer/denom}`` in normalized form."""

    numer: int
    denom: int

    def __post_init__(self):
        t, d = int(self.numer), int(self.denom)
        if d == 0:
            raise ValidationError("invalid denominator: d must be nonzero")
        if d < 0:
            t, d = -t, -d
        # reduce mod 2d first so huge exponents shrink before the gcd
        t %= 2 * d
        g = math.gcd(t, d)
        t, d = t // g, d // g
        t %= 2 * d
        object.__setattr__(self, "numer", t)
        object.__setattr__(self, "denom", d)

    @classmethod
    def from_fraction(cls, q) -> "PhaseUnit":
        """Phase ``e^{i*pi*q}`` for a rational ``q``."""
        q = Fraction(q)
        return cls(q.numerator, q.denominator)

    @property
    def exponent(self) -> Fraction:
        """``t/d`` in ``[0, 2)``."""
        return Fraction(self.numer, self.denom)

    def __mul__(self, other):
        if not isinstance(other, PhaseUnit):
            return NotImplemented
        return phase_mul(self, other)

    def __pow__(self, e):
        return phase_pow(self, e)

    def conjugate(self) -> "PhaseUnit":
        return PhaseUnit(-self.numer, self.denom)

    def __complex__(self):
        return to_complex(self)

    def to_json(self) -> dict:
        return {"num": self.numer, "den": self.denom}


def unit_phase(t: int, d: int) -> PhaseUnit:
    """Return ``e^{i*pi*t/d}``; ``d`` must be at least 1."""
    if d < 1:
        raise ValidationError(f"invalid denominator: d={d} (need d >= 1)")
    return PhaseUnit(t, d)


def phase_mul(x: PhaseUnit, y: PhaseUnit) -> PhaseUnit:
    d = x.denom * y.denom // math.gcd(x.denom, y.denom)
    return PhaseUnit(x.numer * (d // x.denom) + y.numer * (d // y.denom), d)


def phase_pow(x: PhaseUnit, e: int) -> PhaseUnit:
    # reduce before constructing so the product is never larger than needed
    return PhaseUnit((x.numer * (int(e) % (2 * x.denom))) % (2 * x.denom), x.denom)


def _cis_mp(t: int, d: int):
    x = mpmath.mpf(t) / d
    return mpmath.mpc(mpmath.cospi(x), mpmath.sinpi(x))


def to_complex(x: PhaseUnit, precision: int = DEFAULT_PRECISION) -> ComplexValue:
    """Evaluate a phase numerically.

    At 53 bits the value is computed with guard bits and rounded once, so
    each component is correctly rounded for all practical purposes.  Above
    53 bits an ``mpmath.mpc`` is returned, evaluated at ``precision`` plus
    guard bits.
    """
    if precision < DEFAULT_PRECISION:
        raise ValidationError("precision must be at least 53 bits")
    with mpmath.workprec(precision + _GUARD_BITS):
        z = _cis_mp(x.numer, x.denom)
    if precision == DEFAULT_PRECISION:
        return complex(float(z.real), float(z.imag))
    with mpmath.workprec(precision):
        return +z


def working(precision: int):
    """Context manager raising mpmath's working precision when above 53 bits."""
    if precision > DEFAULT_PRECISION:
        return mpmath.workprec(precision + _GUARD_BITS)
    return contextlib.nullcontext()


def cis_array(t, d) -> np.ndarray:
    """Vectorized ``e^{i*pi*t/d}`` for integer arrays at binary64.

    ``t`` is reduced modulo ``2d`` in integer arithmetic before scaling; the
    caller must make sure ``t`` has not overflowed its integer dtype.
    """
    t = np.asarray(t)
    d = np.asarray(d)
    r = np.mod(t, 2 * d)
    theta = np.pi * (r / d)
    return np.cos(theta) + 1j * np.sin(theta)


def accumulate(terms: Iterable) -> ComplexValue:
    """Compensated sum of complex terms.

    Binary64 inputs (including numpy arrays) go through ``math.fsum`` on
    real and imaginary parts separately, which is correctly rounded.  If
    any term is an mpmath number the sum is delegated to ``mpmath.fsum``.
    """
    if isinstance(terms, np.ndarray):
        arr = terms.ravel()
        return complex(math.fsum(arr.real), math.fsum(arr.imag))
    terms = list(terms)
    if any(isinstance(z, (mpmath.mpc, mpmath.mpf)) for z in terms):
        return mpmath.fsum(terms)
    re = math.fsum(complex(z).real for z in terms)
    im = math.fsum(complex(z).imag for z in terms)
    return complex(re, im)


def decimal_digits(precision: int) -> int:
    """Significant decimal digits needed to round-trip ``precision`` bits."""
    return int(math.ceil(precision * math.log10(2))) + 1


def _real_str(x, precision: int) -> str:
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, decimal_digits(precision))
    return repr(float(x))


def complex_to_json(z, precision: int = DEFAULT_PRECISION) -> dict:
    """``{"re": str, "im": str}`` with enough digits to round-trip."""
    if isinstance(z, mpmath.mpc):
        return {"re": _real_str(z.real, precision), "im": _real_str(z.imag, precision)}
    z = complex(z)
    return {"re": repr(z.real), "im": repr(z.imag)}

"""Integer and number-theoretic primitives.

Covers the residue bracket ``[x]_p``, Jacobi symbols, quadratic Gauss
sums and their reciprocity law, continued fractions and the Euclidean
surgery chain that turns ``p``-surgery on ``T(a, b)`` into Seifert data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from .errors import ConsistencyError, ValidationError
from .phase import DEFAULT_PRECISION, PhaseUnit, accumulate, to_complex, working


def canonical_cd(a: int, b: int) -> tuple[int, int]:
    """Return ``(c, d)`` with ``a*d - b*c = 1`` and ``d = a^{-1} mod b``.

    For ``b = 1`` the inverse is 0 modulo 1; ``d`` is then taken to be 1 so
    that ``c = a - 1`` (``(0, 1)`` for ``a = b = 1``).
    """
    if a < 1 or b < 1:
        raise ValidationError("a and b must be positive")
    if math.gcd(a, b) != 1:
        raise ValidationError("gcd(a,b) != 1")
    d = pow(a, -1, b) if b > 1 else 1
    c = (a * d - 1) // b
    return c, d


def bracket_mod(x: int, p: int) -> int:
    """``[x]_p``: the representative of ``x`` in ``[0, p)``."""
    if p < 1:
        raise ValidationError(f"invalid modulus: {p}")
    return x % p


def jacobi(c: int, n: int) -> int:
    """Jacobi symbol ``(c/n)`` for odd positive ``n``."""
    if n < 1 or n % 2 == 0:
        raise ValidationError(f"invalid modulus for Jacobi symbol: {n}")
    c %= n
    result = 1
    while c:
        while c % 2 == 0:
            c //= 2
            if n % 8 in (3, 5):
                result = -result
        c, n = n, c
        if c % 4 == 3 and n % 4 == 3:
            result = -result
        c %= n
    return result if n == 1 else 0


def gauss_sum(n: int, zeta_exponent, precision: int = DEFAULT_PRECISION):
    """``sum_{l=0}^{n-1} zeta^{l^2}`` where ``zeta = e^{i*pi*q}``."""
    q = Fraction(zeta_exponent)
    return accumulate(
        to_complex(PhaseUnit(q.numerator * l * l, q.denominator), precision)
        for l in range(n)
    )


def _sqrt(x, precision):
    if precision == DEFAULT_PRECISION:
        return math.sqrt(x)
    return mpmath.sqrt(x)


def reciprocity_check(c: int, d: int, w, precision: int = DEFAULT_PRECISION):
    """Both sides of the Gauss-sum reciprocity law.

    lhs = d^{-1/2} sum_{k=1}^{d} e^{(c/d)(k+w)^2 pi i}
    rhs = e^{pi i/4} c^{-1/2} sum_{l=1}^{c} e^{(-(d/c) l^2 + 2lw) pi i}

    The law needs ``c*d + 2*c*w`` to be an even integer; this is checked
    exactly.
    """
    if c < 1 or d < 1:
        raise ValidationError("c and d must be positive")
    w = Fraction(w)
    cond = c * d + 2 * c * w
    if cond.denominator != 1 or cond.numerator % 2:
        raise ValidationError(f"parity condition fails: cd + 2cw = {cond} is not even")
    with working(precision):
        lhs = accumulate(
            to_complex(PhaseUnit.from_fraction(Fraction(c, d) * (k + w) ** 2), precision)
            for k in range(1, d + 1)
        ) / _sqrt(d, precision)
        rhs = accumulate(
            to_complex(PhaseUnit.from_fraction(-Fraction(d, c) * l * l + 2 * l * w), precision)
            for l in range(1, c + 1)
        )
        rhs = rhs * to_complex(PhaseUnit(1, 4), precision) / _sqrt(c, precision)
    return lhs, rhs


@dataclass(frozen=True)
class EuclidChain:
    """Quotients and remainders of the Euclidean algorithm on ``(b, a)``.

    ``remainders`` holds ``r_0 = b, r_1 = a, ..., r_{k-1}``; the equations
    are ``r_{i-1} = q_i r_i + r_{i+1}`` with terminal remainder ``r_k = 1``
    and ``r_{k-1} = q_k``.
    """

    quotients: tuple[int, ...]
    remainders: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.quotients)


def euclid_chain(a: int, b: int) -> EuclidChain:
    if not 1 <= a < b:
        raise ValidationError("euclid_chain needs b > a >= 1")
    if math.gcd(a, b) != 1:
        raise ValidationError("gcd(a,b) != 1")
    qs, rs = [], [b]
    x, y = b, a
    while True:
        q, r = divmod(x, y)
        if r == 0:
            # y == 1 here; the last step reads r_{k-1} = q_k
            qs.append(x)
            break
        qs.append(q)
        rs.append(y)
        x, y = y, r
    return EuclidChain(tuple(qs), tuple(rs))


def continued_fraction_eval(qs: Sequence[int]) -> Fraction:
    """``q_1 + 1/(q_2 + 1/(... + 1/q_k))`` as an exact rational."""
    if not qs:
        raise ValidationError("continued fraction needs at least one term")
    value = Fraction(qs[-1])
    for q in reversed(qs[:-1]):
        value = q + 1 / value
    return value


@dataclass(frozen=True)
class SurgerySpec:
    """Validated ``(a, b, p, n)`` with canonical ``(c, d)``.

    ``b`` is made odd by swapping ``a`` and ``b`` when needed.  ``n`` may be
    left as ``None`` for operations that do not depend on it.
    """

    a: int
    b: int
    p: int
    n: Optional[int] = None
    c: int = field(init=False)
    d: int = field(init=False)

    def __post_init__(self):
        a, b, p, n = self.a, self.b, self.p, self.n
        if a < 1 or b < 1:
            raise ValidationError("a and b must be positive")
        if math.gcd(a, b) != 1:
            raise ValidationError("gcd(a,b) != 1")
        if b % 2 == 0:
            a, b = b, a
        if p <= a * b:
            raise ValidationError("p must exceed ab")
        if math.gcd(p, a * b) != 1:
            raise ValidationError("gcd(p,ab) != 1")
        if n is not None:
            if n % 2 == 0:
                raise ValidationError("n must be odd")
            if n < 3:
                raise ValidationError("n must be >= 3")
        c, d = canonical_cd(a, b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @property
    def ab(self) -> int:
        return self.a * self.b

    @property
    def N(self) -> int:
        """``p - ab``."""
        return self.p - self.a * self.b

    def with_n(self, n: int) -> "SurgerySpec":
        return replace(self, n=n)

    def require_n(self) -> int:
        if self.n is None:
            raise ValidationError("this operation needs n")
        return self.n

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "p": self.p, "n": self.n}


def rational_to_json(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


@dataclass(frozen=True)
class SeifertData:
    """Seifert coefficients ``S(r1, r2, r3)``."""

    r1: Fraction
    r2: Fraction
    r3: Fraction

    def to_json(self) -> dict:
        return {"r1": rational_to_json(self.r1), "r2": rational_to_json(self.r2),
                "r3": rational_to_json(self.r3)}


def _mat_mul(x, y):
    return ((x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
            (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]))


def surgery_cd(a: int, b: int) -> tuple[int, int, EuclidChain]:
    """``(c, d)`` read off the product ``M(q_k)...M(q_1)``, plus the chain.

    Requires ``b > a``.  Raises :class:`ConsistencyError` if the determinant
    identity fails.
    """
    chain = euclid_chain(a, b)
    m = ((1, 0), (0, 1))
    for q in chain.quotients:
        m = _mat_mul(((q, 1), (1, 0)), m)
    (s1, t1), (u1, v1) = m
    k = chain.k
    if (s1, t1) != (b, a) or b * v1 - a * u1 != (-1) ** k:
        raise ConsistencyError(f"matrix product {m} inconsistent with (a,b)=({a},{b})")
    c, d = (-v1, -u1) if k % 2 == 0 else (v1, u1)
    if a * d - b * c != 1:
        raise ConsistencyError("ad - bc != 1 after sign convention")
    return c, d, chain


def seifert_data(spec=None, *, a: int = None, b: int = None, p: int = None) -> SeifertData:
    """Seifert data ``S(-a/c, b/d, p - ab)`` via the Euclidean surgery chain.

    Accepts a :class:`SurgerySpec` or bare integers ``a, b, p`` (the latter
    allows even ``b``).  When ``a > b`` the chain is run on ``(b, a)`` and
    the two exceptional fibres are swapped back.
    """
    if spec is not None:
        a, b, p = spec.a, spec.b, spec.p
    if math.gcd(a, b) != 1:
        raise ValidationError("gcd(a,b) != 1")
    lo, hi = min(a, b), max(a, b)
    if lo == hi:  # a = b = 1
        c, d, chain = 0, 1, None
    else:
        c, d, chain = surgery_cd(lo, hi)
        rs, qs = chain.remainders, chain.quotients
        k = chain.k
        tele = p - sum(rs[j] ** 2 * qs[j - 1] for j in range(1, k)) - rs[k - 1]
        if tele != p - a * b:
            raise ConsistencyError(f"telescoping gives {tele}, expected {p - a * b}")
    r1, r2 = Fraction(-lo, c) if c else None, Fraction(hi, d)
    if r1 is None:
        raise ValidationError("unknot has no Seifert description here")
    if a > b:
        # S(-a/c, b/d, .) computed for the swapped pair; swap back
        r1, r2 = r2, r1
    return SeifertData(r1, r2, Fraction(p - a * b))

"""Finite lattice sets indexing the irreducible representations and the
terms of the asymptotic expansion, with the bijections between them.

Notation (``N = p - ab``):

* P  = {(k, l) : 0<k<a, 0<l<b, k = l mod 2}
* Q  = {1 <= m < ab : a does not divide m, b does not divide m}, split into
  Q+ ([m]_a = [m]_b mod 2) and Q- (parities differ)
* H  = {(h, k, l) : 0<h<N, 0<k<a, 0<l<b, h = k = l mod 2}
* R  = {(g, m) : 0<m<ab, 0<g<N, g = p - m mod 2, a, b do not divide m},
  split into R+ / R- like Q, and into the triangles R^Delta
  (m*N < g*ab) and R^Nabla (m*N > g*ab)
* S2 = lattice points (l, m) of the large-n summation range and
  St = its image under g = 2l - m + p

Every predicate is evaluated in integer arithmetic with cleared
denominators.  Enumerations are sorted lexicographically.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError, ValidationError
from .numtheory import SurgerySpec


class IrrepLabel(NamedTuple):
    h: int
    k: int
    l: int


class LatticePoint(NamedTuple):
    first: int
    second: int


class Partition(NamedTuple):
    plus_delta: list
    plus_nabla: list
    minus_delta: list
    minus_nabla: list


def _sign(s) -> int:
    if s in (1, "+"):
        return 1
    if s in (-1, "-"):
        return -1
    raise ValidationError(f"sign must be + or -, got {s!r}")


def _cd(spec: SurgerySpec, cd):
    if cd is None:
        return spec.c, spec.d
    c, d = cd
    if spec.a * d - spec.b * c != 1:
        raise ValidationError(f"(c,d)={cd} does not satisfy ad - bc = 1")
    return c, d


# -- P and Q -----------------------------------------------------------------

def in_P(k: int, l: int, spec: SurgerySpec) -> bool:
    return 0 < k < spec.a and 0 < l < spec.b and (k - l) % 2 == 0


def enumerate_P(spec: SurgerySpec) -> list:
    return [(k, l) for k in range(1, spec.a) for l in range(1, spec.b) if (k - l) % 2 == 0]


def q_sign(m: int, spec: SurgerySpec) -> int:
    """+1 if ``m`` is in Q+, -1 if in Q- (``m`` must be in Q)."""
    return 1 if (m % spec.a - m % spec.b) % 2 == 0 else -1


def in_Q(m: int, spec: SurgerySpec, sign=None) -> bool:
    a, b = spec.a, spec.b
    if not (0 < m < a * b and m % a and m % b):
        return False
    return sign is None or q_sign(m, spec) == _sign(sign)


def enumerate_Q(spec: SurgerySpec, sign=None) -> list:
    return [m for m in range(1, spec.ab) if in_Q(m, spec, sign)]


def gamma(sign, k: int, l: int, spec: SurgerySpec, cd=None) -> int:
    """``Gamma_{+-}(k, l) = [+-adl - bck]_{ab}``."""
    s = _sign(sign)
    if not in_P(k, l, spec):
        raise DomainError(f"(k,l)=({k},{l}) is not in P for (a,b)=({spec.a},{spec.b})")
    c, d = _cd(spec, cd)
    return (s * spec.a * d * l - spec.b * c * k) % spec.ab


def theta(sign, m: int, spec: SurgerySpec) -> tuple:
    """``Theta_{+-}(m) = ([m]_a, [+-m]_b)``, the inverse of ``gamma``."""
    s = _sign(sign)
    if not in_Q(m, spec, s):
        raise DomainError(f"m={m} is not in Q{'+' if s > 0 else '-'}")
    return (m % spec.a, (s * m) % spec.b)


# -- H and R -----------------------------------------------------------------

def in_H(label, spec: SurgerySpec) -> bool:
    h, k, l = label
    return (0 < h < spec.N and 0 < k < spec.a and 0 < l < spec.b
            and (h - k) % 2 == 0 and (k - l) % 2 == 0)


def enumerate_H(spec: SurgerySpec) -> list:
    return [IrrepLabel(h, k, l)
            for h in range(1, spec.N) for k in range(1, spec.a) for l in range(1, spec.b)
            if (h - k) % 2 == 0 and (k - l) % 2 == 0]


def cardinality_H(spec: SurgerySpec) -> int:
    a, b, N = spec.a, spec.b, spec.N
    if spec.p % 2:
        return (a - 1) * (b - 1) * (N - 1) // 4
    return (a - 1) * (b - 1) // 2 * ((N - 1) // 2)


def r_sign(point, spec: SurgerySpec) -> int:
    return q_sign(point[1], spec)


def in_R(point, spec: SurgerySpec, sign=None) -> bool:
    g, m = point
    a, b = spec.a, spec.b
    if not (0 < m < a * b and 0 < g < spec.N and (g - spec.p + m) % 2 == 0 and m % a and m % b):
        return False
    return sign is None or r_sign(point, spec) == _sign(sign)


def enumerate_R(spec: SurgerySpec, sign=None) -> list:
    return [LatticePoint(g, m) for g in range(1, spec.N) for m in range(1, spec.ab)
            if in_R((g, m), spec, sign)]


def cardinality_R(spec: SurgerySpec) -> int:
    a, b, N = spec.a, spec.b, spec.N
    if spec.p % 2:
        return (a - 1) * (b - 1) * (N - 1) // 2
    return (a - 1) * (b - 1) * ((N - 1) // 2)


def tilde_gamma(sign, label, spec: SurgerySpec) -> LatticePoint:
    """Map a label of H into R_sign."""
    s = _sign(sign)
    if not in_H(label, spec):
        raise DomainError(f"{tuple(label)} is not in H for {spec.to_json()}")
    h, k, l = label
    G = gamma(s, k, l, spec)
    if (G + spec.ab + h) % 2 == 0:
        return LatticePoint(spec.N - h, G)
    return LatticePoint(spec.N - h, spec.ab - G)


def tilde_theta(sign, point, spec: SurgerySpec) -> IrrepLabel:
    """Inverse of :func:`tilde_gamma` on R_sign."""
    s = _sign(sign)
    if not in_R(point, spec, s):
        raise DomainError(f"{tuple(point)} is not in R{'+' if s > 0 else '-'}")
    g, m = point
    a, b = spec.a, spec.b
    if (a * b + m + m % a) % 2 == 0:
        return IrrepLabel(spec.N - g, m % a, (s * m) % b)
    return IrrepLabel(spec.N - g, (-m) % a, (-s * m) % b)


def is_delta(point, spec: SurgerySpec) -> bool:
    """``m/ab < g/N``; the diagonal carries no lattice point of R or St."""
    g, m = point
    return m * spec.N < g * spec.ab


def partition_R(spec: SurgerySpec) -> Partition:
    parts = Partition([], [], [], [])
    for pt in enumerate_R(spec):
        g, m = pt
        if m * spec.N == g * spec.ab:
            raise DomainError(f"{pt} lies on the diagonal")
        plus = r_sign(pt, spec) > 0
        if is_delta(pt, spec):
            (parts.plus_delta if plus else parts.minus_delta).append(pt)
        else:
            (parts.plus_nabla if plus else parts.minus_nabla).append(pt)
    return parts


def partition_H(spec: SurgerySpec) -> Partition:
    r = partition_R(spec)
    return Partition(
        sorted(tilde_theta(+1, pt, spec) for pt in r.plus_delta),
        sorted(tilde_theta(+1, pt, spec) for pt in r.plus_nabla),
        sorted(tilde_theta(-1, pt, spec) for pt in r.minus_delta),
        sorted(tilde_theta(-1, pt, spec) for pt in r.minus_nabla),
    )


# -- large-n summation ranges ------------------------------------------------

def in_S2(point, spec: SurgerySpec) -> bool:
    l, m = point
    a, b, p, ab = spec.a, spec.b, spec.p, spec.ab
    return (-p < 2 * l < p and 0 < m < 2 * ab and m % a != 0 and m % b != 0
            and p * m <= 2 * ab * l + ab * p
            and 2 * l < m + p - 2 * ab)


def in_Stilde(point, spec: SurgerySpec) -> bool:
    g, m = point
    a, b, p, ab, N = spec.a, spec.b, spec.p, spec.ab, spec.N
    return (0 < m < 2 * ab and N * m < ab * g and g < 2 * N
            and (g - p + m) % 2 == 0 and m % a != 0 and m % b != 0)


def enumerate_S2(spec: SurgerySpec) -> list:
    half = spec.p // 2
    return [LatticePoint(l, m) for l in range(-half, half + 1) for m in range(1, 2 * spec.ab)
            if in_S2((l, m), spec)]


def enumerate_Stilde(spec: SurgerySpec) -> list:
    return [LatticePoint(g, m) for g in range(1, 2 * spec.N) for m in range(1, 2 * spec.ab)
            if in_Stilde((g, m), spec)]


def enumerate_S2_and_Stilde(spec: SurgerySpec) -> tuple:
    """Both ranges, each sorted; ``g = 2l - m + p`` maps the first onto the second."""
    s2 = enumerate_S2(spec)
    st = enumerate_Stilde(spec)
    return s2, st


def s2_to_stilde(point, spec: SurgerySpec) -> LatticePoint:
    l, m = point
    return LatticePoint(2 * l - m + spec.p, m)


def stilde_to_s2(point, spec: SurgerySpec) -> LatticePoint:
    g, m = point
    twice_l = g + m - spec.p
    if twice_l % 2:
        raise DomainError(f"{tuple(point)} has the wrong parity for St")
    return LatticePoint(twice_l // 2, m)


def enumerate_S1(spec: SurgerySpec) -> list:
    """S2 together with its boundary edge ``l = m/2 + p/2 - ab``."""
    a, b, p, ab = spec.a, spec.b, spec.p, spec.ab
    edge = []
    for m in range(1, 2 * ab):
        if m % a == 0 or m % b == 0 or (m + p) % 2:
            continue
        l = (m + p - 2 * ab) // 2
        if -p < 2 * l < p and p * m <= 2 * ab * l + ab * p:
            edge.append(LatticePoint(l, m))
    return sorted(enumerate_S2(spec) + edge)


def diagonal_points(spec: SurgerySpec) -> list:
    """Points of the bounding box ``0<g<2N, 0<m<2ab`` on ``m*N = g*ab`` that
    pass every other membership test of R or St (expected empty)."""
    a, b, p, ab, N = spec.a, spec.b, spec.p, spec.ab, spec.N
    out = []
    for g in range(1, 2 * N):
        for m in range(1, 2 * ab):
            if m * N == g * ab and m % a and m % b and (g - p + m) % 2 == 0:
                out.append(LatticePoint(g, m))
    return out

"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value is stored as the canonical remainder of a polynomial in zeta_m
modulo the m-th cyclotomic polynomial, with Fraction coefficients.  All
operations are exact; the floating-point view exists for diagnostics only.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import DivByZero

Coeffs = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs: list[Fraction]) -> Coeffs:
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, ascending."""
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    if m == 1:
        return (-1, 1)
    # x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            num = _int_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _int_exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic up to sign with integer coefficients; division is exact.
    num = num[:]
    dd = len(den) - 1
    lead = den[dd]
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        assert c % lead == 0
        q = c // lead
        out[k - dd] = q
        for j in range(dd + 1):
            num[k - dd + j] -= q * den[j]
    assert all(c == 0 for c in num)
    return out


def _reduce(m: int, dense: list[Fraction]) -> Coeffs:
    """Remainder of the dense coefficient vector modulo Phi_m."""
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    coeffs = dense[:]
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        coeffs[k] = _ZERO
        for j in range(d):
            coeffs[k - d + j] -= c * phi[j]
    return _trim(coeffs[:d] if len(coeffs) >= d else coeffs)


def _reduce_int(m: int, dense: list[int]) -> list[int]:
    """Remainder modulo Phi_m for integer coefficient vectors (Phi is monic
    with integer coefficients, so the remainder stays integral)."""
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    for k in range(len(dense) - 1, d - 1, -1):
        c = dense[k]
        if c:
            dense[k] = 0
            for j in range(d):
                dense[k - d + j] -= c * phi[j]
    return dense[:d] if len(dense) >= d else dense


def _scaled_ints(coeffs: Coeffs) -> tuple[list[int], int]:
    """(integer numerators, common denominator) for a coefficient tuple;
    lets the hot paths run on machine integers instead of Fractions."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in coeffs], den


def _from_scaled(m: int, dense: list[int], den: int) -> Coeffs:
    return _trim([Fraction(c, den) for c in _reduce_int(m, dense)])


class Cyclo:
    """An element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Coeffs, _reduced: bool = False):
        if m < 1:
            raise ValueError("conductor must be a positive integer")
        self.m = m
        if _reduced:
            self.coeffs = coeffs
        else:
            self.coeffs = _reduce(m, [Fraction(c) for c in coeffs])

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, value) -> "Cyclo":
        q = Fraction(value)
        return cls(1, (q,) if q else (), _reduced=True)

    @classmethod
    def zeta(cls, m: int, e: int = 1) -> "Cyclo":
        e %= m
        dense = [_ZERO] * (e + 1)
        dense[e] = _ONE
        return cls(m, _reduce(m, dense), _reduced=True)

    @classmethod
    def make(cls, m: int, mapping) -> "Cyclo":
        """Sum of mapping[e] * zeta_m^e over the given sparse exponent map."""
        if m < 1:
            raise ValueError("conductor must be a positive integer")
        dense = [_ZERO] * m
        for e, c in mapping.items():
            if not 0 <= e < m:
                raise ValueError(f"exponent {e} outside [0, {m})")
            dense[e] += Fraction(c)
        return cls(m, _reduce(m, dense), _reduced=True)

    @classmethod
    def two_cos(cls, k: int, n: int) -> "Cyclo":
        """The exact value 2*cos(k*pi/n) as zeta_{2n}^k + zeta_{2n}^{-k}."""
        return cls.zeta(2 * n, k) + cls.zeta(2 * n, -k)

    # -- conversions -------------------------------------------------------

    def promote(self, m2: int) -> "Cyclo":
        """Embed into the field of conductor m2 (m must divide m2)."""
        if m2 == self.m:
            return self
        if self.is_rational:
            return Cyclo(m2, self.coeffs, _reduced=True)
        if m2 % self.m != 0:
            raise ValueError("can only promote to a multiple conductor")
        step = m2 // self.m
        ints, den = _scaled_ints(self.coeffs)
        dense = [0] * (len(ints) * step or 1)
        for e, c in enumerate(ints):
            dense[e * step] = c
        return Cyclo(m2, _from_scaled(m2, dense, den), _reduced=True)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0] if self.coeffs else _ZERO

    def approx(self) -> complex:
        """Floating-point image; diagnostics only, never feeds exact results."""
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum((float(c) * z**e for e, c in enumerate(self.coeffs)), 0j)

    def key(self, m2: int | None = None) -> Coeffs:
        """Canonical coefficient tuple in conductor m2, usable as a sort key."""
        return self.promote(m2).coeffs if m2 is not None else self.coeffs

    # -- arithmetic --------------------------------------------------------

    def _pair(self, other) -> tuple["Cyclo", "Cyclo"]:
        if not isinstance(other, Cyclo):
            other = Cyclo.rational(other)
        m = math.lcm(self.m, other.m)
        return self.promote(m), other.promote(m)

    def __add__(self, other) -> "Cyclo":
        a, b = self._pair(other)
        n = max(len(a.coeffs), len(b.coeffs))
        dense = [_ZERO] * n
        for e, c in enumerate(a.coeffs):
            dense[e] += c
        for e, c in enumerate(b.coeffs):
            dense[e] += c
        return Cyclo(a.m, _trim(dense), _reduced=True)

    __radd__ = __add__

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.m, tuple(-c for c in self.coeffs), _reduced=True)

    def __sub__(self, other) -> "Cyclo":
        return self + (-other if isinstance(other, Cyclo) else Cyclo.rational(other).__neg__())

    def __rsub__(self, other) -> "Cyclo":
        return Cyclo.rational(other) - self

    def __mul__(self, other) -> "Cyclo":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclo(self.m, _trim([c * q for c in self.coeffs]), _reduced=True)
        a, b = self._pair(other)
        if not a.coeffs or not b.coeffs:
            return Cyclo(a.m, (), _reduced=True)
        ai, da = _scaled_ints(a.coeffs)
        bi, db = _scaled_ints(b.coeffs)
        dense = [0] * (len(ai) + len(bi) - 1)
        for i, ci in enumerate(ai):
            if ci:
                for j, cj in enumerate(bi):
                    if cj:
                        dense[i + j] += ci * cj
        return Cyclo(a.m, _from_scaled(a.m, dense, da * db), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero:
            raise DivByZero("cyclotomic division by zero")
        if self.is_rational:
            return Cyclo.rational(1 / self.as_rational())
        # Extended Euclid against Phi_m over Q: u*self + v*Phi_m = 1.
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [], [_ONE]
        while any(r1):
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        # r0 is a nonzero constant gcd (Phi_m is irreducible over Q).
        c = next(c for c in r0 if c)
        inv = [x / c for x in s0]
        return Cyclo(self.m, _reduce(self.m, inv), _reduced=True)

    def __truediv__(self, other) -> "Cyclo":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise DivByZero("cyclotomic division by zero")
            return self * (1 / q)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Cyclo":
        return Cyclo.rational(other) / self

    def conj(self) -> "Cyclo":
        """Complex conjugation, zeta_m -> zeta_m^{m-1}."""
        ints, den = _scaled_ints(self.coeffs)
        dense = [0] * self.m
        for e, c in enumerate(ints):
            dense[(-e) % self.m] += c
        return Cyclo(self.m, _from_scaled(self.m, dense, den), _reduced=True)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.as_rational() == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        m = math.lcm(self.m, other.m)
        return self.promote(m).coeffs == other.promote(m).coeffs

    def __hash__(self):
        if self.is_rational:
            return hash(self.as_rational())
        return hash((self.m, self.coeffs))

    def __repr__(self) -> str:
        if self.is_rational:
            return f"Cyclo({self.as_rational()})"
        terms = " + ".join(f"{c}*z{self.m}^{e}" for e, c in enumerate(self.coeffs) if c)
        return f"Cyclo({terms})"


def _qdivmod(num: list[Fraction], den: list[Fraction]):
    num = num[:]
    while den and den[-1] == 0:
        den = den[:-1]
    dd = len(den) - 1
    lead = den[dd]
    q = [_ZERO] * max(len(num) - dd, 0)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        f = c / lead
        q[k - dd] = f
        for j in range(dd + 1):
            num[k - dd + j] -= f * den[j]
    return q, num[:dd]


def _qmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ci in enumerate(a):
        if ci:
            for j, cj in enumerate(b):
                if cj:
                    out[i + j] += ci * cj
    return out


def _qsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [_ZERO] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


ZERO = Cyclo.rational(0)
ONE = Cyclo.rational(1)

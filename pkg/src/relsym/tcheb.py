"""Tchebychev polynomials and the binomial closed forms they produce.

T_n and U_n are built by the standard recurrences.  The binomial sums below
give closed forms for the quantum Cartan determinants of the finite A/B/C/D
diagrams and hence for the dihedral and cyclic invariant series; every
identity here is a polynomial identity checked exactly.
"""

from __future__ import annotations

from math import comb

from .poly import IntPoly, RatFun, one_minus_tk, ONE

_ONE_PLUS_T2 = IntPoly([1, 0, 1])
_ONE_MINUS_T2 = IntPoly([1, 0, -1])


def tcheb_t(n: int) -> IntPoly:
    """First-kind Tchebychev polynomial T_n."""
    if n == 0:
        return ONE
    a, b = ONE, IntPoly([0, 1])
    for _ in range(n - 1):
        a, b = b, IntPoly([0, 2]) * b - a
    return b


def tcheb_u(n: int) -> IntPoly:
    """Second-kind Tchebychev polynomial U_n."""
    if n == 0:
        return ONE
    a, b = ONE, IntPoly([0, 2])
    for _ in range(n - 1):
        a, b = b, IntPoly([0, 2]) * b - a
    return b


def tcheb_t_binomial(n: int) -> IntPoly:
    """Additive closed form T_n = sum_i C(n, 2i) t^{n-2i} (t^2 - 1)^i."""
    acc = IntPoly()
    for i in range(n // 2 + 1):
        acc = acc + comb(n, 2 * i) * IntPoly.term(1, n - 2 * i) * IntPoly([-1, 0, 1]) ** i
    return acc


def tcheb_u_binomial(n: int) -> IntPoly:
    """Additive closed form U_n = sum_i (-1)^i C(n-i, i) (2t)^{n-2i}."""
    acc = IntPoly()
    for i in range(n // 2 + 1):
        acc = acc + (-1) ** i * comb(n - i, i) * IntPoly.term(2 ** (n - 2 * i), n - 2 * i)
    return acc


def tcheb_identity_suite(max_n: int = 24) -> list[tuple[str, int, bool]]:
    """Exact checks of the additive closed forms and the T/U relations for
    0 <= n <= max_n, plus the c-polynomial Laurent identity for n <= 12."""
    report = []
    for n in range(max_n + 1):
        t_n, u_n = tcheb_t(n), tcheb_u(n)
        report.append(("T additive form", n, t_n == tcheb_t_binomial(n)))
        report.append(("U additive form", n, u_n == tcheb_u_binomial(n)))
        if n >= 1:
            report.append(("T = U - t U'", n, t_n == u_n - IntPoly([0, 1]) * tcheb_u(n - 1)))
        if n >= 2:
            report.append(("2T = U - U''", n, 2 * t_n == u_n - tcheb_u(n - 2)))
    for n in range(1, 13):
        # c_{n-1}(t) = 2 t^n T_n((t + 1/t)/2) as a Laurent identity: clear
        # denominators by multiplying both sides with (2t)^n.  The right side
        # becomes 2 t^n sum_k c_k (1+t^2)^k (2t)^{n-k} for T_n = sum c_k t^k.
        t_n = tcheb_t(n)
        lhs = c_poly(n - 1) * IntPoly.term(2 ** n, n)
        rhs = IntPoly()
        for k, coeff in enumerate(t_n.coeffs):
            if coeff:
                rhs = rhs + coeff * _ONE_PLUS_T2 ** k * IntPoly.term(2 ** (n - k), n - k)
        rhs = rhs * IntPoly.term(2, n)
        report.append(("c = 2 t^n T_n((t+1/t)/2)", n, lhs == rhs))
    return report


def _binomial_even_sum(n: int) -> IntPoly:
    """2^{1-n} sum_i C(n, 2i) (1+t^2)^{n-2i} (1-t^2)^{2i}, an integer
    polynomial after the power-of-two division."""
    acc = IntPoly()
    for i in range(n // 2 + 1):
        acc = acc + comb(n, 2 * i) * _ONE_PLUS_T2 ** (n - 2 * i) * _ONE_MINUS_T2 ** (2 * i)
    return IntPoly([c // 2 ** (n - 1) for c in acc.coeffs]) if n >= 1 else 2 * acc


def _alternating_sum(n: int) -> IntPoly:
    """sum_i (-1)^i C(n-i, i) t^{2i} (1+t^2)^{n-2i} (the quantum finite
    A_n determinant)."""
    acc = IntPoly()
    for i in range(n // 2 + 1):
        acc = acc + (-1) ** i * comb(n - i, i) * IntPoly.term(1, 2 * i) * _ONE_PLUS_T2 ** (n - 2 * i)
    return acc


def c_poly(m: int) -> IntPoly:
    """c_m(t), the quantum Cartan determinant of the finite B/C diagram of
    rank m + 1: c_0 = 1 + t^2, c_1 = 1 + t^4, with the standard three-term
    recurrence; equals the binomial form 2^{-m} sum C(m+1, 2i) ..."""
    return _binomial_even_sum(m + 1)


def a_poly(m: int) -> IntPoly:
    """a_m(t), the quantum Cartan determinant of the finite A_m diagram."""
    return _alternating_sum(m)


def d_poly(m: int) -> IntPoly:
    """d_m(t), the quantum Cartan determinant of the finite D_{m+2} diagram:
    (1 + t^2) c_m(t)."""
    return _ONE_PLUS_T2 * c_poly(m)


def dihedral_pair_closed_form(n: int) -> RatFun:
    """Invariant series of the pair D_{n-1} inside D_{2(n-1)}, n >= 3:
    c_{n-1} over (1 - t^2 - t^4 + t^6) times the alternating sum of
    length n - 2."""
    num = c_poly(n - 1)
    den = IntPoly([1, 0, -1, 0, -1, 0, 1]) * _alternating_sum(n - 2)
    return RatFun(num, den)


def cyclic_pair_closed_form(n: int) -> RatFun:
    """Invariant series of the pair C_{2n} inside D_n (equivalently inside
    D_{2n}), n >= 2: c_{n-1} over (1 - t^2)^2 times the alternating sum."""
    num = c_poly(n - 1)
    den = _ONE_MINUS_T2 ** 2 * _alternating_sum(n - 1)
    return RatFun(num, den)


def cyclic_group_closed_form(n: int) -> RatFun:
    """Invariant series of the cyclic group C_n of any order (the uniform
    binomial formula): a_{n-1} over (c_{n-1} - 2 t^n)."""
    num = a_poly(n - 1)
    den = c_poly(n - 1) - IntPoly.term(2, n)
    return RatFun(num, den)


def dihedral_group_closed_form(n: int) -> RatFun:
    """Invariant series of the binary dihedral group D_n, n >= 2:
    d_n over (1 - t^4)^2 times the alternating sum of length n - 1."""
    num = d_poly(n)
    den = one_minus_tk(4) ** 2 * _alternating_sum(n - 1)
    return RatFun(num, den)

"""Exact cyclotomic arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relsym.cyclotomic import Cyclo, cyclotomic_polynomial
from relsym.errors import DivByZero


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_zeta_relations():
    z5 = Cyclo.zeta(5)
    assert sum((Cyclo.zeta(5, k) for k in range(1, 5)), Cyclo.rational(0)) == -1
    assert z5 * Cyclo.zeta(5, 4) == 1
    assert Cyclo.zeta(2) == -1
    assert Cyclo.zeta(4) * Cyclo.zeta(4) == -1


def test_golden_ratio():
    w = Cyclo.two_cos(1, 5)  # 2 cos(pi/5), the golden ratio
    assert w * w - w - 1 == 0


def test_rational_detection_and_division():
    x = Cyclo.zeta(8) + Cyclo.zeta(8, 7)  # sqrt(2)
    assert not x.is_rational
    assert x * x == 2
    assert x / x == 1
    with pytest.raises(DivByZero):
        Cyclo.rational(1) / Cyclo.rational(0)
    with pytest.raises(ValueError):
        x.as_rational()


def test_promotion_equality_across_conductors():
    assert Cyclo.zeta(3, 1) + Cyclo.zeta(3, 2) == Cyclo.rational(-1)
    assert Cyclo.zeta(6, 2) == Cyclo.zeta(3, 1)
    assert hash(Cyclo.zeta(2)) == hash(Fraction(-1))


_elements = st.builds(
    lambda coeffs: Cyclo(12, tuple(Fraction(c) for c in coeffs)),
    st.lists(st.integers(-5, 5), min_size=1, max_size=5),
)


@settings(max_examples=60, deadline=None)
@given(_elements, _elements, _elements)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a


@settings(max_examples=40, deadline=None)
@given(_elements)
def test_inverse(a):
    if not a.is_zero:
        assert a * a.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 24), st.integers(1, 12))
def test_two_cos_is_real(k, n):
    x = Cyclo.two_cos(k, n)
    assert x.conj() == x

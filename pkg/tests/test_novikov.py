import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_floer.novikov import (
    GaussianRational,
    NovikovElement,
    add,
    convergent_eval,
    mul,
    valuation,
)


def T(r, c=1):
    return NovikovElement.monomial(c, Fraction(r))


small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=6)
exponents = st.fractions(min_value=0, max_value=4, max_denominator=8)
gaussians = st.builds(GaussianRational, small_fracs, small_fracs)
elements = st.lists(st.tuples(exponents, gaussians), max_size=8).map(NovikovElement)


def test_add_cancels():
    assert T(1) + T(1, -1) == NovikovElement.zero()


def test_add_orders_exponents():
    s = T(1, 2) + T(Fraction(3, 4))
    assert [e for e, _ in s.terms] == [Fraction(3, 4), 1]
    assert s.terms[1][1] == 2


def test_additive_identity():
    a = T(Fraction(1, 3), 5) + T(2, GaussianRational(0, 1))
    assert a + NovikovElement.zero() == a


def test_mul_monomials():
    a, b = GaussianRational(2, 1), GaussianRational(-1, 3)
    r, s = Fraction(1, 3), Fraction(5, 7)
    assert mul(T(r, a), T(s, b)) == T(r + s, a * b)
    assert mul(T(r, a), NovikovElement.zero()) == 0


def test_square_expansion():
    x = T(Fraction(1, 8)) + T(Fraction(3, 4))
    expected = T(Fraction(1, 4)) + T(Fraction(7, 8), 2) + T(Fraction(3, 2))
    assert x * x == expected


def test_valuation():
    assert valuation(T(Fraction(1, 8)) + T(Fraction(3, 4))) == Fraction(1, 8)
    assert valuation(NovikovElement.zero()) == math.inf


def test_convergent_eval():
    assert convergent_eval(T(1)) == pytest.approx(math.exp(-1))
    assert convergent_eval(T(1)) == pytest.approx(0.367879, abs=1e-6)
    assert convergent_eval(NovikovElement.zero()) == 0
    assert convergent_eval(T(1) - T(1)) == 0


def test_convergent_eval_rejects_nonpositive_base():
    with pytest.raises(ValueError):
        T(1).convergent_eval(0)


def test_modes_do_not_mix():
    with pytest.raises(TypeError):
        T(1, 1) + T(1, 1.0 + 0j)
    with pytest.raises(TypeError):
        NovikovElement([(0, 1), (1, 2.0)])
    # zero is compatible with both
    assert T(1, 0.5j) + NovikovElement.zero() == T(1, 0.5j)


def test_float_exponent_rejected():
    with pytest.raises(TypeError):
        NovikovElement.monomial(1, 0.5)


def test_json_round_trip():
    a = T(Fraction(-1, 3), GaussianRational(Fraction(2, 7), -1)) + T(2, 5)
    assert NovikovElement.from_json(a.to_json()) == a
    b = T(Fraction(1, 2), 0.25 - 1j)
    assert NovikovElement.from_json(b.to_json()) == b


def test_gaussian_rational_arithmetic():
    z = GaussianRational(1, 2)
    assert z * z.inverse() == 1
    assert z**-2 * z**2 == 1
    assert z.conjugate() * z == z.norm()
    assert GaussianRational(0, 1) ** 4 == 1


@settings(max_examples=100, deadline=None)
@given(elements, elements, elements)
def test_ring_laws(a, b, c):
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=100, deadline=None)
@given(elements, elements)
def test_valuation_additive(a, b):
    if a and b:
        assert valuation(a * b) == valuation(a) + valuation(b)


@settings(max_examples=100, deadline=None)
@given(elements, elements)
def test_convergent_eval_is_homomorphism(a, b):
    assert convergent_eval(a + b) == pytest.approx(convergent_eval(a) + convergent_eval(b), abs=1e-12)
    assert convergent_eval(a * b) == pytest.approx(convergent_eval(a) * convergent_eval(b), abs=1e-12, rel=1e-12)


@given(elements)
def test_normal_form(a):
    exps = [e for e, _ in a.terms]
    assert exps == sorted(set(exps))
    assert all(c != 0 for _, c in a.terms)

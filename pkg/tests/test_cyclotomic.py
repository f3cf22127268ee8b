"""Exact arithmetic in the 8th cyclotomic field."""

import cmath
import random
from fractions import Fraction

import pytest

from k3auto.cyclotomic import (Cyc8Element, I_UNIT, ONE, ZERO, ZETA,
                               zeta_pow)


def random_element(rng, bound=12):
    return Cyc8Element([Fraction(rng.randint(-bound, bound),
                                 rng.randint(1, 9)) for _ in range(4)])


def test_basis_relations():
    assert ZETA ** 4 == Cyc8Element.from_rational(-1)
    assert ZETA ** 8 == ONE
    assert I_UNIT * I_UNIT == Cyc8Element.from_rational(-1)
    assert zeta_pow(5) == -ZETA
    assert zeta_pow(-1) == zeta_pow(7)
    assert ZERO.is_zero() and not ONE.is_zero()


def test_field_axioms_randomized():
    rng = random.Random(80801)
    checks = 0
    for _ in range(160):
        a = random_element(rng)
        b = random_element(rng)
        c = random_element(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert a + (-a) == ZERO
        checks += 8
        if not a.is_zero():
            inv = a.invert()
            assert a * inv == ONE
            # independent oracle: the product of the other three Galois
            # conjugates equals norm * inverse
            conj = a.galois(3) * a.galois(5) * a.galois(7)
            norm = a.norm()
            assert a * conj == Cyc8Element.from_rational(norm)
            assert inv * norm == conj
            checks += 3
    assert checks >= 1000


def test_galois_group():
    rng = random.Random(80802)
    for _ in range(50):
        a = random_element(rng, bound=5)
        b = random_element(rng, bound=5)
        for j in (1, 3, 5, 7):
            assert (a * b).galois(j) == a.galois(j) * b.galois(j)
            assert (a + b).galois(j) == a.galois(j) + b.galois(j)
        # norm is multiplicative and rational
        assert (a * b).norm() == a.norm() * b.norm()
    with pytest.raises(ValueError):
        ZETA.galois(2)


def test_division_and_powers():
    x = ONE + ZETA
    assert x / x == ONE
    assert (ONE - ZETA) * (ONE - ZETA).invert() == ONE
    assert x ** 0 == ONE
    assert x ** 3 == x * x * x
    assert x ** -2 == (x * x).invert()
    with pytest.raises(ZeroDivisionError):
        ZERO.invert()


def test_rational_embedding_and_mixed_ops():
    two = Cyc8Element.from_rational(2)
    assert two.is_rational() and two.rational_part() == 2
    assert not ZETA.is_rational()
    assert 1 + ZETA == ZETA + 1
    assert 2 * ZETA == ZETA * 2
    assert 1 - ZETA == -(ZETA - 1)
    assert Fraction(1, 2) * ONE == Cyc8Element.from_rational(Fraction(1, 2))


def test_complex_embedding():
    target = cmath.exp(1j * cmath.pi / 4)
    assert abs(complex(ZETA) - target) < 1e-12
    assert abs(complex(I_UNIT) - 1j) < 1e-12
    x = Cyc8Element([1, 2, 3, 4])
    y = Cyc8Element([-2, 1, 0, 5])
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-9

"""Univariate rational polynomials, places, valuations."""

import random
from fractions import Fraction

import pytest

from k3auto.polynomial import (Place, RationalPolynomial, gcd,
                               infinity_transform, multiplicity_profile,
                               rational_roots, squarefree_decomposition,
                               split_by_valuation, valuation_at,
                               weierstrass_discriminant)

T = RationalPolynomial.variable()


def random_poly(rng, max_degree=6, bound=6):
    coeffs = {e: Fraction(rng.randint(-bound, bound))
              for e in range(rng.randint(0, max_degree) + 1)}
    p = RationalPolynomial(coeffs)
    return p if not p.is_zero() else RationalPolynomial({0: Fraction(1)})


def test_arithmetic_basics():
    p = (T - 1) * (T + 2)
    assert p == T ** 2 + T - 2
    assert p.evaluate(1) == 0 and p.evaluate(-2) == 0
    assert p.coefficient(1) == 1 and p.coefficient(5) == 0
    assert p.degree() == 2
    q, r = divmod(p, T - 1)
    assert q == T + 2 and r.is_zero()
    assert p.exact_div(T - 1) == T + 2
    with pytest.raises(ValueError):
        (p + 1).exact_div(T - 1)
    assert (3 * p).leading_coefficient() == 3
    assert p.derivative() == 2 * T + 1
    assert RationalPolynomial.from_pairs([("1/2", 3), (1, 0)]) \
        == Fraction(1, 2) * T ** 3 + 1


def test_degree_of_zero_is_minus_infinity():
    zero = RationalPolynomial.zero()
    assert zero.is_zero()
    assert zero.degree() == float("-inf")


def test_rational_roots_and_squarefree():
    p = (2 * T - 1) ** 2 * (T + 3) * (T ** 2 + 1)
    roots = rational_roots(p)
    assert sorted(roots) == [Fraction(-3), Fraction(1, 2)]
    recon = RationalPolynomial({0: Fraction(1)})
    for factor, mult in squarefree_decomposition(p):
        recon = recon * factor ** mult
    assert recon == p.monic()


def test_multiplicity_profile_pinned():
    p = (T - 1) ** 3 * (T ** 2 + 1) ** 2 * (T + 5)
    profile = multiplicity_profile(p)
    as_strings = [(str(place), mult) for place, mult in profile]
    assert as_strings == [("t=-5", 1), ("t=1", 3), ("roots of t^2 + 1", 2)]
    assert sum(place.degree() * mult for place, mult in profile) \
        == p.degree()


def test_multiplicity_profile_degree_conservation():
    rng = random.Random(80803)
    for _ in range(120):
        p = random_poly(rng, max_degree=5)
        extra = random_poly(rng, max_degree=2)
        p = p * extra ** rng.randint(1, 3)
        if p.degree() <= 0:
            continue
        profile = multiplicity_profile(p)
        assert sum(place.degree() * mult for place, mult in profile) \
            == p.degree()
        # every reported rational place really is a root of that order
        for place, mult in profile:
            if place.kind == "finite-rational":
                assert valuation_at(p, place) == mult


def test_valuations():
    p = T ** 2 * (T - 2) ** 3
    assert valuation_at(p, Place.finite_rational(0)) == 2
    assert valuation_at(p, Place.finite_rational(2)) == 3
    assert valuation_at(p, Place.finite_rational(1)) == 0
    assert valuation_at(RationalPolynomial.zero(),
                        Place.finite_rational(0)) == float("inf")
    with pytest.raises(ValueError):
        valuation_at(p, Place.infinity())


def test_split_by_valuation():
    p = (T - 1) ** 2 * (T + 1) ** 3 * (T - 4)
    f = (T - 1) * (T + 1) * (T - 4) * (T - 7)
    parts = dict((v, part) for part, v in split_by_valuation(f, p))
    assert parts[0] == (T - 7).monic()
    assert parts[1] == (T - 4).monic()
    assert parts[2] == (T - 1).monic()
    assert parts[3] == (T + 1).monic()


def test_place_basics():
    assert str(Place.infinity()) == "t=infinity"
    assert str(Place.finite_rational(Fraction(1, 2))) == "t=1/2"
    assert Place.finite_rational(3).degree() == 1
    quad = Place.finite_irreducible(T ** 2 + 1)
    assert quad.degree() == 2
    assert Place.infinity().degree() == 1


def test_infinity_transform_matches_discriminant():
    rng = random.Random(80804)
    for _ in range(40):
        a = random_poly(rng, max_degree=8)
        b = random_poly(rng, max_degree=12)
        at, bt, dt = infinity_transform(a, b)
        assert dt == weierstrass_discriminant(at, bt)
        # the reversal weights: coefficient j of a becomes 8 - j
        for e, c in a.coeffs.items():
            assert at.coefficient(8 - e) == c
        for e, c in b.coeffs.items():
            assert bt.coefficient(12 - e) == c
    with pytest.raises(ValueError):
        infinity_transform(T ** 9, T)


def test_infinity_transform_valuation_pin():
    # a cubic-term discriminant of degree 23 leaves a simple zero at the
    # far pole
    a = RationalPolynomial.zero()
    b = T ** 11 + 1
    at, bt, dt = infinity_transform(a, b)
    assert valuation_at(dt, Place.finite_rational(0)) == 24 - 22

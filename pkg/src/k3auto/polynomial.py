"""Exact univariate polynomials over Q and valuation bookkeeping.

Polynomials are sparse maps {exponent: Fraction} with no zero coefficients
stored.  Only the operations the surface analysis actually needs live here:
ring arithmetic, exact division, gcd, Yun squarefree decomposition,
rational roots, and the place/valuation utilities (including the weighted
chart change at t = infinity).  Full irreducible factorization is
deliberately avoided; squarefree grouping plus rational-root extraction is
enough everywhere.

A Place is where a fiber lives: a rational point t0, a monic squarefree
factor with no rational roots (a Galois orbit class of irrational points),
or the point at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected an int or Fraction, got %r" % (value,))


class RationalPolynomial:
    """Sparse polynomial in one variable with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[int, Scalar]] = None):
        clean: Dict[int, Fraction] = {}
        if coeffs:
            for exp, c in coeffs.items():
                if exp < 0 or not isinstance(exp, int):
                    raise ValueError("exponents must be non-negative integers")
                f = _as_fraction(c)
                if f != 0:
                    clean[exp] = f
        self.coeffs: Dict[int, Fraction] = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Scalar, int]]) -> "RationalPolynomial":
        """Build from [coefficient, exponent] pairs (coefficients may repeat)."""
        acc: Dict[int, Fraction] = {}
        for coeff, exp in pairs:
            c = Fraction(coeff) if isinstance(coeff, str) else _as_fraction(coeff)
            acc[exp] = acc.get(exp, Fraction(0)) + c
        return cls(acc)

    @classmethod
    def constant(cls, value: Scalar) -> "RationalPolynomial":
        return cls({0: _as_fraction(value)})

    @classmethod
    def monomial(cls, coeff: Scalar, exp: int) -> "RationalPolynomial":
        return cls({exp: _as_fraction(coeff)})

    @classmethod
    def variable(cls) -> "RationalPolynomial":
        return cls({1: Fraction(1)})

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls()

    # -- serialization ----------------------------------------------------

    def to_pairs(self) -> List[List[object]]:
        """[[coefficient-string, exponent], ...] with "p/q" or "p" coefficients."""
        return [[str(self.coeffs[e]), e] for e in sorted(self.coeffs)]

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Max stored exponent; -inf for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else NEG_INF

    def coefficient(self, exp: int) -> Fraction:
        return self.coeffs.get(exp, Fraction(0))

    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[max(self.coeffs)]

    def constant_term(self) -> Fraction:
        return self.coeffs.get(0, Fraction(0))

    def is_constant(self) -> bool:
        return self.is_zero() or self.degree() == 0

    def evaluate(self, t: Scalar) -> Fraction:
        t = _as_fraction(t)
        out = Fraction(0)
        for exp, c in self.coeffs.items():
            out += c * t ** exp
        return out

    def evaluate_float(self, t: float) -> float:
        return sum(float(c) * t ** exp for exp, c in self.coeffs.items())

    # -- ring arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial.constant(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        acc = dict(self.coeffs)
        for exp, c in o.coeffs.items():
            acc[exp] = acc.get(exp, Fraction(0)) + c
        return RationalPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        acc: Dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return RationalPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = RationalPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: Dict[int, Fraction] = {}
        r = self
        do, lo = o.degree(), o.leading_coefficient()
        while not r.is_zero() and r.degree() >= do:
            shift = r.degree() - do
            factor = r.leading_coefficient() / lo
            q[shift] = q.get(shift, Fraction(0)) + factor
            r = r - RationalPolynomial.monomial(factor, shift) * o
        return RationalPolynomial(q), r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "RationalPolynomial") -> "RationalPolynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for exp in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exp]
            if exp == 0:
                body = str(c)
            else:
                var = "t" if exp == 1 else "t^%d" % exp
                if c == 1:
                    body = var
                elif c == -1:
                    body = "-" + var
                else:
                    body = "%s*%s" % (c, var)
            terms.append(body)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return "Poly(%s)" % out

    # -- calculus and normal forms ----------------------------------------

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(
            {e - 1: e * c for e, c in self.coeffs.items() if e >= 1})

    def monic(self) -> "RationalPolynomial":
        if self.is_zero():
            return self
        lead = self.leading_coefficient()
        return RationalPolynomial({e: c / lead for e, c in self.coeffs.items()})

    def substitute_scaled(self, scale: Scalar) -> "RationalPolynomial":
        """p(scale * t) for a rational scale."""
        s = _as_fraction(scale)
        return RationalPolynomial({e: c * s ** e for e, c in self.coeffs.items()})


def gcd(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Monic gcd over Q (a nonzero constant gcd normalizes to 1)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def squarefree_decomposition(
        p: RationalPolynomial) -> List[Tuple[RationalPolynomial, int]]:
    """Yun's algorithm: monic squarefree factors with their multiplicities.

    Returns [(f_i, i)] with p = lc * prod f_i^i, the f_i monic, squarefree,
    pairwise coprime, and only degree >= 1 factors reported.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    p = p.monic()
    if p.degree() == 0:
        return []
    out: List[Tuple[RationalPolynomial, int]] = []
    g = gcd(p, p.derivative())
    w = p.exact_div(g)
    i = 1
    while w.degree() > 0:
        y = gcd(w, g)
        factor = w.exact_div(y)
        if factor.degree() > 0:
            out.append((factor, i))
        w = y
        g = g.exact_div(y)
        i += 1
    return out


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: RationalPolynomial) -> List[Fraction]:
    """All rational roots of p (each listed once), via the rational root test."""
    if p.is_zero():
        raise ValueError("every rational is a root of the zero polynomial")
    roots: List[Fraction] = []
    # strip powers of t
    v0 = min(p.coeffs) if p.coeffs else 0
    if v0 > 0:
        roots.append(Fraction(0))
        p = RationalPolynomial({e - v0: c for e, c in p.coeffs.items()})
    if p.degree() < 1:
        return roots
    # clear denominators to a primitive integer polynomial
    denom = 1
    for c in p.coeffs.values():
        denom = denom * c.denominator // _gcd_int(denom, c.denominator)
    ints = {e: int(c * denom) for e, c in p.coeffs.items()}
    a0 = ints.get(0)
    an = ints[max(ints)]
    assert a0 is not None and a0 != 0
    for num in _divisors(a0):
        for den in _divisors(an):
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                if cand not in roots and p.evaluate(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# places


@dataclass(frozen=True)
class Place:
    """A closed point of the base P^1: rational, irrational class, or infinity.

    kind "finite-irreducible" carries a monic squarefree polynomial of
    degree >= 2 without rational roots.  (It may factor further over Q into
    irrational pieces; full factorization is intentionally not performed,
    and no computation here needs it.)
    """

    kind: str
    t0: Optional[Fraction] = None
    poly: Optional[RationalPolynomial] = None

    @classmethod
    def finite_rational(cls, t0: Scalar) -> "Place":
        return cls(kind="finite-rational", t0=_as_fraction(t0))

    @classmethod
    def finite_irreducible(cls, p: RationalPolynomial) -> "Place":
        p = p.monic()
        if p.degree() < 2:
            raise ValueError("degree-1 factors normalize to finite-rational")
        if rational_roots(p):
            raise ValueError("factor has a rational root; split it first")
        return cls(kind="finite-irreducible", poly=p)

    @classmethod
    def infinity(cls) -> "Place":
        return cls(kind="infinity")

    def degree(self) -> int:
        if self.kind == "finite-rational":
            return 1
        if self.kind == "finite-irreducible":
            assert self.poly is not None
            return int(self.poly.degree())
        return 1

    def __str__(self):
        if self.kind == "finite-rational":
            return "t=%s" % self.t0
        if self.kind == "finite-irreducible":
            return "roots of %s" % repr(self.poly)[5:-1]
        return "t=infinity"


def valuation_at(p: RationalPolynomial, place: Place):
    """Order of vanishing of p at a finite place; inf for the zero polynomial.

    The place at infinity is handled by the weighted chart change
    (infinity_transform), not here.
    """
    if place.kind == "infinity":
        raise ValueError("use infinity_transform for the place at infinity")
    if p.is_zero():
        return float("inf")
    count = 0
    if place.kind == "finite-rational":
        t0 = place.t0
        assert t0 is not None
        linear = RationalPolynomial({1: Fraction(1), 0: -t0})
        while p.evaluate(t0) == 0:
            p = p.exact_div(linear)
            count += 1
        return count
    assert place.poly is not None
    while True:
        q, r = divmod(p, place.poly)
        if not r.is_zero():
            return count
        p = q
        count += 1


def multiplicity_profile(
        p: RationalPolynomial) -> List[Tuple[Place, int]]:
    """Root classes of p grouped by multiplicity.

    Rational roots come out as finite-rational places; whatever is left in
    each squarefree layer is reported as a single finite-irreducible place
    carrying its total degree.  Sum of multiplicity * degree = deg p.
    """
    if p.is_zero():
        raise ValueError("zero polynomial rejected")
    out: List[Tuple[Place, int]] = []
    for factor, mult in squarefree_decomposition(p):
        residual = factor
        for root in rational_roots(factor):
            out.append((Place.finite_rational(root), mult))
            residual = residual.exact_div(
                RationalPolynomial({1: Fraction(1), 0: -root}))
        if residual.degree() > 0:
            out.append((Place.finite_irreducible(residual), mult))
    out.sort(key=_profile_sort_key)
    return out


def _profile_sort_key(entry: Tuple[Place, int]):
    place, mult = entry
    if place.kind == "finite-rational":
        return (0, place.t0, mult)
    return (1, sorted(place.poly.coeffs.items()), mult)


def split_by_valuation(
        f: RationalPolynomial,
        p: RationalPolynomial) -> List[Tuple[RationalPolynomial, int]]:
    """Split a squarefree f by the multiplicity its roots have in p.

    Returns [(f_v, v)] with f = prod f_v and every root of f_v of
    multiplicity exactly v in p.  Works by peeling gcd layers, no
    factorization needed.  p = 0 is rejected (all valuations infinite).
    """
    if p.is_zero():
        raise ValueError("cannot split against the zero polynomial")
    f = f.monic()
    out: List[Tuple[RationalPolynomial, int]] = []
    level = 0
    while f.degree() > 0:
        common = gcd(f, p)
        v0_part = f.exact_div(common) if common.degree() > 0 else f
        if v0_part.degree() > 0:
            out.append((v0_part, level))
        if common.degree() <= 0:
            break
        f = common
        p = p.exact_div(common)
        level += 1
    return out


# ---------------------------------------------------------------------------
# Weierstrass-flavoured helpers


def weierstrass_discriminant(a: RationalPolynomial,
                             b: RationalPolynomial) -> RationalPolynomial:
    """4a^3 + 27b^2."""
    return a * a * a * 4 + b * b * 27


def infinity_transform(
        a: RationalPolynomial, b: RationalPolynomial
) -> Tuple[RationalPolynomial, RationalPolynomial, RationalPolynomial]:
    """Weighted chart change at t = infinity for a short Weierstrass datum.

    With s = 1/t and weights (4, 6) on (x, y):
      a~(s) = s^8 a(1/s),  b~(s) = s^12 b(1/s),  D~(s) = s^24 D(1/s).
    Degree bounds deg a <= 8, deg b <= 12 are what make these polynomial.
    """
    if a.degree() > 8 or b.degree() > 12:
        raise ValueError("not a K3 Weierstrass datum (deg a <= 8, deg b <= 12)")
    a_t = RationalPolynomial({8 - e: c for e, c in a.coeffs.items()})
    b_t = RationalPolynomial({12 - e: c for e, c in b.coeffs.items()})
    delta = weierstrass_discriminant(a, b)
    d_t = RationalPolynomial({24 - e: c for e, c in delta.coeffs.items()})
    return a_t, b_t, d_t

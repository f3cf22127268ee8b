"""Exact arithmetic in the cyclotomic field Q(zeta_8).

Elements are stored on the power basis (1, z, z^2, z^3) where z is a
primitive 8th root of unity, reduced with z^4 = -1.  Coordinates are
`fractions.Fraction`, so every operation is exact.  Two elements are equal
iff their four coordinates are equal (the basis representation is
canonical).

The field contains i = z^2 and sqrt(2) = z - z^3, which covers all the
eigenvalue bookkeeping done elsewhere in the package.  Nothing here knows
about polynomials or geometry; this module is the arithmetic floor.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Tuple, Union

Scalar = Union[int, Fraction]

_BASIS_NAMES = ("", "z", "z^2", "z^3")


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected an int or Fraction, got %r" % (value,))


class Cyc8Element:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 of Q(zeta_8)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[Scalar] = (0, 0, 0, 0)):
        cs = tuple(_as_fraction(c) for c in coords)
        if len(cs) != 4:
            raise ValueError("power basis needs exactly 4 coordinates")
        self.coords: Tuple[Fraction, Fraction, Fraction, Fraction] = cs

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value: Scalar) -> "Cyc8Element":
        return cls((_as_fraction(value), 0, 0, 0))

    @classmethod
    def zero(cls) -> "Cyc8Element":
        return cls()

    @classmethod
    def one(cls) -> "Cyc8Element":
        return cls((1, 0, 0, 0))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return self.coords[1] == 0 and self.coords[2] == 0 and self.coords[3] == 0

    def rational_part(self) -> Fraction:
        """The element as a Fraction; raises if it is not rational."""
        if not self.is_rational():
            raise ValueError("%r is not a rational number" % (self,))
        return self.coords[0]

    # -- ring structure -------------------------------------------------

    def _coerce(self, other) -> "Cyc8Element":
        if isinstance(other, Cyc8Element):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc8Element.from_rational(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc8Element(tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc8Element(tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc8Element(tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coords, o.coords
        # z^i * z^j = z^(i+j), folded back with z^4 = -1.
        acc = [Fraction(0)] * 4
        for i in range(4):
            if a[i] == 0:
                continue
            for j in range(4):
                if b[j] == 0:
                    continue
                k = i + j
                if k < 4:
                    acc[k] += a[i] * b[j]
                else:
                    acc[k - 4] -= a[i] * b[j]
        return Cyc8Element(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        out = Cyc8Element.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.invert()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.invert()

    # -- field structure -------------------------------------------------

    def invert(self) -> "Cyc8Element":
        """Multiplicative inverse, by solving x*y = 1 as a 4x4 linear system.

        The matrix is multiplication-by-x on the power basis; Gaussian
        elimination over Fraction keeps everything exact.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in Q(zeta_8)")
        # column j of M is x * z^j on the basis
        cols = []
        power = Cyc8Element.one()
        z = zeta_pow(1)
        for _ in range(4):
            cols.append((self * power).coords)
            power = power * z
        m = [[cols[j][i] for j in range(4)] + [Fraction(1 if i == 0 else 0)]
             for i in range(4)]
        # forward elimination with partial pivot by first nonzero
        for col in range(4):
            pivot = next(r for r in range(col, 4) if m[r][col] != 0)
            m[col], m[pivot] = m[pivot], m[col]
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
            for r in range(4):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [v - f * w for v, w in zip(m[r], m[col])]
        return Cyc8Element(tuple(m[i][4] for i in range(4)))

    def galois(self, j: int) -> "Cyc8Element":
        """The field automorphism sending z to z^j, for j in {1,3,5,7}.

        On the power basis:
          j=3: (c0, c3, -c2, c1)     j=5: (c0, -c1, c2, -c3)
          j=7: (c0, -c3, -c2, -c1)   (j=7 is complex conjugation)
        """
        c0, c1, c2, c3 = self.coords
        j = j % 8
        if j == 1:
            return Cyc8Element((c0, c1, c2, c3))
        if j == 3:
            return Cyc8Element((c0, c3, -c2, c1))
        if j == 5:
            return Cyc8Element((c0, -c1, c2, -c3))
        if j == 7:
            return Cyc8Element((c0, -c3, -c2, -c1))
        raise ValueError("galois exponent must be odd mod 8, got %d" % j)

    def conjugate(self) -> "Cyc8Element":
        """Complex conjugation (z -> z^7 = z^-1)."""
        return self.galois(7)

    def norm(self) -> Fraction:
        """Product of all four Galois conjugates; always rational."""
        prod = self
        for j in (3, 5, 7):
            prod = prod * self.galois(j)
        assert prod.is_rational()
        return prod.coords[0]

    # -- misc -------------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        terms = []
        for c, name in zip(self.coords, _BASIS_NAMES):
            if c == 0:
                continue
            if name == "":
                terms.append(str(c))
            elif c == 1:
                terms.append(name)
            elif c == -1:
                terms.append("-" + name)
            else:
                terms.append("%s*%s" % (c, name))
        if not terms:
            return "Cyc8(0)"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return "Cyc8(%s)" % out

    def __complex__(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / 8)
        return sum(float(c) * z ** k for k, c in enumerate(self.coords))


def zeta_pow(e: int) -> Cyc8Element:
    """Canonical representation of zeta_8^e (e arbitrary, reduced mod 8)."""
    e = e % 8
    coords = [Fraction(0)] * 4
    if e < 4:
        coords[e] = Fraction(1)
    else:
        coords[e - 4] = Fraction(-1)
    return Cyc8Element(coords)


ZERO = Cyc8Element.zero()
ONE = Cyc8Element.one()
ZETA = zeta_pow(1)
I_UNIT = zeta_pow(2)

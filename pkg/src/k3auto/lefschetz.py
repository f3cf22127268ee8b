"""Holomorphic and topological Lefschetz bookkeeping, exact over Q(zeta_8).

The order-8 automorphism acts on the 2-form by zeta_8, so the alternating
trace on H^*(O_X) of its j-th power is 1 + zeta^(8-j).  The fixed locus
side is a sum of isolated-point terms 1/((1-z^t)(1-z^s)) and fixed-curve
terms (1-g)(1+z^e)/(1-z^e)^2.  Everything is evaluated exactly; "matches"
is literal field equality, never a tolerance.

Admissible isolated points have unordered local eigenvalue exponents
(2,7), (3,6) or (4,5) (determinant condition t+s = 9).  For the square of
the automorphism every isolated fixed point has local type (6,4) and fixed
curves have normal exponent 2, so configurations for power_j=2 only use
their total point count.

The module also re-derives the two integer point-count constraints by
expanding the fixed-point sum on the power basis and reducing the
resulting integer matrix (saturation + Hermite form), instead of
hardcoding them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .cyclotomic import Cyc8Element, zeta_pow

_ADMISSIBLE_T = (2, 3, 4)


@dataclass(frozen=True)
class PointType:
    """Isolated fixed point with tangent eigenvalue exponents (t, 9-t)."""

    t: int

    def __post_init__(self):
        if self.t not in _ADMISSIBLE_T:
            raise ValueError("point type must have t in {2,3,4}, got %r" % (self.t,))

    @property
    def s(self) -> int:
        return 9 - self.t


@dataclass(frozen=True)
class FixedCurve:
    """A fixed curve: its genus and the normal-direction eigenvalue exponent."""

    genus: int
    normal_exponent: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")


@dataclass(frozen=True)
class FixedLocusConfig:
    """Fixed locus data: curves plus counts of the three isolated point types.

    For power_j=2 configurations the split n2/n3/n4 carries no meaning
    (every isolated point has local type (6,4)); only the total N is used.
    Convention there: store the count in n2.
    """

    curves: Tuple[FixedCurve, ...]
    n2: int
    n3: int
    n4: int

    def __post_init__(self):
        if min(self.n2, self.n3, self.n4) < 0:
            raise ValueError("point counts must be non-negative")

    @property
    def N(self) -> int:
        return self.n2 + self.n3 + self.n4

    @property
    def alpha(self) -> int:
        return sum(1 - c.genus for c in self.curves)

    @property
    def k(self) -> int:
        return sum(1 for c in self.curves if c.genus == 0)

    def to_json(self) -> Dict:
        return {
            "curves": [{"genus": c.genus, "normal_exp": c.normal_exponent}
                       for c in self.curves],
            "n2": self.n2, "n3": self.n3, "n4": self.n4,
        }

    @classmethod
    def from_json(cls, data: Dict) -> "FixedLocusConfig":
        curves = tuple(FixedCurve(c["genus"], c["normal_exp"])
                       for c in data.get("curves", ()))
        return cls(curves=curves, n2=data["n2"], n3=data["n3"], n4=data["n4"])


def holo_target(power_j: int) -> Cyc8Element:
    """1 + zeta^(8-j): trace of sigma^j on H^0 + H^2 of the structure sheaf."""
    if power_j not in (1, 2, 4):
        raise ValueError("supported powers are 1, 2, 4")
    return Cyc8Element.one() + zeta_pow(8 - power_j)


def point_term_exponents(e1: int, e2: int) -> Cyc8Element:
    """1 / ((1 - z^e1)(1 - z^e2)); both exponents nonzero mod 8."""
    if e1 % 8 == 0 or e2 % 8 == 0:
        raise ValueError("isolated point needs nonzero tangent exponents")
    den = (Cyc8Element.one() - zeta_pow(e1)) * (Cyc8Element.one() - zeta_pow(e2))
    return den.invert()


def point_term(pt: PointType) -> Cyc8Element:
    return point_term_exponents(pt.t, pt.s)


def curve_term(c: FixedCurve) -> Cyc8Element:
    """(1 - genus) * (1 + z^e) / (1 - z^e)^2 for normal exponent e."""
    e = c.normal_exponent % 8
    if e == 0:
        raise ValueError("fixed curve needs a nontrivial normal eigenvalue")
    one = Cyc8Element.one()
    num = one + zeta_pow(e)
    den = (one - zeta_pow(e)) * (one - zeta_pow(e))
    return (num * den.invert()) * Fraction(1 - c.genus)


_SQUARE_POINT_EXPONENTS = (6, 4)  # local type diag(-i, -1) for sigma^2


def holo_total(config: FixedLocusConfig,
               power_j: int = 1) -> Tuple[Cyc8Element, bool]:
    """Fixed-locus side of the holomorphic fixed point formula, plus match flag.

    power_j=1 sums the three point types with curve terms as given.
    power_j=2 treats all N isolated points as type (6,4); curves should
    carry normal exponent 2 (genus-1 curves contribute 0 regardless).
    """
    total = Cyc8Element.zero()
    if power_j == 1:
        for count, t in ((config.n2, 2), (config.n3, 3), (config.n4, 4)):
            if count:
                total = total + point_term(PointType(t)) * Fraction(count)
    elif power_j == 2:
        if config.N:
            total = total + point_term_exponents(*_SQUARE_POINT_EXPONENTS) \
                * Fraction(config.N)
    else:
        raise ValueError("holo_total supports power_j in {1, 2}")
    for c in config.curves:
        if c.genus == 1:
            continue  # factor (1 - g) kills the term; skips dead invert work
        total = total + curve_term(c)
    return total, total == holo_target(power_j)


def topo_check(config: FixedLocusConfig, r: int, l: int) -> bool:
    """Topological count: chi(Fix) = 2 + r - l, i.e. N + 2*alpha = r - l + 2."""
    return config.N + 2 * config.alpha == r - l + 2


def power_point_type(pt: PointType) -> str:
    """Fate of an isolated point under squaring the automorphism."""
    if pt.t == 4:
        # exponents double to (8,10) = (0,2): tangent eigenvalue 1
        return "on a sigma^2-fixed curve"
    return "isolated for sigma^2"


# ---------------------------------------------------------------------------
# integer linear algebra (small, exact)


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """Row-style Hermite normal form of an integer matrix.

    Positive pivots, entries above a pivot reduced into [0, pivot).
    Zero rows are dropped.  Purely Euclidean row operations.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        live = [i for i in range(rank, len(work)) if work[i][col] != 0]
        while len(live) > 1:
            live.sort(key=lambda i: abs(work[i][col]))
            base = live[0]
            for i in live[1:]:
                q = work[i][col] // work[base][col]
                work[i] = [a - q * b for a, b in zip(work[i], work[base])]
            live = [i for i in range(rank, len(work)) if work[i][col] != 0]
        if not live:
            continue
        work[rank], work[live[0]] = work[live[0]], work[rank]
        if work[rank][col] < 0:
            work[rank] = [-a for a in work[rank]]
        for i in range(rank):
            q = work[i][col] // work[rank][col]
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return [row for row in work[:rank] if any(row)]


def integer_kernel(rows: Sequence[Sequence[int]], width: int) -> List[List[int]]:
    """Basis of {x in Z^width : M x = 0} for the matrix with the given rows."""
    m = len(rows)
    if m == 0:
        return [[1 if i == j else 0 for i in range(width)] for j in range(width)]
    # rows of [M^T | I]; HNF rows with zero M^T-part give the kernel
    aug = [[rows[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(width)]
           for j in range(width)]
    out = []
    for row in hermite_normal_form(aug):
        if all(v == 0 for v in row[:m]):
            out.append(row[m:])
    return out


def saturate_rows(rows: Sequence[Sequence[int]], width: int) -> List[List[int]]:
    """Basis of (Q-span of rows) intersected with Z^width: kernel of the kernel."""
    kern = integer_kernel(rows, width)
    return integer_kernel(kern, width)


def derive_prop1_constraints() -> List[Tuple[int, int, int, int, int]]:
    """Re-derive the two point-count equations from the fixed point formula.

    Expands n2*P(2,7) + n3*P(3,6) + n4*P(4,5) + alpha*C(g=0,e=1) = 1 + z^7
    coordinatewise on the power basis, clears denominators, saturates the
    integer row lattice and returns its Hermite form as tuples
    (c_n2, c_n3, c_n4, c_alpha, rhs).  Exactly two independent equations
    survive; in expanded form they read

        n2 + n3 - 4*alpha = 2
        n4 + n2 - n3 - 2*alpha = 2
    """
    columns = [point_term(PointType(2)), point_term(PointType(3)),
               point_term(PointType(4)), curve_term(FixedCurve(0, 1))]
    target = holo_target(1)
    raw: List[List[int]] = []
    for i in range(4):
        fracs = [c.coords[i] for c in columns] + [target.coords[i]]
        den = 1
        for f in fracs:
            den = den * f.denominator // _gcd(den, f.denominator)
        row = [int(f * den) for f in fracs]
        if any(row):
            raw.append(row)
    sat = saturate_rows(raw, 5)
    hnf = hermite_normal_form(sat)
    if len(hnf) != 2:
        raise AssertionError("expected exactly 2 independent constraints, got %d"
                             % len(hnf))
    return [tuple(r) for r in hnf]  # type: ignore[return-value]


def prop1_satisfied(n2: int, n3: int, n4: int, alpha: int) -> bool:
    """Check a candidate count vector against the derived equations."""
    for c2, c3, c4, ca, rhs in derive_prop1_constraints():
        if c2 * n2 + c3 * n3 + c4 * n4 + ca * alpha != rhs:
            return False
    return True


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)

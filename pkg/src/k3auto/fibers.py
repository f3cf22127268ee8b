"""Fiber dual graphs with a finite-order action: fixed components and points.

Shapes are smooth elliptic fibers, cycles I_n, and the star IV* (central
component of multiplicity 3, three arms middle+leaf).  An action is a
combinatorial label (preserve each component, reflection, rotation, or the
elliptic-curve actions).  Local eigenvalue exponents at the nodes then
propagate along invariant chains: if a fixed node has exponent pair (t, s)
the next node along the chain carries (t-1, s+1) mod 8, and the pair at an
isolated fixed point of the order-8 action sums to 1 mod 8 (determinant
condition on the 2-form eigenvalue).

Rather than trusting a by-hand orientation, fiber_fixed_data enumerates
the finitely many consistent exponent labelings (start pair around a
cycle, involution derivative on an axis or central component) and checks
they all produce the same counting data.  The same propagation with the
doubled or quadrupled multiplier yields the sigma^2 / sigma^4 data.

Action labels serialize as the classification table strings, e.g.
"rotation of order 2 on I_8" or "reflection of IV*".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

SMOOTH = "smooth-elliptic"
I_CYCLE = "I_n"
IV_STAR = "IV*"

# smooth-elliptic action names
IDENTITY = "identity"
TRANSLATION_2 = "translation-2"
TRANSLATION_4 = "translation-4"
INVOLUTION = "involution"
ORDER_4 = "order-4"

# degenerate-fiber action names
PRESERVE = "preserve-components"
REFLECTION = "reflection"
ROTATION_2 = "rotation-2"
ROTATION_4 = "rotation-4"
BRANCH_SWAP = "branch-swap"

_SMOOTH_ACTIONS = (IDENTITY, TRANSLATION_2, TRANSLATION_4, INVOLUTION, ORDER_4)
_CYCLE_ACTIONS = (PRESERVE, REFLECTION, ROTATION_2, ROTATION_4)
_STAR_ACTIONS = (PRESERVE, BRANCH_SWAP)


@dataclass(frozen=True)
class FiberShape:
    """A Kodaira fiber shape: smooth, a cycle I_n, or the star IV*."""

    kind: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind not in (SMOOTH, I_CYCLE, IV_STAR):
            raise ValueError("unknown fiber kind %r" % (self.kind,))
        if self.kind == I_CYCLE:
            if self.n is None or self.n < 1:
                raise ValueError("I_n needs n >= 1")
        elif self.n is not None:
            raise ValueError("only I_n carries a component count")

    @classmethod
    def smooth_elliptic(cls) -> "FiberShape":
        return cls(SMOOTH)

    @classmethod
    def i_cycle(cls, n: int) -> "FiberShape":
        return cls(I_CYCLE, n)

    @classmethod
    def iv_star(cls) -> "FiberShape":
        return cls(IV_STAR)

    def __str__(self):
        if self.kind == I_CYCLE:
            return "I_%d" % self.n
        return "IV*" if self.kind == IV_STAR else "smooth"


def euler_number(shape: FiberShape) -> int:
    if shape.kind == SMOOTH:
        return 0
    if shape.kind == I_CYCLE:
        assert shape.n is not None
        return shape.n
    return 8


@dataclass(frozen=True)
class FiberAction:
    """Combinatorial action label; order-4 elliptic actions carry the split
    of their two fixed points between types (2,7) and (3,6)."""

    name: str
    split: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.name == ORDER_4:
            if self.split is None or min(self.split) < 0 or sum(self.split) != 2:
                raise ValueError("order-4 action needs a point split summing to 2")
        elif self.split is not None:
            raise ValueError("only order-4 actions carry a point split")


@dataclass(frozen=True)
class FiberFixedData:
    """Fixed-locus bookkeeping of one fiber under sigma, sigma^2, sigma^4.

    points = (count of (2,7), count of (3,6), count of (4,5)).
    n_sigma2 counts the isolated sigma^2-fixed points on the fiber.
    elliptic_fixed_by is the least power fixing a smooth fiber pointwise
    (None for degenerate fibers).
    """

    k_sigma: int
    points: Tuple[int, int, int]
    k_sigma2: int
    k_sigma4: int
    alpha_contrib: int
    n_sigma2: int
    elliptic_fixed_by: Optional[int] = None

    def __post_init__(self):
        if not self.k_sigma <= self.k_sigma2 <= self.k_sigma4:
            raise ValueError("pointwise component counts must be monotone in the power")

    @property
    def point_total(self) -> int:
        return sum(self.points)


def chain_step(pair: Tuple[int, int]) -> Tuple[int, int]:
    """Successor local exponent pair along a chain of invariant curves."""
    t, s = pair
    return ((t - 1) % 8, (s + 1) % 8)


def _chain_step_power(pair: Tuple[int, int], m: int) -> Tuple[int, int]:
    # same propagation for sigma^m: pairs sum to m mod 8, derivative negates
    # across a node and the normal direction makes up the determinant
    _, s = pair
    return ((-s) % 8, (m + s) % 8)


def _type_counts(pairs: List[Tuple[int, int]]) -> Tuple[int, int, int]:
    counts = {2: 0, 3: 0, 4: 0}
    for t, s in pairs:
        low = min(t % 8, s % 8)
        if low not in counts or (t + s) % 8 != 1:
            raise AssertionError("inadmissible point pair %r" % ((t, s),))
        counts[low] += 1
    return (counts[2], counts[3], counts[4])


# ---------------------------------------------------------------------------
# I_n engines


def _cycle_preserve_scan(n: int, m: int, anchor: int) -> Tuple[int, int, List[Tuple[int, int]]]:
    """Walk the I_n cycle for sigma^m preserving every component.

    anchor is the derivative exponent on the component right after node 0.
    Returns (pointwise component count, even-derivative component count,
    node pairs with both exponents nonzero).
    """
    if n * m % 8:
        raise ValueError("no consistent labeling: chain does not close")
    pointwise = 0
    even = 0
    isolated: List[Tuple[int, int]] = []
    s = anchor % 8
    for _ in range(n):
        t = (m - s) % 8  # node pair (t, s) sums to m
        if t != 0 and s != 0:
            isolated.append((t, s))
        if s == 0:
            pointwise += 1
        if s % 2 == 0:
            even += 1
        s = (m + s) % 8
    return pointwise, even, isolated


def _i_n_preserve(n: int) -> FiberFixedData:
    if n % 8:
        raise ValueError("no consistent labeling: preserve-components needs 8 | n")
    # all 8 starting exponents give the same data up to rotating the cycle
    seen = set()
    result = None
    for start in range(8):
        k, _, pts = _cycle_preserve_scan(n, 1, start)
        counts = _type_counts(pts)
        seen.add((k, counts))
        result = (k, counts)
    if len(seen) != 1:
        raise AssertionError("labeling ambiguity on I_%d" % n)
    assert result is not None
    k, counts = result
    k2, _, iso2 = _cycle_preserve_scan(n, 2, 0)
    k4, _, _ = _cycle_preserve_scan(n, 4, 0)
    return FiberFixedData(k_sigma=k, points=counts, k_sigma2=k2, k_sigma4=k4,
                          alpha_contrib=k, n_sigma2=len(iso2))


def _i_n_reflection(n: int) -> FiberFixedData:
    if n % 8:
        raise ValueError("no consistent labeling: reflection data needs 8 | n")
    # a reflection axis through a node would need branch-swap eigenvalues
    # mu, -mu with mu^2 = zeta^5, impossible inside the 8th roots of unity,
    # so the axis passes through two opposite components
    derivs = [mu for mu in range(8) if mu and 2 * mu % 8 == 0]
    if len(derivs) != 1:
        raise AssertionError("axis involution derivative not unique")
    mu = derivs[0]  # 4: two interior fixed points of type (4,5) per axis curve
    points = _type_counts([(mu, (1 - mu) % 8)] * 4)
    # sigma^2 preserves each component, pointwise on the two axis curves
    k2, _, iso2 = _cycle_preserve_scan(n, 2, 0)
    k4, _, _ = _cycle_preserve_scan(n, 4, 0)
    return FiberFixedData(k_sigma=0, points=points, k_sigma2=k2, k_sigma4=k4,
                          alpha_contrib=0, n_sigma2=len(iso2))


def _i_n_rotation(n: int, order: int) -> FiberFixedData:
    if n % order:
        raise ValueError("rotation of order %d needs %d | n" % (order, order))
    if n % 8:
        raise ValueError("no consistent labeling: rotation data needs 8 | n")
    if order == 2:
        # square preserves every component (shift n/2 twice is the identity)
        k2, _, iso2 = _cycle_preserve_scan(n, 2, 0)
        k4, _, _ = _cycle_preserve_scan(n, 4, 0)
        return FiberFixedData(k_sigma=0, points=(0, 0, 0), k_sigma2=k2,
                              k_sigma4=k4, alpha_contrib=0, n_sigma2=len(iso2))
    if order == 4:
        # square still rotates by n/2: nothing sigma^2-fixed on this fiber
        k4, _, _ = _cycle_preserve_scan(n, 4, 0)
        return FiberFixedData(k_sigma=0, points=(0, 0, 0), k_sigma2=0,
                              k_sigma4=k4, alpha_contrib=0, n_sigma2=0)
    raise ValueError("rotation order must be 2 or 4")


# ---------------------------------------------------------------------------
# IV* engines


def _iv_star_preserve() -> FiberFixedData:
    # every component invariant: the central curve has three fixed points
    # (the arm junctions), hence is pointwise fixed; normal exponent 1
    p_junction = (0, 1)
    p_mid = chain_step(p_junction)   # node middle/leaf
    p_leaf = chain_step(p_mid)       # interior fixed point on the leaf
    points = _type_counts([p_mid] * 3 + [p_leaf] * 3)
    # sigma^2: central pointwise; arm derivatives double to 2 then 4
    iso2 = []
    q = (0, 2)
    for _ in range(2):
        q = _chain_step_power(q, 2)
        iso2.append(q)
    n_sigma2 = 3 * len([p for p in iso2 if p[0] % 8 and p[1] % 8])
    # sigma^4 fixes the central component and the three leaves pointwise
    k4 = 1 + sum(1 for e in (4 * 1, 4 * 2) if e % 8 == 0) * 3
    return FiberFixedData(k_sigma=1, points=points, k_sigma2=1, k_sigma4=k4,
                          alpha_contrib=1, n_sigma2=n_sigma2)


def _iv_star_branch_swap() -> FiberFixedData:
    # two arms swapped, one preserved; the central curve keeps two fixed
    # points, and its square fixes four points, hence is an involution:
    # enumerate the derivative exponent and keep the consistent ones
    derivs = [mu for mu in range(8) if mu and 2 * mu % 8 == 0]
    if len(derivs) != 1:
        raise AssertionError("central involution derivative not unique")
    mu = derivs[0]
    z_free = (mu, (1 - mu) % 8)          # free fixed point on the center
    p_junction = (mu, (1 - mu) % 8)      # junction with the preserved arm
    p_mid = chain_step(p_junction)
    p_leaf = chain_step(p_mid)
    points = _type_counts([z_free, p_junction, p_mid, p_leaf])
    # sigma^2 fixes the center pointwise; each arm then carries two isolated
    # sigma^2 points (middle/leaf node and the free leaf point)
    iso2 = []
    q = (0, 2)
    for _ in range(2):
        q = _chain_step_power(q, 2)
        iso2.append(q)
    n_sigma2 = 3 * len([p for p in iso2 if p[0] % 8 and p[1] % 8])
    k4 = 1 + 3  # center plus the three leaves (normal exponent doubles to 8)
    return FiberFixedData(k_sigma=0, points=points, k_sigma2=1, k_sigma4=k4,
                          alpha_contrib=0, n_sigma2=n_sigma2)


# ---------------------------------------------------------------------------
# public entry points


def elliptic_action_data(action: FiberAction) -> FiberFixedData:
    """Fixed data of an action on a smooth elliptic fiber."""
    if action.name == IDENTITY:
        return FiberFixedData(k_sigma=1, points=(0, 0, 0), k_sigma2=1,
                              k_sigma4=1, alpha_contrib=0, n_sigma2=0,
                              elliptic_fixed_by=1)
    if action.name == TRANSLATION_2:
        return FiberFixedData(k_sigma=0, points=(0, 0, 0), k_sigma2=1,
                              k_sigma4=1, alpha_contrib=0, n_sigma2=0,
                              elliptic_fixed_by=2)
    if action.name == TRANSLATION_4:
        return FiberFixedData(k_sigma=0, points=(0, 0, 0), k_sigma2=0,
                              k_sigma4=1, alpha_contrib=0, n_sigma2=0,
                              elliptic_fixed_by=4)
    if action.name == INVOLUTION:
        # four fixed points, derivative -1, necessarily type (4,5); the
        # square fixes the curve pointwise so none survive as isolated
        return FiberFixedData(k_sigma=0, points=(0, 0, 4), k_sigma2=1,
                              k_sigma4=1, alpha_contrib=0, n_sigma2=0,
                              elliptic_fixed_by=2)
    if action.name == ORDER_4:
        assert action.split is not None
        c2, c3 = action.split
        # the square is an involution of the curve: four isolated points
        return FiberFixedData(k_sigma=0, points=(c2, c3, 0), k_sigma2=0,
                              k_sigma4=1, alpha_contrib=0, n_sigma2=4,
                              elliptic_fixed_by=4)
    raise ValueError("not a smooth-elliptic action: %r" % (action.name,))


def fiber_fixed_data(shape: FiberShape, action: FiberAction) -> FiberFixedData:
    """Fixed-locus data of the action on the given fiber shape."""
    if shape.kind == SMOOTH:
        if action.name not in _SMOOTH_ACTIONS:
            raise ValueError("action %r incompatible with a smooth fiber"
                             % (action.name,))
        return elliptic_action_data(action)
    if shape.kind == I_CYCLE:
        assert shape.n is not None
        if action.name == PRESERVE:
            return _i_n_preserve(shape.n)
        if action.name == REFLECTION:
            return _i_n_reflection(shape.n)
        if action.name == ROTATION_2:
            return _i_n_rotation(shape.n, 2)
        if action.name == ROTATION_4:
            return _i_n_rotation(shape.n, 4)
        raise ValueError("action %r incompatible with I_n" % (action.name,))
    if shape.kind == IV_STAR:
        if action.name == PRESERVE:
            return _iv_star_preserve()
        if action.name == BRANCH_SWAP:
            return _iv_star_branch_swap()
        raise ValueError("action %r incompatible with IV*" % (action.name,))
    raise ValueError("unknown shape %r" % (shape.kind,))


def action_label(shape: FiberShape, action: FiberAction) -> str:
    """The classification table's name for the action."""
    if shape.kind == SMOOTH:
        return {
            IDENTITY: "identity",
            TRANSLATION_2: "translation of order two",
            TRANSLATION_4: "translation of order four",
            INVOLUTION: "involution",
            ORDER_4: "order four",
        }[action.name]
    if shape.kind == I_CYCLE:
        assert shape.n is not None
        return {
            PRESERVE: "preserves each curve of I_%d" % shape.n,
            REFLECTION: "reflection on I_%d" % shape.n,
            ROTATION_2: "rotation of order 2 on I_%d" % shape.n,
            ROTATION_4: "rotation of order 4 on I_%d" % shape.n,
        }[action.name]
    return {
        PRESERVE: "preserves each curve of IV*",
        BRANCH_SWAP: "reflection of IV*",
    }[action.name]

"""Enumerate the sixteen invariant elliptic fibrations with an order-8 action.

The fourth power of the automorphism is a non-symplectic involution whose
fixed lattice pins down three skeletons (Picard rank 10, 14, 18).  Each
skeleton carries one or two smooth elliptic curves fixed by the fourth
power plus, in ranks 14 and 18, a degenerate second invariant fiber (IV*
or I_8, respectively I_16).  The enumerator walks the closed vocabulary of
actions on these fibers, assembles the total fixed-locus configuration,
and keeps a case only when

  * the two integer point-count constraints hold,
  * the holomorphic fixed point sum is exactly 1 + zeta^7, and
  * the eigenspace rank system has a non-negative integral solution.

Exactly sixteen cases survive.  validate_row re-checks each row from
scratch, including the induced order-4 data of the square (its isolated
point count satisfies N' = 2k' + 4 and its own Lefschetz identities).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .fibers import (BRANCH_SWAP, IDENTITY, INVOLUTION, IV_STAR, ORDER_4,
                     PRESERVE, REFLECTION, ROTATION_2, ROTATION_4, SMOOTH,
                     TRANSLATION_2, TRANSLATION_4, FiberAction, FiberShape,
                     action_label, fiber_fixed_data)
from .lattice import EigenRanks, power_ranks, sigma4_skeletons, solve_ranks
from .lefschetz import (FixedCurve, FixedLocusConfig, holo_total,
                        prop1_satisfied, topo_check)


@dataclass(frozen=True)
class ClassificationRow:
    """One line of the classification table.

    action = (label on the smooth invariant elliptic curve, label on the
    second invariant fiber).  N is derived from the point counts.
    """

    index: int
    r: int
    l: int
    m: int
    k_sigma2: int
    num_c: int
    rk_pic: int
    k_sigma4: int
    n2: int
    n3: int
    n4: int
    k: int
    action: Tuple[str, str]

    def __post_init__(self):
        if self.rk_pic not in (10, 14, 18):
            raise ValueError("Picard rank must be 10, 14 or 18")
        if self.r + self.l + 2 * self.m + 4 * self.m1 != 22:
            raise ValueError("eigenspace ranks must sum to 22")

    @property
    def m1(self) -> int:
        return (22 - self.rk_pic) // 4

    @property
    def N(self) -> int:
        return self.n2 + self.n3 + self.n4

    def to_dict(self) -> Dict:
        return {
            "index": self.index, "r": self.r, "l": self.l, "m": self.m,
            "k_sigma2": self.k_sigma2, "num_C": self.num_c,
            "rk_pic": self.rk_pic, "k_sigma4": self.k_sigma4, "N": self.N,
            "n2": self.n2, "n3": self.n3, "n4": self.n4, "k": self.k,
            "action": list(self.action),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "ClassificationRow":
        row = cls(index=data["index"], r=data["r"], l=data["l"], m=data["m"],
                  k_sigma2=data["k_sigma2"], num_c=data["num_C"],
                  rk_pic=data["rk_pic"], k_sigma4=data["k_sigma4"],
                  n2=data["n2"], n3=data["n3"], n4=data["n4"], k=data["k"],
                  action=(data["action"][0], data["action"][1]))
        if "N" in data and data["N"] != row.N:
            raise ValueError("point total inconsistent with the counts")
        return row


_SMOOTH_C = FiberShape.smooth_elliptic()
_ORDER4_SPLITS = ((2, 0), (1, 1), (0, 2))
# table ordering of the actions on the elliptic curve
_ELLIPTIC_ORDER = {IDENTITY: 0, TRANSLATION_2: 1, TRANSLATION_4: 2,
                   INVOLUTION: 3, ORDER_4: 4}

_ELLIPTIC_LABELS = {
    "identity": IDENTITY,
    "translation of order two": TRANSLATION_2,
    "translation of order four": TRANSLATION_4,
    "involution": INVOLUTION,
    "order four": ORDER_4,
}


def _candidates(rk_pic: int):
    """(elliptic action, second-fiber shape, second-fiber action) triples."""
    plain = [FiberAction(name) for name in
             (IDENTITY, TRANSLATION_2, TRANSLATION_4, INVOLUTION)]
    order4 = [FiberAction(ORDER_4, split) for split in _ORDER4_SPLITS]
    if rk_pic == 10:
        # two smooth elliptic curves; the square cannot fix both, so the
        # action is order 4 on exactly one of them
        for c_act in plain:
            for cp_act in order4:
                yield c_act, _SMOOTH_C, cp_act
        return
    shapes: List[Tuple[FiberShape, List[FiberAction]]] = []
    cycle_actions = [FiberAction(name) for name in
                     (PRESERVE, REFLECTION, ROTATION_2, ROTATION_4)]
    if rk_pic == 14:
        shapes.append((FiberShape.iv_star(),
                       [FiberAction(PRESERVE), FiberAction(BRANCH_SWAP)]))
        shapes.append((FiberShape.i_cycle(8), cycle_actions))
    else:
        shapes.append((FiberShape.i_cycle(16), cycle_actions))
    for c_act in plain + order4:
        for shape, actions in shapes:
            for cp_act in actions:
                yield c_act, shape, cp_act


def _category_rank(shape: FiberShape, action: FiberAction) -> int:
    # table order within a Picard block: IV* reflection first, then the
    # cycle rotations, reflection, IV* preserve, cycle preserve
    if shape.kind == SMOOTH:
        return 0
    if shape.kind == IV_STAR:
        return 0 if action.name == BRANCH_SWAP else 4
    return {ROTATION_2: 1, ROTATION_4: 2, REFLECTION: 3, PRESERVE: 5}[action.name]


def _assemble(rk_pic: int, num_c: int, k_sigma4: int, c_action: FiberAction,
              cp_shape: FiberShape, cp_action: FiberAction):
    m1 = (22 - rk_pic) // 4
    fd_c = fiber_fixed_data(_SMOOTH_C, c_action)
    fd_cp = fiber_fixed_data(cp_shape, cp_action)
    n2 = fd_c.points[0] + fd_cp.points[0]
    n3 = fd_c.points[1] + fd_cp.points[1]
    n4 = fd_c.points[2] + fd_cp.points[2]
    k = fd_c.alpha_contrib + fd_cp.alpha_contrib  # fixed rational curves
    alpha = k  # fixed elliptic curves contribute 1 - g = 0
    if not prop1_satisfied(n2, n3, n4, alpha):
        return None
    curves: Tuple[FixedCurve, ...] = (FixedCurve(0, 1),) * k
    if c_action.name == IDENTITY:
        curves = (FixedCurve(1, 1),) + curves
    config = FixedLocusConfig(curves, n2, n3, n4)
    _, exact = holo_total(config, 1)
    if not exact:
        return None
    k_sigma2 = fd_cp.k_sigma2 if cp_shape.kind != SMOOTH else 0
    rational_k4 = fd_cp.k_sigma4 if cp_shape.kind != SMOOTH else 0
    if rational_k4 != k_sigma4:
        return None  # shape incompatible with the skeleton
    try:
        r, l, m = solve_ranks(m1, config.N, alpha, k_sigma2)
    except ValueError:
        return None
    labels = (action_label(_SMOOTH_C, c_action), action_label(cp_shape, cp_action))
    sort_key = (rk_pic, _category_rank(cp_shape, cp_action),
                _ELLIPTIC_ORDER[c_action.name])
    return sort_key, dict(r=r, l=l, m=m, k_sigma2=k_sigma2, num_c=num_c,
                          rk_pic=rk_pic, k_sigma4=k_sigma4, n2=n2, n3=n3,
                          n4=n4, k=k, action=labels)


def enumerate_cases() -> List[ClassificationRow]:
    """All admissible cases, in table order; sixteen for the full vocabulary."""
    found = []
    for rk_pic, num_c, k_sigma4 in sigma4_skeletons():
        for c_action, cp_shape, cp_action in _candidates(rk_pic):
            built = _assemble(rk_pic, num_c, k_sigma4,
                              c_action, cp_shape, cp_action)
            if built is not None:
                found.append(built)
    found.sort(key=lambda item: item[0])
    return [ClassificationRow(index=i + 1, **fields)
            for i, (_, fields) in enumerate(found)]


def _parse_fiber_label(label: str) -> Tuple[FiberShape, str]:
    if label == "order four":
        return _SMOOTH_C, ORDER_4
    if label == "preserves each curve of IV*":
        return FiberShape.iv_star(), PRESERVE
    if label == "reflection of IV*":
        return FiberShape.iv_star(), BRANCH_SWAP
    for prefix, name in (("preserves each curve of I_", PRESERVE),
                         ("reflection on I_", REFLECTION),
                         ("rotation of order 2 on I_", ROTATION_2),
                         ("rotation of order 4 on I_", ROTATION_4)):
        if label.startswith(prefix):
            return FiberShape.i_cycle(int(label[len(prefix):])), name
    raise ValueError("unrecognized fiber action label %r" % (label,))


def _decompose(row: ClassificationRow):
    """Recover the (elliptic action, fiber shape, fiber action) of a row."""
    ell_label, fiber_label = row.action
    cp_shape, cp_name = _parse_fiber_label(fiber_label)
    if cp_shape.kind == SMOOTH:
        # rank-10 block: the second curve takes the order-4 action and all
        # of the row's isolated (2,7)/(3,6) points sit on it
        cp_action = FiberAction(ORDER_4, (row.n2, row.n3))
        c_action = FiberAction(_ELLIPTIC_LABELS[ell_label])
        return c_action, cp_shape, cp_action
    cp_action = FiberAction(cp_name)
    ell_name = _ELLIPTIC_LABELS[ell_label]
    if ell_name == ORDER_4:
        fd_cp = fiber_fixed_data(cp_shape, cp_action)
        split = (row.n2 - fd_cp.points[0], row.n3 - fd_cp.points[1])
        c_action = FiberAction(ORDER_4, split)
    else:
        c_action = FiberAction(ell_name)
    return c_action, cp_shape, cp_action


def validate_row(row: ClassificationRow) -> Dict[str, bool]:
    """Re-check every relation a table row must satisfy; keys are stable."""
    checks: Dict[str, bool] = {}
    checks["rank-sum"] = row.r + row.l + 2 * row.m + 4 * row.m1 == 22
    checks["point-constraints"] = prop1_satisfied(row.n2, row.n3, row.n4, row.k)

    c_action, cp_shape, cp_action = _decompose(row)
    curves: Tuple[FixedCurve, ...] = (FixedCurve(0, 1),) * row.k
    if c_action.name == IDENTITY:
        curves = (FixedCurve(1, 1),) + curves
    config = FixedLocusConfig(curves, row.n2, row.n3, row.n4)
    checks["topological"] = topo_check(config, row.r, row.l)
    checks["holomorphic"] = holo_total(config, 1)[1]

    # induced order-4 data of the square
    fd_c = fiber_fixed_data(_SMOOTH_C, c_action)
    fd_cp = fiber_fixed_data(cp_shape, cp_action)
    n_square = fd_c.n_sigma2 + fd_cp.n_sigma2
    checks["square-point-count"] = n_square == 2 * row.k_sigma2 + 4
    square_curves: Tuple[FixedCurve, ...] = (FixedCurve(0, 2),) * row.k_sigma2
    for fd in (fd_c, fd_cp):
        if fd.elliptic_fixed_by is not None and fd.elliptic_fixed_by <= 2:
            square_curves = (FixedCurve(1, 2),) + square_curves
    square_config = FixedLocusConfig(square_curves, n_square, 0, 0)
    checks["square-holomorphic"] = holo_total(square_config, 2)[1]
    r2, l2, _ = power_ranks(EigenRanks(row.r, row.l, row.m, row.m1), 2)
    checks["square-topological"] = n_square + 2 * row.k_sigma2 == r2 - l2 + 2

    try:
        solved: Optional[Tuple[int, int, int]] = \
            solve_ranks(row.m1, row.N, row.k, row.k_sigma2)
    except ValueError:
        solved = None
    checks["rank-solver"] = solved == (row.r, row.l, row.m)
    checks["square-rank-identity"] = \
        4 * row.k_sigma2 == (row.r + row.l) - 2 * row.m - 2
    return checks


_CURVE_FIXED_BY = {
    "identity": 1,
    "translation of order two": 2,
    "involution": 2,
    "translation of order four": 4,
    "order four": 4,
}


def theorem1_groups(rows: Sequence[ClassificationRow]):
    """Partition the (k, N, rkPic) triples by which power of the action
    first fixes the smooth elliptic curve pointwise; duplicates dropped,
    first occurrence kept."""
    groups: Dict[int, List[Tuple[int, int, int]]] = {1: [], 2: [], 4: []}
    for row in rows:
        fixed_by = _CURVE_FIXED_BY[row.action[0]]
        triple = (row.k, row.N, row.rk_pic)
        if triple not in groups[fixed_by]:
            groups[fixed_by].append(triple)
    return groups[1], groups[2], groups[4]


def match_row(rows: Sequence[ClassificationRow], elliptic_label: str,
              fiber_label: str) -> ClassificationRow:
    """The unique row carrying the given action label pair."""
    hits = [row for row in rows if row.action == (elliptic_label, fiber_label)]
    if len(hits) != 1:
        raise ValueError("action labels (%r, %r) match %d rows"
                         % (elliptic_label, fiber_label, len(hits)))
    return hits[0]


# ---------------------------------------------------------------------------
# rendering

CSV_HEADER = "r,l,m,k_sigma2,num_C,rk_pic,k_sigma4,N,n2,n3,n4,k,action"


def render_csv(rows: Sequence[ClassificationRow]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        cells = [row.r, row.l, row.m, row.k_sigma2, row.num_c, row.rk_pic,
                 row.k_sigma4, row.N, row.n2, row.n3, row.n4, row.k]
        lines.append(",".join(str(c) for c in cells)
                     + ',"%s"' % ", ".join(row.action))
    return "\n".join(lines) + "\n"


def render_table(rows: Sequence[ClassificationRow]) -> str:
    headers = ["case", "r", "l", "m", "k_s2", "#C", "rkPic", "k_s4", "N",
               "n2", "n3", "n4", "k", "action"]
    body = []
    for row in rows:
        body.append([str(v) for v in
                     (row.index, row.r, row.l, row.m, row.k_sigma2, row.num_c,
                      row.rk_pic, row.k_sigma4, row.N, row.n2, row.n3, row.n4,
                      row.k)] + [", ".join(row.action)])
    widths = [max(len(headers[i]), max(len(line[i]) for line in body))
              for i in range(len(headers))]
    def fmt(line):
        cells = [line[i].rjust(widths[i]) for i in range(len(headers) - 1)]
        return "  ".join(cells + [line[-1]])
    return "\n".join([fmt(headers)] + [fmt(line) for line in body]) + "\n"


def rows_to_json(rows: Sequence[ClassificationRow]) -> List[Dict]:
    return [row.to_dict() for row in rows]


def rows_from_json(data: Sequence[Dict]) -> List[ClassificationRow]:
    return [ClassificationRow.from_dict(item) for item in data]

"""Holomorphic fixed point bookkeeping and the derived count constraints."""

from fractions import Fraction

import pytest

from k3auto.cyclotomic import Cyc8Element, zeta_pow
from k3auto.lefschetz import (FixedCurve, FixedLocusConfig, PointType,
                              curve_term, derive_prop1_constraints,
                              hermite_normal_form, holo_target, holo_total,
                              integer_kernel, point_term,
                              prop1_satisfied, topo_check)

from fixtures import TABLE_ROWS

ONE = Cyc8Element.one()


def test_holo_target():
    assert holo_target(1) == ONE + zeta_pow(7)
    assert holo_target(2) == ONE + zeta_pow(6)
    assert holo_target(4) == ONE + zeta_pow(4)
    with pytest.raises(ValueError):
        holo_target(3)


def test_point_terms_pinned():
    # 1/((1-z^2)(1-z^7)) recomputed by clearing denominators
    term = point_term(PointType(2))
    den = (ONE - zeta_pow(2)) * (ONE - zeta_pow(7))
    assert term * den == ONE
    with pytest.raises(ValueError):
        PointType(5)


def test_curve_term_genus_kills():
    assert curve_term(FixedCurve(1, 1)).is_zero()
    rational = curve_term(FixedCurve(0, 2))
    den = (ONE - zeta_pow(2)) * (ONE - zeta_pow(2))
    assert rational * den == ONE + zeta_pow(2)
    with pytest.raises(ValueError):
        curve_term(FixedCurve(0, 8))


def test_hermite_normal_form_known():
    assert hermite_normal_form([[2, 0], [0, 2]]) == [[2, 0], [0, 2]]
    assert hermite_normal_form([[1, 2], [3, 4]]) == [[1, 0], [0, 2]]
    # row order must not matter
    rows = [[1, 1, 0, -4, 2], [1, -1, 1, -2, 2]]
    assert hermite_normal_form(rows) == hermite_normal_form(rows[::-1])


def test_integer_kernel():
    kernel = integer_kernel([[1, 1, -2]], 3)
    for vec in kernel:
        assert vec[0] + vec[1] - 2 * vec[2] == 0
    assert len(kernel) == 2


def test_derived_constraints_match_reference():
    # reference system: the two point count relations
    #   n2 + n3 - 4*alpha = 2 and n4 + n2 - n3 - 2*alpha = 2
    reference = [[1, 1, 0, -4, 2], [1, -1, 1, -2, 2]]
    derived = [list(row) for row in derive_prop1_constraints()]
    assert hermite_normal_form(derived) == hermite_normal_form(reference)


def test_prop1_on_table_rows():
    for entry in TABLE_ROWS:
        n2, n3, n4, k = entry[9], entry[10], entry[11], entry[12]
        # alpha counts fixed curves weighted by 1 - genus; the k fixed
        # rational curves contribute, fixed elliptic curves do not
        assert prop1_satisfied(n2, n3, n4, k)
    assert not prop1_satisfied(1, 0, 0, 0)
    assert not prop1_satisfied(2, 1, 0, 0)


def test_holo_total_closes_for_hand_built_configs():
    # row 1: sigma fixes the elliptic curve, two points of type (2,7)
    config = FixedLocusConfig(curves=(FixedCurve(1, 1),), n2=2, n3=0, n4=0)
    total, ok = holo_total(config, 1)
    assert ok and (total - holo_target(1)).is_zero()
    assert topo_check(config, r=3, l=3)

    # row 11: one rational curve, counts (3,3,4)
    config = FixedLocusConfig(curves=(FixedCurve(0, 1),), n2=3, n3=3, n4=4)
    total, ok = holo_total(config, 1)
    assert ok and (total - holo_target(1)).is_zero()
    assert topo_check(config, r=10, l=0)

    # wrong counts must leave a nonzero residual
    config = FixedLocusConfig(curves=(FixedCurve(1, 1),), n2=1, n3=1, n4=0)
    total, ok = holo_total(config, 1)
    assert not ok and not (total - holo_target(1)).is_zero()


def test_config_json_round_trip():
    config = FixedLocusConfig(curves=(FixedCurve(0, 1), FixedCurve(1, 1)),
                              n2=4, n3=2, n4=2)
    again = FixedLocusConfig.from_json(config.to_json())
    assert again == config
    assert config.N == 8 and config.alpha == 1 and config.k == 1

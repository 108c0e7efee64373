from __future__ import annotations

from fractions import Fraction as F

import pytest

from wallcross.chow import (
    BigradedClass,
    CurveClass,
    DivisorClass,
    dual_curve_basis,
    exp_class,
    grr_c1_pushforward,
    incidence_pushforward,
    mori_report,
    named_divisors,
    pair,
    todd_p3,
)


def H(i: int, j: int, c=1) -> BigradedClass:
    return BigradedClass.monomial(i, j, F(c))


def test_truncation_at_degree_three_in_each_factor():
    assert (H(3, 0) * H(1, 0)).is_zero()
    assert (H(0, 3) * H(0, 1)).is_zero()
    assert not (H(3, 0) * H(0, 1)).is_zero()


def test_geometric_series_inverts_one_plus_h():
    one_plus = BigradedClass.one() + H(1, 0)
    inverse = BigradedClass.from_h_series([F(1), F(-1), F(1), F(-1)])
    assert one_plus * inverse == BigradedClass.one()


def test_exp_class():
    e = exp_class(H(1, 0))
    assert e.coefficient(0, 0) == 1
    assert e.coefficient(2, 0) == F(1, 2)
    assert e.coefficient(3, 0) == F(1, 6)
    assert exp_class(H(1, 0)) * exp_class(H(1, 0, -1)) == BigradedClass.one()


def test_exp_class_rejects_constant_terms():
    with pytest.raises(ValueError):
        exp_class(BigradedClass.one())


def test_rendering():
    assert str(BigradedClass.one()) == "1"
    assert str(BigradedClass.one() - BigradedClass.one()) == "0"
    assert str(H(0, 1, 4)) == "4H'"
    assert str(todd_p3()) == "1 + 2H + 11/6H^2 + H^3"


def test_todd_class_coefficients():
    td = todd_p3()
    assert td == BigradedClass.from_h_series([F(1), F(2), F(11, 6), F(1)])
    # degree-three coefficient integrates to chi(O) = 1
    assert td.coefficient(3, 0) == 1


def test_pushforward_of_the_trivial_twist_vanishes():
    assert incidence_pushforward(0).is_zero()


def test_pushforward_of_the_anticanonical_half_twist():
    assert str(grr_c1_pushforward()) == "4H'"
    assert grr_c1_pushforward() == incidence_pushforward(2)
    assert grr_c1_pushforward() == H(0, 1, 4)


def test_divisor_and_curve_arithmetic():
    d = DivisorClass(1, 2, 0, -1) + DivisorClass(0, 0, 1, 1)
    assert d == DivisorClass(1, 2, 1, 0)
    assert 2 * CurveClass(1, 0, 0, 1) == CurveClass(2, 0, 0, 2)
    assert d.components() == (F(1), F(2), F(1), F(0))


def test_intersection_pairing_signature():
    # the pairing is diagonal (1, 1, 1, -1) on the tautological bases
    for i in range(4):
        for j in range(4):
            d = DivisorClass(*(F(k == i) for k in range(4)))
            c = CurveClass(*(F(k == j) for k in range(4)))
            expected = F(0) if i != j else (F(-1) if i == 3 else F(1))
            assert pair(d, c) == expected


def test_named_divisors():
    named = named_divisors()
    assert named["H"] == DivisorClass(1, 0, 0, 0)
    assert named["H'"] == DivisorClass(0, 1, 0, 0)
    assert named["A"] == DivisorClass(0, 0, 1, 0)
    assert named["E'"] == DivisorClass(0, 0, 0, 1)
    assert named["D"] == DivisorClass(0, 2, 1, 0)
    assert named["D'"] == DivisorClass(2, 2, 1, -1)
    assert named["E"] == DivisorClass(1, 1, 0, -1)
    assert named["K"] == DivisorClass(-4, -8, -6, 1)
    # linear relations between the geometric classes
    assert named["D'"] == 2 * named["H"] + 2 * named["H'"] + named["A"] - named["E'"]
    assert named["E"] == named["H"] + named["H'"] - named["E'"]


def test_dual_basis_of_the_tautological_divisors():
    named = named_divisors()
    duals = dual_curve_basis((named["H"], named["H'"], named["A"], named["E'"]))
    assert duals == (
        CurveClass(1, 0, 0, 0),
        CurveClass(0, 1, 0, 0),
        CurveClass(0, 0, 1, 0),
        CurveClass(0, 0, 0, -1),
    )
    for i, d in enumerate((named["H"], named["H'"], named["A"], named["E'"])):
        for j, c in enumerate(duals):
            assert pair(d, c) == (1 if i == j else 0)


def test_dual_basis_rejects_degenerate_input():
    named = named_divisors()
    with pytest.raises(ValueError, match="degenerate"):
        dual_curve_basis((named["H"], named["H"], named["A"], named["E'"]))


def test_mori_report_values():
    rep = mori_report()
    assert rep.K == DivisorClass(-4, -8, -6, 1)
    assert rep.rays["epsilon"] == CurveClass(1, 0, 0, -2)
    assert rep.rays["eta"] == CurveClass(0, 1, -2, -1)
    assert rep.rays["zeta"] == CurveClass(0, 0, 1, -1)
    assert rep.rays["delta"] == CurveClass(0, 0, 0, 1)
    assert rep.pairings == {
        "epsilon": F(-2), "eta": F(5), "zeta": F(-5), "delta": F(-1),
    }
    assert rep.negative_rays == ("epsilon", "zeta", "delta")
    assert rep.positive_rays == ("eta",)
    assert rep.contraction_of_zeta == "C -> C'"


def test_mori_report_consistency_pairings():
    rep = mori_report()
    named = named_divisors()
    assert pair(named["E"], rep.rays["delta"]) == 1
    assert pair(named["E"], rep.rays["eta"]) == 0
    assert pair(named["D"], rep.rays["eta"]) == 0
    assert pair(named["H'"], rep.rays["eta"]) == 1
    assert pair(named["E'"], rep.rays["zeta"]) == 1
    assert rep.rays["zeta"] == CurveClass(0, 0, 1, 0) - CurveClass(0, 0, 0, 1)


def test_mori_report_json():
    assert mori_report().to_json() == {
        "K": ["-4", "-8", "-6", "1"],
        "pairings": {"epsilon": "-2", "eta": "5", "zeta": "-5", "delta": "-1"},
        "negative_rays": ["epsilon", "zeta", "delta"],
        "positive_rays": ["eta"],
    }

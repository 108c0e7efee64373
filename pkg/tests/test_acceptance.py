"""Acceptance gate: the ten headline guarantees of the package.

Each criterion is one test function, so ``pytest -v`` prints exactly one
pass/fail line per criterion.  Every expected value here was computed by hand
or from first principles before being frozen into this file; nothing is
back-filled from the implementation's own output.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction as F

from wallcross.chern import (
    ChernCharacter,
    StabilityPoint,
    bott_cohomology,
    cotangent_plane,
    discriminant,
    euler_pairing,
    ideal_points,
    line_bundle,
    plane_ideal_points,
    plane_twist,
    skew_lines_ideal,
    twist,
)
from wallcross.chow import (
    CurveClass,
    DivisorClass,
    dual_curve_basis,
    grr_c1_pushforward,
    incidence_product,
    incidence_pushforward,
    mori_report,
    named_divisors,
    todd_p3,
)
from wallcross.idealsuite import load_paper_scenarios, run_paper_suite
from wallcross.lambdawalls import (
    actual_walls,
    evaluate_wall,
    phi_alpha_derivative_at,
    wall_slope_at,
    wall_w1,
    wall_w2,
)
from wallcross.polyring import (
    Ideal,
    PolynomialRing,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    member,
)
from wallcross.tiltwalls import (
    Circle,
    Empty,
    Everywhere,
    VerticalLine,
    enumerate_destabilizers,
    nu_wall,
    nu_wall_equation,
    nu_zero_locus,
    refine_point_lengths,
)

V = skew_lines_ideal()
S_VALUES = (F(1, 6), F(1, 3), F(1))


def _done(n: int, label: str) -> None:
    print(f"CRITERION {n:02d} ({label}): PASS")


def test_criterion_01_destabilizer_search_and_wall():
    found = enumerate_destabilizers(V, F(-2), 10)
    assert len(found) == 1
    cand = found[0]
    assert (cand.r, cand.c, cand.d) == (1, 1, F(1, 2))
    assert cand.complement == (0, 1, F(-1, 2))
    assert cand.alpha_sq == 2
    sub = twist(ChernCharacter(cand.r, cand.c, cand.d, 0), F(2))
    quot = twist(ChernCharacter(*cand.complement, 0), F(2))
    assert nu_wall(sub, quot) == Circle(center_beta=F(-5, 2), radius_sq=F(9, 4))
    assert nu_wall(sub, V) == Circle(center_beta=F(-5, 2), radius_sq=F(9, 4))
    _done(1, "unique actual tilt wall")


def test_criterion_02_hyperbola_and_wall_crossing():
    locus = nu_zero_locus(V)
    # the vanishing locus is beta^2 - alpha^2 = 4
    assert str(locus.polynomial) == "1/2*b^2 - 1/2*a - 2"
    assert 2 * locus.polynomial == locus.polynomial.ring.parse("b^2 - a - 4")
    crossing = StabilityPoint(F(3, 2), F(-5, 2))
    assert locus.contains(crossing)
    for s in S_VALUES:
        p = StabilityPoint(F(3, 2), F(-5, 2), s)
        assert evaluate_wall(wall_w1(), p) == 0
        assert evaluate_wall(wall_w2(), p) == 0
    _done(2, "walls meet on the hyperbola")


def test_criterion_03_slopes_and_alpha_derivatives():
    derivatives = {
        F(1, 6): (F(41, 16), F(17, 16)),
        F(1, 3): (F(25, 8), F(13, 8)),
        F(1): (F(43, 8), F(31, 8)),
    }
    for s, (d1, d2) in derivatives.items():
        p = StabilityPoint(F(3, 2), F(-5, 2), s)
        assert phi_alpha_derivative_at(wall_w1(), p) == d1
        assert phi_alpha_derivative_at(wall_w2(), p) == d2
        # closed forms of the crossing slopes as functions of s
        assert wall_slope_at(wall_w1(), p) == -1 / (F(27, 16) * s + 1)
        assert wall_slope_at(wall_w2(), p) == 1 / (F(27, 4) * s + 1)
    assert wall_slope_at(wall_w1(), StabilityPoint(F(3, 2), F(-5, 2), F(1, 3))) == F(-16, 25)
    assert wall_slope_at(wall_w2(), StabilityPoint(F(3, 2), F(-5, 2), F(1, 3))) == F(4, 13)
    symbolic = StabilityPoint(F(3, 2), F(-5, 2))
    assert str(phi_alpha_derivative_at(wall_w1(), symbolic)) == "27/8*s + 2"
    assert str(phi_alpha_derivative_at(wall_w2(), symbolic)) == "27/8*s + 1/2"
    _done(3, "slopes and transversality derivatives")


def test_criterion_04_wall_slopes_at_the_crossing():
    expected = {
        F(1, 6): (F(-32, 41), F(8, 17)),
        F(1, 3): (F(-16, 25), F(4, 13)),
        F(1): (F(-16, 43), F(4, 31)),
    }
    for s, (m1, m2) in expected.items():
        p = StabilityPoint(F(3, 2), F(-5, 2), s)
        assert wall_slope_at(wall_w1(), p) == m1
        assert wall_slope_at(wall_w2(), p) == m2
        assert -1 < m1 < 0
        assert 0 < m2 < 1
    hyper = StabilityPoint(F(3, 2), F(-5, 2))
    assert wall_slope_at(nu_zero_locus(V), hyper) == F(-5, 3)
    _done(4, "slope windows at the crossing")


def test_criterion_05_point_length_refinement():
    assert refine_point_lengths(F(-2, 3), F(1, 6), F(1, 6)) == {(0, 1), (1, 0)}
    _done(5, "length splits at the collapse")


def test_criterion_06_flat_limit_suite():
    start = time.monotonic()
    reports = run_paper_suite()
    elapsed = time.monotonic() - start
    assert tuple(r.scenario for r in reports) == (
        "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8",
    )
    for report in reports:
        assert report.passed, f"{report.scenario} failed"
    assert elapsed < 10.0, f"suite took {elapsed:.1f}s"
    _done(6, "eight flat-limit scenarios")


def test_criterion_07_character_decompositions():
    assert line_bundle(-1) + plane_ideal_points(-2, 1) == V
    assert ideal_points(-1, 1) + plane_twist(-2) == V
    assert line_bundle(-2) + cotangent_plane() == V
    _done(7, "three wall decompositions of the character")


def test_criterion_08_euler_pairing_and_bott():
    assert euler_pairing(line_bundle(-1), plane_ideal_points(-2, 1)) == -1
    assert bott_cohomology(2, 2) == (6, 0, 0)
    _done(8, "pairing and plane cohomology")


def test_criterion_09_chow_ring_values():
    assert str(todd_p3()) == "1 + 2H + 11/6H^2 + H^3"
    assert str(grr_c1_pushforward()) == "4H'"
    assert incidence_product(2).coefficient(3, 1) == 4
    assert incidence_pushforward(0).is_zero()

    named = named_divisors()
    K = named["K"]
    assert K == DivisorClass(-4, -8, -6, 1)
    # the canonical class rewritten over the pairing basis (H, H', D, D'+H')
    assert K == (-2 * named["H"] + 5 * named["H'"] - 5 * named["D"]
                 - (named["D'"] + named["H'"]))

    duals = dual_curve_basis((named["H"], named["H'"], named["A"], named["E'"]))
    assert duals == (
        CurveClass(1, 0, 0, 0),
        CurveClass(0, 1, 0, 0),
        CurveClass(0, 0, 1, 0),
        CurveClass(0, 0, 0, -1),
    )
    rep = mori_report()
    pairing_basis = (named["H"], named["H'"], named["D"], named["D'"] + named["H'"])
    assert dual_curve_basis(pairing_basis) == (
        rep.rays["epsilon"], rep.rays["eta"], rep.rays["zeta"], rep.rays["delta"],
    )
    assert rep.to_json() == {
        "K": ["-4", "-8", "-6", "1"],
        "pairings": {"epsilon": "-2", "eta": "5", "zeta": "-5", "delta": "-1"},
        "negative_rays": ["epsilon", "zeta", "delta"],
        "positive_rays": ["eta"],
    }
    _done(9, "blowup intersection theory")


# ---------------------------------------------------------------------------
# criterion 10: randomized property suites with independent oracles
# ---------------------------------------------------------------------------

def _random_lattice_char(rng: random.Random) -> ChernCharacter:
    return ChernCharacter(
        rng.randint(-5, 5),
        rng.randint(-8, 8),
        F(rng.randint(-12, 12), 2),
        F(rng.randint(-18, 18), 6),
    )


def _twist_properties(rng: random.Random) -> None:
    for _ in range(1000):
        v = _random_lattice_char(rng)
        w = _random_lattice_char(rng)
        b1 = F(rng.randint(-12, 12), rng.randint(1, 4))
        b2 = F(rng.randint(-12, 12), rng.randint(1, 4))
        assert twist(twist(v, b1), b2) == twist(v, b1 + b2)
        assert twist(v + w, b1) == twist(v, b1) + twist(w, b1)
        assert discriminant(twist(v, b1)) == discriminant(v)
        assert twist(v, F(rng.randint(-6, 6))).in_lattice


def _groebner_stability() -> None:
    for sc in load_paper_scenarios():
        gb = sc.family.groebner_basis()
        assert Ideal(sc.ring, gb).groebner_basis() == gb       # idempotent
        permuted = Ideal(sc.ring, tuple(reversed(sc.family.generators)))
        assert permuted.groebner_basis() == gb                 # order-free


def _random_monomial(rng: random.Random, ring: PolynomialRing, top: int):
    e = tuple(rng.randint(0, top) for _ in ring.variables)
    mono = ring.one()
    for name, k in zip(ring.variables, e):
        mono = mono * ring.variable(name) ** k
    return e, mono


def _monomial_ideal_oracles(rng: random.Random) -> None:
    ring = PolynomialRing(("x", "y", "z"))

    def random_ideal():
        gens = []
        for _ in range(rng.randint(1, 4)):
            e, mono = _random_monomial(rng, ring, 3)
            if any(e):
                gens.append((e, mono))
        if not gens:
            gens.append(((1, 0, 0), ring.variable("x")))
        return gens

    for _ in range(200):
        I_gens, J_gens = random_ideal(), random_ideal()
        I = Ideal(ring, tuple(m for _, m in I_gens))
        J = Ideal(ring, tuple(m for _, m in J_gens))

        # intersection: pairwise exponentwise max
        lcms = []
        for e, _ in I_gens:
            for f, _ in J_gens:
                g = tuple(max(a, b) for a, b in zip(e, f))
                lcms.append(_monomial_from(ring, g))
        assert ideal_equal(ideal_intersect(I, J), Ideal(ring, tuple(lcms)))

        # sum: union of generators; product: pairwise sums of exponents
        assert ideal_equal(ideal_sum(I, J),
                           Ideal(ring, I.generators + J.generators))
        prods = [
            _monomial_from(ring, tuple(a + b for a, b in zip(e, f)))
            for e, _ in I_gens for f, _ in J_gens
        ]
        assert ideal_equal(ideal_product(I, J), Ideal(ring, tuple(prods)))

        # membership of a random monomial is plain divisibility
        e, mono = _random_monomial(rng, ring, 4)
        divisible = any(
            all(a <= b for a, b in zip(f, e)) for f, _ in I_gens
        )
        assert member(mono, I) == divisible

        # colon by a monomial: exponentwise truncated difference
        e, mono = _random_monomial(rng, ring, 3)
        quotients = [
            _monomial_from(ring, tuple(max(a - b, 0) for a, b in zip(f, e)))
            for f, _ in I_gens
        ]
        assert ideal_equal(ideal_colon(I, mono), Ideal(ring, tuple(quotients)))


def _monomial_from(ring: PolynomialRing, e: tuple[int, ...]):
    mono = ring.one()
    for name, k in zip(ring.variables, e):
        mono = mono * ring.variable(name) ** k
    return mono


def _random_nondegenerate_char(rng: random.Random) -> ChernCharacter:
    while True:
        v = ChernCharacter(
            rng.randint(-3, 3),
            rng.randint(-6, 6),
            F(rng.randint(-8, 8), 2),
            0,
        )
        if v.ch0 != 0 or v.ch1 != 0:
            return v


def _wall_equation_properties(rng: random.Random) -> None:
    for _ in range(50):
        f = _random_nondegenerate_char(rng)
        g = _random_nondegenerate_char(rng)
        eq = nu_wall_equation(f, g)
        k = (f.ch1 * g.ch0 - g.ch1 * f.ch0) / F(2)
        assert eq.coefficient_of((1, 0)) == k
        assert eq.coefficient_of((0, 2)) == k
        assert eq.coefficient_of((1, 1)) == 0
        assert eq.coefficient_of((0, 3)) == 0
        assert all(sum(e) <= 2 for e in eq.terms)

        # independent classification by completing the square
        m, n = eq.coefficient_of((0, 1)), eq.coefficient_of((0, 0))
        w = nu_wall(f, g)
        if k != 0:
            center = -m / (2 * k)
            radius_sq = center * center - n / k
            if radius_sq > 0:
                assert w == Circle(center, radius_sq)
            else:
                assert w == Empty()
        elif m != 0:
            assert w == VerticalLine(-n / m)
        elif n != 0:
            assert w == Empty()
        else:
            assert w == Everywhere()


def test_criterion_10_randomized_property_suites():
    start = time.monotonic()
    rng = random.Random(20260819)
    _twist_properties(rng)
    _groebner_stability()
    _monomial_ideal_oracles(rng)
    _wall_equation_properties(rng)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"property suites took {elapsed:.1f}s"
    _done(10, "randomized property suites")

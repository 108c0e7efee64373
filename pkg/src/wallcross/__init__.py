"""Exact wall-and-chamber computations for sheaves on projective space.

The package computes tilt-stability walls and extended-slope walls for the
ideal sheaf of a pair of skew lines in P^3 using exact rational arithmetic,
verifies flat-limit ideals with a small Groebner engine, and carries the
Chow-ring bookkeeping for the blowup geometry behind the wall picture.
"""
from __future__ import annotations

from .chern import (
    ChernCharacter,
    StabilityPoint,
    bott_cohomology,
    cotangent_plane,
    discriminant,
    euler_pairing,
    ideal_points,
    lambda_slope,
    line_bundle,
    mu_slope,
    nu_slope,
    plane_ideal_points,
    plane_twist,
    skew_lines_ideal,
    twist,
)
from .chow import (
    BigradedClass,
    CurveClass,
    DivisorClass,
    dual_curve_basis,
    grr_c1_pushforward,
    incidence_pushforward,
    mori_report,
    named_divisors,
    pair,
    todd_p3,
)
from .exact import INFINITY, Rational, format_sig12, parse_rational, sqrt_sig12
from .idealsuite import (
    FamilyScenario,
    VerificationReport,
    embedded_point_ideal,
    limit_ideal,
    load_paper_scenarios,
    parse_manifest,
    restrict_to_plane,
    run_family_scenario,
    run_paper_suite,
)
from .lambdawalls import (
    ChamberLabel,
    WallPolynomial,
    actual_walls,
    classify_chamber,
    evaluate_wall,
    lambda_wall,
    phi_alpha_derivative_at,
    sample_wall,
    wall_slope_at,
    wall_w1,
    wall_w2,
)
from .polyring import (
    Ideal,
    Polynomial,
    PolynomialRing,
    eliminate,
    groebner,
    ideal,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    member,
    normal_form,
)
from .tiltwalls import (
    Circle,
    DestabilizerCandidate,
    Empty,
    Everywhere,
    NuZeroLocus,
    VerticalLine,
    enumerate_destabilizers,
    nu_wall,
    nu_wall_equation,
    nu_zero_locus,
    refine_point_lengths,
    wall_contains,
)

__version__ = "0.1.0"

__all__ = [
    "BigradedClass",
    "ChamberLabel",
    "ChernCharacter",
    "Circle",
    "CurveClass",
    "DestabilizerCandidate",
    "DivisorClass",
    "Empty",
    "Everywhere",
    "FamilyScenario",
    "INFINITY",
    "Ideal",
    "NuZeroLocus",
    "Polynomial",
    "PolynomialRing",
    "Rational",
    "StabilityPoint",
    "VerificationReport",
    "VerticalLine",
    "WallPolynomial",
    "actual_walls",
    "bott_cohomology",
    "classify_chamber",
    "cotangent_plane",
    "discriminant",
    "dual_curve_basis",
    "eliminate",
    "embedded_point_ideal",
    "enumerate_destabilizers",
    "euler_pairing",
    "evaluate_wall",
    "format_sig12",
    "groebner",
    "grr_c1_pushforward",
    "ideal",
    "ideal_colon",
    "ideal_equal",
    "ideal_intersect",
    "ideal_points",
    "ideal_product",
    "ideal_sum",
    "incidence_pushforward",
    "lambda_slope",
    "lambda_wall",
    "limit_ideal",
    "line_bundle",
    "load_paper_scenarios",
    "member",
    "mori_report",
    "mu_slope",
    "named_divisors",
    "normal_form",
    "nu_slope",
    "nu_wall",
    "nu_wall_equation",
    "nu_zero_locus",
    "pair",
    "parse_manifest",
    "parse_rational",
    "phi_alpha_derivative_at",
    "plane_ideal_points",
    "plane_twist",
    "refine_point_lengths",
    "restrict_to_plane",
    "run_family_scenario",
    "run_paper_suite",
    "sample_wall",
    "skew_lines_ideal",
    "sqrt_sig12",
    "todd_p3",
    "twist",
    "wall_contains",
    "wall_slope_at",
    "wall_w1",
    "wall_w2",
]

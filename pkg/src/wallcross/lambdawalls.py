"""Walls for the second-tilt slope lambda, exactly, in coordinates (a, b, s).

The central charge behind lambda has real part -ch3^b + a*(1/6+s)*ch1^b and
imaginary part ch2^b - (a/2)*ch0, with a = alpha^2.  Two characters share a
lambda-value exactly where the cross-multiplied form

    Phi_{f,g} = Re(f)*Im(g) - Re(g)*Im(f)

vanishes; Phi is a polynomial in (a, b) of degree two in a, linear in the
parameter s.  Everything here is built symbolically over Q[a, b, s], so wall
membership, tangent slopes and chamber signs are exact; the only rounding
happens in `sample_wall`, which emits 12-significant-digit decimals for
plotting.

The two walls that matter for the two-skew-lines class v = (1, 0, -2, 2) are

    W1: the line bundle O(-1) against planar points I_{P/V}(-2),
    W2: the point-ideal twist I_P(-1) against the plane bundle O_V(-2);

both pass through (alpha, beta) = (3/2, -5/2) for every s > 0, the point
where v's own nu = 0 hyperbola b^2 - a = 4 crosses them.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt
from typing import Union

from .chern import (
    ChernCharacter,
    StabilityPoint,
    ideal_points,
    line_bundle,
    plane_ideal_points,
    plane_twist,
    skew_lines_ideal,
)
from .exact import format_decimal, format_sig12
from .polyring import Polynomial, PolynomialRing
from .tiltwalls import AB_RING, Circle, NuZeroLocus, nu_zero_locus

__all__ = [
    "ABS_RING",
    "ChamberLabel",
    "WallPolynomial",
    "actual_walls",
    "classify_chamber",
    "evaluate_wall",
    "lambda_wall",
    "phi_alpha_derivative_at",
    "sample_wall",
    "wall_slope_at",
    "wall_w1",
    "wall_w2",
]

# a = alpha^2, b = beta, s = the extended-slope parameter.
ABS_RING = PolynomialRing(("a", "b", "s"))

SampleableWall = Union["WallPolynomial", NuZeroLocus, Circle]


def _twisted_components(v: ChernCharacter) -> tuple[Polynomial, ...]:
    """ch^b of ``v`` as polynomials in b (degree 0..3)."""
    b = ABS_RING.variable("b")
    c0 = ABS_RING.constant(v.ch0)
    c1 = ABS_RING.constant(v.ch1) - b * v.ch0
    c2 = ABS_RING.constant(v.ch2) - b * v.ch1 + b * b * Fraction(1, 2) * v.ch0
    c3 = (
        ABS_RING.constant(v.ch3)
        - b * v.ch2
        + b * b * Fraction(1, 2) * v.ch1
        - b ** 3 * Fraction(1, 6) * v.ch0
    )
    return c0, c1, c2, c3


def _real_part(v: ChernCharacter) -> Polynomial:
    a = ABS_RING.variable("a")
    s = ABS_RING.variable("s")
    _, c1, _, c3 = _twisted_components(v)
    return -c3 + a * (s + Fraction(1, 6)) * c1


def _imag_part(v: ChernCharacter) -> Polynomial:
    a = ABS_RING.variable("a")
    c0, _, c2, _ = _twisted_components(v)
    return c2 - a * Fraction(1, 2) * c0


@dataclass(frozen=True)
class WallPolynomial:
    """A lambda-wall: the exact vanishing polynomial of an ordered pair."""

    name: str
    pair: tuple[ChernCharacter, ChernCharacter]
    polynomial: Polynomial

    def __str__(self) -> str:
        return f"{self.name}: {self.polynomial}"


def lambda_wall(f: ChernCharacter, g: ChernCharacter, name: str = "W") -> WallPolynomial:
    """Phi_{f,g} = Re(f)*Im(g) - Re(g)*Im(f) over Q[a, b, s]."""
    phi = _real_part(f) * _imag_part(g) - _real_part(g) * _imag_part(f)
    return WallPolynomial(name=name, pair=(f, g), polynomial=phi)


def wall_w1() -> WallPolynomial:
    """O(-1) against I_{P/V}(-2): the rank-one side of the last wall."""
    return lambda_wall(line_bundle(-1), plane_ideal_points(-2, 1), name="W1")


def wall_w2() -> WallPolynomial:
    """I_P(-1) against O_V(-2): the torsion side of the last wall."""
    return lambda_wall(ideal_points(-1, 1), plane_twist(-2), name="W2")


def actual_walls() -> tuple[WallPolynomial, WallPolynomial]:
    return (wall_w1(), wall_w2())


def evaluate_wall(w: WallPolynomial, p: StabilityPoint) -> Fraction:
    """Phi at (a, b, s) = (alpha^2, beta, s); requires p.s."""
    if p.s is None:
        raise ValueError("evaluating a lambda-wall needs the parameter s")
    return w.polynomial.evaluate({"a": p.alpha ** 2, "b": p.beta, "s": p.s})


def phi_alpha_derivative_at(
    w: WallPolynomial, p: StabilityPoint
) -> Fraction | Polynomial:
    """d(Phi)/d(alpha) = 2*alpha * dPhi/da at the point.

    With p.s set the value is a Fraction; with p.s = None the result stays a
    polynomial in s (a and b substituted away).
    """
    da = w.polynomial.derivative("a")
    partial = da.substitute({"a": p.alpha ** 2, "b": p.beta})
    if p.s is None:
        return 2 * p.alpha * partial
    return 2 * p.alpha * partial.evaluate(
        {"a": p.alpha ** 2, "b": p.beta, "s": p.s}
    )


def _as_ab_polynomial(w: SampleableWall, s: Fraction | None) -> Polynomial:
    """Normalize any supported wall to a polynomial over Q[a, b]."""
    if isinstance(w, WallPolynomial):
        if s is None:
            raise ValueError(f"wall {w.name} needs a concrete parameter s")
        with_s = w.polynomial.substitute({"s": s})
        return Polynomial(AB_RING, {
            (e[0], e[1]): c for e, c in with_s.terms.items()
        })
    if isinstance(w, NuZeroLocus):
        return w.polynomial
    if isinstance(w, Circle):
        a = AB_RING.variable("a")
        b = AB_RING.variable("b")
        return (b - w.center_beta) ** 2 + a - w.radius_sq
    raise TypeError(f"not a sampleable wall: {w!r}")


def wall_slope_at(w: SampleableWall, p: StabilityPoint) -> Fraction:
    """Tangent slope d(alpha)/d(beta) of the wall at a point lying on it.

    Computed from the implicit equation w(alpha^2, beta) = 0 as
    -(dw/db) / (2*alpha * dw/da).  Raises if the point is off the wall or if
    the tangent is vertical (dw/da = 0 there).
    """
    poly = _as_ab_polynomial(w, p.s)
    at = {"a": p.alpha ** 2, "b": p.beta}
    if poly.evaluate(at) != 0:
        raise ValueError(
            f"point (alpha={p.alpha}, beta={p.beta}) is not on the wall"
        )
    denom = 2 * p.alpha * poly.derivative("a").evaluate(at)
    if denom == 0:
        raise ValueError(
            f"wall has vertical tangent at (alpha={p.alpha}, beta={p.beta})"
        )
    return -poly.derivative("b").evaluate(at) / denom


# ---------------------------------------------------------------------------
# chamber classification for the two-skew-lines class
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChamberLabel:
    """Where a point sits relative to the actual walls W1, W2.

    kind is one of "I", "II", "III", "on-wall", "outside"; for "on-wall" the
    ``walls`` tuple lists which of W1/W2 vanish there.
    """

    kind: str
    walls: tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.kind == "outside":
            return "OutsideRegion"
        if self.kind == "on-wall":
            return f"OnWall({','.join(self.walls)})"
        return f"Chamber{self.kind}"


def classify_chamber(v: ChernCharacter, p: StabilityPoint) -> ChamberLabel:
    """Chamber of (alpha, beta, s) for the two-skew-lines class.

    Only v = (1, 0, -2, 2) is supported — the wall list is specific to it.
    The relevant region is the open set beta < 0, nu_v > 0; everything else
    is "outside".  Inside, the sign pair (Phi_W1, Phi_W2) separates:
    (+,+) -> I, (-,+) -> II, (-,-) -> III; any vanishing Phi is "on-wall".
    """
    if v != skew_lines_ideal():
        raise ValueError(
            f"chamber structure is computed for the character "
            f"{skew_lines_ideal()} only, got {v}"
        )
    if p.s is None:
        raise ValueError("chamber classification needs the parameter s")
    if p.beta >= 0:
        return ChamberLabel("outside")
    # nu_v numerator (beta^2 - alpha^2)/2 - 2; denominator -beta > 0 here
    nu_num = (p.beta ** 2 - p.alpha ** 2) / 2 - 2
    if nu_num <= 0:
        return ChamberLabel("outside")
    signs: list[Fraction] = []
    vanishing: list[str] = []
    for wall in actual_walls():
        value = evaluate_wall(wall, p)
        signs.append(value)
        if value == 0:
            vanishing.append(wall.name)
    if vanishing:
        return ChamberLabel("on-wall", tuple(vanishing))
    phi1, phi2 = signs
    if phi1 > 0 and phi2 > 0:
        return ChamberLabel("I")
    if phi1 < 0 and phi2 > 0:
        return ChamberLabel("II")
    if phi1 < 0 and phi2 < 0:
        return ChamberLabel("III")
    # sign pattern (+,-) does not occur in the region; treat as on-wall
    return ChamberLabel("on-wall", ())


# ---------------------------------------------------------------------------
# sampling for plots
# ---------------------------------------------------------------------------

def _exact_sqrt(q: Fraction) -> Fraction | None:
    """The exact rational square root of q >= 0, when it exists."""
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _positive_roots_in_a(poly: Polynomial, beta: Fraction) -> list[Fraction | Decimal]:
    """Positive real roots of poly(a, beta) = 0, exact where possible."""
    at_beta = poly.substitute({"b": beta})
    c0 = at_beta.coefficient_of((0, 0))
    c1 = at_beta.coefficient_of((1, 0))
    c2 = at_beta.coefficient_of((2, 0))
    if at_beta.degree_in("a") > 2:
        raise ValueError("cannot sample a wall of degree > 2 in a")
    roots: list[Fraction | Decimal] = []
    if c2 == 0:
        if c1 != 0:
            roots.append(-c0 / c1)
    else:
        disc = c1 * c1 - 4 * c2 * c0
        if disc > 0:
            rt = _exact_sqrt(disc)
            if rt is not None:
                roots.extend([(-c1 + rt) / (2 * c2), (-c1 - rt) / (2 * c2)])
            else:
                with localcontext() as ctx:
                    ctx.prec = 36
                    d = (Decimal(disc.numerator) / Decimal(disc.denominator)).sqrt()
                    base = Decimal(c1.numerator) / Decimal(c1.denominator)
                    den = 2 * Decimal(c2.numerator) / Decimal(c2.denominator)
                    roots.extend([(-base + d) / den, (-base - d) / den])
        elif disc == 0:
            roots.append(-c1 / (2 * c2))
    return [r for r in roots if r > 0]


def sample_wall(
    w: SampleableWall,
    s: Fraction | None,
    beta_min: Fraction,
    beta_max: Fraction,
    count: int,
) -> list[tuple[str, str]]:
    """Sample a wall over ``count`` evenly spaced exact beta values.

    For each beta the equation w(a, beta) = 0 is solved exactly in a; every
    positive root contributes one row (beta, alpha = sqrt(a)), both printed
    as 12-significant-digit decimals.  Rows are sorted by (beta, alpha);
    beta values without a positive root are omitted.  A wall that vanishes
    identically is an error.
    """
    if count < 2:
        raise ValueError(f"need at least two sample points, got {count}")
    beta_min, beta_max = Fraction(beta_min), Fraction(beta_max)
    if beta_min >= beta_max:
        raise ValueError(f"empty beta range [{beta_min}, {beta_max}]")
    poly = _as_ab_polynomial(w, s)
    if poly.is_zero():
        raise ValueError("wall polynomial is identically zero")
    step = (beta_max - beta_min) / (count - 1)
    rows: list[tuple[Fraction, str, str]] = []
    for i in range(count):
        beta = beta_min + i * step
        for root in _positive_roots_in_a(poly, beta):
            if isinstance(root, Fraction):
                alpha = _exact_sqrt(root)
                if alpha is not None:
                    alpha_str = format_sig12(alpha)
                else:
                    with localcontext() as ctx:
                        ctx.prec = 36
                        d = (Decimal(root.numerator) / Decimal(root.denominator)).sqrt()
                        ctx.prec = 12
                        d = +d
                    alpha_str = format_decimal(d)
            else:
                with localcontext() as ctx:
                    ctx.prec = 36
                    d = root.sqrt()
                    ctx.prec = 12
                    d = +d
                alpha_str = format_decimal(d)
            rows.append((beta, format_sig12(beta), alpha_str))
    rows.sort(key=lambda row: (row[0], Decimal(row[2])))
    return [(b, a) for _, b, a in rows]

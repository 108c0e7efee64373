"""Tilt-stability walls in the (alpha, beta) upper half plane.

Numerical walls for the slope nu are the loci where two characters have equal
slope.  Cross-multiplying the two slopes gives a polynomial in a = alpha^2
and b = beta whose a- and b^2-coefficients always agree and whose a*b and b^3
coefficients vanish, so every wall is a semicircle centered on the beta-axis,
a vertical line, everything, or nothing.  This module computes that equation
exactly, classifies it, searches for candidate destabilizing sub-objects
along a fixed vertical line, and refines rank-respecting candidate pairs by
distributing point-length corrections in degree three.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .chern import ChernCharacter, StabilityPoint, discriminant, twist
from .polyring import Polynomial, PolynomialRing

__all__ = [
    "AB_RING",
    "Circle",
    "DestabilizerCandidate",
    "Empty",
    "Everywhere",
    "NuZeroLocus",
    "VerticalLine",
    "WallLocus",
    "enumerate_destabilizers",
    "nu_wall",
    "nu_wall_equation",
    "nu_zero_locus",
    "refine_point_lengths",
    "wall_contains",
]

# The shared coordinate ring: a stands for alpha^2, b for beta.
AB_RING = PolynomialRing(("a", "b"))


# ---------------------------------------------------------------------------
# wall loci
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Circle:
    """Semicircle (b - center_beta)^2 + a = radius_sq in the half plane a > 0."""

    center_beta: Fraction
    radius_sq: Fraction

    def to_json(self) -> dict:
        return {
            "kind": "circle",
            "center_beta": str(self.center_beta),
            "radius_sq": str(self.radius_sq),
        }

    def __str__(self) -> str:
        return f"circle center beta={self.center_beta} radius^2={self.radius_sq}"


@dataclass(frozen=True)
class VerticalLine:
    """The line b = beta (all alpha)."""

    beta: Fraction

    def to_json(self) -> dict:
        return {"kind": "vline", "beta": str(self.beta)}

    def __str__(self) -> str:
        return f"vertical line beta={self.beta}"


@dataclass(frozen=True)
class Everywhere:
    """Degenerate locus: the two slopes agree identically."""

    def to_json(self) -> dict:
        return {"kind": "everywhere"}

    def __str__(self) -> str:
        return "everywhere"


@dataclass(frozen=True)
class Empty:
    """Degenerate locus: the two slopes never agree."""

    def to_json(self) -> dict:
        return {"kind": "empty"}

    def __str__(self) -> str:
        return "empty"


WallLocus = Union[Circle, VerticalLine, Everywhere, Empty]


def wall_contains(locus: WallLocus, alpha: Fraction, beta: Fraction) -> bool:
    """Exact point test in the open half plane alpha > 0."""
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if isinstance(locus, Circle):
        return (beta - locus.center_beta) ** 2 + alpha ** 2 == locus.radius_sq
    if isinstance(locus, VerticalLine):
        return beta == locus.beta
    return isinstance(locus, Everywhere)


def nu_wall_equation(f: ChernCharacter, g: ChernCharacter) -> Polynomial:
    """The cross-multiplied equal-slope equation as a polynomial in (a, b).

    With N_v = ch2 - b*ch1 + (b^2/2 - a/2)*ch0 and D_v = ch1 - b*ch0, this is
    N_f*D_g - N_g*D_f; both slopes are N/D after substituting a = alpha^2.
    """
    a = AB_RING.variable("a")
    b = AB_RING.variable("b")

    def parts(v: ChernCharacter) -> tuple[Polynomial, Polynomial]:
        num = v.ch2 - b * v.ch1 + (b * b - a) * Fraction(1, 2) * v.ch0
        den = AB_RING.constant(v.ch1) - b * v.ch0
        return num, den

    nf, df = parts(f)
    ng, dg = parts(g)
    return nf * dg - ng * df


def _slope_infinite_line(v: ChernCharacter) -> WallLocus:
    """Locus where a character's twisted degree ch1 - b*ch0 vanishes."""
    if v.ch0 != 0:
        return VerticalLine(v.ch1 / v.ch0)
    return Empty()  # ch1 != 0 constant: never zero


def nu_wall(f: ChernCharacter, g: ChernCharacter) -> WallLocus:
    """Classify the locus where the tilt slopes of ``f`` and ``g`` agree.

    Raises when both characters have identically infinite slope (rank and
    degree zero) — the comparison carries no information.  When exactly one
    does, the locus is where the other slope is infinite as well.
    """
    f_degenerate = f.ch0 == 0 and f.ch1 == 0
    g_degenerate = g.ch0 == 0 and g.ch1 == 0
    if f_degenerate and g_degenerate:
        raise ValueError(
            "both characters have identically infinite tilt slope; "
            "their wall is undefined"
        )
    if f_degenerate:
        return _slope_infinite_line(g)
    if g_degenerate:
        return _slope_infinite_line(f)

    eq = nu_wall_equation(f, g)
    coeff = eq.coefficient_of
    k = coeff((1, 0))
    k_b2 = coeff((0, 2))
    m = coeff((0, 1))
    n = coeff((0, 0))
    # structural facts about the expansion, not input checks
    assert k == k_b2 == (f.ch1 * g.ch0 - g.ch1 * f.ch0) / 2
    assert coeff((1, 1)) == 0 and coeff((0, 3)) == 0
    assert all(sum(e) <= 2 for e in eq.terms)

    if k != 0:
        center = -m / (2 * k)
        radius_sq = center ** 2 - n / k
        if radius_sq > 0:
            return Circle(center, radius_sq)
        return Empty()
    if m != 0:
        return VerticalLine(-n / m)
    return Everywhere() if n == 0 else Empty()


# ---------------------------------------------------------------------------
# the nu = 0 locus of a single character
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NuZeroLocus:
    """The exact conic nu_v = 0 in coordinates (a, b) = (alpha^2, beta).

    ``polynomial`` is the numerator ch2 - b*ch1 + (b^2 - a)/2 * ch0; for rank
    one and ch1 = 0 this is the familiar hyperbola b^2 - a = -2*ch2.
    """

    character: ChernCharacter
    polynomial: Polynomial

    def vertical_line(self) -> Fraction | None:
        """The line b = const when the locus degenerates to one, else None."""
        p = self.polynomial
        if p.degree_in("a") > 0 or p.degree_in("b") != 1:
            return None
        lin = p.coefficient_of((0, 1))
        return -p.coefficient_of((0, 0)) / lin

    def contains(self, p: StabilityPoint) -> bool:
        value = self.polynomial.evaluate({"a": p.alpha ** 2, "b": p.beta})
        return value == 0


def nu_zero_locus(v: ChernCharacter) -> NuZeroLocus:
    """Exact equation of nu_v = 0 (the numerator of the tilt slope)."""
    a = AB_RING.variable("a")
    b = AB_RING.variable("b")
    poly = v.ch2 - b * v.ch1 + (b * b - a) * Fraction(1, 2) * v.ch0
    return NuZeroLocus(v, poly)


# ---------------------------------------------------------------------------
# destabilizer search along a vertical line
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DestabilizerCandidate:
    """A candidate sub-object in twisted coordinates at the search line.

    (r, c, d) are the beta0-twisted (ch0, ch1, ch2) of the sub-object; the
    complement holds the quotient's triple; alpha_sq is the unique positive
    a-value where the two tilt slopes agree on the line b = beta0.
    """

    r: int
    c: int
    d: Fraction
    complement: tuple[int, int, Fraction]
    alpha_sq: Fraction

    def sort_key(self) -> tuple:
        return (self.r, self.c, self.d)


def _halves_between(bounds_low: list[tuple[Fraction, bool]],
                    bounds_high: list[tuple[Fraction, bool]]) -> Iterator[Fraction]:
    """Half-integers d satisfying every (value, strict) bound on both sides."""
    k_min = None
    for value, strict in bounds_low:
        twice = 2 * value
        k = math.ceil(twice)
        if strict and k == twice:
            k += 1
        k_min = k if k_min is None else max(k_min, k)
    k_max = None
    for value, strict in bounds_high:
        twice = 2 * value
        k = math.floor(twice)
        if strict and k == twice:
            k -= 1
        k_max = k if k_max is None else min(k_max, k)
    if k_min is None or k_max is None:
        raise AssertionError("unbounded degree-two search range")
    for k in range(k_min, k_max + 1):
        yield Fraction(k, 2)


def enumerate_destabilizers(
    v: ChernCharacter,
    beta0: int | Fraction,
    rank_bound: int = 10,
) -> tuple[DestabilizerCandidate, ...]:
    """All candidate destabilizing pairs of ``v`` along the line b = beta0.

    Searches integer ranks r in [-rank_bound, rank_bound], integer twisted
    degrees 0 < c < ch1^beta0(v), and half-integer twisted ch2 values d in the
    finite window forced by positivity of the solved a and nonnegativity of
    both discriminants.  Unordered pairs are de-duplicated; the reported half
    is the larger under (r, c, d) comparison and the result is sorted by the
    same key.  beta0 must be an integer (that keeps the grid integral /
    half-integral) and the twisted degree of ``v`` must be positive.
    """
    beta0 = Fraction(beta0)
    if beta0.denominator != 1:
        raise ValueError(
            f"beta0 must be an integer so the candidate grid is discrete; "
            f"got {beta0}"
        )
    if rank_bound < 1:
        raise ValueError(f"rank_bound must be a positive integer, got {rank_bound}")
    e = twist(v, beta0)
    if not (e.ch0.denominator == 1 and e.ch1.denominator == 1
            and (2 * e.ch2).denominator == 1):
        raise ValueError(f"character is not on the integral lattice: {v}")
    e0, e1 = int(e.ch0), int(e.ch1)
    e2 = e.ch2
    if e1 <= 0:
        raise ValueError(
            f"twisted degree ch1^beta0 must be positive, got {e1} at beta0={beta0}"
        )

    seen: set[tuple] = set()
    found: list[DestabilizerCandidate] = []
    for r in range(-rank_bound, rank_bound + 1):
        for c in range(1, e1):
            delta = r * e1 - c * e0
            if delta == 0:
                continue
            lows: list[tuple[Fraction, bool]] = []
            highs: list[tuple[Fraction, bool]] = []
            pivot = e2 * c / e1
            if delta > 0:
                lows.append((pivot, True))
            else:
                highs.append((pivot, True))
            if r > 0:
                highs.append((Fraction(c * c, 2 * r), False))
            elif r < 0:
                lows.append((Fraction(c * c, 2 * r), False))
            rq = e0 - r
            cq = e1 - c
            if rq > 0:
                lows.append((e2 - Fraction(cq * cq) / (2 * rq), False))
            elif rq < 0:
                highs.append((e2 - Fraction(cq * cq) / (2 * rq), False))
            for d in _halves_between(lows, highs):
                a = 2 * (d * e1 - e2 * c) / delta
                disc_sub = c * c - 2 * r * d
                disc_quot = cq * cq - 2 * rq * (e2 - d)
                if a <= 0 or disc_sub < 0 or disc_quot < 0:
                    continue
                sub = (r, c, d)
                quot = (rq, cq, e2 - d)
                first, second = (sub, quot) if sub >= quot else (quot, sub)
                if (first, second) in seen:
                    continue
                seen.add((first, second))
                found.append(DestabilizerCandidate(
                    r=first[0], c=first[1], d=first[2],
                    complement=second, alpha_sq=a,
                ))
    found.sort(key=DestabilizerCandidate.sort_key)
    return tuple(found)


def refine_point_lengths(
    e3: Fraction, f3: Fraction, g3: Fraction
) -> set[tuple[int, int]]:
    """Distribute point-length corrections over a candidate pair in degree 3.

    Given the target's twisted ch3 and the two candidates' uncorrected twisted
    ch3 values, the total correction N = f3 + g3 - e3 must be a nonnegative
    integer (points only subtract); returns every split (n, N - n).
    """
    total = Fraction(f3) + Fraction(g3) - Fraction(e3)
    if total.denominator != 1 or total < 0:
        return set()
    n_total = int(total)
    return {(n, n_total - n) for n in range(n_total + 1)}

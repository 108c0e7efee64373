"""Chern characters on P^3: twists, slopes, discriminant, Euler pairing.

A character is the exact rational 4-tuple (ch0, ch1, ch2, ch3) of a class on
projective 3-space, stored over the hyperplane basis (1, H, H^2, H^3).  The
integral lattice has ch0, ch1 integers, 2*ch2 and 6*ch3 integers; twisting by
a rational beta leaves the character exact but can enlarge denominators, so
lattice membership is a predicate (`in_lattice`), not a constructor
constraint.

Slopes come in three layers: the classical mu (rank-normalized degree), the
tilt slope nu at a point (alpha, beta) of the upper half plane, and the
second-tilt slope lambda which additionally depends on the parameter s > 0.
Each returns +infinity exactly when its denominator vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from .exact import INFINITY, PositiveInfinity, parse_rational

__all__ = [
    "ChernCharacter",
    "StabilityPoint",
    "bott_cohomology",
    "cotangent_plane",
    "discriminant",
    "euler_pairing",
    "ideal_points",
    "lambda_slope",
    "line_bundle",
    "mu_slope",
    "nu_slope",
    "plane_ideal_points",
    "plane_twist",
    "skew_lines_ideal",
    "twist",
]

Slope = Union[Fraction, PositiveInfinity]
_Q = Fraction


@dataclass(frozen=True)
class ChernCharacter:
    """Exact rational character (ch0, ch1, ch2, ch3)."""

    ch0: Fraction
    ch1: Fraction
    ch2: Fraction
    ch3: Fraction

    def __post_init__(self) -> None:
        for name in ("ch0", "ch1", "ch2", "ch3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def in_lattice(self) -> bool:
        """Integrality pattern of an actual class: ch0, ch1, 2*ch2, 6*ch3 integral."""
        return (
            self.ch0.denominator == 1
            and self.ch1.denominator == 1
            and (2 * self.ch2).denominator == 1
            and (6 * self.ch3).denominator == 1
        )

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.ch0, self.ch1, self.ch2, self.ch3)

    def dual(self) -> "ChernCharacter":
        """Derived dual: signs alternate with cohomological degree."""
        return ChernCharacter(self.ch0, -self.ch1, self.ch2, -self.ch3)

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(
            self.ch0 + other.ch0, self.ch1 + other.ch1,
            self.ch2 + other.ch2, self.ch3 + other.ch3,
        )

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return self + (-other)

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(-self.ch0, -self.ch1, -self.ch2, -self.ch3)

    def __mul__(self, scalar: int | Fraction) -> "ChernCharacter":
        c = Fraction(scalar)
        return ChernCharacter(c * self.ch0, c * self.ch1, c * self.ch2, c * self.ch3)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.components())

    @classmethod
    def parse(cls, text: str) -> "ChernCharacter":
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"a character needs four components: {text!r}")
        return cls(*(parse_rational(p) for p in parts))


@dataclass(frozen=True)
class StabilityPoint:
    """A point (alpha, beta) of the upper half plane, optionally with the
    extended-slope parameter s; alpha and s (when given) must be positive."""

    alpha: Fraction
    beta: Fraction
    s: Fraction | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.s is not None:
            object.__setattr__(self, "s", Fraction(self.s))
            if self.s <= 0:
                raise ValueError(f"parameter s must be positive, got {self.s}")
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")


def twist(v: ChernCharacter, beta: int | Fraction) -> ChernCharacter:
    """The beta-twisted character ch^beta = e^(-beta*H) * ch.

    Exact for rational beta; twist(twist(v, b1), b2) == twist(v, b1 + b2).
    """
    b = Fraction(beta)
    return ChernCharacter(
        v.ch0,
        v.ch1 - b * v.ch0,
        v.ch2 - b * v.ch1 + b * b / 2 * v.ch0,
        v.ch3 - b * v.ch2 + b * b / 2 * v.ch1 - b ** 3 / 6 * v.ch0,
    )


def mu_slope(v: ChernCharacter, beta: int | Fraction) -> Slope:
    """Twisted rank-normalized degree; +infinity on rank-zero classes."""
    if v.ch0 == 0:
        return INFINITY
    return twist(v, beta).ch1 / v.ch0


def nu_slope(v: ChernCharacter, p: StabilityPoint) -> Slope:
    """Tilt slope at (alpha, beta); +infinity when the twisted degree vanishes."""
    tw = twist(v, p.beta)
    den = tw.ch1
    if den == 0:
        return INFINITY
    num = tw.ch2 - p.alpha ** 2 / 2 * v.ch0
    return num / den


def lambda_slope(v: ChernCharacter, p: StabilityPoint) -> Slope:
    """Second-tilt slope at (alpha, beta) with parameter s = p.s > 0."""
    if p.s is None:
        raise ValueError("lambda_slope needs a point with the parameter s set")
    tw = twist(v, p.beta)
    a = p.alpha ** 2
    den = tw.ch2 - a / 2 * v.ch0
    if den == 0:
        return INFINITY
    num = tw.ch3 - a * (Fraction(1, 6) + p.s) * tw.ch1
    return num / den


def discriminant(v: ChernCharacter) -> Fraction:
    """ch1^2 - 2*ch0*ch2; invariant under twisting."""
    return v.ch1 ** 2 - 2 * v.ch0 * v.ch2


# ---------------------------------------------------------------------------
# standard sheaves
# ---------------------------------------------------------------------------

def line_bundle(d: int) -> ChernCharacter:
    """O(d): (1, d, d^2/2, d^3/6)."""
    dd = Fraction(d)
    return ChernCharacter(_Q(1), dd, dd * dd / 2, dd ** 3 / 6)


def plane_twist(d: int) -> ChernCharacter:
    """O_V(d) for a plane V: the quotient O(d) -> O(d) / O(d-1)."""
    return line_bundle(d) - line_bundle(d - 1)


def ideal_points(d: int, n: int) -> ChernCharacter:
    """Twisted ideal sheaf I_Z(d) of a length-n point scheme Z in P^3."""
    if n < 0:
        raise ValueError(f"a point scheme has nonnegative length, got {n}")
    return line_bundle(d) - ChernCharacter(_Q(0), _Q(0), _Q(0), _Q(n))


def plane_ideal_points(d: int, n: int) -> ChernCharacter:
    """I_{Z/V}(d): points of length n inside a plane V, twisted by d."""
    if n < 0:
        raise ValueError(f"a point scheme has nonnegative length, got {n}")
    return plane_twist(d) - ChernCharacter(_Q(0), _Q(0), _Q(0), _Q(n))


def cotangent_plane() -> ChernCharacter:
    """Omega_V(1) for a plane V, via the restricted Euler sequence:
    0 -> Omega_V(1) -> O_V^3 -> O_V(1) -> 0 shifted to (0, 2, -4, 10/3)."""
    return 3 * plane_twist(-1) - plane_twist(0)


def skew_lines_ideal() -> ChernCharacter:
    """The ideal sheaf of two disjoint lines: (1, 0, -2, 2)."""
    return ChernCharacter(_Q(1), _Q(0), _Q(-2), _Q(2))


# ---------------------------------------------------------------------------
# Euler pairing and line-bundle cohomology
# ---------------------------------------------------------------------------

_TODD_P3 = (_Q(1), _Q(2), _Q(11, 6), _Q(1))


def euler_pairing(f: ChernCharacter, g: ChernCharacter) -> Fraction:
    """chi(f, g): degree-3 coefficient of dual(f) * g * td(P^3).

    Bilinear and exact; for actual sheaves it computes the alternating sum of
    Ext dimensions.
    """
    fd = f.dual().components()
    gc = g.components()
    total = Fraction(0)
    for i in range(4):
        for j in range(4 - i):
            k = 3 - i - j
            total += fd[i] * gc[j] * _TODD_P3[k]
    return total


def bott_cohomology(n: int, d: int) -> tuple[int, ...]:
    """Cohomology dimensions (h^0, ..., h^n) of O(d) on P^n.

    Only h^0 (for d >= 0) or h^n (for d <= -n-1) can be nonzero.
    """
    if n < 1:
        raise ValueError(f"projective space dimension must be positive, got {n}")
    h = [0] * (n + 1)
    if d >= 0:
        h[0] = comb(d + n, n)
    elif d <= -n - 1:
        h[n] = comb(-d - 1, n)
    return tuple(h)

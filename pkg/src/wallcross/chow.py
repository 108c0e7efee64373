"""Bigraded intersection theory on P^3 x P^3 and the Mori-cone bookkeeping.

BigradedClass models the Chow ring Q[H, H']/(H^4, H'^4) as a 4x4 rational
coefficient grid.  The Todd class of P^3 is produced by inverting the
universal series (1 - e^{-H})/H = 1 - H/2 + H^2/6 - H^3/24 in the truncated
ring and raising to the fourth power; the Grothendieck-Riemann-Roch
pushforward for the twisted incidence sheaf multiplies exp(d*H) by
(1 - e^{-H-H'}) and the Todd factor, takes the degree-four part, and
integrates out the first factor.

The divisor/curve side works over fixed bases: divisors as (H, H', A, E')
coordinates, curves dually; the intersection pairing is +1 on the first
three basis pairs and -1 on the last.  `dual_curve_basis` solves exactly for
the basis dual to any four divisors, and `mori_report` packages the
canonical-class pairings against the dual basis of (H, H', D, D' + H').
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

__all__ = [
    "BigradedClass",
    "CurveClass",
    "DivisorClass",
    "MoriReport",
    "dual_curve_basis",
    "exp_class",
    "grr_c1_pushforward",
    "incidence_product",
    "incidence_pushforward",
    "mori_report",
    "named_divisors",
    "pair",
    "pr2_pushforward",
    "todd_p3",
]

_Q = Fraction
_N = 4  # truncation: H^4 = H'^4 = 0


class BigradedClass:
    """Element of Q[H, H']/(H^4, H'^4), held as a 4x4 coefficient grid."""

    __slots__ = ("grid",)

    def __init__(self, grid=None):
        if grid is None:
            self.grid = tuple(tuple(_Q(0) for _ in range(_N)) for _ in range(_N))
        else:
            rows = []
            for row in grid:
                rows.append(tuple(_Q(c) for c in row))
                if len(rows[-1]) != _N:
                    raise ValueError("grid must be 4x4")
            if len(rows) != _N:
                raise ValueError("grid must be 4x4")
            self.grid = tuple(rows)

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int | Fraction = 1) -> "BigradedClass":
        if not (0 <= i < _N and 0 <= j < _N):
            raise ValueError(f"exponents out of range: H^{i} H'^{j}")
        grid = [[_Q(0)] * _N for _ in range(_N)]
        grid[i][j] = _Q(coeff)
        return cls(grid)

    @classmethod
    def one(cls) -> "BigradedClass":
        return cls.monomial(0, 0)

    @classmethod
    def from_h_series(cls, coeffs) -> "BigradedClass":
        """A class in H alone from its coefficient list (degree 0 upward)."""
        grid = [[_Q(0)] * _N for _ in range(_N)]
        for i, c in enumerate(coeffs):
            if i >= _N:
                break
            grid[i][0] = _Q(c)
        return cls(grid)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.grid[i][j]

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.grid for c in row)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BigradedClass) and self.grid == other.grid

    def __hash__(self) -> int:
        return hash(self.grid)

    def __add__(self, other: "BigradedClass") -> "BigradedClass":
        return BigradedClass(tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.grid, other.grid)
        ))

    def __sub__(self, other: "BigradedClass") -> "BigradedClass":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _Q(other)
            return BigradedClass(tuple(
                tuple(c * v for v in row) for row in self.grid
            ))
        grid = [[_Q(0)] * _N for _ in range(_N)]
        for i1 in range(_N):
            for j1 in range(_N):
                c1 = self.grid[i1][j1]
                if not c1:
                    continue
                for i2 in range(_N - i1):
                    for j2 in range(_N - j1):
                        c2 = other.grid[i2][j2]
                        if c2:
                            grid[i1 + i2][j1 + j2] += c1 * c2
        return BigradedClass(grid)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BigradedClass":
        out = BigradedClass.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def degree_part(self, n: int) -> "BigradedClass":
        """The homogeneous part of total degree n."""
        grid = [[_Q(0)] * _N for _ in range(_N)]
        for i in range(_N):
            for j in range(_N):
                if i + j == n:
                    grid[i][j] = self.grid[i][j]
        return BigradedClass(grid)

    def __str__(self) -> str:
        parts: list[str] = []
        keys = sorted(
            ((i, j) for i in range(_N) for j in range(_N) if self.grid[i][j]),
            key=lambda ij: (ij[0] + ij[1], ij[1], ij[0]),
        )
        if not keys:
            return "0"
        for i, j in keys:
            c = self.grid[i][j]
            mono = ""
            if i:
                mono += "H" if i == 1 else f"H^{i}"
            if j:
                mono += "H'" if j == 1 else f"H'^{j}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<{self}>"


def exp_class(x: BigradedClass) -> BigradedClass:
    """exp of a class with zero constant term (nilpotent in the truncation)."""
    if x.coefficient(0, 0) != 0:
        raise ValueError("exp_class needs a class with zero constant term")
    out = BigradedClass.one()
    power = BigradedClass.one()
    for n in range(1, 2 * _N - 1):  # degree > 6 vanishes identically
        power = power * x
        if power.is_zero():
            break
        out = out + _Q(1, factorial(n)) * power
    return out


def todd_p3() -> BigradedClass:
    """Todd class of the tangent bundle of P^3: invert the series
    (1 - e^{-H})/H termwise and raise to the fourth power."""
    series = BigradedClass.from_h_series(
        [_Q((-1) ** k, factorial(k + 1)) for k in range(_N)]
    )
    nilpotent = BigradedClass.one() - series
    inverse = BigradedClass.one()
    power = BigradedClass.one()
    for _ in range(_N - 1):
        power = power * nilpotent
        inverse = inverse + power
    return inverse ** 4


def incidence_product(twist: int) -> BigradedClass:
    """exp(twist*H) * (1 - e^{-H-H'}) * td(P^3), the full bigraded product."""
    h = BigradedClass.monomial(1, 0)
    hp = BigradedClass.monomial(0, 1)
    factor = BigradedClass.one() - exp_class(-1 * (h + hp))
    return exp_class(twist * h) * factor * todd_p3()


def pr2_pushforward(x: BigradedClass) -> BigradedClass:
    """Integrate out the first factor: H^3 H'^j maps to H'^j, the rest to 0."""
    grid = [[_Q(0)] * _N for _ in range(_N)]
    for j in range(_N):
        grid[0][j] = x.coefficient(3, j)
    return BigradedClass(grid)


def incidence_pushforward(twist: int) -> BigradedClass:
    """Second-projection pushforward of the degree-four incidence product."""
    return pr2_pushforward(incidence_product(twist).degree_part(4))


def grr_c1_pushforward() -> BigradedClass:
    """First Chern class of the pushed-forward twisted incidence sheaf: 4H'."""
    return incidence_pushforward(2)


# ---------------------------------------------------------------------------
# divisors, curves, pairing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisorClass:
    """Divisor in coordinates over the basis (H, H', A, E')."""

    h: Fraction
    hprime: Fraction
    a: Fraction
    eprime: Fraction

    def __post_init__(self) -> None:
        for name in ("h", "hprime", "a", "eprime"):
            object.__setattr__(self, name, _Q(getattr(self, name)))

    def components(self) -> tuple[Fraction, ...]:
        return (self.h, self.hprime, self.a, self.eprime)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(*(x + y for x, y in
                              zip(self.components(), other.components())))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(*(x - y for x, y in
                              zip(self.components(), other.components())))

    def __mul__(self, c: int | Fraction) -> "DivisorClass":
        c = _Q(c)
        return DivisorClass(*(c * x for x in self.components()))

    __rmul__ = __mul__


@dataclass(frozen=True)
class CurveClass:
    """Curve in coordinates over the basis dual to (H, H', A, E')
    under the pairing diag(1, 1, 1, -1)."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, _Q(getattr(self, name)))

    def components(self) -> tuple[Fraction, ...]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def __add__(self, other: "CurveClass") -> "CurveClass":
        return CurveClass(*(x + y for x, y in
                            zip(self.components(), other.components())))

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        return CurveClass(*(x - y for x, y in
                            zip(self.components(), other.components())))

    def __mul__(self, c: int | Fraction) -> "CurveClass":
        c = _Q(c)
        return CurveClass(*(c * x for x in self.components()))

    __rmul__ = __mul__


def pair(d: DivisorClass, c: CurveClass) -> Fraction:
    """Intersection pairing: +1 on the first three coordinates, -1 on the last."""
    dh, dhp, da, dep = d.components()
    ca, cb, cg, cd = c.components()
    return dh * ca + dhp * cb + da * cg - dep * cd


def named_divisors() -> dict[str, DivisorClass]:
    """The standard divisor classes on the blown-up pair space."""
    H = DivisorClass(1, 0, 0, 0)
    Hp = DivisorClass(0, 1, 0, 0)
    A = DivisorClass(0, 0, 1, 0)
    Ep = DivisorClass(0, 0, 0, 1)
    return {
        "H": H,
        "H'": Hp,
        "A": A,
        "E'": Ep,
        "D": DivisorClass(0, 2, 1, 0),
        "D'": DivisorClass(2, 2, 1, -1),
        "E": DivisorClass(1, 1, 0, -1),
        "K": DivisorClass(-4, -8, -6, 1),
    }


def _invert4(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a 4x4 rational matrix by Gauss-Jordan elimination."""
    n = 4
    aug = [list(rows[i]) + [_Q(1) if i == j else _Q(0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("degenerate divisor basis")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = _Q(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def dual_curve_basis(
    divisors: tuple[DivisorClass, DivisorClass, DivisorClass, DivisorClass],
) -> tuple[CurveClass, CurveClass, CurveClass, CurveClass]:
    """The four curve classes with pair(divisors[i], dual[j]) = delta_ij."""
    matrix = [
        [d.h, d.hprime, d.a, -d.eprime]
        for d in divisors
    ]
    inverse = _invert4(matrix)
    # dual_j solves M * dual_j = e_j, i.e. the j-th column of M^{-1}
    return tuple(
        CurveClass(*(inverse[row][j] for row in range(4)))
        for j in range(4)
    )


@dataclass(frozen=True)
class MoriReport:
    """Canonical-class pairings against the contraction-adapted curve basis."""

    K: DivisorClass
    rays: dict[str, CurveClass]
    pairings: dict[str, Fraction]
    negative_rays: tuple[str, ...]
    positive_rays: tuple[str, ...]
    contraction_of_zeta: str

    def to_json(self) -> dict:
        return {
            "K": [str(c) for c in self.K.components()],
            "pairings": {name: str(v) for name, v in self.pairings.items()},
            "negative_rays": list(self.negative_rays),
            "positive_rays": list(self.positive_rays),
        }


def mori_report() -> MoriReport:
    """Pair K against the basis dual to (H, H', D, D' + H')."""
    divs = named_divisors()
    eps, eta, zeta, delta = dual_curve_basis(
        (divs["H"], divs["H'"], divs["D"], divs["D'"] + divs["H'"])
    )
    rays = {"epsilon": eps, "eta": eta, "zeta": zeta, "delta": delta}
    pairings = {name: pair(divs["K"], ray) for name, ray in rays.items()}
    return MoriReport(
        K=divs["K"],
        rays=rays,
        pairings=pairings,
        negative_rays=tuple(n for n, v in pairings.items() if v < 0),
        positive_rays=tuple(n for n, v in pairings.items() if v > 0),
        contraction_of_zeta="C -> C'",
    )

"""Exact-arithmetic helpers shared across the package.

Everything numerical in this package is a :class:`fractions.Fraction`; floats
never enter any computation.  The only non-rational output anywhere is the
fixed-precision decimal used for plot sampling, produced here with explicit
rounding so that repeated runs are byte-identical.
"""
from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

__all__ = [
    "INFINITY",
    "PositiveInfinity",
    "Rational",
    "format_decimal",
    "format_sig12",
    "parse_rational",
    "sqrt_sig12",
]

Rational = Fraction

# Working precision for intermediate decimal arithmetic; final values are
# rounded to 12 significant digits, so 36 digits leaves a wide safety margin.
_WORK_PREC = 36
_OUT_PREC = 12


class PositiveInfinity:
    """Singleton ordered above every rational; the slope of torsion classes.

    Deliberately not a float: mixing ``float('inf')`` into Fraction arithmetic
    would silently convert exact values.  This object supports ordering
    against Fraction/int and nothing else.
    """

    _instance: "PositiveInfinity | None" = None

    def __new__(cls) -> "PositiveInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("wallcross-positive-infinity")

    def __repr__(self) -> str:
        return "+inf"


INFINITY = PositiveInfinity()


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (optionally signed) into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_decimal(d: Decimal) -> str:
    """Plain (non-exponent) decimal text with trailing zeros stripped."""
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return s if s not in ("", "-0") else "0"


def format_sig12(value: Fraction) -> str:
    """Render ``value`` as a decimal with 12 significant digits.

    Trailing zeros are stripped, so exactly representable values come out
    short: ``Fraction(3, 2)`` -> ``"1.5"``, ``Fraction(-5, 2)`` -> ``"-2.5"``.
    """
    with localcontext() as ctx:
        ctx.prec = _WORK_PREC
        d = Decimal(value.numerator) / Decimal(value.denominator)
        ctx.prec = _OUT_PREC
        d = +d  # unary plus re-rounds to the current precision
    return format_decimal(d)


def sqrt_sig12(value: Fraction) -> str:
    """Decimal square root of a nonnegative rational, 12 significant digits."""
    if value < 0:
        raise ValueError("square root of a negative rational")
    with localcontext() as ctx:
        ctx.prec = _WORK_PREC
        d = (Decimal(value.numerator) / Decimal(value.denominator)).sqrt()
        ctx.prec = _OUT_PREC
        d = +d
    return format_decimal(d)

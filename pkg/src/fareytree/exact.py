"""Exact rationals on the extended real line, vertex parity classes, and
rational-enclosure reals.

Every vertex of the Farey graph is an :class:`ExtRational`: a reduced
fraction with the sign carried by the numerator, or infinity stored as 1/0.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError, InfinityNotOrdered, ParseError, ZeroOverZero


@dataclass(frozen=True, order=False)
class ExtRational:
    num: int
    den: int

    def __post_init__(self):
        if self.den < 0 or (self.num == 0 and self.den == 0):
            raise ContractError(f"not a canonical ExtRational: {self.num}/{self.den}")
        if math.gcd(self.num, self.den) != 1:
            raise ContractError(f"not reduced: {self.num}/{self.den}")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def fraction(self) -> Fraction:
        if self.den == 0:
            raise InfinityNotOrdered("infinity has no finite value")
        return Fraction(self.num, self.den)

    @classmethod
    def from_fraction(cls, f: Fraction | int) -> ExtRational:
        f = Fraction(f)
        return cls(f.numerator, f.denominator)

    def __neg__(self) -> ExtRational:
        if self.den == 0:
            return self
        return ExtRational(-self.num, self.den)

    def __lt__(self, other: ExtRational) -> bool:
        return compare(self, other) < 0

    def __le__(self, other: ExtRational) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: ExtRational) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: ExtRational) -> bool:
        return compare(self, other) >= 0

    def __str__(self) -> str:
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtRational({self})"


INF = ExtRational(1, 0)


def make_rational(n: int, d: int) -> ExtRational:
    """Reduce n/d, moving the sign to the numerator. Any n/0 is infinity."""
    if n == 0 and d == 0:
        raise ZeroOverZero("0/0 is not a point of the extended line")
    if d == 0:
        return INF
    g = math.gcd(n, d)
    n, d = n // g, d // g
    if d < 0:
        n, d = -n, -d
    return ExtRational(n, d)


class VertexClass(enum.Enum):
    INFINITY_RATIONAL = "InfinityRational"
    ONE_RATIONAL = "OneRational"


def classify(q: ExtRational) -> VertexClass:
    # reduced, so numerator and denominator are never both even
    if q.num % 2 == 1 and q.den % 2 == 1:
        return VertexClass.ONE_RATIONAL
    return VertexClass.INFINITY_RATIONAL


def is_inf_rational(q: ExtRational) -> bool:
    return classify(q) is VertexClass.INFINITY_RATIONAL


def compare(p: ExtRational, q: ExtRational) -> int:
    """Return -1, 0 or 1 by exact cross-multiplication."""
    if p.den == 0 or q.den == 0:
        raise InfinityNotOrdered(f"cannot order {p} and {q}")
    diff = p.num * q.den - q.num * p.den
    return (diff > 0) - (diff < 0)


@dataclass(frozen=True)
class ApproxReal:
    """The closed interval [mid - rad, mid + rad] with exact rational ends."""

    mid: Fraction
    rad: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "mid", Fraction(self.mid))
        object.__setattr__(self, "rad", Fraction(self.rad))
        if self.rad < 0:
            raise ContractError("radius must be non-negative")

    @classmethod
    def from_bounds(cls, lo: Fraction, hi: Fraction) -> ApproxReal:
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ContractError(f"empty interval [{lo}, {hi}]")
        return cls((lo + hi) / 2, (hi - lo) / 2)

    @classmethod
    def exact(cls, q: ExtRational | Fraction | int) -> ApproxReal:
        if isinstance(q, ExtRational):
            q = q.fraction
        return cls(Fraction(q), Fraction(0))

    @property
    def lo(self) -> Fraction:
        return self.mid - self.rad

    @property
    def hi(self) -> Fraction:
        return self.mid + self.rad

    @property
    def is_exact(self) -> bool:
        return self.rad == 0

    def contains(self, v: Fraction | ExtRational) -> bool:
        if isinstance(v, ExtRational):
            if v.is_infinite:
                return False
            v = v.fraction
        return self.lo <= v <= self.hi

    def strictly_inside(self, a: Fraction, b: Fraction) -> bool:
        """True when the whole interval lies strictly between a and b."""
        a, b = min(a, b), max(a, b)
        return a < self.lo and self.hi < b

    def __neg__(self) -> ApproxReal:
        return ApproxReal(-self.mid, self.rad)

    def __str__(self) -> str:
        if self.rad == 0:
            return str(self.mid)
        return f"{self.mid} ± {self.rad}"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_DECIMAL_RE = re.compile(r"^\s*([+-]?)(\d*)\.(\d*)\s*$")


def parse_rational(text: str) -> ExtRational:
    """Parse ``a/b``, ``n`` or ``inf``."""
    t = text.strip().lower()
    if t in ("inf", "infinity", "∞", "1/0"):
        return INF
    m = _RATIONAL_RE.match(t)
    if not m:
        raise ParseError(f"not a rational: {text!r}")
    n = int(m.group(1))
    d = int(m.group(2)) if m.group(2) is not None else 1
    if d == 0:
        if n == 0:
            raise ParseError("0/0 is not a rational")
        return INF
    return make_rational(n, d)


def decimal_digits(text: str) -> int:
    m = _DECIMAL_RE.match(text)
    if not m:
        raise ParseError(f"not a decimal: {text!r}")
    return len(m.group(3))


def parse_decimal(text: str, digits: int | None = None) -> ApproxReal:
    """Parse ``d.ddd`` into an enclosure of radius 10**-digits / 2.

    ``digits`` defaults to the number of fractional digits written. A smaller
    value rounds the midpoint to that many places.
    """
    m = _DECIMAL_RE.match(text)
    if not m or not (m.group(2) or m.group(3)):
        raise ParseError(f"not a decimal: {text!r}")
    sign, whole, frac = m.groups()
    value = Fraction(int(whole or "0") * 10 ** len(frac) + int(frac or "0"), 10 ** len(frac))
    if sign == "-":
        value = -value
    if digits is None:
        digits = len(frac)
    if digits < 0:
        raise ParseError("digits must be non-negative")
    scale = 10**digits
    mid = Fraction(round(value * scale), scale)
    return ApproxReal(mid, Fraction(1, 2 * scale))


def parse_number(text: str, digits: int | None = None) -> ExtRational | ApproxReal:
    if "." in text:
        return parse_decimal(text, digits)
    return parse_rational(text)


def sqrt_approx(n: int, digits: int) -> ApproxReal:
    """Enclosure of sqrt(n) of radius 10**-digits / 2, from an integer square root."""
    if n < 0:
        raise ContractError("negative radicand")
    scale = 10**digits
    s = math.isqrt(n * scale * scale)
    # sqrt(n) * scale lies in [s, s + 1]
    return ApproxReal(Fraction(2 * s + 1, 2 * scale), Fraction(1, 2 * scale))


def floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


def nearest_even(x: Fraction) -> int:
    """Nearest even integer to x; ties (odd integers) resolve upward."""
    return 2 * floor_frac(x / 2 + Fraction(1, 2))

"""Ford circles and best approximation by ∞-rationals.

An ∞-rational a/b is a strong ∞-approximant of x when every other
∞-rational c/d with d <= b has |dx - c| > |bx - a|. For irrational x these
are exactly the EICF convergents, and a finite ∞-rational u is a convergent
exactly when some 1-rational G-neighbour v of u has x strictly between u
and v. Both predicates are decided here with exact interval arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError, NotInfinityRational, SameBase, Undecidable
from .exact import ApproxReal, ExtRational, is_inf_rational
from .farey import enumerate_inf_rationals, sb_parents


@dataclass(frozen=True)
class FordCircle:
    base: ExtRational
    radius: Fraction | None  # None: the line y = 1 through ∞

    @property
    def is_line(self) -> bool:
        return self.radius is None


def ford_circle(q: ExtRational) -> FordCircle:
    if q.is_infinite:
        return FordCircle(q, None)
    return FordCircle(q, Fraction(1, 2 * q.den * q.den))


def tangent(c1: FordCircle, c2: FordCircle) -> bool:
    """Tangency, decided by |ad - bc| = 1."""
    if c1.base == c2.base:
        raise SameBase(f"both circles are based at {c1.base}")
    u, v = c1.base, c2.base
    return abs(u.num * v.den - v.num * u.den) == 1


def tangent_geometric(c1: FordCircle, c2: FordCircle) -> bool:
    """Tangency from the circles' positions alone.

    Two circles resting on the real axis touch iff (x1 - x2)^2 = 4 r1 r2; the
    line y = 1 touches a circle iff its diameter is 1.
    """
    if c1.base == c2.base:
        raise SameBase(f"both circles are based at {c1.base}")
    if c1.is_line:
        return 2 * c2.radius == 1
    if c2.is_line:
        return 2 * c1.radius == 1
    dx = c1.base.fraction - c2.base.fraction
    return dx * dx == 4 * c1.radius * c2.radius


def _abs_linear(b: int, a: int, x: ApproxReal) -> tuple[Fraction, Fraction]:
    """Range of |b*t - a| for t in x."""
    y0, y1 = b * x.lo - a, b * x.hi - a
    lo, hi = min(y0, y1), max(y0, y1)
    if lo <= 0 <= hi:
        return Fraction(0), max(-lo, hi)
    return min(abs(lo), abs(hi)), max(abs(lo), abs(hi))


def horo_radius(u: ExtRational, x):
    """R_u(x) = |bx - a|^2 / 2: exact for a rational x, an ApproxReal otherwise."""
    if u.is_infinite:
        raise ContractError("the base point must be finite")
    a, b = u.num, u.den
    if isinstance(x, ExtRational):
        return (b * x.fraction - a) ** 2 / 2
    if isinstance(x, (Fraction, int)):
        return (b * Fraction(x) - a) ** 2 / 2
    lo, hi = _abs_linear(b, a, x)
    return ApproxReal.from_bounds(lo * lo / 2, hi * hi / 2)


def _margin_range(u: ExtRational, w: ExtRational, x: ApproxReal) -> tuple[Fraction, Fraction]:
    """Min and max over x of f(t) = |d t - c| - |b t - a|, with u = a/b, w = c/d.

    f is piecewise linear with kinks at a/b and c/d, so its extremes are
    attained at the ends of x or at a kink inside x.
    """
    a, b, c, d = u.num, u.den, w.num, w.den
    points = [x.lo, x.hi]
    for k in (u.fraction, w.fraction):
        if x.lo < k < x.hi:
            points.append(k)
    vals = [abs(d * t - c) - abs(b * t - a) for t in points]
    return min(vals), max(vals)


def _check_candidate(u: ExtRational):
    if u.is_infinite:
        raise ContractError("u must be finite")
    if not is_inf_rational(u):
        raise NotInfinityRational(f"{u} is a 1-rational")


def is_strong_approximant(u: ExtRational, x: ApproxReal) -> bool:
    """Brute force over competitors c/d with d <= b and |c/d - x| <= 2.

    Competitors further away have |dx - c| >= 2d >= 2, while a strong
    approximant beats the nearest even integer, so |bx - a| < 1.
    """
    _check_candidate(u)
    a, b = u.num, u.den
    # interval screen first; the exact piecewise check only when ranges overlap
    u_lo, u_hi = _abs_linear(b, a, x)
    undecided: list[ExtRational] = []
    for w in enumerate_inf_rationals(b, x.lo - 2, x.hi + 2):
        if w == u:
            continue
        w_lo, w_hi = _abs_linear(w.den, w.num, x)
        if u_hi < w_lo:
            continue
        if u_lo >= w_hi:
            return False
        lo, hi = _margin_range(u, w, x)
        if lo > 0:
            continue
        if hi <= 0:
            return False
        undecided.append(w)
    if undecided:
        raise Undecidable(
            f"x is too imprecise to compare {u} with {', '.join(map(str, undecided[:3]))}"
        )
    assert u_hi < 2, "strong approximant outside the competitor window bound"
    return True


def convergent_certificate(u: ExtRational, x: ApproxReal) -> ExtRational | None:
    """A 1-rational G-neighbour v of u with x strictly between u and v, or None.

    On each side of u the G-neighbours are r_k = (c + k a)/(d + k b), k >= 0,
    shrinking towards u, with parities alternating; the farthest 1-rational
    among them is the only one worth testing.
    """
    _check_candidate(u)
    if x.is_exact:
        raise Undecidable("rational x is outside the characterisation; pass an enclosure")
    uf = u.fraction
    if x.contains(uf):
        raise Undecidable(f"x's interval contains {u}")
    left, right = sb_parents(u)
    first = right if x.lo > uf else left
    if is_inf_rational(first):
        first = ExtRational(first.num + u.num, first.den + u.den)
    v = first.fraction
    if x.strictly_inside(uf, v):
        return first
    if x.contains(v):
        raise Undecidable(f"x's interval contains {first}")
    return None


def strong_approximants(x: ApproxReal, max_den: int) -> list[ExtRational]:
    """All strong ∞-approximants of x with denominator <= max_den, in
    increasing denominator order."""
    window = enumerate_inf_rationals(max_den, x.lo - 2, x.hi + 2)
    out = [u for u in window if is_strong_approximant(u, x)]
    return sorted(out, key=lambda q: q.den)

"""The Farey graph G and the Farey tree F.

Vertices are ExtRationals. u = a/b and v = c/d are G-adjacent when
|ad - bc| = 1; F keeps only the ∞-rationals (parities differ, or ∞).
"""
from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    ContractError,
    NotInfinityRational,
    PrecisionExhausted,
    RationalHit,
    SameVertex,
)
from .exact import INF, ApproxReal, ExtRational, floor_frac, is_inf_rational, make_rational
from .mobius import IntMobius, apply


def _det(u: ExtRational, v: ExtRational) -> int:
    return u.num * v.den - v.num * u.den


@dataclass(frozen=True)
class FareyEdge:
    u: ExtRational
    v: ExtRational

    def __post_init__(self):
        if abs(_det(self.u, self.v)) != 1:
            raise ContractError(f"{self.u} and {self.v} are not Farey neighbours")
        # real-line order, ∞ last
        if self.u.is_infinite or (not self.v.is_infinite and self.v < self.u):
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)


@dataclass(frozen=True)
class FareyInterval:
    lo: ExtRational
    hi: ExtRational

    def __post_init__(self):
        if self.lo.is_infinite or self.hi.is_infinite:
            raise ContractError("Farey interval endpoints must be finite")
        if not self.lo < self.hi:
            raise ContractError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if abs(_det(self.lo, self.hi)) != 1:
            raise ContractError(f"[{self.lo}, {self.hi}] is not a Farey interval")

    @property
    def width(self) -> Fraction:
        return Fraction(1, self.lo.den * self.hi.den)

    @property
    def mediant(self) -> ExtRational:
        return ExtRational(self.lo.num + self.hi.num, self.lo.den + self.hi.den)

    def contains(self, x: Fraction | ExtRational) -> bool:
        if isinstance(x, ExtRational):
            x = x.fraction
        return self.lo.fraction <= x <= self.hi.fraction

    def as_approx(self) -> ApproxReal:
        return ApproxReal.from_bounds(self.lo.fraction, self.hi.fraction)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def adjacent_in_G(u: ExtRational, v: ExtRational) -> bool:
    if u == v:
        raise SameVertex(f"{u} is not adjacent to itself")
    return abs(_det(u, v)) == 1


def adjacent_in_F(u: ExtRational, v: ExtRational) -> bool:
    return adjacent_in_G(u, v) and is_inf_rational(u) and is_inf_rational(v)


def sb_parents(u: ExtRational) -> tuple[ExtRational, ExtRational]:
    """The two G-neighbours of a finite u = a/b with denominator below b,
    left one first. For an integer these are taken as a - 1 and a + 1."""
    if u.is_infinite:
        raise ContractError("∞ has no parents")
    a, b = u.num, u.den
    if b == 1:
        return ExtRational(a - 1, 1), ExtRational(a + 1, 1)
    d = pow(a, -1, b)  # a*d - b*c = 1 with 0 < d < b
    c = (a * d - 1) // b
    p = ExtRational(c, d)
    q = ExtRational(a - c, b - d)
    # a/b - c/d = 1/(bd) > 0, so p is the left parent
    return p, q


def parent_in_F(u: ExtRational) -> ExtRational:
    """The vertex preceding u on the tree path from ∞."""
    if not is_inf_rational(u):
        raise NotInfinityRational(f"{u} is a 1-rational")
    if u.is_infinite:
        raise ContractError("∞ is the root")
    if u.den == 1:
        return INF
    # exactly one Stern-Brocot parent is an ∞-rational, else F has a triangle
    p, q = sb_parents(u)
    return p if is_inf_rational(p) else q


def path_to(u: ExtRational) -> list[ExtRational]:
    """The unique F-path ∞ = v0, v1, ..., vk = u."""
    if not is_inf_rational(u):
        raise NotInfinityRational(f"{u} is a 1-rational; it is not a vertex of F")
    path = [u]
    while not path[-1].is_infinite:
        prev = path[-1]
        nxt = parent_in_F(prev)
        assert nxt.den < prev.den or nxt.is_infinite
        path.append(nxt)
    path.reverse()
    return path


def theta_element_to(v: ExtRational) -> IntMobius:
    """Some g in Θ with g(∞) = v, built from the tree edge into v."""
    if not is_inf_rational(v):
        raise NotInfinityRational(f"{v} is a 1-rational")
    if v.is_infinite:
        return IntMobius(1, 0, 0, 1)
    w = parent_in_F(v)
    # columns (v.num, v.den) and (w.num, w.den); fix the sign so det = +1
    sign = v.num * w.den - w.num * v.den
    return IntMobius(v.num, sign * w.num, v.den, sign * w.den)


def neighbors_in_F(
    v: ExtRational, lo: ExtRational, hi: ExtRational, max_den: int | None = None
) -> list[ExtRational]:
    """F-neighbours of v in the closed window [lo, hi], increasing.

    Neighbours accumulate at v, so only those with denominator at most
    ``max_den`` (default ceil(2 / width)) are returned.
    """
    if not lo < hi:
        raise ContractError("window needs lo < hi")
    width = hi.fraction - lo.fraction
    if max_den is None:
        max_den = math.ceil(2 / width)
    if v.is_infinite:
        if max_den < 1:
            return []
        first = 2 * math.ceil(lo.fraction / 2)
        return [ExtRational(k, 1) for k in range(first, floor_frac(hi.fraction) + 1, 2)]
    g = theta_element_to(v)
    # g(2j) has denominator |2j*c + d| with c = v.den > 0
    span = (max_den + abs(g.d)) // (2 * g.c) + 1
    jrange = range(-span, span + 1)
    out = []
    for j in jrange:
        w = apply(g, ExtRational(2 * j, 1))
        if w.is_infinite or w.den > max_den:
            continue
        if lo <= w <= hi:
            out.append(w)
    return sorted(out)


def subdivide(i: FareyInterval) -> tuple[FareyInterval, FareyInterval]:
    m = i.mediant
    return FareyInterval(i.lo, m), FareyInterval(m, i.hi)


@lru_cache(maxsize=256)
def _enumerate(max_den: int, lo: Fraction, hi: Fraction) -> tuple[ExtRational, ...]:
    out = []
    for b in range(1, max_den + 1):
        amin = math.ceil(lo * b)
        amax = math.floor(hi * b)
        for a in range(amin, amax + 1):
            if (a - b) % 2 == 1 and math.gcd(a, b) == 1:
                out.append(ExtRational(a, b))
    out.sort(key=lambda q: q.fraction)
    return tuple(out)


def enumerate_inf_rationals(max_den: int, lo, hi) -> list[ExtRational]:
    """All finite ∞-rationals a/b with b <= max_den and lo <= a/b <= hi."""
    if max_den < 1:
        raise ContractError("max_den must be at least 1")
    lo = lo.fraction if isinstance(lo, ExtRational) else Fraction(lo)
    hi = hi.fraction if isinstance(hi, ExtRational) else Fraction(hi)
    return list(_enumerate(max_den, lo, hi))


def locate(x: ApproxReal) -> Iterator[FareyInterval]:
    """Yield the nested chain of Farey intervals containing x.

    Ends with PrecisionExhausted when x's interval straddles the next
    mediant, or RationalHit when x is exactly that mediant. The generator
    never ends on its own.
    """
    m = floor_frac(x.lo)
    if x.lo == m:
        if x.is_exact:
            raise RationalHit(f"x = {m} is a vertex")
        raise PrecisionExhausted(f"interval around {x.mid} contains the integer {m}")
    if x.hi >= m + 1:
        raise PrecisionExhausted(f"interval around {x.mid} contains the integer {m + 1}")
    cur = FareyInterval(make_rational(m, 1), make_rational(m + 1, 1))
    while True:
        yield cur
        med = cur.mediant
        mf = med.fraction
        if x.hi < mf:
            cur = FareyInterval(cur.lo, med)
        elif x.lo > mf:
            cur = FareyInterval(med, cur.hi)
        elif x.is_exact:
            raise RationalHit(f"x = {med} is a vertex")
        else:
            raise PrecisionExhausted(f"interval around {x.mid} straddles the mediant {med}")


def g_edges(max_den: int, lo: Fraction, hi: Fraction) -> list[FareyEdge]:
    """All G-edges with both finite endpoints in the open window (lo, hi) and
    denominators <= max_den, plus the edges from integers in the window to ∞.

    Built by mediant descent inside each unit interval, not by pair testing.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    edges: list[FareyEdge] = []

    def inside(q: ExtRational) -> bool:
        return lo < q.fraction < hi

    def descend(left: ExtRational, right: ExtRational):
        stack = [(left, right)]
        while stack:
            left, right = stack.pop()
            med = ExtRational(left.num + right.num, left.den + right.den)
            if med.den > max_den or right.fraction <= lo or left.fraction >= hi:
                continue
            if inside(med):
                edges.extend(FareyEdge(end, med) for end in (left, right) if inside(end))
            stack.append((med, right))
            stack.append((left, med))

    for m in range(math.floor(lo), math.ceil(hi) + 1):
        left, right = ExtRational(m, 1), ExtRational(m + 1, 1)
        if inside(left):
            edges.append(FareyEdge(left, INF))
            if inside(right):
                edges.append(FareyEdge(left, right))
        descend(left, right)
    return edges

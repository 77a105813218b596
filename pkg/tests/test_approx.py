import decimal
import itertools
import math
from fractions import Fraction

import pytest

from fareytree.approx import (
    convergent_certificate,
    ford_circle,
    horo_radius,
    is_strong_approximant,
    strong_approximants,
    tangent,
    tangent_geometric,
)
from fareytree.eicf import convergents, expand_approx
from fareytree.errors import NotInfinityRational, SameBase, Undecidable
from fareytree.exact import INF, ApproxReal, make_rational, sqrt_approx
from fareytree.farey import adjacent_in_G, enumerate_inf_rationals

Q = make_rational
SQRT2 = ApproxReal(Fraction(141421356237309504880, 10**20), Fraction(1, 10**20))


def brute_strong(u, x: Fraction) -> bool:
    """Direct reading of the definition, evaluated at an exact rational point."""
    a, b = u.num, u.den
    mine = abs(b * x - a)
    for d in range(1, b + 1):
        for c in range(math.floor(d * x) - 3 * d, math.ceil(d * x) + 3 * d + 1):
            if (c - d) % 2 == 0 or math.gcd(c, d) != 1 or (c, d) == (a, b):
                continue
            if abs(d * x - c) <= mine:
                return False
    return True


def test_ford_circle_examples():
    assert ford_circle(Q(1, 2)).radius == Fraction(1, 8)
    assert ford_circle(Q(0, 1)).radius == Fraction(1, 2)
    assert ford_circle(INF).is_line


def test_tangent_examples():
    assert tangent(ford_circle(Q(0, 1)), ford_circle(Q(1, 2)))
    assert not tangent(ford_circle(Q(1, 2)), ford_circle(Q(3, 4)))
    line = ford_circle(INF)
    for q in (Q(3, 1), Q(1, 2), Q(-2, 3)):
        assert tangent(line, ford_circle(q)) == (q.den == 1)
        assert tangent_geometric(line, ford_circle(q)) == (q.den == 1)
    with pytest.raises(SameBase):
        tangent(ford_circle(Q(1, 2)), ford_circle(Q(1, 2)))


def test_tangency_geometry_small_denominators():
    bases = [Q(a, b) for b in range(1, 13) for a in range(-b, 2 * b + 1) if math.gcd(a, b) == 1]
    for u, v in itertools.combinations(bases, 2):
        cu, cv = ford_circle(u), ford_circle(v)
        assert tangent(cu, cv) == tangent_geometric(cu, cv) == adjacent_in_G(u, v)


def test_horo_radius_examples():
    assert horo_radius(Q(0, 1), Q(1, 2)) == Fraction(1, 8)
    assert horo_radius(Q(5, 3), Q(5, 3)) == 0
    x = ApproxReal(SQRT2.mid, Fraction(1, 10**20))
    r = horo_radius(Q(2, 1), x)
    # ½(2 - √2)² = 3 - 2√2, evaluated independently to 50 digits
    true = Fraction(decimal.Context(prec=50).create_decimal(3) - 2 * decimal.Context(prec=50).sqrt(2))
    assert r.lo - Fraction(1, 10**45) < true < r.hi + Fraction(1, 10**45)
    assert round(float(r.mid), 4) == 0.1716
    assert r.hi - r.lo < Fraction(1, 10**19)


def test_horo_radius_tangency_identity():
    verts = [Q(a, b) for b in range(1, 31) for a in range(0, b + 1) if math.gcd(a, b) == 1]
    for u, v in itertools.combinations(verts, 2):
        if adjacent_in_G(u, v):
            assert horo_radius(u, v) == ford_circle(v).radius
        else:
            assert horo_radius(u, v) >= 4 * ford_circle(v).radius


def test_strong_approximant_examples():
    assert is_strong_approximant(Q(3, 2), SQRT2)
    assert is_strong_approximant(Q(2, 1), SQRT2)
    assert not is_strong_approximant(Q(4, 1), SQRT2)
    with pytest.raises(NotInfinityRational):
        is_strong_approximant(Q(1, 1), SQRT2)
    # x too coarse to separate 0 and 2 around 1
    with pytest.raises(Undecidable):
        is_strong_approximant(Q(2, 1), ApproxReal(Fraction(1), Fraction(1, 10)))


def test_strong_approximants_against_definition():
    for n in (2, 3, 5, 7, 11):
        x = sqrt_approx(n, 40)
        got = strong_approximants(x, 25)
        want = [u for u in enumerate_inf_rationals(25, x.lo - 2, x.hi + 2) if brute_strong(u, x.mid)]
        assert sorted(got, key=lambda q: q.fraction) == want
        assert got == convergents(expand_approx(x, 30), len(got))


def test_certificate_examples():
    near_8_3 = ApproxReal(Fraction(8, 3) - Fraction(1, 10**6), Fraction(1, 10**9))
    assert convergent_certificate(Q(2, 1), near_8_3) == Q(3, 1)
    assert convergent_certificate(Q(3, 2), SQRT2) == Q(1, 1)
    assert convergent_certificate(Q(0, 1), SQRT2) is None
    with pytest.raises(Undecidable):
        convergent_certificate(Q(2, 1), ApproxReal.exact(Fraction(8, 3)))
    with pytest.raises(Undecidable):
        convergent_certificate(Q(3, 2), ApproxReal(Fraction(3, 2), Fraction(1, 100)))


def test_certificate_is_adjacent_one_rational():
    x = sqrt_approx(7, 40)
    for u in convergents(expand_approx(x, 15), 15):
        v = convergent_certificate(u, x)
        assert v is not None and v.num % 2 == 1 and v.den % 2 == 1
        assert adjacent_in_G(u, v)
        assert x.strictly_inside(min(u, v).fraction, max(u, v).fraction)

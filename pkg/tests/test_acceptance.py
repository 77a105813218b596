"""One test per acceptance criterion; each records a PASS/FAIL summary line."""
import itertools
import math
import re
import time
from fractions import Fraction

from fareytree.approx import convergent_certificate, ford_circle, is_strong_approximant, tangent, tangent_geometric
from fareytree.eicf import (
    EicfSeq,
    Tail,
    alternate_expansion,
    apply_generator_seq,
    convergents,
    enclosure,
    eval_finite,
    expand_approx,
    expand_rational,
    expand_via_intervals,
    tails_equivalent,
    value,
    witness_transformation,
)
from fareytree.errors import PrecisionExhausted, RationalHit, Undecidable
from fareytree.exact import INF, ApproxReal, VertexClass, classify, make_rational, sqrt_approx
from fareytree.farey import adjacent_in_F, adjacent_in_G, enumerate_inf_rationals, path_to
from fareytree.mobius import Gen, IntMobius, apply_approx, compose, decompose, eval_word, in_extended_theta, in_theta
from fareytree.render import RenderSpec, render_svg

Q = make_rational


def _surds(count=20, digits=60):
    ns = [n for n in range(2, 51) if math.isqrt(n) ** 2 != n][:count]
    return [(n, sqrt_approx(n, digits)) for n in ns]


def _convergents_past(x, max_den):
    """Convergents of x up to and including the first with denominator > max_den."""
    s = expand_approx(x, 40, strict=False)
    convs = convergents(s, len(s))
    assert convs[-1].den > max_den
    return [u for u in convs if u.den <= max_den]


def _random_terms(rng, n, lo=2, hi=8, first=True):
    terms = [rng.choice([-1, 1]) * 2 * rng.randint(lo // 2, hi // 2) for _ in range(n)]
    if first:
        terms[0] = 2 * rng.randint(-4, 4)
    return terms


def test_worked_examples(record):
    t0 = time.perf_counter()
    ok = expand_rational(Q(8, 3)) == EicfSeq((2, 2, -2))
    ok &= path_to(Q(8, 3)) == [INF, Q(2, 1), Q(5, 2), Q(8, 3)]
    one = expand_rational(Q(1, 1))
    ok &= one == EicfSeq((0,), Tail.ALT_PLUS)
    other = alternate_expansion(one)
    ok &= other == EicfSeq((2,), Tail.ALT_MINUS)
    ok &= value(one) == value(other) == Q(1, 1)
    convs = convergents(other, 50)
    ok &= all((u.num, u.den) == (n + 1, n) for n, u in enumerate(convs, start=1))
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1
    record("worked examples (8/3, expansions of 1, (n+1)/n for n<=50)", ok, f"{elapsed:.3f}s")
    assert ok


def test_roundtrip_suite(record):
    t0 = time.perf_counter()
    cases = inf_cases = failures = 0
    for b in range(1, 201):
        for a in range(-200, 201):
            if math.gcd(a, b) != 1:
                continue
            q = Q(a, b)
            s = expand_rational(q)
            cases += 1
            if classify(q) is VertexClass.INFINITY_RATIONAL:
                inf_cases += 1
                bad = not s.is_finite or eval_finite(s) != q
                bad |= any(t % 2 for t in s.terms) or 0 in s.terms[1:]
            else:
                bad = value(s) != q or value(alternate_expansion(s)) != q
            failures += bad
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and cases > 48000 and elapsed < 10
    record("roundtrip |a|,b<=200", ok, f"{cases} rationals ({inf_cases} ∞-rationals), {failures} failures, {elapsed:.2f}s")
    assert ok


def test_strong_approximants_are_convergents(record):
    t0 = time.perf_counter()
    checked = discrepancies = undecidable = 0
    for n, x in _surds():
        convs = set(_convergents_past(x, 30))
        for u in enumerate_inf_rationals(30, x.mid - 2, x.mid + 2):
            try:
                strong = is_strong_approximant(u, x)
            except Undecidable:
                undecidable += 1
                continue
            checked += 1
            discrepancies += strong != (u in convs)
    elapsed = time.perf_counter() - t0
    ok = discrepancies == 0 and undecidable == 0 and elapsed < 60
    record(
        "strong ∞-approximant <=> convergent",
        ok,
        f"{checked} candidates, {discrepancies} discrepancies, {undecidable} undecidable, {elapsed:.2f}s",
    )
    assert ok


def test_certificate_iff_convergent(record):
    checked = discrepancies = undecidable = 0
    for n, x in _surds():
        convs = set(_convergents_past(x, 30))
        for u in enumerate_inf_rationals(30, x.mid - 2, x.mid + 2):
            try:
                v = convergent_certificate(u, x)
            except Undecidable:
                undecidable += 1
                continue
            checked += 1
            if v is not None:
                # the witness must really be a 1-rational neighbour with x between
                bad = classify(v) is not VertexClass.ONE_RATIONAL or not adjacent_in_G(u, v)
                bad |= not x.strictly_inside(min(u, v).fraction, max(u, v).fraction)
                discrepancies += bad
            discrepancies += (v is not None) != (u in convs)
    ok = discrepancies == 0 and undecidable == 0
    record("certificate <=> convergent", ok, f"{checked} candidates, {discrepancies} discrepancies")
    assert ok


def test_serret_round_trip(rng, record):
    failures = []
    gens = [Gen.H, Gen.HINV, Gen.R, Gen.T]
    for trial in range(200):
        s = EicfSeq(tuple(_random_terms(rng, 30)))
        word = [rng.choice(gens) for _ in range(rng.randint(0, 6))]
        t = s
        for gen in word:
            if gen is Gen.T and not t.terms:
                continue
            t = apply_generator_seq(t, gen)
        match = tails_equivalent(s, t, 10)
        if not match.found or (match.overlap is not None and match.overlap < 10):
            failures.append((trial, "no match"))
            continue
        g = witness_transformation(s, t, match.m, match.n, match.negated)
        if not in_extended_theta(g):
            failures.append((trial, "witness outside"))
            continue
        k = len(s) - 2
        k2 = k - match.m + match.n
        src, dst = enclosure(s, k), enclosure(t, k2)
        img = apply_approx(g, src.as_approx())
        if not (dst.lo.fraction <= img.lo and img.hi <= dst.hi.fraction):
            failures.append((trial, "enclosure"))
    record("Θ̃ tail equivalence round trip (200 pairs)", not failures, f"{len(failures)} failures {failures[:3]}")
    assert not failures


def test_enclosures_shrink(rng, record):
    failures = 0
    worst = Fraction(0)
    for _ in range(100):
        s = EicfSeq(tuple(_random_terms(rng, 41)))
        widths = [enclosure(s, n).width for n in range(1, 41)]
        failures += not all(w1 > w2 for w1, w2 in zip(widths, widths[1:]))
        failures += widths[-1] >= Fraction(1, 10**6)
        worst = max(worst, widths[-1])
    record("enclosure widths decrease, < 1e-6 at n = 40", failures == 0, f"worst final width {float(worst):.2e}")
    assert failures == 0


def test_cross_algorithm_agreement(rng, record):
    compared = skipped = mismatches = 0
    while compared + skipped < 50:
        digits = "".join(rng.choice("0123456789") for _ in range(40))
        text = f"{rng.randint(-9, 9)}.{digits}"
        x = ApproxReal(Fraction(text), Fraction(1, 2 * 10**40))
        try:
            a = expand_approx(x, 20)
            b = expand_via_intervals(x, 20)
        except (PrecisionExhausted, RationalHit):
            skipped += 1
            continue
        compared += 1
        mismatches += a != b
    ok = mismatches == 0
    record("nearest-even vs nested intervals, 20 terms", ok, f"{compared} compared, {skipped} undecidable")
    assert ok


def test_theta_membership(rng, record):
    errors = 0
    odd_shift = IntMobius(1, 1, 0, 1)
    for _ in range(500):
        word = [rng.choice([Gen.S, Gen.H, Gen.HINV]) for _ in range(rng.randint(0, 20))]
        g = eval_word(word)
        errors += not in_theta(g)
        errors += eval_word(decompose(g)) != g
        twisted = compose(g, odd_shift) if rng.random() < 0.5 else compose(odd_shift, g)
        errors += in_theta(twisted)
    record("Θ membership: 500 words, 500 odd-translation twists", errors == 0, f"{errors} errors")
    assert errors == 0


def test_ford_geometry(record):
    bases = [Q(a, b) for b in range(1, 31) for a in range(0, b + 1) if math.gcd(a, b) == 1]
    circles = [ford_circle(q) for q in bases] + [ford_circle(INF)]
    errors = pairs = 0
    for c1, c2 in itertools.combinations(circles, 2):
        pairs += 1
        u, v = c1.base, c2.base
        alg = abs(u.num * v.den - v.num * u.den) == 1
        errors += tangent(c1, c2) != alg
        errors += tangent_geometric(c1, c2) != alg
    record("Ford tangency <=> |ad-bc| = 1, denominators <= 30", errors == 0, f"{pairs} pairs, {errors} errors")
    assert errors == 0


def _count(svg, cls):
    return len(re.findall(rf'<(?:path|line|ellipse) class="{cls}"', svg))


def _brute_window(spec):
    verts = [
        Q(a, b)
        for b in range(1, spec.max_denominator + 1)
        for a in range(math.floor(spec.x_min * b), math.ceil(spec.x_max * b) + 1)
        if math.gcd(a, b) == 1 and spec.x_min < Fraction(a, b) < spec.x_max
    ]
    tree = graph = 0
    for u, v in itertools.combinations(verts + [INF], 2):
        if adjacent_in_G(u, v):
            if adjacent_in_F(u, v):
                tree += 1
            else:
                graph += 1
    circles = sum(classify(q) is VertexClass.INFINITY_RATIONAL for q in verts)
    return {"tree-edge": tree, "graph-edge": graph, "ford-circle": circles}


def test_render_counts_and_determinism(record):
    specs = [
        RenderSpec(-1, 3, 8, show={"tree_edges"}),
        RenderSpec(Fraction(-1, 2), Fraction(5, 2), 6, show={"tree_edges", "graph_edges"}),
        RenderSpec(Fraction(-8, 5), Fraction(18, 5), 8, show={"ford_circles"}),
    ]
    layer = {"tree-edge": "tree_edges", "graph-edge": "graph_edges", "ford-circle": "ford_circles"}
    errors = []
    for i, spec in enumerate(specs):
        svg = render_svg(spec)
        want = _brute_window(spec)
        for cls, n in want.items():
            expected = n if layer[cls] in spec.show else 0
            if _count(svg, cls) != expected:
                errors.append((i, cls, _count(svg, cls), expected))
        if render_svg(spec) != svg:
            errors.append((i, "not deterministic"))
    record("render counts match enumeration, byte-identical reruns", not errors, f"{errors}")
    assert not errors

"""Even-integer continued fractions.

An EICF [b1, b2, ...] has even terms, all nonzero after the first. Its
convergents T_n(∞), with T_n = t_b1∘...∘t_bn and t_b(z) = b + 1/z, are the
vertices of a path in the Farey tree starting at ∞.

Infinite expansions are only represented symbolically when they end in the
alternating tail 2, -2, 2, ... (ALT_PLUS) or -2, 2, -2, ... (ALT_MINUS);
those are exactly the expansions of 1-rationals. Expansions of irrationals
are handled as finite prefixes computed from an :class:`ApproxReal`.
"""
from __future__ import annotations

import enum
import itertools
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ContractError,
    EmptySequence,
    HasInfiniteTail,
    InsufficientTerms,
    InvalidOffsets,
    InvalidSequence,
    ParseError,
    PrecisionExhausted,
    RationalHit,
)
from .exact import (
    ApproxReal,
    ExtRational,
    is_inf_rational,
    make_rational,
    nearest_even,
)
from .farey import FareyInterval, locate
from .mobius import IDENTITY, R, Gen, IntMobius, apply, compose, t_inverse, t_matrix


class Tail(enum.Enum):
    NONE = "none"
    ALT_PLUS = "alt+"  # 2, -2, 2, -2, ...
    ALT_MINUS = "alt-"  # -2, 2, -2, 2, ...

    @property
    def first(self) -> int:
        return {Tail.ALT_PLUS: 2, Tail.ALT_MINUS: -2}[self]

    @property
    def flipped(self) -> Tail:
        return {Tail.NONE: Tail.NONE, Tail.ALT_PLUS: Tail.ALT_MINUS, Tail.ALT_MINUS: Tail.ALT_PLUS}[self]


@dataclass(frozen=True)
class EicfSeq:
    """Finite terms plus an optional alternating tail.

    Tailed sequences are normalised so that the terms are nonempty and do not
    end in a value the tail could absorb: [2, -2] + ALT_PLUS is stored as
    [2] + ALT_MINUS. Equal sequences therefore compare equal.
    """

    terms: tuple[int, ...] = ()
    tail: Tail = Tail.NONE

    def __post_init__(self):
        terms = tuple(int(b) for b in self.terms)
        for i, b in enumerate(terms):
            if b % 2:
                raise InvalidSequence(f"term {b} is odd")
            if i > 0 and b == 0:
                raise InvalidSequence("only the first term may be zero")
        tail = Tail(self.tail)
        if tail is not Tail.NONE:
            if not terms:
                terms, tail = (tail.first,), tail.flipped
            while len(terms) > 1 and terms[-1] == -tail.first:
                terms, tail = terms[:-1], tail.flipped
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "tail", tail)

    @property
    def is_finite(self) -> bool:
        return self.tail is Tail.NONE

    def __len__(self) -> int:
        """Number of explicit terms (the tail is not counted)."""
        return len(self.terms)

    def term(self, i: int) -> int:
        """The i-th term, 0-based, reading into the tail when there is one."""
        if i < len(self.terms):
            return self.terms[i]
        if self.tail is Tail.NONE:
            raise IndexError(i)
        k = i - len(self.terms)
        return self.tail.first if k % 2 == 0 else -self.tail.first

    def available(self, n: int) -> bool:
        return not self.is_finite or n <= len(self.terms)

    def prefix(self, n: int) -> list[int]:
        if not self.available(n):
            raise InsufficientTerms(f"sequence has only {len(self.terms)} terms, need {n}")
        return [self.term(i) for i in range(n)]

    def iter_terms(self) -> Iterator[int]:
        yield from self.terms
        if self.tail is not Tail.NONE:
            for k in itertools.count():
                yield self.tail.first if k % 2 == 0 else -self.tail.first

    def __str__(self) -> str:
        return format_eicf(self)


EMPTY = EicfSeq()


def _pairs(terms: Iterable[int]) -> Iterator[tuple[int, int]]:
    """Yield (p_n, q_n) for n = 1, 2, ... from the three-term recurrence."""
    p0, q0 = 1, 0  # n = 0
    pm, qm = 0, 1  # n = -1
    for b in terms:
        p0, pm = b * p0 + pm, p0
        q0, qm = b * q0 + qm, q0
        yield p0, q0


def convergent_pairs(s: EicfSeq, n: int) -> list[tuple[int, int]]:
    return list(_pairs(s.prefix(n)))


def convergents(s: EicfSeq, n: int) -> list[ExtRational]:
    return [make_rational(p, q) for p, q in convergent_pairs(s, n)]


def transform(terms: Iterable[int]) -> IntMobius:
    """T = t_b1∘...∘t_bn as a matrix [[p_n, p_{n-1}], [q_n, q_{n-1}]]."""
    m = IDENTITY
    for b in terms:
        m = compose(m, t_matrix(b))
    return m


def eval_finite(s: EicfSeq) -> ExtRational:
    if not s.is_finite:
        raise HasInfiniteTail("use value() for sequences with an alternating tail")
    p, q = 1, 0
    for p, q in _pairs(s.terms):
        pass
    return make_rational(p, q)


def value(s: EicfSeq) -> ExtRational:
    """Exact value of a finite or tail-terminated sequence.

    The tail 2, -2, 2, ... has value 1 and its negation -1.
    """
    if s.is_finite:
        return eval_finite(s)
    tail_value = ExtRational(1, 1) if s.tail is Tail.ALT_PLUS else ExtRational(-1, 1)
    return apply(transform(s.terms), tail_value)


def expand_rational(q: ExtRational) -> EicfSeq:
    """Nearest-even expansion.

    ∞-rationals give their unique finite expansion. A 1-rational reaches an
    odd integer m, where the nearest even integer is tied; the canonical
    choice is m - 1 followed by 2, -2, 2, ... (alternate_expansion gives the
    other one).
    """
    if q.is_infinite:
        return EMPTY
    a, b = q.num, q.den
    terms: list[int] = []
    while True:
        if b == 1 and a % 2:
            terms.append(a - 1)
            return EicfSeq(tuple(terms), Tail.ALT_PLUS)
        e = 2 * ((a + b) // (2 * b))
        terms.append(e)
        r = a - e * b
        if r == 0:
            return EicfSeq(tuple(terms))
        # 1/(a/b - e) = b/r; |r| < b is the loop variant
        assert abs(r) < b, (a, b, e)
        a, b = (b, r) if r > 0 else (-b, -r)


def alternate_expansion(s: EicfSeq) -> EicfSeq:
    """The other expansion of the same 1-rational.

    [.., bn, 2, -2, 2, ..] and [.., bn + 2, -2, 2, -2, ..] have equal values.
    """
    if s.is_finite:
        raise InvalidSequence("a finite expansion is unique")
    *head, last = s.terms
    if s.tail is Tail.ALT_PLUS:
        return EicfSeq((*head, last + 2), Tail.ALT_MINUS)
    return EicfSeq((*head, last - 2), Tail.ALT_PLUS)


def _reciprocal(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    return 1 / hi, 1 / lo


def expand_approx(x: ApproxReal, n: int, strict: bool = True) -> EicfSeq:
    """First n terms shared by every real in x, by the nearest-even rule.

    An exact rational whose expansion ends early returns that finite
    expansion, possibly shorter than n. With ``strict=False`` running out of
    precision returns the terms decided so far instead of raising.
    """
    if n < 0:
        raise ContractError("n must be non-negative")
    lo, hi = x.lo, x.hi
    terms: list[int] = []
    while len(terms) < n:
        e = nearest_even(lo)
        # decision boundaries are the odd integers e - 1 and e + 1
        if not (e - 1 < lo and hi < e + 1):
            if not strict:
                break
            raise PrecisionExhausted(
                f"term {len(terms) + 1}: interval [{float(lo)}, {float(hi)}] meets an odd integer"
            )
        terms.append(e)
        lo, hi = lo - e, hi - e
        if lo == hi == 0:
            break
        if lo <= 0 <= hi:
            if not strict:
                break
            raise PrecisionExhausted(f"term {len(terms) + 1}: remainder interval contains 0")
        lo, hi = _reciprocal(lo, hi)
    return EicfSeq(tuple(terms))


def terms_from_path(path: list[ExtRational]) -> list[int]:
    """Recover the terms from convergents: b_n = T_{n-1}^{-1}(w_n)."""
    terms: list[int] = []
    inv = IDENTITY
    for w in path:
        b = apply(inv, w)
        assert b.den == 1 and b.num % 2 == 0, (w, b)
        terms.append(b.num)
        inv = compose(t_inverse(b.num), inv)
    return terms


def _run_length(fixed: ExtRational, moving: ExtRational, bound: Fraction) -> int:
    """How many successive mediant steps towards ``fixed`` keep ``bound``
    strictly between fixed and the new endpoint j*fixed + moving."""
    a, b, c, d = fixed.num, fixed.den, moving.num, moving.den
    q = (c - bound * d) / (bound * b - a)
    return -(-q.numerator // q.denominator) - 1  # largest j < q


def _shift(moving: ExtRational, fixed: ExtRational, j: int) -> ExtRational:
    return ExtRational(moving.num + j * fixed.num, moving.den + j * fixed.den)


def convergents_via_intervals(x: ApproxReal, n: int) -> list[ExtRational]:
    """First n convergents from the nested Farey-interval chain.

    Each interval of the chain with a 1-rational endpoint contributes its
    ∞-rational endpoint; in chain order these are the convergents. A run of
    steps towards an ∞-rational endpoint can only contribute that endpoint,
    so it is taken in one jump (a large partial quotient costs O(1)).
    """
    out: list[ExtRational] = []
    if n == 0:
        return out

    def record(u: ExtRational) -> bool:
        if not out or out[-1] != u:
            out.append(u)
        return len(out) == n

    cur = next(locate(x))
    while True:
        lo_inf, hi_inf = is_inf_rational(cur.lo), is_inf_rational(cur.hi)
        if lo_inf != hi_inf and record(cur.lo if lo_inf else cur.hi):
            return out
        med = cur.mediant
        if x.hi < med.fraction:
            fixed, moving, bound = cur.lo, cur.hi, x.hi
        elif x.lo > med.fraction:
            fixed, moving, bound = cur.hi, cur.lo, x.lo
        elif x.is_exact:
            raise RationalHit(f"x = {med} is a vertex")
        else:
            raise PrecisionExhausted(f"interval around {x.mid} straddles the mediant {med}")
        k = 1
        if is_inf_rational(fixed):
            k = max(1, _run_length(fixed, moving, bound))
            skipped = range(1, min(k, 3))
            if any(not is_inf_rational(_shift(moving, fixed, j)) for j in skipped):
                if record(fixed):
                    return out
        new = _shift(moving, fixed, k)
        cur = FareyInterval(fixed, new) if fixed < new else FareyInterval(new, fixed)


def expand_via_intervals(x: ApproxReal, n: int) -> EicfSeq:
    if n < 0:
        raise ContractError("n must be non-negative")
    return EicfSeq(tuple(terms_from_path(convergents_via_intervals(x, n))))


def negate(s: EicfSeq) -> EicfSeq:
    return EicfSeq(tuple(-b for b in s.terms), s.tail.flipped)


def apply_generator_seq(s: EicfSeq, gen: Gen | str) -> EicfSeq:
    """Act on the sequence the way a generator acts on its value."""
    gen = Gen(gen)
    if gen is Gen.R:
        return negate(s)
    if gen is Gen.T:
        if not s.terms:
            raise EmptySequence("1/z of the empty expansion is not defined here")
        if s.terms[0] == 0:
            return EicfSeq(s.terms[1:], s.tail)
        return EicfSeq((0, *s.terms), s.tail)
    if gen in (Gen.H, Gen.HINV):
        if not s.terms:
            return s
        shift = 2 if gen is Gen.H else -2
        return EicfSeq((s.terms[0] + shift, *s.terms[1:]), s.tail)
    raise ContractError(f"{gen} has no sequence action; use H, H-, R or T")


class MatchKind(enum.Enum):
    DIRECT = "Direct"
    NEGATED = "Negated"
    NONE = "NoMatchWithinBounds"


@dataclass(frozen=True)
class TailMatch:
    kind: MatchKind
    m: int | None = None
    n: int | None = None
    overlap: int | None = None  # None when the agreement is exact (symbolic tails)

    @property
    def found(self) -> bool:
        return self.kind is not MatchKind.NONE

    @property
    def exact(self) -> bool:
        return self.found and self.overlap is None

    @property
    def negated(self) -> bool:
        return self.kind is MatchKind.NEGATED


def _suffix_agreement(a: EicfSeq, b: EicfSeq, m: int, n: int) -> tuple[bool, int | None]:
    """Compare a from offset m with b from offset n.

    Returns (agree, overlap); overlap None means the suffixes agree forever.
    """
    if not a.is_finite and not b.is_finite:
        # past both explicit parts, agreement of one term fixes the phase
        length = max(len(a.terms) - m, len(b.terms) - n, 0) + 1
        ok = all(a.term(m + i) == b.term(n + i) for i in range(length))
        return ok, None
    la = len(a.terms) - m if a.is_finite else None
    lb = len(b.terms) - n if b.is_finite else None
    length = min(v for v in (la, lb) if v is not None)
    ok = all(a.term(m + i) == b.term(n + i) for i in range(length))
    return ok, length


def tails_equivalent(a: EicfSeq, b: EicfSeq, min_overlap: int) -> TailMatch:
    """Search for offsets m, n with a[m:] = ±b[n:].

    Offsets are scanned by increasing m + n, then m; Direct is tried before
    Negated. Finite comparisons need at least min_overlap compared terms
    and are evidence only; two alternating tails are compared exactly.
    """
    if min_overlap < 1:
        raise ContractError("min_overlap must be at least 1")
    ma = len(a.terms) + (0 if a.is_finite else 2)
    nb = len(b.terms) + (0 if b.is_finite else 2)
    neg_b = negate(b)
    for total in range(ma + nb - 1):
        for m in range(max(0, total - nb + 1), min(total, ma - 1) + 1):
            n = total - m
            for kind, other in ((MatchKind.DIRECT, b), (MatchKind.NEGATED, neg_b)):
                ok, overlap = _suffix_agreement(a, other, m, n)
                if ok and (overlap is None or overlap >= min_overlap):
                    return TailMatch(kind, m, n, overlap)
    return TailMatch(MatchKind.NONE)


def witness_transformation(a: EicfSeq, b: EicfSeq, m: int, n: int, negated: bool) -> IntMobius:
    """g in the extended theta group taking the value of a to the value of b,
    given a[m:] = b[n:] (or = -b[n:] when negated).

    g = t_b1∘...∘t_bn∘t_am^-1∘...∘t_a1^-1, preceded by r when negated.
    """
    if m < 0 or n < 0 or not a.available(m) or not b.available(n):
        raise InvalidOffsets(f"offsets ({m}, {n}) out of range")
    src = negate(a) if negated else a
    g = transform(b.prefix(n))
    for t in reversed(src.prefix(m)):
        g = compose(g, t_inverse(t))
    return compose(g, R) if negated else g


def enclosure(s: EicfSeq, n: int) -> FareyInterval:
    """Farey interval between the n-th convergent u and the 1-rational v
    adjacent to u and w = w_{n+1} that does not lie between them.

    All later convergents, and the value, lie in it.
    """
    if n < 1:
        raise InsufficientTerms("n must be at least 1")
    if not s.available(n + 1):
        raise InsufficientTerms(f"need {n + 1} terms, sequence has {len(s.terms)}")
    (p, q), (p1, q1) = convergent_pairs(s, n + 1)[-2:]
    u = make_rational(p, q)
    w = make_rational(p1, q1)
    lo, hi = sorted((u.fraction, w.fraction))
    for sign in (1, -1):
        v = make_rational(p + sign * p1, q + sign * q1)
        if v.is_infinite:
            continue
        if not lo < v.fraction < hi:
            break
    else:
        raise AssertionError("both common neighbours lie between u and w")
    return FareyInterval(*sorted((u, v), key=lambda r: r.fraction))


_TERM_RE = re.compile(r"^[+-]?\d+$")


def parse_eicf(text: str) -> EicfSeq:
    """Parse "[b1,...,bk]", "[b1,...,bk,(2,-2)*]" or "[b1,...,bk,(-2,2)*]"."""
    t = re.sub(r"\s+", "", text)
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError(f"EICF must be bracketed: {text!r}")
    body = t[1:-1]
    tail = Tail.NONE
    for marker, kind in (("(2,-2)*", Tail.ALT_PLUS), ("(-2,2)*", Tail.ALT_MINUS)):
        if body.endswith(marker):
            tail = kind
            body = body[: -len(marker)].rstrip(",")
            break
    parts = [p for p in body.split(",")] if body else []
    for p in parts:
        if not _TERM_RE.match(p):
            raise ParseError(f"bad term {p!r} in {text!r}")
    try:
        return EicfSeq(tuple(int(p) for p in parts), tail)
    except InvalidSequence as exc:
        raise ParseError(str(exc)) from exc


def format_eicf(s: EicfSeq) -> str:
    parts = [str(b) for b in s.terms]
    if s.tail is Tail.ALT_PLUS:
        parts.append("(2,-2)*")
    elif s.tail is Tail.ALT_MINUS:
        parts.append("(-2,2)*")
    return "[" + ",".join(parts) + "]"

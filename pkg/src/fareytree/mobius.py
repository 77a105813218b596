"""Integer Möbius transformations, the theta group and its extension.

A matrix [[a, b], [c, d]] acts by z -> (az + b)/(cz + d). M and -M act the
same way, so matrices are stored with the first nonzero of (c, d, a, b)
positive and compare equal exactly when the maps agree.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInTheta, NotUnimodular, ParseError, PoleInInterval
from .exact import INF, ApproxReal, ExtRational, make_rational


@dataclass(frozen=True)
class IntMobius:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise NotUnimodular(f"determinant {self.det} is not ±1")
        for x in (self.c, self.d, self.a, self.b):
            if x != 0:
                if x < 0:
                    for name in "abcd":
                        object.__setattr__(self, name, -getattr(self, name))
                break

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: IntMobius) -> IntMobius:
        return compose(self, other)

    def __call__(self, q: ExtRational) -> ExtRational:
        return apply(self, q)

    def inverse(self) -> IntMobius:
        # adjugate; scaling by 1/det only changes the overall sign
        return IntMobius(self.d, -self.b, -self.c, self.a)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"{self.a} {self.b} {self.c} {self.d}"


IDENTITY = IntMobius(1, 0, 0, 1)
S = IntMobius(0, -1, 1, 0)  # z -> -1/z
H = IntMobius(1, 2, 0, 1)  # z -> z + 2
HINV = IntMobius(1, -2, 0, 1)  # z -> z - 2
R = IntMobius(-1, 0, 0, 1)  # z -> -z
T = IntMobius(0, 1, 1, 0)  # z -> 1/z


class Gen(enum.Enum):
    S = "S"
    H = "H"
    HINV = "H-"
    R = "R"
    T = "T"

    @property
    def matrix(self) -> IntMobius:
        return _GEN_MATRIX[self]

    def __str__(self) -> str:
        return self.value


_GEN_MATRIX = {Gen.S: S, Gen.H: H, Gen.HINV: HINV, Gen.R: R, Gen.T: T}


def compose(g: IntMobius, h: IntMobius) -> IntMobius:
    """The map g∘h (apply h first)."""
    return IntMobius(
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


def apply(g: IntMobius, q: ExtRational) -> ExtRational:
    return make_rational(g.a * q.num + g.b * q.den, g.c * q.num + g.d * q.den)


def apply_approx(g: IntMobius, x: ApproxReal) -> ApproxReal:
    """Enclose g([lo, hi]). Refuses intervals containing the pole -d/c."""
    lo, hi = x.lo, x.hi
    if g.c != 0:
        pole = Fraction(-g.d, g.c)
        if lo <= pole <= hi:
            raise PoleInInterval(f"pole {pole} lies in [{lo}, {hi}]")

    def f(z: Fraction) -> Fraction:
        return (g.a * z + g.b) / (g.c * z + g.d)

    # monotone on any interval avoiding the pole
    y0, y1 = f(lo), f(hi)
    return ApproxReal.from_bounds(min(y0, y1), max(y0, y1))


def in_theta(g: IntMobius) -> bool:
    if g.det != 1:
        return False
    parity = (g.a % 2, g.b % 2, g.c % 2, g.d % 2)
    return parity in ((1, 0, 0, 1), (0, 1, 1, 0))


def in_extended_theta(g: IntMobius) -> bool:
    return in_theta(g) or in_theta(compose(R, g))


def eval_word(word) -> IntMobius:
    """Compose generators left to right: [g1, g2] is the map g1∘g2."""
    m = IDENTITY
    for gen in word:
        m = compose(m, Gen(gen).matrix)
    return m


def t_matrix(b: int) -> IntMobius:
    """z -> b + 1/z."""
    return IntMobius(b, 1, 1, 0)


def t_inverse(b: int) -> IntMobius:
    """z -> 1/(z - b)."""
    return IntMobius(0, 1, 1, -b)


def decompose(g: IntMobius) -> list[Gen]:
    """Write g ∈ Θ as a word in S, H, H-.

    The word is read off the EICF [b1, ..., bk] of g(∞): since
    t_b = (z -> b - 1/z)∘r and r conjugates z -> b - 1/z to z -> -b - 1/z,
    t_b1∘...∘t_bk agrees at ∞ with H^(b1/2) S H^(-b2/2) S H^(b3/2) S ...
    What remains fixes ∞, hence is a power of H.
    """
    from .eicf import expand_rational

    if not in_theta(g):
        raise NotInTheta(f"{g} is not in the theta group")
    word: list[Gen] = []
    for i, b in enumerate(expand_rational(apply(g, INF)).terms):
        k = b // 2 if i % 2 == 0 else -b // 2
        word.extend([Gen.H if k > 0 else Gen.HINV] * abs(k))
        word.append(Gen.S)
    rest = compose(eval_word(word).inverse(), g)
    # rest = ±[[1, 2k], [0, 1]]
    assert rest.c == 0 and rest.a == rest.d == 1 and rest.b % 2 == 0, rest
    k = rest.b // 2
    word.extend([Gen.H if k > 0 else Gen.HINV] * abs(k))
    return word


def parse_word(text: str) -> list[Gen]:
    try:
        return [Gen(tok) for tok in text.split()]
    except ValueError as exc:
        raise ParseError(f"bad generator word {text!r}") from exc


def format_word(word) -> str:
    return " ".join(str(Gen(g)) for g in word)


def parse_matrix(text: str) -> IntMobius:
    parts = text.split()
    if len(parts) != 4:
        raise ParseError(f"expected 'a b c d', got {text!r}")
    try:
        return IntMobius(*map(int, parts))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc

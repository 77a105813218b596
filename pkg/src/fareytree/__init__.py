"""Even-integer continued fractions as paths in the Farey tree."""

from .exact import INF, ApproxReal, ExtRational, VertexClass, classify, compare, make_rational
from .eicf import EicfSeq, Tail, convergents, eval_finite, expand_approx, expand_rational, value
from .mobius import IntMobius, Gen, apply, compose, in_extended_theta, in_theta

__all__ = [
    "INF",
    "ApproxReal",
    "ExtRational",
    "VertexClass",
    "classify",
    "compare",
    "make_rational",
    "EicfSeq",
    "Tail",
    "convergents",
    "eval_finite",
    "expand_approx",
    "expand_rational",
    "value",
    "IntMobius",
    "Gen",
    "apply",
    "compose",
    "in_extended_theta",
    "in_theta",
]

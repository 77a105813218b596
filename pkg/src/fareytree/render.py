"""SVG drawings of the Farey graph, the Farey tree, tree paths and Ford circles.

The real axis runs horizontally with the upper half-plane drawn upright.
An edge between finite vertices is a semicircle on the segment joining
them; an edge to ∞ is a vertical ray. Coordinates are printed with six
decimals so equal specs give byte-identical files.
"""
from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction

from .eicf import EicfSeq, convergents
from .exact import INF, ExtRational, is_inf_rational
from .farey import FareyEdge, enumerate_inf_rationals, g_edges

SHOW_CHOICES = ("tree_edges", "graph_edges", "ford_circles", "path")

RAY_HEIGHT = Fraction(5, 4)


@dataclass(frozen=True)
class RenderSpec:
    x_min: Fraction
    x_max: Fraction
    max_denominator: int = 8
    height_scale: Fraction = Fraction(1)
    show: frozenset = field(default_factory=lambda: frozenset({"tree_edges"}))
    path: EicfSeq | None = None
    width_px: int = 1000

    def __post_init__(self):
        object.__setattr__(self, "x_min", Fraction(self.x_min))
        object.__setattr__(self, "x_max", Fraction(self.x_max))
        object.__setattr__(self, "height_scale", Fraction(self.height_scale))
        object.__setattr__(self, "show", frozenset(self.show))
        if not self.x_min < self.x_max:
            raise ValueError("x_min must be below x_max")
        if self.max_denominator < 1:
            raise ValueError("max_denominator must be at least 1")
        if self.height_scale <= 0:
            raise ValueError("height_scale must be positive")
        unknown = self.show - set(SHOW_CHOICES)
        if unknown:
            raise ValueError(f"unknown layers: {sorted(unknown)}")
        if "path" in self.show and self.path is None:
            raise ValueError("the path layer needs a path")


def _fmt(v: Fraction | float) -> str:
    return f"{float(v):.6f}"


class _Canvas:
    def __init__(self, spec: RenderSpec):
        self.spec = spec
        self.unit = Fraction(spec.width_px) / (spec.x_max - spec.x_min)
        self.top = RAY_HEIGHT * spec.height_scale

    def x(self, v: Fraction) -> str:
        return _fmt((v - self.spec.x_min) * self.unit)

    def y(self, h: Fraction) -> str:
        return _fmt((self.top - h * self.spec.height_scale) * self.unit)

    def arc(self, p: Fraction, q: Fraction, cls: str, marker: bool = False) -> str:
        r = abs(q - p) / 2
        rx = _fmt(r * self.unit)
        ry = _fmt(r * self.spec.height_scale * self.unit)
        sweep = 1 if p < q else 0
        extra = ' marker-end="url(#arrow)"' if marker else ""
        return (
            f'<path class="{cls}" d="M {self.x(p)} {self.y(0)} '
            f'A {rx} {ry} 0 0 {sweep} {self.x(q)} {self.y(0)}"{extra}/>'
        )

    def ray(self, p: Fraction, cls: str, downward: bool = False) -> str:
        y0, y1 = self.y(0), self.y(RAY_HEIGHT)
        if downward:
            return (
                f'<line class="{cls}" x1="{self.x(p)}" y1="{y1}" x2="{self.x(p)}" y2="{y0}"'
                ' marker-end="url(#arrow)"/>'
            )
        return f'<line class="{cls}" x1="{self.x(p)}" y1="{y0}" x2="{self.x(p)}" y2="{y1}"/>'

    def edge(self, e: FareyEdge, cls: str) -> str:
        if e.v.is_infinite:
            return self.ray(e.u.fraction, cls)
        return self.arc(e.u.fraction, e.v.fraction, cls)


def window_edges(spec: RenderSpec) -> tuple[list[FareyEdge], list[FareyEdge]]:
    """(tree edges, remaining graph edges) inside the open window."""
    tree, graph = [], []
    for e in g_edges(spec.max_denominator, spec.x_min, spec.x_max):
        (tree if is_inf_rational(e.u) and is_inf_rational(e.v) else graph).append(e)
    return tree, graph


def window_ford_bases(spec: RenderSpec) -> list[ExtRational]:
    bases = enumerate_inf_rationals(spec.max_denominator, spec.x_min, spec.x_max)
    return [q for q in bases if spec.x_min < q.fraction < spec.x_max]


def path_vertices(path: EicfSeq) -> list[ExtRational]:
    return [INF, *convergents(path, len(path))]


def render_svg(spec: RenderSpec) -> str:
    c = _Canvas(spec)
    width = spec.width_px
    height = float(c.top * c.unit) + 20
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{_fmt(height)}" viewBox="0 0 {width} {_fmt(height)}">',
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
        "markerWidth=\"8\" markerHeight=\"8\" orient=\"auto-start-reverse\">"
        "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"crimson\"/></marker></defs>",
        "<style>.tree-edge{stroke:black;fill:none;stroke-width:1}"
        ".graph-edge{stroke:#aaa;fill:none;stroke-width:0.7}"
        ".ford-circle,.ford-line{stroke:#357;fill:#cde;fill-opacity:0.6}"
        ".path-edge{stroke:crimson;fill:none;stroke-width:2.5}"
        ".axis{stroke:black;stroke-width:1}</style>",
    ]
    if "ford_circles" in spec.show:
        for q in window_ford_bases(spec):
            r = Fraction(1, 2 * q.den * q.den)
            out.append(
                f'<ellipse class="ford-circle" cx="{c.x(q.fraction)}" cy="{c.y(r)}" '
                f'rx="{_fmt(r * c.unit)}" ry="{_fmt(r * spec.height_scale * c.unit)}"/>'
            )
        out.append(
            f'<rect class="ford-line" x="0" y="{c.y(RAY_HEIGHT)}" width="{width}" '
            f'height="{_fmt((RAY_HEIGHT - 1) * spec.height_scale * c.unit)}"/>'
        )
    tree, graph = window_edges(spec)
    if "graph_edges" in spec.show:
        out.extend(c.edge(e, "graph-edge") for e in graph)
    if "tree_edges" in spec.show:
        out.extend(c.edge(e, "tree-edge") for e in tree)
    if "path" in spec.show:
        verts = path_vertices(spec.path)
        for u, v in zip(verts, verts[1:]):
            if u.is_infinite:
                out.append(c.ray(v.fraction, "path-edge", downward=True))
            else:
                out.append(c.arc(u.fraction, v.fraction, "path-edge", marker=True))
    out.append(f'<line class="axis" x1="0" y1="{c.y(0)}" x2="{width}" y2="{c.y(0)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(spec: RenderSpec, path: str) -> None:
    """Write atomically: a temp file in the target directory, then rename."""
    text = render_svg(spec)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".svg.tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

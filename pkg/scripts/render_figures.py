#!/usr/bin/env python3
"""Redraw the standard pictures: the tree over the graph, the path of 8/3,
the two paths to 1, and the Ford circles at the ∞-rationals.

    python scripts/render_figures.py --out figures
"""
import argparse
import pathlib
from fractions import Fraction

from fareytree.eicf import parse_eicf
from fareytree.render import RenderSpec, write_svg

FIGURES = {
    "tree_and_graph": RenderSpec(-2, 2, 8, show={"tree_edges", "graph_edges"}),
    "path_8_3": RenderSpec(-1, 3, 8, show={"tree_edges", "path"}, path=parse_eicf("[2,2,-2]")),
    "paths_to_1_from_below": RenderSpec(
        -1, 3, 8, show={"tree_edges", "path"}, path=parse_eicf("[0,2,-2,2,-2,2]")
    ),
    "paths_to_1_from_above": RenderSpec(
        -1, 3, 8, show={"tree_edges", "path"}, path=parse_eicf("[2,-2,2,-2,2,-2]")
    ),
    "ford_circles": RenderSpec(Fraction(-8, 5), Fraction(18, 5), 8, show={"ford_circles"}),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="figures", help="output directory")
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, spec in FIGURES.items():
        target = out / f"{name}.svg"
        write_svg(spec, str(target))
        print(f"wrote {target}")


if __name__ == "__main__":
    main()

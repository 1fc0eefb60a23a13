#!/usr/bin/env python3
"""Render the rectangle decomposition of a grid window to SVG.

Writes one figure for the source family and one for the translated (tilde)
family, which covers the window minus the origin cell.
"""

import argparse

from lattice_succ import ConvergentTable, rectangles_in_window, validate_pair
from lattice_succ.svg import render_tiling_svg


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p1", type=int, default=2)
    parser.add_argument("--p2", type=int, default=3)
    parser.add_argument("--width", type=int, default=90)
    parser.add_argument("--height", type=int, default=90)
    parser.add_argument("--cell", type=int, default=12, help="pixels per grid cell")
    parser.add_argument("--prefix", default="tiling", help="output path prefix")
    args = parser.parse_args()

    table = ConvergentTable(validate_pair(args.p1, args.p2))
    for tilde, tag in ((False, "source"), (True, "tilde")):
        rects = rectangles_in_window(table, args.width, args.height, tilde=tilde)
        path = f"{args.prefix}_{args.p1}_{args.p2}_{tag}.svg"
        with open(path, "w") as fh:
            fh.write(render_tiling_svg(rects, args.width, args.height, cell=args.cell))
        print(f"wrote {path} ({len(rects)} rectangles)")


if __name__ == "__main__":
    main()

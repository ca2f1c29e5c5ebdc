"""Write SVG drawings of the three hexagon types and a deformation overlay."""

import argparse
import math
from pathlib import Path

from hexstretch.hexagon import hexagon_from_alphas_d, hexagon_from_half_longs
from hexstretch.render import RenderSpec, render


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--width", type=int, default=512)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    figures = {
        "type_i_regular": (hexagon_from_half_longs((1.0, 1.0, 1.0)), RenderSpec(args.width, labels=True)),
        "type_i_scalene": (hexagon_from_half_longs((0.8, 1.0, 1.2)), RenderSpec(args.width, leaf_counts=(7, 7))),
        "type_ii": (hexagon_from_alphas_d((math.pi / 2, math.pi / 4, math.pi / 4), 1.5), RenderSpec(args.width)),
        "type_iii": (hexagon_from_alphas_d((2 * math.pi / 3, math.pi / 6, math.pi / 6), 2.0),
                     RenderSpec(args.width)),
        "overlay_K2": (hexagon_from_half_longs((0.8, 1.0, 1.2)),
                       RenderSpec(args.width, foliation_G=False, overlay_K=2.0)),
    }
    for name, (shape, spec) in figures.items():
        path = args.out / f"{name}.svg"
        path.write_text(render(shape, spec))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

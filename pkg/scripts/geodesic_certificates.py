"""Arc-metric / Lipschitz-metric certificates along the deformation path.

For each fixture surface and each pair K1 < K2 on a grid, prints the lower
bound from glued long edges, the upper bound from the hexagon-wise maps,
their gap, and the additivity residual along consecutive grid points.
"""

import argparse
import itertools

from hexstretch.hexagon import hexagon_from_half_longs
from hexstretch.surface import arc_certificate, doubled, one_holed_torus


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--K", type=float, nargs="+", default=[1.0, 1.5, 2.0, 3.0, 5.0])
    args = ap.parse_args()
    surfaces = {
        "pants (1,1,1)": doubled(hexagon_from_half_longs((1.0, 1.0, 1.0))),
        "pants (0.8,1,1.2)": doubled(hexagon_from_half_longs((0.8, 1.0, 1.2))),
        "torus (0.9,1.1,1)": one_holed_torus(hexagon_from_half_longs((0.9, 1.1, 1.0))),
    }
    grid = sorted(args.K)
    for name, s in surfaces.items():
        print(name)
        worst_gap = 0.0
        for K1, K2 in itertools.combinations(grid, 2):
            c = arc_certificate(s, K1, K2)
            worst_gap = max(worst_gap, c.gap)
            print(f"  K1={K1:<5g} K2={K2:<5g} lower={c.lower_bound:.12f} upper={c.upper_bound:.12f} "
                  f"gap={c.gap:.1e} arc={c.arc}")
        total = arc_certificate(s, grid[0], grid[-1]).lower_bound
        steps = sum(arc_certificate(s, a, b).lower_bound for a, b in zip(grid, grid[1:]))
        print(f"  max gap {worst_gap:.1e}; additivity residual {abs(total - steps):.1e}")


if __name__ == "__main__":
    main()

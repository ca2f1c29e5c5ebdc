"""Grid sweep of the finite-difference Lipschitz constant of the coordinate-matching map.

Prints, per base hexagon and K, the largest singular value on the rectangle
and central parts of the chart, the stretch along the argmax long edge, and
a probe of the differential just above the rectangle/central seam.
"""

import argparse

from hexstretch.deform import deform, differential_norm, verify_lipschitz
from hexstretch.hexagon import FoliationCoord, hexagon_from_half_longs


def parse_triple(text):
    vals = tuple(float(x) for x in text.split(","))
    if len(vals) != 3:
        raise argparse.ArgumentTypeError("need three comma-separated half-lengths")
    return vals


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--base", type=parse_triple, action="append",
                    help="half-lengths, e.g. 0.8,1,1.2 (repeatable)")
    ap.add_argument("--K", type=float, nargs="+", default=[1.5, 2.0, 3.0])
    ap.add_argument("--grid", type=int, default=64)
    args = ap.parse_args()
    bases = args.base or [(1.0, 1.0, 1.0), (0.8, 1.0, 1.2)]

    print(f"{'base':>18} {'K':>5} {'k':>8} {'rectangle':>10} {'central':>10} {'edge':>9}  seam probe (u = 1 + t, v = 1.9)")
    for base in bases:
        shape = hexagon_from_half_longs(base)
        for K in args.K:
            fam = deform(shape, K)
            rep = verify_lipschitz(fam, args.grid)
            e = fam.base_embedding
            probe = [differential_norm(fam, e.coord_to_point(FoliationCoord(1, 1 + t, 1.9)))
                     for t in (1e-1, 1e-2, 3e-3)]
            print(f"{str(base):>18} {K:5.2f} {rep.k:8.4f} {rep.region_max['rectangle']:10.4f} "
                  f"{rep.region_max['central']:10.4f} {rep.edge_max:9.4f}  "
                  + " ".join(f"{p:.3f}" for p in probe))


if __name__ == "__main__":
    main()

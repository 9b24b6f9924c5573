"""Sphere and ball sizes for the named families at small sizes."""
from __future__ import annotations

import argparse

from projmet import family as fam
from projmet.errors import BudgetExceeded
from projmet.field import gf
from projmet.weight import weight_table

CASES = [
    ("hamming", (3,)), ("hamming", (4,)), ("phase_rotation", (3,)), ("phase_rotation", (4,)),
    ("rank", (2, 2)), ("rank", (2, 3)), ("row", (2, 2)), ("cover", (2, 2)),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args(argv)
    for q in args.q:
        f = gf(q)
        for name, params in CASES:
            try:
                T = weight_table(fam.named_family(name, f, *params))
            except BudgetExceeded:
                print(f"F_{q} {name}{params}: over budget")
                continue
            print(f"F_{q} {name}{params}: spheres={T.sphere_sizes} balls={T.ball_sizes}")


if __name__ == "__main__":
    main()

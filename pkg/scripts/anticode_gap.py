"""Compare the largest anticode in a ball with mu(t) on random families.

Prints every family where some subspace inside the radius-t ball is larger
than the best span of family points, plus the fixed 14-point example.
"""
from __future__ import annotations

import argparse
import random

from projmet import bounds
from projmet import family as fam
from projmet.field import gf
from projmet.linalg import rank_of, space
from projmet.weight import weight_table


def random_family(rng, q, N, size):
    f = gf(q)
    sp = space(f, N)
    pts = [sp.vector(int(i)) for i in sp.canonical_points()]
    while True:
        chosen = rng.sample(pts, min(size, len(pts)))
        if rank_of(f, chosen, N) == N:
            return fam.family_from_vectors(f, chosen, N=N)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--N", type=int, default=4)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    gaps = 0
    for _ in range(args.trials):
        F = random_family(rng, 2, args.N, rng.randint(args.N, 2 * args.N))
        T = weight_table(F)
        prof = bounds.mu_profile(F, T)
        for t in range(1, T.max_weight):
            res = bounds.exact_anticode_max(F, t, dim_cap=args.N)
            if res.dim > prof[t]:
                gaps += 1
                print(f"gap t={t}: anticode {res.dim} > mu {prof[t]} for {F.points}")
    print(f"{gaps} gaps in {args.trials} random families")
    F = bounds.anticode_gap_example()
    res = bounds.exact_anticode_max(F, 2, dim_cap=3)
    print(f"14-point example: anticode dim {res.dim}, mu(2) {res.mu}")


if __name__ == "__main__":
    main()

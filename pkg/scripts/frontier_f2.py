"""Pareto frontier of (a, b) embedding costs for weighted F_2^2."""
from __future__ import annotations

import argparse
import itertools

from projmet import embed
from projmet.errors import BudgetExceeded, TriangleViolated


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--top", type=int, default=3, help="largest point weight")
    ap.add_argument("--exhaustive", action="store_true", help="confirm each frontier by search")
    args = ap.parse_args(argv)
    print("t1 t2 t3  frontier  exhaustive")
    for ts in itertools.combinations_with_replacement(range(1, args.top + 1), 3):
        try:
            closed = embed.pareto_frontier_f2_dim2(*ts)
        except TriangleViolated:
            continue
        check = ""
        if args.exhaustive:
            try:
                check = "ok" if embed.exhaustive_frontier_f2_dim2(*ts) == closed else "MISMATCH"
            except BudgetExceeded:
                check = "over budget"
        print(f"{ts[0]:>2} {ts[1]:>2} {ts[2]:>2}  {closed}  {check}")


if __name__ == "__main__":
    main()

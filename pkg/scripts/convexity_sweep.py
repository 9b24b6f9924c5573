"""Exhaustive check of convexity against correction and detection normality on F_2^n."""
from __future__ import annotations

import argparse
import itertools
from collections import Counter

import numpy as np

from projmet.errors import InvalidWeight
from projmet.field import gf
from projmet.weight import WeightTable, check_metric, is_convex, normality


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--top", type=int, default=3)
    args = ap.parse_args(argv)
    f = gf(2)
    tally = Counter()
    for ws in itertools.product(range(1, args.top + 1), repeat=2 ** args.n - 1):
        T = WeightTable.from_array(f, args.n, np.array((0,) + ws))
        try:
            check_metric(T)
        except InvalidWeight:
            tally["not a metric"] += 1
            continue
        nm = normality(T)
        key = (is_convex(T), nm.correction_normal, nm.equal_detection_normal)
        tally[key] += 1
    for key, count in sorted(tally.items(), key=str):
        label = key if isinstance(key, str) else "convex=%s CN=%s EDN=%s" % key
        print(f"{label}: {count}")


if __name__ == "__main__":
    main()

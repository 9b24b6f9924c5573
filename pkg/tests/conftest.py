from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from projmet.family import family_from_vectors
from projmet.field import gf
from projmet.linalg import rank_of, unit

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def spanning_families(draw, qs=(2, 3), max_N=3, max_size=6):
    """Random spanning family; unit vectors are appended until it spans."""
    q = draw(st.sampled_from(qs))
    f = gf(q)
    N = draw(st.integers(1, max_N))
    vec = st.tuples(*[st.integers(0, q - 1)] * N)
    raw = draw(st.lists(vec, min_size=1, max_size=max_size))
    pts = [v for v in raw if any(v)]
    i = 0
    while not pts or rank_of(f, pts, N) < N:
        pts.append(unit(N, i))
        i += 1
    return family_from_vectors(f, pts, N=N)


def weight_tables_f2(n: int, top: int):
    """All weight assignments on F_2^n with values in 1..top on nonzero vectors."""
    return itertools.product(range(1, top + 1), repeat=2 ** n - 1)

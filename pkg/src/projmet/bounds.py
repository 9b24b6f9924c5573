"""Anticode function mu_F, Singleton-type bounds and anticode searches."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .budget import check_search
from .errors import PreconditionFailed
from .family import SpanningFamily, family_from_vectors
from .field import FiniteField
from .linalg import Vec, space, unit
from .parent import LinearCode, min_hamming_distance
from .weight import WeightTable, weight_table


@dataclass(frozen=True)
class MuProfile:
    family: SpanningFamily
    values: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]

    def __getitem__(self, t: int) -> int:
        return self.values[min(t, len(self.values) - 1)]


def _extend_span(sp, span: np.ndarray, multiples: np.ndarray) -> np.ndarray:
    return sp.add(span[:, None], multiples[None, :]).ravel()


def mu(F: SpanningFamily, t: int, table: WeightTable | None = None) -> tuple[int, tuple[int, ...]]:
    """Largest independent G within F whose span lies in the radius-t ball."""
    if t <= 0:
        return 0, ()
    table = table or weight_table(F)
    sp = F.space
    inside = table.weights <= t
    pidx = [sp.index(p) for p in F.points]
    mults = [sp.scale_all(i) for i in pidx]
    n = len(F)
    target = F.rank
    best: list = [0, ()]
    seen: set[bytes] = set()
    steps = [0]

    def dfs(start: int, span: np.ndarray, chosen: tuple[int, ...]) -> None:
        steps[0] += 1
        check_search(steps[0], "mu search")
        if len(chosen) > best[0]:
            best[0], best[1] = len(chosen), chosen
        if best[0] == target:
            return
        members = set(span.tolist())
        for i in range(start, n):
            if len(chosen) + (n - i) <= best[0]:
                return
            if pidx[i] in members:
                continue
            new = _extend_span(sp, span, mults[i])
            if not inside[new].all():
                continue
            new = np.unique(new)
            key = new.tobytes()
            if key in seen:
                continue
            seen.add(key)
            dfs(i + 1, new, chosen + (i,))
            if best[0] == target:
                return

    dfs(0, np.zeros(1, dtype=np.int64), ())
    return best[0], best[1]


def mu_profile(F: SpanningFamily, table: WeightTable | None = None) -> MuProfile:
    table = table or weight_table(F)
    vals, wits = [], []
    for t in range(table.max_weight + 1):
        v, w = mu(F, t, table)
        vals.append(v)
        wits.append(w)
    return MuProfile(F, tuple(vals), tuple(wits))


@dataclass(frozen=True)
class SingletonBound:
    d: int
    mu: int
    projective: int
    classical: int | Fraction


def singleton_bound(F: SpanningFamily, d: int, table: WeightTable | None = None) -> SingletonBound:
    """``|C| <= q^(N - mu(d-1))`` next to the classical ``q^(N-d+1)``."""
    if d < 1:
        raise ValueError("distance must be at least 1")
    m, _ = mu(F, d - 1, table)
    q, N = F.q, F.N
    e = N - d + 1
    classical = q ** e if e >= 0 else Fraction(1, q ** -e)
    return SingletonBound(d, m, q ** (N - m), classical)


@dataclass(frozen=True)
class AnticodeResult:
    dim: int
    witness: tuple[Vec, ...]
    mu: int
    capped: bool

    @property
    def gap(self) -> bool:
        return self.dim > self.mu


def exact_anticode_max(F: SpanningFamily, t: int, dim_cap: int = 4,
                       table: WeightTable | None = None) -> AnticodeResult:
    """Largest dimension (up to ``dim_cap``) of a subspace inside the radius-t ball.

    Bases are grown one vector at a time from canonical ball vectors in rank
    order; spans already visited are skipped.
    """
    table = table or weight_table(F)
    sp = F.space
    inside = table.weights <= t
    cands = [int(i) for i in sp.canonical_points() if inside[i]]
    mults = {i: sp.scale_all(i) for i in cands}
    best: list = [0, ()]
    seen: set[bytes] = set()
    steps = [0]

    def dfs(start: int, span: np.ndarray, chosen: tuple[int, ...]) -> None:
        steps[0] += 1
        check_search(steps[0], "anticode search")
        if len(chosen) > best[0]:
            best[0], best[1] = len(chosen), chosen
        if len(chosen) == dim_cap:
            return
        members = set(span.tolist())
        for k in range(start, len(cands)):
            if best[0] == dim_cap:
                return
            c = cands[k]
            if c in members:
                continue
            new = _extend_span(sp, span, mults[c])
            if not inside[new].all():
                continue
            new = np.unique(new)
            key = new.tobytes()
            if key in seen:
                continue
            seen.add(key)
            dfs(k + 1, new, chosen + (c,))

    dfs(0, np.zeros(1, dtype=np.int64), ())
    m, _ = mu(F, t, table)
    return AnticodeResult(best[0], tuple(sp.vector(i) for i in best[1]), m, best[0] == dim_cap)


def anticode_counterexample_family(G: LinearCode, require_distance: bool = True) -> SpanningFamily:
    """Family on F_q^(n+k) whose radius-2 ball contains the code G.

    One new coordinate e_g is added per projective point g of G, together with
    the points e_g and e_g + g, so every g has weight at most 2.  Points of
    Hamming weight at most 2 are skipped since they are already in the ball.
    With ``require_distance`` the code must have distance above 3 and
    dimension at least 3.
    """
    if require_distance and (G.dim < 3 or min_hamming_distance(G) <= 3):
        raise PreconditionFailed("need dim(G) >= 3 and minimum distance > 3")
    f = G.field
    sp = space(f, G.n)
    pts = []
    for i in sp.canonical_points():
        v = sp.vector(int(i))
        if G.contains(v) and sum(1 for c in v if c) > 2:
            pts.append(v)
    m = len(pts)
    width = G.n + m
    fam = [unit(width, i) for i in range(width)]
    for j, g in enumerate(pts):
        fam.append(tuple(g) + unit(m, j))
    return family_from_vectors(f, fam, N=width)


def anticode_gap_example(field: FiniteField | None = None) -> SpanningFamily:
    """The 14-point family in F_2^10 with a 3-dimensional 2-anticode but mu(2) = 2."""
    from .field import gf
    f = field or gf(2)
    vecs = [unit(10, i) for i in range(10)]
    extra = [(0, 1, 2, 3, 6), (0, 1, 4, 5, 7), (2, 3, 4, 5, 8), (0, 1, 2, 3, 4, 5, 9)]
    for s in extra:
        vecs.append(tuple(int(i in s) for i in range(10)))
    return family_from_vectors(f, vecs)


def phase_weight(x: Sequence[int], field: FiniteField) -> int:
    """Closed form for the phase-rotation weight: one all-ones shift may be spent."""
    hw = sum(1 for c in x if c)
    best = hw
    for c in field.nonzero:
        shifted = sum(1 for v in x if field.sub(v, c))
        best = min(best, shifted + 1)
    return best


def phase_weight_bound(N: int, q: int) -> int:
    """``ceil(N - N/q)``."""
    return -((-(N * q - N)) // q)

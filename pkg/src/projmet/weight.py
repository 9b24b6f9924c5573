"""Projective weights computed exactly by breadth-first search.

The weight of x is its distance from 0 in the Cayley graph of F_q^N whose
generators are all nonzero multiples of family points.  Tables are numpy
arrays indexed by rank index; unreachable vectors carry :data:`INF`.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Sequence

import numpy as np

from .budget import check_states
from .errors import InvalidWeight, NotInSpan, TriangleViolated
from .family import SpanningFamily, union
from .field import FiniteField
from .linalg import FqVector, Space, canonical, space

INF = 0x7FFF


@dataclass(frozen=True, eq=False)
class WeightTable:
    field: FiniteField
    N: int
    weights: np.ndarray = dc_field(repr=False)
    family: SpanningFamily | None = None

    @classmethod
    def from_array(cls, field: FiniteField, N: int, weights: Sequence[int]) -> "WeightTable":
        w = np.asarray(weights, dtype=np.int64)
        if w.shape != (field.q ** N,):
            raise InvalidWeight(f"expected {field.q ** N} weights, got {w.shape}")
        return cls(field, N, w)

    @property
    def space(self) -> Space:
        return space(self.field, self.N)

    def __getitem__(self, x) -> int:
        if isinstance(x, (int, np.integer)):
            return int(self.weights[x])
        return int(self.weights[self.space.index(tuple(x))])

    @property
    def finite(self) -> bool:
        return bool((self.weights < INF).all())

    @property
    def max_weight(self) -> int:
        fin = self.weights[self.weights < INF]
        return int(fin.max()) if fin.size else 0

    @property
    def sphere_sizes(self) -> list[int]:
        fin = self.weights[self.weights < INF]
        return [int(c) for c in np.bincount(fin, minlength=self.max_weight + 1)]

    @property
    def ball_sizes(self) -> list[int]:
        return [int(c) for c in np.cumsum(self.sphere_sizes)]

    def ball(self, t: int) -> np.ndarray:
        return np.nonzero(self.weights <= t)[0]

    def to_bytes(self) -> bytes:
        """Header ``(q, N)`` as two little-endian uint32, then uint16 weights."""
        return struct.pack("<II", self.field.q, self.N) + self.weights.astype("<u2").tobytes()

    @classmethod
    def from_bytes(cls, data: bytes, field: FiniteField) -> "WeightTable":
        q, N = struct.unpack_from("<II", data)
        if q != field.q:
            raise InvalidWeight(f"table is over F_{q}, not F_{field.q}")
        w = np.frombuffer(data, dtype="<u2", offset=8).astype(np.int64)
        return cls.from_array(field, N, w)


def _generators(F: SpanningFamily) -> np.ndarray:
    sp = F.space
    gens = set()
    for p in F.points:
        gens.update(int(i) for i in sp.scale_all(sp.index(p))[1:])
    return np.array(sorted(gens), dtype=np.int64)


def weight_table(F: SpanningFamily) -> WeightTable:
    """BFS from 0 over the Cayley graph generated by the family."""
    sp = F.space
    check_states(sp.size, "weight table")
    dist = np.full(sp.size, INF, dtype=np.int64)
    dist[0] = 0
    gens = _generators(F)
    frontier = np.zeros(1, dtype=np.int64)
    layer = 0
    chunk = max(1, (1 << 22) // max(1, len(gens)))
    while frontier.size:
        layer += 1
        found = []
        for s in range(0, frontier.size, chunk):
            nb = sp.add(frontier[s:s + chunk, None], gens[None, :]).ravel()
            nb = np.unique(nb)
            nb = nb[dist[nb] == INF]
            dist[nb] = layer
            found.append(nb)
        frontier = np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
    return WeightTable(F.field, F.N, dist, F)


def projective_weight(F: SpanningFamily, x: Sequence[int] | FqVector, table: WeightTable | None = None) -> int:
    """Weight of a single vector; meets in the middle when no table is given."""
    sp = F.space
    xi = sp.index(tuple(x))
    if table is not None:
        return table[xi]
    if xi == 0:
        return 0
    gens = _generators(F)
    seen = [{0}, {xi}]
    fronts = [np.zeros(1, dtype=np.int64), np.array([xi], dtype=np.int64)]
    dists = [0, 0]
    while fronts[0].size and fronts[1].size:
        check_states(sum(len(s) for s in seen), "bidirectional search")
        side = 0 if fronts[0].size <= fronts[1].size else 1
        nb = np.unique(sp.add(fronts[side][:, None], gens[None, :]).ravel())
        other = seen[1 - side]
        hits = [int(v) for v in nb if int(v) in other]
        dists[side] += 1
        if hits:
            return dists[0] + dists[1]
        new = [int(v) for v in nb if int(v) not in seen[side]]
        seen[side].update(new)
        fronts[side] = np.array(new, dtype=np.int64)
    return INF


def minimal_representation(F: SpanningFamily, x: Sequence[int] | FqVector,
                           table: WeightTable | None = None) -> list[tuple[int, int]]:
    """Shortest expansion ``x = sum coeff * F[index]`` as ``(coeff, index)`` pairs.

    Among all shortest expansions the lexicographically smallest index set
    wins, then the smallest coefficient tuple.
    """
    table = table or weight_table(F)
    sp = F.space
    xi = sp.index(tuple(x))
    w = table[xi]
    if w >= INF:
        raise NotInSpan("vector is outside the span of the family")
    pidx = [sp.index(p) for p in F.points]
    multiples = [sp.scale_all(i) for i in pidx]
    wts = table.weights

    def best(target: int, remaining: int, start: int):
        if remaining == 0:
            return ((), ()) if target == 0 else None
        for i in range(start, len(pidx)):
            cands = []
            for lam in range(1, F.q):
                rest = int(sp.sub(target, multiples[i][lam]))
                if wts[rest] == remaining - 1:
                    sub = best(rest, remaining - 1, i + 1)
                    if sub is not None:
                        cands.append(((i,) + sub[0], (lam,) + sub[1]))
            if cands:
                return min(cands)
        return None

    found = best(xi, w, 0)
    assert found is not None
    return [(lam, i) for i, lam in zip(*found)]


def sphere_and_ball_sizes(F: SpanningFamily | WeightTable) -> tuple[list[int], list[int]]:
    t = F if isinstance(F, WeightTable) else weight_table(F)
    return t.sphere_sizes, t.ball_sizes


def disjoint_union_spheres(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _as_table(t, field: FiniteField | None = None, N: int | None = None) -> WeightTable:
    if isinstance(t, WeightTable):
        return t
    if field is None or N is None:
        raise ValueError("raw weight arrays need field and N")
    return WeightTable.from_array(field, N, t)


def is_convex(t, field: FiniteField | None = None, N: int | None = None) -> bool:
    """Every finite nonzero weight drops by one along some unit-weight step."""
    t = _as_table(t, field, N)
    sp = t.space
    w = t.weights
    units = np.nonzero(w == 1)[0]
    idx = np.arange(sp.size, dtype=np.int64)
    need = (w > 0) & (w < INF)
    ok = np.zeros(sp.size, dtype=bool)
    for y in units:
        ok |= w[sp.sub(idx, int(y))] == w - 1
    return bool(ok[need].all())


def check_metric(t, field: FiniteField | None = None, N: int | None = None) -> None:
    """Raise :class:`InvalidWeight` unless ``t`` is a finite, positive, scale
    invariant weight satisfying the triangle inequality."""
    t = _as_table(t, field, N)
    sp = t.space
    w = t.weights
    if w[0] != 0 or (w[1:] <= 0).any() or (w >= INF).any():
        raise InvalidWeight("weights must be 0 at 0 and finite positive elsewhere")
    idx = np.arange(sp.size, dtype=np.int64)
    for lam in range(2, sp.q):
        if (w[sp.scale(lam, idx)] != w).any():
            raise InvalidWeight("weight is not scale invariant")
    check_states(sp.size * sp.size, "triangle inequality check")
    for y in range(sp.size):
        if (w[sp.add(idx, y)] > w + w[y]).any():
            raise TriangleViolated("triangle inequality fails")


@dataclass(frozen=True)
class Normality:
    correction_normal: bool
    equal_detection_normal: bool
    correction_witness: dict | None = None
    detection_witness: dict | None = None


def _tau(w: np.ndarray, sp: Space, v: int, idx: np.ndarray) -> int:
    # pairs reduce to (0, v) by translation invariance
    return int(np.maximum(w, w[sp.sub(v, idx)]).min()) - 1


def _sigma_eq(w: np.ndarray, sp: Space, v: int, idx: np.ndarray) -> int:
    d0 = w
    dv = w[sp.sub(idx, v)]
    for s in range(1, int(w[v]) + 1):
        if ((d0 <= s) & (dv <= s - 1)).any() or ((d0 <= s - 1) & (dv <= s)).any():
            continue
        if ((d0 == s) & (dv == s)).any():
            return s
    return 0


def pair_tau(t, v1: Sequence[int], v2: Sequence[int]) -> int:
    """Correction capability ``min_x max{d(v1, x), d(x, v2)} - 1``."""
    sp = t.space
    v = int(sp.sub(sp.index(tuple(v2)), sp.index(tuple(v1))))
    return _tau(t.weights, sp, v, np.arange(sp.size, dtype=np.int64))


def pair_sigma_eq(t, v1: Sequence[int], v2: Sequence[int]) -> int:
    """Equal-detection radius of a pair, 0 when none exists."""
    sp = t.space
    v = int(sp.sub(sp.index(tuple(v2)), sp.index(tuple(v1))))
    return _sigma_eq(t.weights, sp, v, np.arange(sp.size, dtype=np.int64))


def normality(t, field: FiniteField | None = None, N: int | None = None) -> Normality:
    """Correction and equal-detection normality over all pairs.

    For a translation invariant metric every pair is a translate of a pair
    ``(0, v)``, so it suffices to scan ``v``.  The equal-detection radius is
    the ``s`` where the radius ``s`` and ``s - 1`` balls around the two ends
    are disjoint but the two radius ``s`` spheres meet.
    """
    t = _as_table(t, field, N)
    sp = t.space
    w = t.weights
    idx = np.arange(sp.size, dtype=np.int64)
    cw = dw = None
    for v in range(1, sp.size):
        d = int(w[v])
        if d >= INF:
            continue
        tau = _tau(w, sp, v, idx)
        if cw is None and tau != (d - 1) // 2:
            cw = {"v1": sp.vector(0), "v2": sp.vector(v), "d": d, "tau": tau}
        sig = _sigma_eq(w, sp, v, idx)
        if dw is None and sig != 0 and d != 2 * sig:
            dw = {"v1": sp.vector(0), "v2": sp.vector(v), "d": d, "sigma_eq": sig}
        if cw is not None and dw is not None:
            break
    return Normality(cw is None, dw is None, cw, dw)


def add_vector_weight(F: SpanningFamily, f: Sequence[int], table: WeightTable | None = None) -> WeightTable:
    """Weights of ``F`` plus the new point ``f`` via the one-step recurrence.

    Only valid when ``<f>`` is not already a point of ``F``.
    """
    table = table or weight_table(F)
    c = canonical(F.field, f)
    if c is None or c in F.position:
        raise ValueError("f must be nonzero and not already a family point")
    sp = F.space
    fi = sp.index(c)
    idx = np.arange(sp.size, dtype=np.int64)
    w = table.weights.copy()
    for lam in range(1, F.q):
        shifted = table.weights[sp.sub(idx, int(sp.scale(lam, fi)))]
        w = np.minimum(w, np.where(shifted >= INF, INF, shifted + 1))
    return WeightTable(F.field, F.N, w, union(F, SpanningFamily(F.field, F.N, (c,))))


def add_vector_ball_sizes(F: SpanningFamily, f: Sequence[int], t: int,
                          table: WeightTable | None = None) -> tuple[int, bool]:
    """``|S_t| + q |B_{t-1}|`` for the family extended by ``f``.

    Exact (``tight=True``) when ``2t <= wt_F(f)``, an upper bound otherwise.
    """
    table = table or weight_table(F)
    if t == 0:
        return 1, True
    spheres = table.sphere_sizes + [0] * (t + 1)
    balls = list(np.cumsum(spheres))
    value = int(spheres[t] + F.q * balls[t - 1])
    wf = table[tuple(f)]
    return value, 2 * t <= wf


def hamming_spheres(q: int, n: int) -> list[int]:
    return [(q - 1) ** t * comb(n, t) for t in range(n + 1)]

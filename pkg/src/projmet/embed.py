"""Embedding integral scale-invariant weights into projective metric spaces.

The construction lists every projective point v_i of V with its weight t_i,
repeats coordinate i t_i times (the map rho) and takes the quotient of the
Hamming space F_q^r, r = sum t_i, by rho(ker phi) where phi sends e_i to v_i.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .budget import check_search, check_states
from .errors import BudgetExceeded, TriangleViolated, VerificationFailed
from .family import SpanningFamily
from .field import FiniteField
from .linalg import FqMatrix, Vec, left_kernel, rank_of, solve_combination, space, span_indices, unit, vecmat
from .parent import LinearCode, quotient_map
from .weight import WeightTable, check_metric, weight_table


@dataclass(frozen=True, eq=False)
class WeightedSpace:
    """F_q^N with an arbitrary weight, validated as a scale-invariant metric."""

    field: FiniteField
    N: int
    weights: np.ndarray = dc_field(repr=False)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.int64)
        object.__setattr__(self, "weights", w)
        check_metric(WeightTable.from_array(self.field, self.N, w))

    @classmethod
    def from_point_weights(cls, field: FiniteField, N: int, point_weights: Sequence[int]) -> "WeightedSpace":
        """Weights given per projective point, in rank-index order of canonical points."""
        sp = space(field, N)
        pts = sp.canonical_points()
        if len(point_weights) != len(pts):
            raise ValueError(f"expected {len(pts)} point weights")
        w = np.zeros(sp.size, dtype=np.int64)
        for idx, t in zip(pts, point_weights):
            for i in sp.scale_all(int(idx))[1:]:
                w[i] = t
        return cls(field, N, w)

    @property
    def table(self) -> WeightTable:
        return WeightTable.from_array(self.field, self.N, self.weights)

    def weight(self, x: Sequence[int]) -> int:
        return int(self.weights[space(self.field, self.N).index(tuple(x))])


@dataclass(frozen=True)
class FreeWeightedSpace:
    field: FiniteField
    reps: tuple[Vec, ...]
    point_weights: tuple[int, ...]

    def weight(self, x: Sequence[int]) -> int:
        return sum(t for c, t in zip(x, self.point_weights) if c)


def free_weighted_space(V: WeightedSpace) -> FreeWeightedSpace:
    sp = space(V.field, V.N)
    pts = sp.canonical_points()
    reps = tuple(sp.vector(int(i)) for i in pts)
    return FreeWeightedSpace(V.field, reps, tuple(int(V.weights[i]) for i in pts))


@dataclass(frozen=True)
class EmbeddingReport:
    r: int
    W_dim: int
    iota: FqMatrix
    psi: FqMatrix
    verified: bool
    n: int

    @property
    def a(self) -> int:
        return self.W_dim - self.n

    @property
    def b(self) -> int:
        return self.r - self.W_dim


def embed_into_projective(V: WeightedSpace, verify: bool = True) -> EmbeddingReport:
    f, n = V.field, V.N
    free = free_weighted_space(V)
    M = len(free.reps)
    ts = free.point_weights
    r = sum(ts)
    phi = FqMatrix(f, free.reps, n)
    ker = left_kernel(phi).rows
    offsets = np.cumsum([0] + list(ts))
    rho_rows = []
    for i in range(M):
        row = [0] * r
        for j in range(offsets[i], offsets[i + 1]):
            row[j] = 1
        rho_rows.append(tuple(row))
    sub = LinearCode(f, r, tuple(vecmat(f, k, rho_rows, r) for k in ker))
    psi = quotient_map(sub)
    W_dim = psi.ncols
    pos = {p: i for i, p in enumerate(free.reps)}
    iota_rows = [vecmat(f, rho_rows[pos[unit(n, k)]], psi.rows, W_dim) for k in range(n)]
    iota = FqMatrix(f, tuple(iota_rows), W_dim)
    ok = True
    if verify:
        ok = _verify(V, iota, psi)
        if not ok:
            raise VerificationFailed("fiber minima do not reproduce the weight")
    return EmbeddingReport(r, W_dim, iota, psi, ok, n)


def _verify(V: WeightedSpace, iota: FqMatrix, psi: FqMatrix) -> bool:
    """Check injectivity and ``wt_V(x) = min Hamming weight over psi^-1(iota(x))``."""
    f, n = V.field, V.N
    if rank_of(f, iota.rows, iota.ncols) != n:
        return False
    kernel = left_kernel(psi).rows
    r = psi.nrows
    rs = space(f, r)
    check_states(f.q ** len(kernel) * V.field.q ** n, "fiber enumeration")
    fiber0 = span_indices(rs, kernel)
    sp = space(f, n)
    for xi in range(sp.size):
        x = sp.vector(xi)
        y = vecmat(f, x, iota.rows, iota.ncols)
        y0 = solve_combination(f, psi.rows, y)
        if y0 is None:
            return False
        fiber = rs.add(rs.index(y0), fiber0)
        best = int(np.count_nonzero(rs.digits(fiber), axis=1).min())
        if best != V.weights[xi]:
            return False
    return True


# -- (a, b) embeddability ----------------------------------------------------------

MAX_EXTRA = 4


@dataclass(frozen=True)
class EmbeddingWitness:
    family: SpanningFamily
    images: tuple[Vec, ...]


def is_ab_embeddable(V: WeightedSpace, a: int, b: int) -> EmbeddingWitness | None:
    """Search families of at most n+a+b points in F_q^(n+a) and linear injections.

    Families are normalized to contain the standard basis, which loses nothing
    because embeddability is invariant under linear isometries.
    """
    if a < 0 or b < 0:
        return None
    if a + b > MAX_EXTRA:
        raise BudgetExceeded(f"a + b = {a + b} exceeds the exhaustive cap {MAX_EXTRA}")
    f, n = V.field, V.N
    m = n + a
    sp = space(f, m)
    check_states(sp.size, "target space")
    basis = [unit(m, i) for i in range(m)]
    extra_pool = [sp.vector(int(i)) for i in sp.canonical_points() if sp.vector(int(i)) not in basis]
    vs = space(f, n)
    targets = [int(V.weights[vs.index(unit(n, k))]) for k in range(n)]
    steps = 0
    for extra in range(0, b + 1):
        for chosen in itertools.combinations(extra_pool, extra):
            steps += 1
            check_search(steps, "family search")
            fam = SpanningFamily(f, m, tuple(basis) + chosen)
            w = weight_table(fam).weights
            found = _search_injection(V, sp, w, targets)
            if found is not None:
                return EmbeddingWitness(fam, found)
    return None


def _search_injection(V: WeightedSpace, sp, w: np.ndarray, targets: list[int]) -> tuple[Vec, ...] | None:
    f, n = V.field, V.N
    vs = space(f, n)
    cands = [np.nonzero(w == t)[0] for t in targets]
    all_x = vs.all_digits()
    for combo in itertools.product(*cands):
        imgs = [sp.vector(int(c)) for c in combo]
        if rank_of(f, imgs, sp.n) != n:
            continue
        ok = True
        for xi in range(1, vs.size):
            y = vecmat(f, tuple(int(c) for c in all_x[xi]), imgs, sp.n)
            if w[sp.index(y)] != V.weights[xi]:
                ok = False
                break
        if ok:
            return tuple(imgs)
    return None


def f2_dim2_space(t1: int, t2: int, t3: int) -> WeightedSpace:
    """F_2^2 with weights t1, t2, t3 on 11, 10, 01."""
    from .field import gf
    _check_triangle(t1, t2, t3)
    return WeightedSpace(gf(2), 2, np.array([0, t3, t2, t1]))


def _check_triangle(t1: int, t2: int, t3: int) -> None:
    ts = (t1, t2, t3)
    if min(ts) < 1 or any(2 * t > sum(ts) for t in ts):
        raise TriangleViolated(f"{ts} violates the triangle inequality")


def pareto_frontier_f2_dim2(t1: int, t2: int, t3: int) -> list[tuple[int, int]]:
    """Closed form: D = ceil(s/2) for s = t1+t2+t3; (D-2, s mod 2)."""
    _check_triangle(t1, t2, t3)
    if max(t1, t2, t3) > 6:
        raise ValueError("weights above 6 are outside the supported range")
    s = t1 + t2 + t3
    D = -(-s // 2)
    return [(D - 2, s % 2)]


def exhaustive_frontier_f2_dim2(t1: int, t2: int, t3: int, max_total: int = MAX_EXTRA) -> list[tuple[int, int]]:
    """Pareto-minimal (a, b) with a + b <= max_total found by exhaustive search."""
    V = f2_dim2_space(t1, t2, t3)
    ok = {(a, b) for a in range(max_total + 1) for b in range(max_total + 1 - a)
          if is_ab_embeddable(V, a, b) is not None}
    return sorted(p for p in ok if not any(o != p and o[0] <= p[0] and o[1] <= p[1] for o in ok))


def frontier_construction_f2_dim2(t1: int, t2: int, t3: int) -> EmbeddingWitness:
    """Explicit embedding realizing the closed-form frontier pair."""
    from .field import gf
    _check_triangle(t1, t2, t3)
    f = gf(2)
    s = t1 + t2 + t3
    D = -(-s // 2)
    pts = [unit(D, i) for i in range(D)]
    if s % 2:
        pts.append(tuple(int(i in (0, D - 1)) for i in range(D)))
    fam = SpanningFamily(f, D, tuple(pts))
    v2 = tuple(int(i < t2) for i in range(D))
    v3 = tuple(int(i >= D - t3) for i in range(D))
    # images of e1 = 10 (weight t2) and e2 = 01 (weight t3)
    return EmbeddingWitness(fam, (v2, v3))

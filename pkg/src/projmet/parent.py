"""Parent functions, linear codes and quotient weights.

A parent function of a family with points f_1..f_n is the linear map
F_q^n -> F_q^N sending e_i to f_i (row convention, ``x -> x @ M``).  Its kernel
is the parent code, and the projective weight is the quotient of the Hamming
weight through it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .budget import check_states
from .errors import DistanceTooSmall, NotSurjective
from .family import SpanningFamily
from .field import FiniteField
from .linalg import (FqMatrix, Space, Vec, canonical, left_kernel, rank_of, rref_rows,
                     right_kernel_rows, space, span_indices, unit, vecmat)
from .weight import INF, WeightTable

DIST_INF = INF


@dataclass(frozen=True)
class LinearCode:
    """Subspace of F_q^n stored by its canonical rref basis."""

    field: FiniteField
    n: int
    basis: tuple[Vec, ...]

    def __post_init__(self):
        rows = [tuple(int(c) for c in r) for r in self.basis]
        red, _ = rref_rows(self.field, rows, self.n) if rows else ([], [])
        object.__setattr__(self, "basis", tuple(tuple(r) for r in red))

    @classmethod
    def from_generators(cls, field: FiniteField, n: int, gens: Sequence[Sequence[int]]) -> "LinearCode":
        return cls(field, n, tuple(tuple(g) for g in gens))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.field.q ** self.dim

    @property
    def space(self) -> Space:
        return space(self.field, self.n)

    @cached_property
    def pivots(self) -> list[int]:
        return rref_rows(self.field, self.basis, self.n)[1] if self.basis else []

    def contains(self, x: Sequence[int]) -> bool:
        return rank_of(self.field, list(self.basis) + [tuple(x)], self.n) == self.dim

    def contains_code(self, other: "LinearCode") -> bool:
        return all(self.contains(b) for b in other.basis)

    @cached_property
    def codeword_indices(self) -> np.ndarray:
        return span_indices(self.space, self.basis)

    def codewords(self) -> list[Vec]:
        return [self.space.vector(int(i)) for i in self.codeword_indices]

    @cached_property
    def parity_check(self) -> tuple[Vec, ...]:
        """Rows h with ``h . c = 0`` for every codeword c."""
        if not self.basis:
            return tuple(unit(self.n, i) for i in range(self.n))
        return tuple(right_kernel_rows(self.field, self.basis, self.n))

    @cached_property
    def min_distance(self) -> int:
        return min_hamming_distance(self)

    @cached_property
    def weight_enumerator(self) -> list[int]:
        w = np.count_nonzero(self.space.digits(self.codeword_indices), axis=1)
        return [int(c) for c in np.bincount(w, minlength=self.n + 1)]

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "n": self.n, "basis": [list(b) for b in self.basis]}

    @classmethod
    def from_json(cls, data: dict) -> "LinearCode":
        return cls(FiniteField.from_json(data["field"]), int(data["n"]),
                   tuple(tuple(b) for b in data["basis"]))


def repetition_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, n, ((1,) * n,))


def hamming_code(field: FiniteField, r: int) -> LinearCode:
    """The q-ary Hamming code whose parity-check columns are all points of Gr_1(F_q^r)."""
    sp = space(field, r)
    cols = [sp.vector(i) for i in sp.canonical_points()]
    H = [tuple(c[j] for c in cols) for j in range(r)]
    n = len(cols)
    return LinearCode(field, n, tuple(right_kernel_rows(field, H, n)))


def min_hamming_distance(C: LinearCode) -> int:
    if C.dim == 0:
        return DIST_INF
    check_states(C.size, "codeword enumeration")
    w = np.count_nonzero(C.space.digits(C.codeword_indices[1:]), axis=1)
    return int(w.min())


@dataclass(frozen=True)
class ParentFunction:
    family: SpanningFamily
    matrix: FqMatrix

    @property
    def field(self) -> FiniteField:
        return self.family.field

    @property
    def n(self) -> int:
        return self.matrix.nrows

    @property
    def N(self) -> int:
        return self.matrix.ncols

    def apply(self, x: Sequence[int]) -> Vec:
        return vecmat(self.field, tuple(x), self.matrix.rows, self.N)

    def image_indices(self) -> np.ndarray:
        """Rank index of ``phi(x)`` for every x in F_q^n."""
        return space(self.field, self.n).image_indices(self.matrix.rows, space(self.field, self.N))


def parent_function(F: SpanningFamily) -> ParentFunction:
    return ParentFunction(F, FqMatrix(F.field, F.points, F.N))


def parent_code(pf: ParentFunction | SpanningFamily) -> LinearCode:
    if isinstance(pf, SpanningFamily):
        pf = parent_function(pf)
    return LinearCode(pf.field, pf.n, left_kernel(pf.matrix).rows)


def quotient_weight(wt_x: np.ndarray | WeightTable, xi: FqMatrix) -> np.ndarray:
    """``y -> min{wt_x(w) : w xi = y}``, ``INF`` on empty fibers."""
    w = wt_x.weights if isinstance(wt_x, WeightTable) else np.asarray(wt_x, dtype=np.int64)
    src = space(xi.field, xi.nrows)
    dst = space(xi.field, xi.ncols)
    check_states(src.size + dst.size, "quotient weight")
    img = src.image_indices(xi.rows, dst)
    out = np.full(dst.size, INF, dtype=np.int64)
    np.minimum.at(out, img, w)
    return out


def hamming_weight_array(field: FiniteField, n: int) -> np.ndarray:
    return space(field, n).hamming_weights()


def _coset_indices(C: LinearCode, y: int) -> np.ndarray:
    return C.space.add(y, C.codeword_indices)


def coset_leader(C: LinearCode, y: Sequence[int]) -> Vec:
    """Minimum Hamming weight element of ``y + C``; ties go to the smaller rank index."""
    sp = C.space
    check_states(C.size, "coset enumeration")
    coset = np.sort(_coset_indices(C, sp.index(tuple(y))))
    w = np.count_nonzero(sp.digits(coset), axis=1)
    return sp.vector(int(coset[int(np.argmin(w))]))


def syndromes(C: LinearCode) -> np.ndarray:
    """Syndrome of every vector of F_q^n as a rank index in F_q^(n-k)."""
    H = C.parity_check
    sp = C.space
    target = space(C.field, len(H))
    cols = [tuple(h[j] for h in H) for j in range(C.n)]
    return sp.image_indices(cols, target)


def coset_leader_weight_distribution(C: LinearCode) -> list[int]:
    """Number of cosets whose leader has Hamming weight i, for i = 0..n."""
    sp = C.space
    check_states(sp.size, "coset distribution")
    syn = syndromes(C)
    hw = sp.hamming_weights()
    best = np.full(C.field.q ** (C.n - C.dim), INF, dtype=np.int64)
    np.minimum.at(best, syn, hw)
    return [int(c) for c in np.bincount(best, minlength=C.n + 1)]


def factor_row_monomial(M: FqMatrix) -> tuple[FqMatrix, FqMatrix]:
    """Split ``M = R @ P`` with R weakly row monomial and P's rows pairwise independent."""
    f = M.field
    classes: list[Vec] = []
    pos: dict[Vec, int] = {}
    placement: list[tuple[int, int] | None] = []
    for r in M.rows:
        c = canonical(f, r)
        if c is None:
            placement.append(None)
            continue
        if c not in pos:
            pos[c] = len(classes)
            classes.append(c)
        lead = next(x for x in r if x)
        placement.append((pos[c], lead))
    k = len(classes)
    R = []
    for pl in placement:
        row = [0] * k
        if pl is not None:
            row[pl[0]] = pl[1]
        R.append(tuple(row))
    return FqMatrix(f, tuple(R), k), FqMatrix(f, tuple(classes), M.ncols)


def reduce_to_parent(xi: FqMatrix) -> ParentFunction:
    if rank_of(xi.field, xi.rows, xi.ncols) != xi.ncols:
        raise NotSurjective("map is not surjective")
    _, P = factor_row_monomial(xi)
    fam = SpanningFamily(xi.field, xi.ncols, P.rows)
    return ParentFunction(fam, P)


def quotient_map(C: LinearCode) -> FqMatrix:
    """Matrix (n x (n-k)) of a linear map with kernel C.

    Coordinates of the quotient are the non-pivot columns of C's rref; a
    vector is first reduced modulo C so its pivot entries vanish.
    """
    f = C.field
    free = [j for j in range(C.n) if j not in set(C.pivots)]
    rows = []
    for i in range(C.n):
        x = list(unit(C.n, i))
        for b, pc in zip(C.basis, C.pivots):
            if x[pc]:
                lam = x[pc]
                x = [f.sub(a, f.mul(lam, bb)) for a, bb in zip(x, b)]
        rows.append(tuple(x[j] for j in free))
    return FqMatrix(f, tuple(rows), len(free))


def family_from_code(C: LinearCode) -> SpanningFamily:
    """A family whose parent code is Hamming equivalent to C (needs d_H >= 3)."""
    if min_hamming_distance(C) <= 2:
        raise DistanceTooSmall("codes with minimum distance below 3 have no family")
    T = quotient_map(C)
    return SpanningFamily(C.field, T.ncols, tuple(canonical(C.field, r) for r in T.rows))

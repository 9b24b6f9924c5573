"""Linear isometries between projective metrics and monomial Hamming isometries.

A :class:`LinearIso` acts on column vectors, ``x -> M x``, so column j of M is
the image of e_j.  A :class:`MonomialMap` sends ``e_i`` to ``scalars[i] *
e_{perm[i]}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .budget import check_search, check_states
from .errors import NotIsometry
from .family import SpanningFamily
from .field import FiniteField
from .linalg import (FqMatrix, Vec, canonical, matvec, rank_of, solve_combination, space,
                     vadd, vscale)
from .parent import LinearCode, parent_code


@dataclass(frozen=True)
class MonomialMap:
    field: FiniteField
    perm: tuple[int, ...]
    scalars: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "MonomialMap":
        return cls(field, tuple(range(n)), (1,) * n)

    def apply(self, x: Sequence[int]) -> Vec:
        y = [0] * self.n
        for i, (s, lam) in enumerate(zip(self.perm, self.scalars)):
            y[s] = self.field.mul(lam, x[i])
        return tuple(y)

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """``self after other``."""
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        scal = tuple(self.field.mul(self.scalars[other.perm[i]], other.scalars[i]) for i in range(self.n))
        return MonomialMap(self.field, perm, scal)

    def inverse(self) -> "MonomialMap":
        perm = [0] * self.n
        scal = [0] * self.n
        for i, (s, lam) in enumerate(zip(self.perm, self.scalars)):
            perm[s] = i
            scal[s] = self.field.inv(lam)
        return MonomialMap(self.field, tuple(perm), tuple(scal))

    def matrix(self) -> FqMatrix:
        """Column convention: column i holds the image of e_i."""
        rows = [[0] * self.n for _ in range(self.n)]
        for i, (s, lam) in enumerate(zip(self.perm, self.scalars)):
            rows[s][i] = lam
        return FqMatrix(self.field, tuple(tuple(r) for r in rows), self.n)

    def map_code(self, C: LinearCode) -> LinearCode:
        return LinearCode(C.field, C.n, tuple(self.apply(b) for b in C.basis))


@dataclass(frozen=True)
class LinearIso:
    matrix: FqMatrix

    def __post_init__(self):
        M = self.matrix
        if M.nrows != M.ncols or rank_of(M.field, M.rows, M.ncols) != M.ncols:
            raise NotIsometry("matrix is not invertible")

    @property
    def field(self) -> FiniteField:
        return self.matrix.field

    @property
    def N(self) -> int:
        return self.matrix.ncols

    @classmethod
    def identity(cls, field: FiniteField, N: int) -> "LinearIso":
        return cls(FqMatrix(field, tuple(tuple(int(i == j) for j in range(N)) for i in range(N)), N))

    @classmethod
    def from_columns(cls, field: FiniteField, cols: Sequence[Sequence[int]]) -> "LinearIso":
        N = len(cols)
        return cls(FqMatrix(field, tuple(tuple(c[i] for c in cols) for i in range(N)), N))

    def apply(self, x: Sequence[int]) -> Vec:
        return matvec(self.field, self.matrix.rows, x)

    def compose(self, other: "LinearIso") -> "LinearIso":
        return LinearIso(self.matrix @ other.matrix)

    def apply_all(self) -> np.ndarray:
        """Permutation of rank indices induced on F_q^N."""
        sp = space(self.field, self.N)
        return sp.image_indices(self.matrix.transpose().rows, sp)


def is_isometry(L: LinearIso, F: SpanningFamily, G: SpanningFamily) -> bool:
    if len(F) != len(G) or F.N != L.N or G.N != L.N:
        return False
    img = {canonical(F.field, L.apply(f)) for f in F.points}
    return img == G.point_set()


def lift(L: LinearIso, F: SpanningFamily, G: SpanningFamily) -> MonomialMap:
    """The monomial map M with ``phi_G(M x) = L(phi_F(x))``."""
    if not is_isometry(L, F, G):
        raise NotIsometry("L does not map F onto G")
    perm, scal = [], []
    for f in F.points:
        y = L.apply(f)
        c = canonical(F.field, y)
        perm.append(G.position[c])
        scal.append(next(v for v in y if v))
    return MonomialMap(F.field, tuple(perm), tuple(scal))


def _collinear_signature(F: SpanningFamily) -> list[int]:
    """Per point, the number of dependent triples containing it."""
    sig = [0] * len(F)
    for a, b, c in itertools.combinations(range(len(F)), 3):
        if rank_of(F.field, [F[a], F[b], F[c]], F.N) < 3:
            sig[a] += 1
            sig[b] += 1
            sig[c] += 1
    return sig


def are_equivalent(F: SpanningFamily, G: SpanningFamily) -> LinearIso | None:
    """Find L in GL(N) with L(F) = G as point sets, or ``None``.

    Points of F are assigned in order.  An independent point branches over
    unused points of G with matching signature and a scalar; a dependent
    point has a forced image which must be an unused point of G.
    """
    if F.field != G.field or F.N != G.N or len(F) != len(G):
        return None
    if F.rank != G.rank:
        return None
    f = F.field
    sf, sg = _collinear_signature(F), _collinear_signature(G)
    if sorted(sf) != sorted(sg):
        return None
    n = len(F)
    used = [False] * n
    basis_src: list[Vec] = []
    basis_img: list[Vec] = []
    steps = [0]

    def image_of(coeffs: Vec) -> Vec:
        out = (0,) * F.N
        for c, b in zip(coeffs, basis_img):
            if c:
                out = vadd(f, out, vscale(f, c, b))
        return out

    def search(k: int) -> bool:
        steps[0] += 1
        check_search(steps[0], "equivalence search")
        if k == n:
            return True
        coeffs = solve_combination(f, basis_src, F[k]) if basis_src else None
        if coeffs is not None:
            y = canonical(f, image_of(coeffs))
            j = G.position.get(y) if y is not None else None
            if j is None or used[j] or sg[j] != sf[k]:
                return False
            used[j] = True
            if search(k + 1):
                return True
            used[j] = False
            return False
        scalars = [1] if not basis_src else list(f.nonzero)
        for j in range(n):
            if used[j] or sg[j] != sf[k]:
                continue
            if rank_of(f, basis_img + [G[j]], F.N) != len(basis_img) + 1:
                continue
            used[j] = True
            basis_src.append(F[k])
            for lam in scalars:
                basis_img.append(vscale(f, lam, G[j]))
                if search(k + 1):
                    return True
                basis_img.pop()
            basis_src.pop()
            used[j] = False
        return False

    if not search(0):
        return None
    return _map_from_basis(f, F.N, basis_src, basis_img)


def _complete(f: FiniteField, N: int, vecs: list[Vec]) -> list[Vec]:
    for j in range(N):
        e = tuple(int(i == j) for i in range(N))
        if rank_of(f, vecs + [e], N) > len(vecs):
            vecs = vecs + [e]
    return vecs


def _map_from_basis(f: FiniteField, N: int, src: Sequence[Vec], img: Sequence[Vec]) -> LinearIso:
    # non-spanning families: pair up arbitrary complements
    src, img = _complete(f, N, list(src)), _complete(f, N, list(img))
    cols = []
    for j in range(N):
        e = tuple(int(i == j) for i in range(N))
        c = solve_combination(f, list(src), e)
        out = (0,) * N
        for a, b in zip(c, img):
            if a:
                out = vadd(f, out, vscale(f, a, b))
        cols.append(out)
    return LinearIso.from_columns(f, cols)


# -- monomial searches on codes --------------------------------------------------

def _projection_keys(words: np.ndarray, cols: Sequence[int], scal: Sequence[int], f: FiniteField) -> frozenset:
    if not cols:
        return frozenset([()])
    sub = words[:, list(cols)]
    if any(s != 1 for s in scal):
        sub = f.vmul(np.asarray(scal, dtype=np.int64)[None, :], sub)
    return frozenset(map(tuple, sub.tolist()))


def _coordinate_signature(words: np.ndarray, d: int) -> list[tuple]:
    """Per coordinate, how many minimum weight codewords are nonzero there."""
    if words.shape[0] <= 1:
        return [()] * words.shape[1]
    wt = np.count_nonzero(words, axis=1)
    mins = words[wt == d]
    return [(int(np.count_nonzero(mins[:, i])),) for i in range(words.shape[1])]


def monomial_maps_between(C1: LinearCode, C2: LinearCode, first_only: bool = False) -> Iterator[MonomialMap]:
    """All monomial maps M with ``M(C1) = C2`` in lexicographic (perm, scalars) order."""
    if C1.field != C2.field or C1.n != C2.n or C1.dim != C2.dim:
        return
    f = C1.field
    n = C1.n
    check_states(C1.size + C2.size, "codeword enumeration")
    w1 = C1.space.digits(C1.codeword_indices)
    w2 = C2.space.digits(C2.codeword_indices)
    if C1.weight_enumerator != C2.weight_enumerator:
        return
    d = C1.min_distance
    s1, s2 = _coordinate_signature(w1, d), _coordinate_signature(w2, d)
    if sorted(s1) != sorted(s2):
        return
    perm: list[int] = []
    scal: list[int] = []
    taken = [False] * n
    steps = [0]

    def consistent() -> bool:
        k = len(perm)
        # image of a codeword c has entry lam_i c_i at position perm[i]
        src = _projection_keys(w1, range(k), scal, f)
        dst = _projection_keys(w2, perm, [1] * k, f)
        return src == dst

    def search() -> Iterator[MonomialMap]:
        steps[0] += 1
        check_search(steps[0], "monomial map search")
        k = len(perm)
        if k == n:
            yield MonomialMap(f, tuple(perm), tuple(scal))
            return
        for j in range(n):
            if taken[j] or s1[k] != s2[j]:
                continue
            for lam in f.nonzero:
                perm.append(j)
                scal.append(lam)
                taken[j] = True
                if consistent():
                    yield from search()
                taken[j] = False
                perm.pop()
                scal.pop()

    for m in search():
        yield m
        if first_only:
            return


def hamming_stabilizer(C: LinearCode) -> list[MonomialMap]:
    return list(monomial_maps_between(C, C))


def are_hamming_equivalent(C1: LinearCode, C2: LinearCode) -> MonomialMap | None:
    return next(monomial_maps_between(C1, C2, first_only=True), None)


def _basis_positions(F: SpanningFamily) -> list[int]:
    out: list[int] = []
    rows: list[Vec] = []
    for i, p in enumerate(F.points):
        if rank_of(F.field, rows + [p], F.N) == len(rows) + 1:
            rows.append(p)
            out.append(i)
    return out


def isometry_from_monomial(F: SpanningFamily, M: MonomialMap) -> LinearIso:
    """The L with ``L(f_i) = lam_i f_{perm(i)}`` (requires M to fix the parent code)."""
    f = F.field
    pos = _basis_positions(F)
    src = [F[i] for i in pos]
    img = [vscale(f, M.scalars[i], F[M.perm[i]]) for i in pos]
    return _map_from_basis(f, F.N, src, img)


def aut_group(F: SpanningFamily) -> list[LinearIso]:
    """Linear isometries of the projective metric, one per parent code stabilizer element."""
    C = parent_code(F)
    return [isometry_from_monomial(F, M) for M in hamming_stabilizer(C)]


def preimage_stabilizer(F: SpanningFamily, D: LinearCode) -> list[MonomialMap]:
    """Stabilizer elements of the parent code that also fix the preimage of D."""
    from .codes import preimage_code
    from .parent import parent_function
    pre = preimage_code(D, parent_function(F))
    return [M for M in hamming_stabilizer(parent_code(F)) if M.map_code(pre) == pre]


def isometries_fixing(F: SpanningFamily, D: LinearCode) -> list[LinearIso]:
    out = []
    for L in aut_group(F):
        img = LinearCode(D.field, D.n, tuple(L.apply(b) for b in D.basis))
        if img == D:
            out.append(L)
    return out

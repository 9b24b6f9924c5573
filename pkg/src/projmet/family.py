"""Spanning families of projective points and the named metrics built from them.

A family is an ordered tuple of canonical vectors (first nonzero entry 1).
Order matters: it fixes the rows of the parent matrix and every index based
bijection downstream.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterable, Sequence

from .budget import check_states
from .errors import DimensionMismatch, EmptyFamily, FieldMismatch, ShapeMismatch
from .field import FiniteField
from .linalg import FqVector, Space, Vec, canonical, rank_of, space, span_indices, unit


@dataclass(frozen=True)
class ProjectivePoint:
    field: FiniteField
    rep: Vec

    @classmethod
    def of(cls, field: FiniteField, v: Sequence[int]) -> "ProjectivePoint":
        c = canonical(field, [int(x) for x in v])
        if c is None:
            raise ValueError("the zero vector is not a projective point")
        return cls(field, c)

    @property
    def vector(self) -> FqVector:
        return FqVector(self.field, self.rep)


@dataclass(frozen=True)
class SpanningFamily:
    field: FiniteField
    N: int
    points: tuple[Vec, ...]
    merged: int = 0

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Vec:
        return self.points[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, SpanningFamily) and (self.field, self.N, self.points) == (
            other.field, other.N, other.points)

    def __hash__(self) -> int:
        return hash((self.field, self.N, self.points))

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def q(self) -> int:
        return self.field.q

    @cached_property
    def rank(self) -> int:
        return rank_of(self.field, self.points, self.N)

    @property
    def spanning(self) -> bool:
        return self.rank == self.N

    @cached_property
    def position(self) -> dict[Vec, int]:
        return {p: i for i, p in enumerate(self.points)}

    @property
    def space(self) -> Space:
        return space(self.field, self.N)

    def index_of(self, v: Sequence[int]) -> int | None:
        c = canonical(self.field, v)
        return None if c is None else self.position.get(c)

    def point_set(self) -> frozenset[Vec]:
        return frozenset(self.points)

    def vectors(self) -> list[FqVector]:
        return [FqVector(self.field, p) for p in self.points]

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "N": self.N, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, data: dict | str) -> "SpanningFamily":
        if isinstance(data, str):
            data = json.loads(data)
        f = FiniteField.from_json(data["field"])
        return family_from_vectors(f, data["points"], N=int(data["N"]))


def family_from_vectors(field: FiniteField, vectors: Iterable[Sequence[int] | FqVector],
                        N: int | None = None) -> SpanningFamily:
    """Canonicalize, drop zeros and merge proportional duplicates (first kept)."""
    pts: list[Vec] = []
    seen: set[Vec] = set()
    merged = 0
    for v in vectors:
        if isinstance(v, FqVector) and v.field != field:
            raise FieldMismatch("vector over a different field")
        v = tuple(int(x) for x in v)
        if N is None:
            N = len(v)
        elif len(v) != N:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {N}")
        c = canonical(field, v)
        if c is None:
            continue
        if c in seen:
            merged += 1
            continue
        seen.add(c)
        pts.append(c)
    if not pts:
        raise EmptyFamily("family has no nonzero vectors")
    return SpanningFamily(field, N, tuple(pts), merged)


# -- named families ------------------------------------------------------------

def hamming(field: FiniteField, N: int) -> SpanningFamily:
    return SpanningFamily(field, N, tuple(unit(N, i) for i in range(N)))


def discrete(field: FiniteField, N: int) -> SpanningFamily:
    sp = space(field, N)
    return SpanningFamily(field, N, tuple(sp.vector(i) for i in sp.canonical_points()))


def phase_rotation(field: FiniteField, N: int) -> SpanningFamily:
    return family_from_vectors(field, [unit(N, i) for i in range(N)] + [(1,) * N])


def rank_family(field: FiniteField, m: int, n: int) -> SpanningFamily:
    """Rank-one m x n matrices, flattened row-major."""
    return tensor_product(discrete(field, m), discrete(field, n))


def row_family(field: FiniteField, m: int, n: int) -> SpanningFamily:
    """Matrices supported on a single row."""
    return tensor_product(hamming(field, m), discrete(field, n))


def column_family(field: FiniteField, m: int, n: int) -> SpanningFamily:
    """Matrices supported on a single column."""
    return tensor_product(discrete(field, m), hamming(field, n))


def cover_family(field: FiniteField, m: int, n: int) -> SpanningFamily:
    return union(row_family(field, m, n), column_family(field, m, n))


def sum_rank(field: FiniteField, blocks: Sequence[tuple[int, int]]) -> SpanningFamily:
    fams = [rank_family(field, m, n) for m, n in blocks]
    out = fams[0]
    for f in fams[1:]:
        out = disjoint_union(out, f)
    return out


def tensor_rank(field: FiniteField, dims: Sequence[int]) -> SpanningFamily:
    """Rank-one tensors of the given shape, flattened in C order."""
    count = prod((field.q ** d - 1) // (field.q - 1) for d in dims)
    check_states(count, "tensor rank family")
    out = discrete(field, dims[0])
    for d in dims[1:]:
        out = tensor_product(out, discrete(field, d))
    return out


def combinatorial(field: FiniteField, N: int, index_sets: Sequence[Iterable[int]]) -> SpanningFamily:
    """Points of the coordinate subspaces spanned by each index set."""
    return ppf(field, N, [[unit(N, i) for i in s] for s in index_sets])


NAMED = {
    "hamming": (hamming, 1),
    "discrete": (discrete, 1),
    "phase_rotation": (phase_rotation, 1),
    "rank": (rank_family, 2),
    "row": (row_family, 2),
    "column": (column_family, 2),
    "cover": (cover_family, 2),
}


def named_family(name: str, field: FiniteField, *params) -> SpanningFamily:
    """Build a named family.

    ``sum_rank`` takes a list of ``(m, n)`` blocks, ``tensor_rank`` a list of
    dims and ``combinatorial`` takes ``N`` followed by a list of index sets.
    """
    if name in NAMED:
        fn, arity = NAMED[name]
        if len(params) != arity or any(int(p) < 1 for p in params):
            raise ValueError(f"{name} takes {arity} positive integer parameter(s)")
        return fn(field, *(int(p) for p in params))
    if name == "sum_rank":
        blocks = params[0] if len(params) == 1 and not isinstance(params[0], int) else params
        return sum_rank(field, [tuple(int(x) for x in b) for b in blocks])
    if name == "tensor_rank":
        dims = params[0] if len(params) == 1 and not isinstance(params[0], int) else params
        return tensor_rank(field, [int(d) for d in dims])
    if name == "combinatorial":
        N, sets = params
        return combinatorial(field, int(N), sets)
    raise ValueError(f"unknown family {name!r}")


# -- constructions -------------------------------------------------------------

def ppf(field: FiniteField, N: int, subspaces: Sequence[Sequence[Sequence[int]]]) -> SpanningFamily:
    """Union of the projective points of each generated subspace.

    Within a subspace points appear in rank-index order; subspaces are taken
    in the given order.
    """
    sp = space(field, N)
    pts: list[Vec] = []
    for gens in subspaces:
        gens = [tuple(int(x) for x in g) for g in gens]
        basis = _independent_subset(field, gens, N)
        for idx in span_indices(sp, basis):
            v = sp.vector(int(idx))
            c = canonical(field, v)
            if c is not None and c == v:
                pts.append(c)
    return family_from_vectors(field, pts, N=N)


def _independent_subset(field: FiniteField, vecs: Sequence[Vec], N: int) -> list[Vec]:
    out: list[Vec] = []
    for v in vecs:
        if rank_of(field, out + [v], N) == len(out) + 1:
            out.append(v)
    return out


def union(F: SpanningFamily, G: SpanningFamily) -> SpanningFamily:
    if F.field != G.field:
        raise FieldMismatch("families over different fields")
    if F.N != G.N:
        raise DimensionMismatch(f"ambient dimensions {F.N} and {G.N}")
    return family_from_vectors(F.field, list(F.points) + list(G.points), N=F.N)


def disjoint_union(F: SpanningFamily, G: SpanningFamily) -> SpanningFamily:
    """Family on the direct sum: F in the first block, G in the second."""
    if F.field != G.field:
        raise FieldMismatch("families over different fields")
    za, zb = (0,) * G.N, (0,) * F.N
    pts = [p + za for p in F.points] + [zb + p for p in G.points]
    return SpanningFamily(F.field, F.N + G.N, tuple(pts))


def _kron(field: FiniteField, a: Sequence[int], sa: tuple[int, int], b: Sequence[int],
          sb: tuple[int, int]) -> Vec:
    (r1, c1), (r2, c2) = sa, sb
    out = [0] * (r1 * r2 * c1 * c2)
    width = c1 * c2
    for i1, j1, i2, j2 in itertools.product(range(r1), range(c1), range(r2), range(c2)):
        out[(i1 * r2 + i2) * width + j1 * c2 + j2] = field.mul(a[i1 * c1 + j1], b[i2 * c2 + j2])
    return tuple(out)


def tensor_product(F: SpanningFamily, G: SpanningFamily, kind: str = "outer",
                   shape_f: tuple[int, int] | None = None,
                   shape_g: tuple[int, int] | None = None) -> SpanningFamily:
    """All canonical ``f (x) g``.

    ``outer`` flattens the matrix ``f^T g`` row-major.  ``kronecker`` treats
    each point as a matrix of the given shape and flattens the Kronecker
    product.
    """
    if F.field != G.field:
        raise FieldMismatch("families over different fields")
    check_states(len(F) * len(G), "tensor product")
    f = F.field
    if kind == "outer":
        pts = [tuple(f.mul(x, y) for x in a for y in b) for a in F.points for b in G.points]
        N = F.N * G.N
    elif kind == "kronecker":
        shape_f = shape_f or (1, F.N)
        shape_g = shape_g or (1, G.N)
        if shape_f[0] * shape_f[1] != F.N or shape_g[0] * shape_g[1] != G.N:
            raise ShapeMismatch("matrix shapes do not match the family dimensions")
        pts = [_kron(f, a, shape_f, b, shape_g) for a in F.points for b in G.points]
        N = F.N * G.N
    else:
        raise ValueError(f"unknown tensor kind {kind!r}")
    return family_from_vectors(f, pts, N=N)

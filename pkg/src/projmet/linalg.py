"""Dense exact linear algebra over F_q.

Vectors are tuples of element encodings.  The rank index of a vector is its
base-q positional value with coordinate 0 most significant, so ordering by
rank index is lexicographic order on coordinates.

:class:`Space` does bulk arithmetic on rank indices with numpy; everything
that enumerates F_q^N goes through it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .budget import check_states
from .errors import DependentBasis, DimensionMismatch, FieldMismatch
from .field import FiniteField

Vec = tuple[int, ...]


@dataclass(frozen=True)
class FqVector:
    field: FiniteField
    coords: Vec

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def _same(self, other: "FqVector") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if len(other) != len(self):
            raise DimensionMismatch(f"length {len(self)} vs {len(other)}")

    def __add__(self, other: "FqVector") -> "FqVector":
        self._same(other)
        return FqVector(self.field, vadd(self.field, self.coords, other.coords))

    def __sub__(self, other: "FqVector") -> "FqVector":
        self._same(other)
        return FqVector(self.field, vsub(self.field, self.coords, other.coords))

    def __neg__(self) -> "FqVector":
        return FqVector(self.field, tuple(self.field.neg(c) for c in self.coords))

    def scale(self, lam: int) -> "FqVector":
        return FqVector(self.field, vscale(self.field, int(lam), self.coords))

    @property
    def rank_index(self) -> int:
        return rank_index(self.field.q, self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        return f"FqVector({list(self.coords)})"


@dataclass(frozen=True)
class FqMatrix:
    field: FiniteField
    rows: tuple[Vec, ...]
    ncols: int

    def __post_init__(self):
        rows = tuple(tuple(int(c) for c in r) for r in self.rows)
        if any(len(r) != self.ncols for r in rows):
            raise DimensionMismatch("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, field: FiniteField, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "FqMatrix":
        rows = [tuple(int(c) for c in r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionMismatch("cannot infer width of an empty matrix")
            ncols = len(rows[0])
        return cls(field, tuple(rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def row(self, i: int) -> FqVector:
        return FqVector(self.field, self.rows[i])

    def transpose(self) -> "FqMatrix":
        cols = tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols))
        return FqMatrix(self.field, cols, len(self.rows))

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        if other.field != self.field:
            raise FieldMismatch("matrix fields differ")
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        out = [vecmat(self.field, r, other.rows, other.ncols) for r in self.rows]
        return FqMatrix(self.field, tuple(out), other.ncols)

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


# -- tuple-level helpers -------------------------------------------------------

def vadd(f: FiniteField, a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(f.add(x, y) for x, y in zip(a, b))


def vsub(f: FiniteField, a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(f.sub(x, y) for x, y in zip(a, b))


def vscale(f: FiniteField, lam: int, a: Sequence[int]) -> Vec:
    return tuple(f.mul(lam, x) for x in a)


def vecmat(f: FiniteField, x: Sequence[int], rows: Sequence[Sequence[int]], ncols: int) -> Vec:
    """Row vector times matrix: ``sum_i x_i * rows[i]``."""
    acc = [0] * ncols
    for xi, r in zip(x, rows):
        if xi:
            for j, c in enumerate(r):
                if c:
                    acc[j] = f.add(acc[j], f.mul(xi, c))
    return tuple(acc)


def matvec(f: FiniteField, rows: Sequence[Sequence[int]], x: Sequence[int]) -> Vec:
    """Matrix times column vector."""
    out = []
    for r in rows:
        s = 0
        for c, xi in zip(r, x):
            if c and xi:
                s = f.add(s, f.mul(c, xi))
        out.append(s)
    return tuple(out)


def dot(f: FiniteField, a: Sequence[int], b: Sequence[int]) -> int:
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s = f.add(s, f.mul(x, y))
    return s


def canonical(f: FiniteField, v: Sequence[int]) -> Vec | None:
    """Scale ``v`` so its first nonzero entry is 1; ``None`` for the zero vector."""
    for c in v:
        if c:
            return vscale(f, f.inv(c), v) if c != 1 else tuple(v)
    return None


def leading_scalar(v: Sequence[int]) -> int:
    return next((c for c in v if c), 0)


def rank_index(q: int, v: Sequence[int]) -> int:
    idx = 0
    for c in v:
        idx = idx * q + c
    return idx


def from_rank_index(q: int, n: int, idx: int) -> Vec:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        idx, out[i] = divmod(idx, q)
    return tuple(out)


def unit(n: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


# -- elimination ---------------------------------------------------------------

def rref_rows(f: FiniteField, rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; pivot is the leftmost nonzero column, first row."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = f.inv(m[r][c])
        if inv != 1:
            m[r] = [f.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                lam = m[i][c]
                m[i] = [f.sub(x, f.mul(lam, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_of(f: FiniteField, rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return len(rref_rows(f, rows, ncols if ncols is not None else len(rows[0]))[1])


def right_kernel_rows(f: FiniteField, rows: Sequence[Sequence[int]], ncols: int) -> list[Vec]:
    """Basis of ``{x : M x = 0}``, one vector per free column, in canonical rref."""
    red, pivots = rref_rows(f, rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for r, pc in enumerate(pivots):
            x[pc] = f.neg(red[r][fc])
        basis.append(tuple(x))
    if not basis:
        return []
    red_k, _ = rref_rows(f, basis, ncols)
    return [tuple(r) for r in red_k]


def rref_rank_kernel(M: FqMatrix) -> tuple[FqMatrix, int, FqMatrix]:
    """Return ``(rref(M), rank(M), K)`` where K's rows span ``{x : M x^T = 0}``."""
    red, piv = rref_rows(M.field, M.rows, M.ncols)
    ker = right_kernel_rows(M.field, M.rows, M.ncols)
    return (FqMatrix(M.field, tuple(tuple(r) for r in red), M.ncols), len(piv),
            FqMatrix(M.field, tuple(ker), M.ncols))


def left_kernel(M: FqMatrix) -> FqMatrix:
    """Rows span ``{x : x M = 0}`` (length ``M.nrows``)."""
    cols = list(zip(*M.rows)) if M.ncols and M.rows else []
    ker = right_kernel_rows(M.field, cols, M.nrows) if cols else \
        [unit(M.nrows, i) for i in range(M.nrows)]
    return FqMatrix(M.field, tuple(ker), M.nrows)


def solve_combination(f: FiniteField, vectors: Sequence[Sequence[int]], x: Sequence[int]) -> Vec | None:
    """Coefficients ``c`` with ``sum c_i v_i = x``, or ``None`` if impossible.

    When the vectors are dependent some solution is returned (free
    coefficients set to zero).
    """
    n = len(x)
    if not vectors:
        return () if not any(x) else None
    k = len(vectors)
    aug = [[vectors[j][i] for j in range(k)] + [x[i]] for i in range(n)]
    red, piv = rref_rows(f, aug, k + 1)
    if k in piv:
        return None
    c = [0] * k
    for r, pc in enumerate(piv):
        c[pc] = red[r][k]
    return tuple(c)


def in_span(vectors: Sequence[FqVector] | Sequence[Sequence[int]], x: FqVector | Sequence[int],
            field: FiniteField | None = None) -> bool:
    """True iff ``x`` is a linear combination of ``vectors`` (empty span is {0})."""
    f = field or getattr(x, "field", None) or getattr(vectors[0], "field")
    for v in vectors:
        if isinstance(v, FqVector) and v.field != f:
            raise FieldMismatch("vectors over different fields")
    return solve_combination(f, [tuple(v) for v in vectors], tuple(x)) is not None


def enumerate_subspace(basis: Sequence[FqVector], n: int | None = None,
                       field: FiniteField | None = None) -> Iterator[FqVector]:
    """Yield every vector of the span exactly once, in rank-index order."""
    if basis:
        field = basis[0].field
        n = len(basis[0])
    if field is None or n is None:
        raise ValueError("empty basis needs explicit field and length")
    rows = [tuple(b) for b in basis]
    if rank_of(field, rows, n) != len(rows):
        raise DependentBasis("basis vectors are linearly dependent")
    sp = space(field, n)
    for idx in span_indices(sp, rows):
        yield FqVector(field, sp.vector(int(idx)))


def span_indices(sp: "Space", rows: Sequence[Sequence[int]]) -> np.ndarray:
    """Sorted rank indices of the span of ``rows`` (duplicates removed)."""
    check_states(sp.q ** len(rows), "subspace enumeration")
    idx = np.zeros(1, dtype=np.int64)
    for r in rows:
        ridx = sp.index(r)
        multiples = sp.scale_all(ridx)
        idx = sp.add(idx[:, None], multiples[None, :]).ravel()
    return np.unique(idx)


# -- bulk arithmetic on rank indices -------------------------------------------

class Space:
    """F_q^N addressed by rank index."""

    def __init__(self, field: FiniteField, n: int):
        self.field = field
        self.n = n
        self.q = field.q
        self.size = self.q ** n
        self.powers = np.array([self.q ** (n - 1 - i) for i in range(n)], dtype=np.int64)
        self._digits: np.ndarray | None = None

    def index(self, v: Sequence[int]) -> int:
        return rank_index(self.q, v)

    def vector(self, idx: int) -> Vec:
        return from_rank_index(self.q, self.n, int(idx))

    def digits(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self.powers) % self.q

    def indices(self, digits) -> np.ndarray:
        return np.asarray(digits, dtype=np.int64) @ self.powers if self.n else \
            np.zeros(np.asarray(digits).shape[:-1], dtype=np.int64)

    def all_digits(self) -> np.ndarray:
        if self._digits is None:
            check_states(self.size)
            self._digits = self.digits(np.arange(self.size, dtype=np.int64))
        return self._digits

    def add(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.q == 2:
            return a ^ b
        return self.indices(self.field.vadd(self.digits(a), self.digits(b)))

    def neg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.field.p == 2:
            return a
        return self.indices(self.field.vneg(self.digits(a)))

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def scale(self, lam: int, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if lam == 1:
            return a
        return self.indices(self.field.vmul(lam, self.digits(a)))

    def scale_all(self, a: int) -> np.ndarray:
        """Indices of ``lam * a`` for every ``lam`` in F_q, in element order."""
        return np.array([int(self.scale(lam, a)) if lam else 0 for lam in range(self.q)], dtype=np.int64)

    def hamming_weights(self) -> np.ndarray:
        return np.count_nonzero(self.all_digits(), axis=1).astype(np.int64)

    def image_indices(self, rows: Sequence[Sequence[int]], target: "Space") -> np.ndarray:
        """Index of ``x @ rows`` in ``target`` for every x in this space."""
        check_states(self.size)
        digs = self.all_digits()
        acc = np.zeros((self.size, target.n), dtype=np.int64)
        for i, r in enumerate(rows):
            r = np.asarray(r, dtype=np.int64)
            if not r.any():
                continue
            acc = self.field.vadd(acc, self.field.vmul(digs[:, i:i + 1], r[None, :]))
        return target.indices(acc)

    def canonical_points(self) -> np.ndarray:
        """Rank indices of canonical nonzero vectors (first nonzero entry 1), ascending."""
        digs = self.all_digits()
        nz = digs != 0
        has = nz.any(axis=1)
        first = np.where(has, np.argmax(nz, axis=1), 0)
        lead = digs[np.arange(self.size), first]
        return np.nonzero(has & (lead == 1))[0].astype(np.int64)


@lru_cache(maxsize=64)
def space(field: FiniteField, n: int) -> Space:
    return Space(field, n)


def all_vectors(field: FiniteField, n: int) -> Iterator[Vec]:
    return itertools.product(range(field.q), repeat=n)

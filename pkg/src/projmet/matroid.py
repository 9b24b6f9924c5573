"""Linear matroids of families, extended families and the ball-size formula
driven by the extended matroid."""
from __future__ import annotations

import itertools
from math import comb
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .budget import check_search, check_states
from .errors import BudgetExceeded
from .family import SpanningFamily
from .field import FiniteField
from .linalg import Vec, canonical, dot, rank_of, right_kernel_rows, space


@dataclass(eq=False)
class LinearMatroid:
    """Matroid on the columns ``vectors``; subsets are bitmasks or iterables."""

    field: FiniteField
    N: int
    vectors: tuple[Vec, ...]
    _rank_cache: dict = dc_field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.vectors)

    def rank(self, subset) -> int:
        mask = subset if isinstance(subset, int) else _mask(subset)
        r = self._rank_cache.get(mask)
        if r is None:
            rows = [self.vectors[i] for i in _members(mask)]
            r = rank_of(self.field, rows, self.N) if rows else 0
            self._rank_cache[mask] = r
        return r

    @property
    def full_rank(self) -> int:
        return self.rank((1 << self.size) - 1)

    def independent(self, subset) -> bool:
        mask = subset if isinstance(subset, int) else _mask(subset)
        return self.rank(mask) == bin(mask).count("1")


def _mask(items) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def _members(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def matroid_of(F: SpanningFamily) -> LinearMatroid:
    return LinearMatroid(F.field, F.N, F.points)


def independent(M: LinearMatroid, S) -> bool:
    return M.independent(S)


def circuits(M: LinearMatroid, max_size: int | None = None) -> list[tuple[int, ...]]:
    """Minimal dependent sets of size at most ``max_size``, by size then lexicographically."""
    max_size = M.size if max_size is None else min(max_size, M.size)
    total = sum(comb(M.size, k) for k in range(1, max_size + 1))
    check_search(total, "circuit enumeration")
    found: list[int] = []
    out: list[tuple[int, ...]] = []
    for k in range(1, max_size + 1):
        for S in itertools.combinations(range(M.size), k):
            m = _mask(S)
            if any(c & m == c for c in found):
                continue
            if M.rank(m) < k:
                found.append(m)
                out.append(S)
    return out


def _hyperplane_normals(F: SpanningFamily) -> list[Vec]:
    """Canonical normal vectors of the hyperplanes spanned by N-1 independent points."""
    f, N = F.field, F.N
    check_search(comb(len(F), N - 1), "hyperplane enumeration")
    normals: dict[Vec, None] = {}
    for S in itertools.combinations(F.points, N - 1):
        if rank_of(f, list(S), N) != N - 1:
            continue
        ker = right_kernel_rows(f, list(S), N)
        normals.setdefault(canonical(f, ker[0]), None)
    return list(normals)


def extended_family(F: SpanningFamily) -> SpanningFamily:
    """All points that are a 1-dimensional intersection of hyperplanes spanned by F.

    A point p qualifies exactly when the hyperplanes through p have normals of
    rank N-1, which lets us test every point of the projective space once.
    Output order is ascending rank index.
    """
    f, N = F.field, F.N
    if N <= 2:
        return SpanningFamily(f, N, tuple(sorted(F.points, key=lambda p: space(f, N).index(p))))
    normals = _hyperplane_normals(F)
    sp = space(f, N)
    check_states(sp.size, "extended family")
    pts = []
    for idx in sp.canonical_points():
        p = sp.vector(int(idx))
        through = [h for h in normals if dot(f, h, p) == 0]
        if len(through) >= N - 1 and rank_of(f, through, N) == N - 1:
            pts.append(p)
    return SpanningFamily(f, N, tuple(pts))


def _circuit_masks(M: LinearMatroid) -> set[int]:
    return {_mask(c) for c in circuits(M, M.full_rank + 1)}


def matroid_isomorphic(M1: LinearMatroid, M2: LinearMatroid, fixed: Sequence[tuple[set, set]] = ()
                       ) -> list[int] | None:
    """A bijection ``psi`` (as a list) mapping circuits onto circuits, or ``None``.

    ``fixed`` lists pairs ``(A, B)`` of index sets that psi must map onto each
    other.
    """
    if M1.size != M2.size or M1.full_rank != M2.full_rank:
        return None
    c1, c2 = _circuit_masks(M1), _circuit_masks(M2)
    if sorted(bin(c).count("1") for c in c1) != sorted(bin(c).count("1") for c in c2):
        return None

    def signature(cs: set[int], i: int, colours: tuple) -> tuple:
        sizes = sorted(bin(c).count("1") for c in cs if c >> i & 1)
        return (tuple(sizes),) + colours

    def colour(i: int, side: int) -> tuple:
        return tuple(i in pair[side] for pair in fixed)

    s1 = [signature(c1, i, colour(i, 0)) for i in range(M1.size)]
    s2 = [signature(c2, j, colour(j, 1)) for j in range(M2.size)]
    if sorted(s1) != sorted(s2):
        return None
    n = M1.size
    psi = [-1] * n
    used = [False] * n
    by_elem1 = [[c for c in c1 if c >> i & 1] for i in range(n)]
    steps = [0]

    def ok(k: int) -> bool:
        # circuits of M1 inside {0..k} must map to circuits of M2, and back
        dom = (1 << (k + 1)) - 1
        img = 0
        for i in range(k + 1):
            img |= 1 << psi[i]
        for c in by_elem1[k]:
            if c & dom == c:
                if _image(c, psi) not in c2:
                    return False
        inv = {psi[i]: i for i in range(k + 1)}
        j = psi[k]
        for c in c2:
            if c >> j & 1 and c & img == c:
                if _mask(inv[x] for x in _members(c)) not in c1:
                    return False
        return True

    def search(k: int) -> bool:
        steps[0] += 1
        check_search(steps[0], "matroid isomorphism search")
        if k == n:
            return True
        for j in range(n):
            if used[j] or s1[k] != s2[j]:
                continue
            psi[k] = j
            used[j] = True
            if ok(k) and search(k + 1):
                return True
            used[j] = False
            psi[k] = -1
        return False

    return list(psi) if search(0) else None


def _image(mask: int, psi: Sequence[int]) -> int:
    out = 0
    for i in _members(mask):
        out |= 1 << psi[i]
    return out


def extended_matroid_equivalent(F: SpanningFamily, G: SpanningFamily) -> list[int] | None:
    """Isomorphism of extended matroids that carries F onto G.

    Returned as a list indexed by positions in ``extended_family(F)`` giving
    positions in ``extended_family(G)``.
    """
    if len(F) != len(G) or F.field != G.field:
        return None
    Fb, Gb = extended_family(F), extended_family(G)
    inF = {i for i, p in enumerate(Fb.points) if p in F.position}
    inG = {j for j, p in enumerate(Gb.points) if p in G.position}
    return matroid_isomorphic(matroid_of(Fb), matroid_of(Gb), fixed=[(inF, inG)])


def ball_sizes_via_extended_matroid(F: SpanningFamily, t: int, max_sets: int = 12) -> int:
    """|B_t| by inclusion-exclusion over independent t-subsets of F.

    Each term is q raised to the size of a maximal independent subset of the
    extended family lying in the intersection of the chosen spans.
    """
    q = F.q
    if t >= F.rank:
        return q ** F.rank
    Fb = extended_family(F)
    Mb = matroid_of(Fb)
    M = matroid_of(F)
    Mt = [S for S in itertools.combinations(range(len(F)), t) if M.independent(S)]
    if len(Mt) > max_sets:
        raise BudgetExceeded(f"{len(Mt)} independent {t}-subsets exceed the limit {max_sets}")
    # membership of each extended point in each span <I>
    in_span = []
    for S in Mt:
        base = [F[i] for i in S]
        mask = 0
        for j, p in enumerate(Fb.points):
            if rank_of(F.field, base + [p], F.N) == len(base):
                mask |= 1 << j
        in_span.append(mask)
    total = 0
    for r in range(1, len(Mt) + 1):
        for H in itertools.combinations(range(len(Mt)), r):
            mask = in_span[H[0]]
            for h in H[1:]:
                mask &= in_span[h]
            total += (-1) ** (r + 1) * q ** Mb.rank(mask)
    return total

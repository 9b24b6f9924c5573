from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import spanning_families
from projmet import family as fam
from projmet.errors import NotIsometry
from projmet.field import gf
from projmet.isometry import (LinearIso, MonomialMap, are_equivalent, are_hamming_equivalent, aut_group,
                              hamming_stabilizer, is_isometry, isometries_fixing, lift,
                              monomial_maps_between, preimage_stabilizer)
from projmet.linalg import FqMatrix, canonical, rank_of
from projmet.parent import LinearCode, hamming_code, parent_code, repetition_code
from projmet.weight import weight_table


def gl(f, N):
    """Every invertible N x N matrix, by brute force."""
    for entries in itertools.product(range(f.q), repeat=N * N):
        rows = tuple(tuple(entries[i * N:(i + 1) * N]) for i in range(N))
        if rank_of(f, rows, N) == N:
            yield LinearIso(FqMatrix(f, rows, N))


def brute_equivalent(F, G) -> bool:
    if len(F) != len(G) or F.N != G.N:
        return False
    return any(is_isometry(L, F, G) for L in gl(F.field, F.N))


def preserves_weights(L, F, G) -> bool:
    TF, TG = weight_table(F), weight_table(G)
    perm = L.apply_all()
    return bool((TG.weights[perm] == TF.weights).all())


@given(spanning_families(qs=(2, 3), max_N=2, max_size=4), spanning_families(qs=(2, 3), max_N=2, max_size=4))
def test_equivalence_matches_brute_force(F, G):
    if F.field != G.field:
        return
    L = are_equivalent(F, G)
    assert (L is not None) == brute_equivalent(F, G)
    if L is not None:
        assert is_isometry(L, F, G)
        assert preserves_weights(L, F, G)


@given(spanning_families(qs=(2,), max_N=3, max_size=5), spanning_families(qs=(2,), max_N=3, max_size=5))
def test_equivalence_matches_brute_force_f2_dim3(F, G):
    L = are_equivalent(F, G)
    assert (L is not None) == brute_equivalent(F, G)


@given(spanning_families(max_N=3, max_size=5), st.data())
def test_transported_family_is_equivalent(F, data):
    mats = list(gl(F.field, F.N)) if F.q ** (F.N * F.N) <= 512 else [LinearIso.identity(F.field, F.N)]
    L = data.draw(st.sampled_from(mats))
    pts = [canonical(F.field, L.apply(p)) for p in F.points]
    G = fam.family_from_vectors(F.field, data.draw(st.permutations(pts)), N=F.N)
    W = are_equivalent(F, G)
    assert W is not None and is_isometry(W, F, G)
    M = lift(W, F, G)
    assert M.map_code(parent_code(F)) == parent_code(G)


@given(spanning_families(qs=(2, 3), max_N=3, max_size=5), spanning_families(qs=(2, 3), max_N=3, max_size=5))
def test_equivalence_iff_parent_codes_equivalent(F, G):
    if F.field != G.field or F.N != G.N or len(F) != len(G):
        return
    linear = are_equivalent(F, G) is not None
    hamming = are_hamming_equivalent(parent_code(F), parent_code(G)) is not None
    assert linear == hamming


@given(spanning_families(qs=(2, 3), max_N=3, max_size=5))
def test_aut_group_preserves_weights_and_is_closed(F):
    G = aut_group(F)
    mats = {L.matrix.rows for L in G}
    assert len(mats) == len(G)
    for L in G:
        assert is_isometry(L, F, F)
        assert preserves_weights(L, F, F)
    for A, B in itertools.islice(itertools.product(G, G), 50):
        assert A.compose(B).matrix.rows in mats


@given(st.sampled_from([2, 3]), st.integers(1, 4), st.data())
def test_monomial_algebra(q, n, data):
    f = gf(q)
    def draw():
        perm = tuple(data.draw(st.permutations(range(n))))
        scal = tuple(data.draw(st.integers(1, q - 1)) for _ in range(n))
        return MonomialMap(f, perm, scal)
    A, B = draw(), draw()
    x = tuple(data.draw(st.integers(0, q - 1)) for _ in range(n))
    assert A.compose(B).apply(x) == A.apply(B.apply(x))
    assert A.inverse().apply(A.apply(x)) == x
    cols = A.matrix().transpose().rows
    for i in range(n):
        assert cols[i] == A.apply(tuple(int(i == j) for j in range(n)))


def test_stabilizer_orders():
    f = gf(2)
    assert len(aut_group(fam.phase_rotation(f, 2))) == 6
    assert len(hamming_stabilizer(repetition_code(f, 3))) == 6
    assert len(hamming_stabilizer(hamming_code(f, 3))) == 168
    assert len(hamming_stabilizer(LinearCode(f, 4, ()))) == 24
    assert len(aut_group(fam.hamming(gf(3), 2))) == 8


def test_stabilizer_matches_brute_force():
    f = gf(3)
    C = LinearCode(f, 3, ((1, 1, 0),))
    brute = 0
    for perm in itertools.permutations(range(3)):
        for scal in itertools.product((1, 2), repeat=3):
            if MonomialMap(f, perm, scal).map_code(C) == C:
                brute += 1
    assert len(hamming_stabilizer(C)) == brute
    maps = list(monomial_maps_between(C, C))
    assert maps == sorted(maps, key=lambda m: (m.perm, m.scalars))


def test_row_column_equivalent():
    f = gf(2)
    L = are_equivalent(fam.row_family(f, 2, 2), fam.column_family(f, 2, 2))
    assert L is not None
    assert preserves_weights(L, fam.row_family(f, 2, 2), fam.column_family(f, 2, 2))


def test_inequivalent_examples():
    f7 = gf(7)
    A = fam.family_from_vectors(f7, [(1, 0), (0, 1), (1, 1), (1, 2)])
    B = fam.family_from_vectors(f7, [(1, 0), (0, 1), (1, 1), (1, 3)])
    assert are_equivalent(A, B) is None
    f = gf(2)
    assert are_hamming_equivalent(LinearCode(f, 3, ((1, 1, 0),)), LinearCode(f, 3, ((1, 1, 1),))) is None


def test_lift_rejects_non_isometry():
    f = gf(2)
    F = fam.phase_rotation(f, 2)
    with pytest.raises(NotIsometry):
        lift(LinearIso.identity(f, 2), F, fam.hamming(f, 2))
    with pytest.raises(NotIsometry):
        LinearIso(FqMatrix(f, ((1, 1), (1, 1)), 2))


def test_subcode_stabilizers():
    f = gf(2)
    F = fam.phase_rotation(f, 2)
    D = LinearCode(f, 2, ((1, 1),))
    stab, fix = preimage_stabilizer(F, D), isometries_fixing(F, D)
    assert len(stab) == len(fix) == 2

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import spanning_families
from projmet import family as fam
from projmet.codes import (MetricCode, ball_cover_counts, image_code, is_perfect, min_distance_F,
                           perfect_transfer, preimage_code)
from projmet.errors import PreconditionFailed
from projmet.field import gf
from projmet.parent import LinearCode, hamming_code, parent_code, parent_function, repetition_code
from projmet.weight import INF, weight_table


def brute_perfect(C, T):
    """Radius t whose balls around codewords partition the space, by direct counting."""
    words = C.codewords()
    sp = T.space
    for t in range(T.max_weight + 1):
        cover = {}
        for c in words:
            for i in T.ball(t):
                v = tuple(C.field.add(a, b) for a, b in zip(c, sp.vector(int(i))))
                cover[v] = cover.get(v, 0) + 1
        if len(cover) == sp.size and all(n == 1 for n in cover.values()):
            return t
    return None


@st.composite
def family_and_code(draw):
    F = draw(spanning_families(qs=(2, 3), max_N=3, max_size=5))
    k = draw(st.integers(0, F.N))
    gens = draw(st.lists(st.tuples(*[st.integers(0, F.q - 1)] * F.N), min_size=k, max_size=k))
    return F, LinearCode(F.field, F.N, tuple(gens))


@given(family_and_code())
def test_perfect_matches_brute_force(args):
    F, C = args
    T = weight_table(F)
    got = is_perfect(C, T)
    if C.dim == 0:
        assert got == T.max_weight
        return
    assert got == brute_perfect(C, T)


@given(family_and_code())
def test_min_distance_is_min_weight(args):
    F, C = args
    T = weight_table(F)
    d = min_distance_F(C, T)
    ws = [T[c] for c in C.codewords() if any(c)]
    assert d == (min(ws) if ws else INF)


@given(spanning_families(qs=(2, 3), max_N=3, max_size=5), st.data())
def test_transfer_agrees_under_hypothesis(F, data):
    pf = parent_function(F)
    pc = parent_code(pf)
    n = len(F)
    extra = data.draw(st.lists(st.tuples(*[st.integers(0, F.q - 1)] * n), max_size=2))
    C_hat = LinearCode(F.field, n, pc.basis + tuple(extra))
    rep = perfect_transfer(C_hat, pf)
    if rep.hypothesis_holds:
        assert rep.agree
    img = image_code(C_hat, pf).code
    expect = {pf.apply(c) for c in C_hat.codewords()}
    assert set(img.codewords()) == expect


@given(family_and_code())
def test_preimage_code(args):
    F, C = args
    pf = parent_function(F)
    pre = preimage_code(C, pf)
    members = set(C.codewords())
    expect = {y for y in oracles.all_vectors(F.q, len(F)) if pf.apply(y) in members}
    assert set(pre.codewords()) == expect


def test_hamming_code_through_phase_rotation():
    f = gf(2)
    pf = parent_function(fam.phase_rotation(f, 6))
    rep = perfect_transfer(hamming_code(f, 3), pf)
    assert rep.hypothesis_holds and rep.agree
    assert rep.projective_perfect == 1 == rep.hamming_perfect
    assert rep.projective_distance == 3 == rep.hamming_distance
    mc = image_code(hamming_code(f, 3), pf)
    assert mc.distance == 3 and mc.is_perfect() == 1
    assert (ball_cover_counts(mc.code, mc.table, 1) == 1).all()


def test_transfer_precondition():
    f = gf(2)
    pf = parent_function(fam.phase_rotation(f, 3))
    with pytest.raises(PreconditionFailed):
        perfect_transfer(LinearCode(f, 4, ((1, 1, 0, 0),)), pf)


def test_even_distance_is_not_perfect():
    f = gf(2)
    C = repetition_code(f, 4)
    assert is_perfect(C, fam.hamming(f, 4)) is None
    assert is_perfect(repetition_code(f, 3), fam.hamming(f, 3)) == 1


def test_metric_code_wrapper():
    f = gf(3)
    mc = MetricCode(LinearCode(f, 2, ((1, 1),)), fam.hamming(f, 2))
    assert mc.distance == 2 and mc.is_perfect() is None

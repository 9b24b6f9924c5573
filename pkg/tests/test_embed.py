from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from projmet import embed
from projmet.errors import BudgetExceeded, InvalidWeight, TriangleViolated
from projmet.family import family_from_vectors
from projmet.field import gf
from projmet.linalg import space, vecmat
from projmet.weight import weight_table


def metric_point_weights(q, N, rng_weights):
    """Point weights that pass the metric check, else None."""
    try:
        return embed.WeightedSpace.from_point_weights(gf(q), N, rng_weights)
    except InvalidWeight:
        return None


@st.composite
def weighted_spaces(draw, shapes=((2, 2), (3, 2), (2, 3)), top=4):
    q, N = draw(st.sampled_from(shapes))
    npts = (q ** N - 1) // (q - 1)
    ws = draw(st.lists(st.integers(1, top), min_size=npts, max_size=npts))
    V = metric_point_weights(q, N, ws)
    if V is None:
        # repair by flattening towards the max, which always satisfies the triangle inequality
        V = embed.WeightedSpace.from_point_weights(gf(q), N, [max(ws)] * npts)
    return V


def check_embedding(V, rep):
    f, n = V.field, V.N
    sp = space(f, n)
    # BFS on the family spanned by psi's rows is an oracle independent of the fiber scan
    W = family_from_vectors(f, [r for r in rep.psi.rows if any(r)], N=rep.W_dim)
    T = weight_table(W)
    for xi in range(sp.size):
        x = sp.vector(xi)
        assert T[vecmat(f, x, rep.iota.rows, rep.W_dim)] == V.weights[xi]


@given(weighted_spaces())
def test_embedding_reproduces_weight(V):
    rep = embed.embed_into_projective(V)
    assert rep.verified
    free = embed.free_weighted_space(V)
    assert rep.r == sum(free.point_weights)
    assert rep.a == sum(t - 1 for t in free.point_weights)
    assert rep.b == len(free.reps) - V.N
    if V.field.q ** rep.W_dim <= 2 ** 16:
        check_embedding(V, rep)


@given(weighted_spaces(shapes=((2, 2),), top=3))
def test_fiber_minimum_by_brute_force(V):
    rep = embed.embed_into_projective(V)
    f = V.field
    sp = space(f, V.N)
    best = {}
    for y in oracles.all_vectors(f.q, rep.r):
        img = vecmat(f, y, rep.psi.rows, rep.W_dim)
        w = oracles.hamming(y)
        if img not in best or w < best[img]:
            best[img] = w
    for xi in range(sp.size):
        assert best[vecmat(f, sp.vector(xi), rep.iota.rows, rep.W_dim)] == V.weights[xi]


@pytest.mark.parametrize("ts", [(1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 2, 2), (2, 2, 3), (3, 2, 2)])
def test_frontier_closed_form_matches_exhaustive(ts):
    closed = embed.pareto_frontier_f2_dim2(*ts)
    assert embed.exhaustive_frontier_f2_dim2(*ts) == closed
    (a, b), = closed
    assert sum(ts) - 4 == 2 * a - b


@pytest.mark.parametrize("ts", [(1, 1, 1), (1, 1, 2), (2, 2, 3), (2, 2, 2), (2, 1, 1), (3, 3, 3), (2, 3, 3)])
def test_frontier_construction_is_isometric(ts):
    wit = embed.frontier_construction_f2_dim2(*ts)
    (a, b), = embed.pareto_frontier_f2_dim2(*ts)
    F = wit.family
    assert F.N == 2 + a and len(F) == F.N + b
    T = weight_table(F)
    t1, t2, t3 = ts
    v2, v3 = wit.images
    assert (T[v2], T[v3], T[tuple(x ^ y for x, y in zip(v2, v3))]) == (t2, t3, t1)


def test_ab_witness_is_isometric():
    V = embed.f2_dim2_space(2, 2, 2)
    assert embed.is_ab_embeddable(V, 0, 2) is None
    wit = embed.is_ab_embeddable(V, 1, 0)
    T = weight_table(wit.family)
    f = V.field
    sp = space(f, 2)
    for xi in range(sp.size):
        y = vecmat(f, sp.vector(xi), wit.images, wit.family.N)
        assert T[y] == V.weights[xi]


def test_hamming_embedding_costs():
    rep = embed.embed_into_projective(embed.f2_dim2_space(2, 1, 1))
    assert (rep.r, rep.W_dim, rep.a, rep.b) == (4, 3, 1, 1)


def test_rejections():
    with pytest.raises(TriangleViolated):
        embed.f2_dim2_space(1, 1, 3)
    with pytest.raises(InvalidWeight):
        embed.WeightedSpace(gf(3), 1, np.array([0, 1, 2]))
    with pytest.raises(BudgetExceeded):
        embed.is_ab_embeddable(embed.f2_dim2_space(1, 1, 1), 3, 2)
    with pytest.raises(ValueError):
        embed.pareto_frontier_f2_dim2(7, 7, 7)


def test_free_space_of_discrete_metric_is_hamming():
    V = embed.WeightedSpace.from_point_weights(gf(3), 2, [1, 1, 1, 1])
    free = embed.free_weighted_space(V)
    for x in itertools.product(range(3), repeat=4):
        assert free.weight(x) == oracles.hamming(x)

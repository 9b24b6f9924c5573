from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import spanning_families
from projmet import bounds
from projmet import family as fam
from projmet.codes import min_distance_F
from projmet.errors import PreconditionFailed
from projmet.field import gf
from projmet.isometry import are_equivalent
from projmet.parent import LinearCode, hamming_code, min_hamming_distance, parent_code
from projmet.weight import weight_table


def brute_mu(F, t, T):
    best = 0
    for k in range(1, F.N + 1):
        for S in itertools.combinations(F.points, k):
            if oracles.rank(F.field, S, F.N) == k and all(T[v] <= t for v in oracles.span(F.field, S, F.N)):
                best = k
    return best


def brute_anticode(F, t, T):
    ball = [v for v in oracles.all_vectors(F.q, F.N) if any(v) and T[v] <= t]
    best = 0
    for k in range(1, F.N + 1):
        for S in itertools.combinations(ball, k):
            if oracles.rank(F.field, S, F.N) == k and all(T[v] <= t for v in oracles.span(F.field, S, F.N)):
                best = k
                break
    return best


@given(spanning_families(qs=(2, 3), max_N=3, max_size=5))
def test_mu_matches_brute_force(F):
    T = weight_table(F)
    prof = bounds.mu_profile(F, T)
    for t in range(T.max_weight + 1):
        assert prof[t] == brute_mu(F, t, T)
        idx = prof.witnesses[t]
        assert len(idx) == prof[t]
    assert prof[T.max_weight] == F.N
    assert list(prof.values) == sorted(prof.values)


@given(spanning_families(qs=(2, 3), max_N=3, max_size=5))
def test_anticode_at_least_mu(F):
    T = weight_table(F)
    for t in range(1, T.max_weight + 1):
        res = bounds.exact_anticode_max(F, t, dim_cap=F.N, table=T)
        assert res.dim == brute_anticode(F, t, T)
        assert res.dim >= res.mu


@given(spanning_families(qs=(2, 3), max_N=3, max_size=5), st.data())
def test_singleton_holds_for_random_codes(F, data):
    k = data.draw(st.integers(1, F.N))
    gens = data.draw(st.lists(st.tuples(*[st.integers(0, F.q - 1)] * F.N), min_size=k, max_size=k))
    C = LinearCode(F.field, F.N, tuple(gens))
    if C.dim == 0:
        return
    T = weight_table(F)
    d = min_distance_F(C, T)
    sb = bounds.singleton_bound(F, d, T)
    assert C.size <= sb.projective


@given(spanning_families(qs=(2, 3), max_N=3, max_size=5))
def test_mu_is_isometry_invariant(F):
    pts = list(reversed(F.points))
    G = fam.family_from_vectors(F.field, pts, N=F.N)
    assert are_equivalent(F, G) is not None
    assert bounds.mu_profile(F).values == bounds.mu_profile(G).values


def test_hamming_profile_and_singleton():
    F = fam.hamming(gf(3), 4)
    assert bounds.mu_profile(F).values == (0, 1, 2, 3, 4)
    for d in range(1, 5):
        sb = bounds.singleton_bound(F, d)
        assert sb.projective == sb.classical == 3 ** (4 - d + 1)


def test_rank_singleton():
    f = gf(2)
    for m, n, d in ((2, 2, 2), (2, 3, 2)):
        sb = bounds.singleton_bound(fam.rank_family(f, m, n), d)
        assert sb.projective == 2 ** (max(m, n) * (min(m, n) - d + 1))
    prof = bounds.mu_profile(fam.rank_family(f, 2, 3))
    assert prof.values == (0, 3, 6)


def test_classical_value_can_be_fractional():
    sb = bounds.singleton_bound(fam.phase_rotation(gf(2), 3), 3)
    assert sb.classical == 2 and sb.projective == 1
    assert bounds.singleton_bound(fam.hamming(gf(2), 1), 3).classical == Fraction(1, 2)
    with pytest.raises(ValueError):
        bounds.singleton_bound(fam.hamming(gf(2), 2), 0)


@pytest.mark.parametrize("q,N", [(2, 3), (2, 5), (3, 3), (3, 4), (4, 3)])
def test_phase_weight_closed_form(q, N):
    f = gf(q)
    T = weight_table(fam.phase_rotation(f, N))
    for x in oracles.all_vectors(q, N):
        assert bounds.phase_weight(x, f) == T[x]
    assert T.max_weight == bounds.phase_weight_bound(N, q)


def test_phase_profile_is_piecewise():
    for q, N in ((2, 4), (2, 5), (3, 4), (3, 5)):
        prof = bounds.mu_profile(fam.phase_rotation(gf(q), N)).values
        cut = bounds.phase_weight_bound(N, q)
        assert prof == tuple(t if t < cut else N for t in range(cut + 1))


def test_anticode_gap_example():
    F = bounds.anticode_gap_example()
    assert (F.N, len(F)) == (10, 14)
    assert min_hamming_distance(parent_code(F)) == 6
    res = bounds.exact_anticode_max(F, 2, dim_cap=3)
    assert res.dim == 3 and res.mu == 2 and res.gap and res.capped


def test_general_construction():
    f = gf(2)
    G = LinearCode(f, 6, ((1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1)))
    with pytest.raises(PreconditionFailed):
        bounds.anticode_counterexample_family(G)
    F = bounds.anticode_counterexample_family(G, require_distance=False)
    assert are_equivalent(F, bounds.anticode_gap_example()) is not None
    S = LinearCode(f, 7, hamming_code(f, 3).parity_check)
    F2 = bounds.anticode_counterexample_family(S)
    assert (len(F2), F2.N) == (21, 14)
    res = bounds.exact_anticode_max(F2, 2, dim_cap=3)
    assert res.dim == 3 and res.mu == 2

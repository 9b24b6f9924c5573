"""Reference examples with known answers, replayed by ``projmet verify``.

Each check is a zero-argument callable returning ``True`` on success.  Checks
that sample randomly take their generator from :func:`run_goldens`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from . import bounds, codes, embed, family as fam, isometry, matroid, parent, weight
from .field import gf
from .linalg import space, unit


@dataclass(frozen=True)
class Golden:
    name: str
    check: Callable[[random.Random], bool]


def _phase_figure(_r) -> bool:
    F = fam.phase_rotation(gf(2), 4)
    T = weight.weight_table(F)
    rep = weight.minimal_representation(F, (1, 1, 0, 1), T)
    return T[(1, 1, 0, 1)] == 2 and rep == [(1, 2), (1, F.position[(1, 1, 1, 1)])]


def _phase_family(_r) -> bool:
    vecs = [unit(4, i) for i in range(4)] + [(1, 1, 1, 1)]
    return len(fam.family_from_vectors(gf(2), vecs)) == 5


def _discrete_weight(_r) -> bool:
    T = weight.weight_table(fam.discrete(gf(2), 3))
    return bool((T.weights[1:] == 1).all())


def _all_ones_weight(_r) -> bool:
    return all(weight.projective_weight(fam.phase_rotation(gf(q), 3), (1, 1, 1)) == 1 for q in (2, 3, 5))


def _cover_from_ppf(_r) -> bool:
    f = gf(2)
    rows = [[0, 1], [2, 3]]
    cols = [[0, 2], [1, 3]]
    return fam.combinatorial(f, 4, rows + cols).point_set() == fam.cover_family(f, 2, 2).point_set()


def _row_union_column(_r) -> bool:
    f = gf(2)
    u = fam.union(fam.row_family(f, 2, 2), fam.column_family(f, 2, 2))
    return u.point_set() == fam.cover_family(f, 2, 2).point_set()


def _tensor_products(_r) -> bool:
    f = gf(3)
    a = fam.tensor_product(fam.discrete(f, 2), fam.discrete(f, 3)).point_set() == \
        fam.rank_family(f, 2, 3).point_set()
    b = fam.tensor_product(fam.hamming(f, 2), fam.discrete(f, 3)).point_set() == \
        fam.row_family(f, 2, 3).point_set()
    return a and b


def _small_spheres(_r) -> bool:
    f = gf(2)
    for F in (fam.phase_rotation(f, 6), fam.discrete(f, 3), fam.rank_family(f, 2, 2)):
        T = weight.weight_table(F)
        d = parent.min_hamming_distance(parent.parent_code(F))
        n = len(F)
        if any(T.sphere_sizes[t] != comb(n, t) for t in range((d - 1) // 2 + 1)):
            return False
    return True


def _sphere_convolution(_r) -> bool:
    f = gf(2)
    A, B = fam.phase_rotation(f, 4), fam.hamming(f, 1)
    direct = weight.weight_table(fam.disjoint_union(A, B)).sphere_sizes
    conv = weight.disjoint_union_spheres(weight.weight_table(A).sphere_sizes,
                                         weight.weight_table(B).sphere_sizes)
    return direct == conv


def _projective_convex(_r) -> bool:
    f = gf(3)
    return all(weight.is_convex(weight.weight_table(F))
               for F in (fam.phase_rotation(f, 3), fam.rank_family(f, 2, 2), fam.discrete(f, 2)))


def _doubled_hamming(_r) -> bool:
    f = gf(2)
    w = 2 * space(f, 2).hamming_weights()
    T = weight.WeightTable.from_array(f, 2, w)
    nm = weight.normality(T)
    return (not weight.is_convex(T) and not nm.correction_normal and nm.equal_detection_normal
            and weight.pair_tau(T, (0, 0), (1, 0)) == 1)


def _modified_f2_4(_r) -> bool:
    f = gf(2)
    w = space(f, 4).hamming_weights().copy()
    w[15] = 3
    T = weight.WeightTable.from_array(f, 4, w)
    nm = weight.normality(T)
    return (nm.correction_normal and not nm.equal_detection_normal
            and weight.pair_sigma_eq(T, (0, 0, 0, 0), (1, 1, 1, 1)) == 2 and T[15] == 3)


def _phase_parent_repetition(_r) -> bool:
    f = gf(2)
    return all(parent.parent_code(fam.phase_rotation(f, N)) == parent.repetition_code(f, N + 1)
               for N in range(2, 7))


def _quotient_is_projective(_r) -> bool:
    for F in (fam.phase_rotation(gf(3), 4), fam.rank_family(gf(2), 2, 2)):
        pf = parent.parent_function(F)
        qw = parent.quotient_weight(parent.hamming_weight_array(F.field, len(F)), pf.matrix)
        if not (qw == weight.weight_table(F).weights).all():
            return False
    return True


def _weakly_row_monomial(_r) -> bool:
    f = gf(2)
    xi = parent.FqMatrix.from_rows(f, [(1, 0), (1, 0), (0, 1)])
    qw = parent.quotient_weight(parent.hamming_weight_array(f, 3), xi)
    red = parent.reduce_to_parent(xi)
    return (qw == space(f, 2).hamming_weights()).all() and red.matrix.rows == ((1, 0), (0, 1))


def _gap_family_distance(_r) -> bool:
    return parent.min_hamming_distance(parent.parent_code(bounds.anticode_gap_example())) == 6


def _coset_spheres(_r) -> bool:
    F = fam.phase_rotation(gf(2), 4)
    dist = parent.coset_leader_weight_distribution(parent.parent_code(F))
    sph = weight.weight_table(F).sphere_sizes
    return dist[:len(sph)] == sph and not any(dist[len(sph):])


def _leader_weight(r: random.Random) -> bool:
    F = fam.phase_rotation(gf(3), 3)
    pf = parent.parent_function(F)
    C = parent.parent_code(pf)
    T = weight.weight_table(F)
    for _ in range(20):
        y = tuple(r.randrange(3) for _ in range(len(F)))
        lead = parent.coset_leader(C, y)
        if sum(1 for c in lead if c) != T[pf.apply(y)]:
            return False
    return True


def _repetition_family(_r) -> bool:
    f = gf(3)
    G = parent.family_from_code(parent.repetition_code(f, 4))
    return isometry.are_equivalent(G, fam.phase_rotation(f, 3)) is not None


def _f7_pair(_r) -> bool:
    f = gf(7)
    A = fam.family_from_vectors(f, [(1, 0), (0, 1), (1, 1), (1, 2)])
    B = fam.family_from_vectors(f, [(1, 0), (0, 1), (1, 1), (1, 3)])
    return (isometry.are_equivalent(A, B) is None
            and matroid.extended_matroid_equivalent(A, B) is not None
            and weight.weight_table(A).sphere_sizes == weight.weight_table(B).sphere_sizes)


def _parent_codes_equivalent(r: random.Random) -> bool:
    F = fam.rank_family(gf(2), 2, 2)
    pts = list(F.points)
    r.shuffle(pts)
    G = fam.family_from_vectors(F.field, pts)
    return isometry.are_hamming_equivalent(parent.parent_code(F), parent.parent_code(G)) is not None


def _stabilizer_subcode(_r) -> bool:
    f = gf(2)
    F = fam.phase_rotation(f, 2)
    D = parent.LinearCode(f, 2, ((1, 1),))
    stab = isometry.preimage_stabilizer(F, D)
    fix = isometry.isometries_fixing(F, D)
    images = {isometry.isometry_from_monomial(F, M).matrix for M in stab}
    return len(stab) == len(fix) and images == {L.matrix for L in fix}


def _aut_order(_r) -> bool:
    f = gf(2)
    return (len(isometry.aut_group(fam.phase_rotation(f, 2))) == 6
            and len(isometry.hamming_stabilizer(parent.repetition_code(f, 3))) == 6)


def _phase_extension_f2(_r) -> bool:
    f = gf(2)
    return all(matroid.extended_family(fam.phase_rotation(f, N)).point_set() ==
               fam.discrete(f, N).point_set() for N in (2, 3, 4))


def _phase_extension_f3(_r) -> bool:
    f = gf(3)
    E = matroid.extended_family(fam.phase_rotation(f, 3)).point_set()
    sp = space(f, 3)
    expect = {sp.vector(int(i)) for i in sp.canonical_points() if max(sp.vector(int(i))) == 1}
    return E == expect


def _extension_direct_sum(_r) -> bool:
    f = gf(2)
    A, B = fam.phase_rotation(f, 2), fam.phase_rotation(f, 3)
    lhs = matroid.extended_family(fam.disjoint_union(A, B)).point_set()
    rhs = fam.disjoint_union(matroid.extended_family(A), matroid.extended_family(B)).point_set()
    return lhs == rhs


def _ball_formula(_r) -> bool:
    f = gf(2)
    for F in (fam.phase_rotation(f, 3), fam.hamming(f, 3), fam.phase_rotation(gf(3), 3)):
        balls = weight.weight_table(F).ball_sizes
        if [matroid.ball_sizes_via_extended_matroid(F, t) for t in range(len(balls))] != balls:
            return False
    return True


def _mu_examples(_r) -> bool:
    f2 = gf(2)
    ok = bounds.mu_profile(fam.hamming(f2, 4)).values == (0, 1, 2, 3, 4)
    for q, N in ((2, 4), (2, 5), (3, 4)):
        prof = bounds.mu_profile(fam.phase_rotation(gf(q), N)).values
        cut = bounds.phase_weight_bound(N, q)
        ok &= prof == tuple(t if t < cut else N for t in range(cut + 1))
    prof = bounds.mu_profile(fam.rank_family(f2, 2, 3)).values
    return ok and prof[1] == 3 and prof[2] == 6


def _singleton(_r) -> bool:
    f = gf(2)
    ok = all(bounds.singleton_bound(fam.hamming(f, 4), d).projective == 2 ** (4 - d + 1) for d in range(1, 5))
    for m, n, d in ((2, 2, 2), (2, 3, 2)):
        ok &= bounds.singleton_bound(fam.rank_family(f, m, n), d).projective == \
            2 ** (max(m, n) * (min(m, n) - d + 1))
    return ok


def _anticode_gap(_r) -> bool:
    F = bounds.anticode_gap_example()
    T = weight.weight_table(F)
    res = bounds.exact_anticode_max(F, 2, 3, T)
    G = [tuple(int(i in s) for i in range(10)) for s in ((0, 1), (2, 3), (4, 5))]
    inside = all(T.weights[i] <= 2 for i in parent.span_indices(space(F.field, 10), G))
    return res.dim == 3 and res.mu == 2 and inside


def _general_construction(_r) -> bool:
    f = gf(2)
    G = parent.LinearCode(f, 7, ((1, 1, 1, 1, 0, 0, 0), (0, 0, 1, 1, 1, 1, 0), (0, 1, 0, 1, 0, 1, 1)))
    F = bounds.anticode_counterexample_family(G)
    return (parent.min_hamming_distance(parent.parent_code(F)) == G.min_distance + 2
            and bounds.mu(F, 2)[0] == 2 and bounds.exact_anticode_max(F, 2, 3).dim == 3)


def _phase_weight_closed_form(_r) -> bool:
    f = gf(3)
    T = weight.weight_table(fam.phase_rotation(f, 3))
    sp = space(f, 3)
    ok = bounds.phase_weight((1, 1, 0, 1), gf(2)) == 2
    return ok and all(bounds.phase_weight(sp.vector(i), f) == T[i] for i in range(sp.size))


def _perfect_transfer(_r) -> bool:
    f = gf(2)
    rep = codes.perfect_transfer(parent.hamming_code(f, 3), parent.parent_function(fam.phase_rotation(f, 6)))
    return (rep.hypothesis_holds and rep.projective_perfect == 1 and rep.hamming_perfect == 1
            and rep.projective_distance == 3 == rep.hamming_distance)


def _free_weight_discrete(_r) -> bool:
    f = gf(3)
    V = embed.WeightedSpace.from_point_weights(f, 2, [1, 1, 1, 1])
    free = embed.free_weighted_space(V)
    return all(free.weight(x) == sum(1 for c in x if c) for x in np.ndindex(*(3,) * len(free.reps)))


def _frontier_examples(_r) -> bool:
    ok = embed.is_ab_embeddable(embed.f2_dim2_space(2, 1, 1), 0, 0) is not None
    ok &= embed.is_ab_embeddable(embed.f2_dim2_space(2, 2, 2), 1, 0) is not None
    ok &= embed.is_ab_embeddable(embed.f2_dim2_space(1, 1, 1), 0, 0) is None
    for ts in ((1, 1, 1), (2, 2, 2), (2, 2, 3), (3, 3, 2)):
        (a, b), = embed.pareto_frontier_f2_dim2(*ts)
        ok &= sum(ts) - 4 == 2 * a - b
    return ok


def _embedding_verifies(_r) -> bool:
    return embed.embed_into_projective(embed.f2_dim2_space(2, 1, 1)).verified


GOLDENS: list[Golden] = [
    Golden("phase rotation figure: weight and shortest path of 1101", _phase_figure),
    Golden("phase rotation family has five points", _phase_family),
    Golden("discrete metric gives weight 1", _discrete_weight),
    Golden("all-ones vector has phase weight 1", _all_ones_weight),
    Golden("cover family from coordinate subspaces", _cover_from_ppf),
    Golden("row union column is cover", _row_union_column),
    Golden("tensor products give rank and row families", _tensor_products),
    Golden("small spheres are binomial", _small_spheres),
    Golden("sphere sizes convolve over disjoint unions", _sphere_convolution),
    Golden("projective weights are convex", _projective_convex),
    Golden("doubled Hamming weight is not correction normal", _doubled_hamming),
    Golden("F_2^4 with wt(1111)=3 is not equal-detection normal", _modified_f2_4),
    Golden("phase rotation parent code is the repetition code", _phase_parent_repetition),
    Golden("projective weight is a Hamming quotient", _quotient_is_projective),
    Golden("weakly row monomial quotient is Hamming", _weakly_row_monomial),
    Golden("14-point family has parent distance 6", _gap_family_distance),
    Golden("coset leader distribution equals sphere sizes", _coset_spheres),
    Golden("coset leader weight equals projective weight", _leader_weight),
    Golden("repetition code yields phase rotation", _repetition_family),
    Golden("F_7 pair: matroid equivalent, not linearly equivalent", _f7_pair),
    Golden("parent codes of reordered families are Hamming equivalent", _parent_codes_equivalent),
    Golden("stabilizers fixing a subcode preimage match isometries fixing it", _stabilizer_subcode),
    Golden("isometry group of phase_rotation(2) has order 6", _aut_order),
    Golden("binary phase rotation extends to all points", _phase_extension_f2),
    Golden("ternary phase rotation extends to 0/1 points", _phase_extension_f3),
    Golden("extension commutes with direct sums", _extension_direct_sum),
    Golden("extended matroid ball formula", _ball_formula),
    Golden("mu profiles of Hamming, phase rotation and rank", _mu_examples),
    Golden("Singleton values for Hamming and rank", _singleton),
    Golden("anticode gap on the 14-point family", _anticode_gap),
    Golden("general anticode gap construction", _general_construction),
    Golden("phase weight closed form", _phase_weight_closed_form),
    Golden("perfect code transfer through phase rotation", _perfect_transfer),
    Golden("free weight of the discrete metric is Hamming", _free_weight_discrete),
    Golden("F_2^2 embedding frontier", _frontier_examples),
    Golden("embedding construction verifies", _embedding_verifies),
]


def run_goldens(seed: int = 0) -> list[tuple[str, bool, str]]:
    out = []
    for g in GOLDENS:
        try:
            ok = bool(g.check(random.Random(seed)))
            msg = ""
        except Exception as exc:  # a crash is a failure, reported with its message
            ok, msg = False, f"{type(exc).__name__}: {exc}"
        out.append((g.name, ok, msg))
    return out

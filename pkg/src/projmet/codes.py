"""Linear codes measured with a projective metric: distance, perfectness and
transfer of perfectness through a parent function."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .budget import check_states
from .errors import PreconditionFailed, VerificationFailed
from .family import SpanningFamily, hamming
from .linalg import right_kernel_rows, vecmat
from .parent import LinearCode, ParentFunction, min_hamming_distance, parent_code
from .weight import INF, WeightTable, weight_table


def _table(F_or_table) -> WeightTable:
    return F_or_table if isinstance(F_or_table, WeightTable) else weight_table(F_or_table)


@dataclass(frozen=True, eq=False)
class MetricCode:
    code: LinearCode
    family: SpanningFamily

    @cached_property
    def table(self) -> WeightTable:
        return weight_table(self.family)

    @cached_property
    def distance(self) -> int:
        return min_distance_F(self.code, self.table)

    def is_perfect(self) -> int | None:
        return is_perfect(self.code, self.table)


def min_distance_F(C: LinearCode, F_or_table) -> int:
    """Smallest projective weight of a nonzero codeword; ``INF`` for the zero code."""
    if C.dim == 0:
        return INF
    check_states(C.size, "codeword enumeration")
    t = _table(F_or_table)
    return int(t.weights[C.codeword_indices[1:]].min())


def ball_cover_counts(C: LinearCode, F_or_table, t: int) -> np.ndarray:
    """For every vector, the number of codewords within distance t."""
    tab = _table(F_or_table)
    sp = tab.space
    check_states(C.size * int((tab.weights <= t).sum()), "partition scan")
    ball = tab.ball(t)
    counts = np.zeros(sp.size, dtype=np.int64)
    for c in C.codeword_indices:
        np.add.at(counts, sp.add(int(c), ball), 1)
    return counts


def is_perfect(C: LinearCode, F_or_table) -> int | None:
    """Radius t if radius-t balls around codewords partition the space."""
    tab = _table(F_or_table)
    sp = tab.space
    if C.dim == 0:
        return tab.max_weight if tab.finite else None
    d = min_distance_F(C, tab)
    if d % 2 == 0:
        return None
    t = (d - 1) // 2
    balls = tab.ball_sizes + [tab.ball_sizes[-1]] * (t + 1)
    if C.size * balls[t] != sp.size:
        return None
    counts = ball_cover_counts(C, tab, t)
    return t if bool((counts == 1).all()) else None


def image_code(C_hat: LinearCode, phi: ParentFunction) -> MetricCode:
    rows = [vecmat(phi.field, b, phi.matrix.rows, phi.N) for b in C_hat.basis]
    return MetricCode(LinearCode(phi.field, phi.N, tuple(rows)), phi.family)


def preimage_code(C: LinearCode, phi: ParentFunction) -> LinearCode:
    """``{x : phi(x) in C}``."""
    f = phi.field
    H = C.parity_check if C.dim < C.n else ()
    if not H:
        return LinearCode(f, phi.n, tuple(tuple(int(i == j) for j in range(phi.n)) for i in range(phi.n)))
    # h . (x M) = (M h^T) . x
    rows = [tuple(sum_mul(f, phi.matrix.rows[i], h) for i in range(phi.n)) for h in H]
    return LinearCode(f, phi.n, tuple(right_kernel_rows(f, rows, phi.n)))


def sum_mul(f, a, b) -> int:
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s = f.add(s, f.mul(x, y))
    return s


@dataclass(frozen=True)
class TransferReport:
    hypothesis_holds: bool
    parent_distance: int
    max_weight: int
    hamming_perfect: int | None
    projective_perfect: int | None
    hamming_distance: int
    projective_distance: int

    @property
    def agree(self) -> bool:
        return (self.hamming_perfect == self.projective_perfect
                and self.hamming_distance == self.projective_distance)


def perfect_transfer(C_hat: LinearCode, phi: ParentFunction) -> TransferReport:
    """Compare Hamming perfectness of C_hat with projective perfectness of its image.

    The two verdicts must agree when the parent code's Hamming distance is at
    least the largest projective weight and the image has at least two
    codewords (the zero code is trivially perfect at radius max weight, so
    C_hat equal to the parent code is excluded).  Outside that hypothesis the
    report is returned without any assertion.
    """
    pc = parent_code(phi)
    if not C_hat.contains_code(pc):
        raise PreconditionFailed("code does not contain the parent code")
    tab = weight_table(phi.family)
    dpc = min_hamming_distance(pc)
    holds = dpc >= tab.max_weight and C_hat.dim > pc.dim
    img = image_code(C_hat, phi)
    ham = weight_table(hamming(phi.field, phi.n))
    report = TransferReport(
        hypothesis_holds=holds,
        parent_distance=dpc,
        max_weight=tab.max_weight,
        hamming_perfect=is_perfect(C_hat, ham),
        projective_perfect=is_perfect(img.code, tab),
        hamming_distance=min_hamming_distance(C_hat),
        projective_distance=min_distance_F(img.code, tab),
    )
    if holds and not report.agree:
        raise VerificationFailed(f"transfer disagrees under its hypothesis: {report}")
    return report

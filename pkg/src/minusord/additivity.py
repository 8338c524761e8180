"""Range additivity of matrix sums and its kernel-side characterizations.

The central fact: R(A + B) = R(A) + R(B) holds exactly when R(A) is
contained in R(A + B), and under disjoint ranges it is further equivalent
to the null spaces of A and B jointly spanning the domain.  Each predicate
here evaluates its side of such an equivalence independently, so the
equivalences themselves stay observable in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ComplementError
from .linalg import (
    DEFAULT_TOLERANCE,
    ToleranceConfig,
    adjoint,
    as_matrix,
    fro,
    numerical_rank,
)
from .subspaces import (
    Projection,
    intersect,
    null_basis,
    oblique_projection,
    range_basis,
    subspace_equal,
    subspace_sum,
)

__all__ = [
    "DisjointRangeAdditivity",
    "KernelCharacterization",
    "is_range_additive",
    "disjoint_range_additivity",
    "kernel_characterization",
]


def _pair(A, B):
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    if A.shape != B.shape:
        raise ValueError("shape mismatch")
    return A, B


def is_range_additive(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Whether R(A + B) = R(A) + R(B).

    Equivalent to R(A) being contained in R(A + B), which is what is
    tested: rank([A + B | A]) == rank(A + B).
    """
    A, B = _pair(A, B)
    s = A + B
    return numerical_rank(np.hstack([s, A]), tol) == numerical_rank(s, tol)


@dataclass(frozen=True)
class DisjointRangeAdditivity:
    """Joint verdicts for the disjoint-range additivity equivalence.

    ``additive`` records whether R(A + B) is the direct sum of R(A) and
    R(B); under ``ranges_disjoint`` it is equivalent to ``kernels_span``.
    """

    ranges_disjoint: bool
    additive: bool
    kernels_span: bool


def disjoint_range_additivity(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> DisjointRangeAdditivity:
    A, B = _pair(A, B)
    ra = range_basis(A, tol)
    rb = range_basis(B, tol)
    disjoint = intersect(ra, rb, tol).dim == 0
    joined = subspace_sum(ra, rb, tol)
    additive = disjoint and subspace_equal(range_basis(A + B, tol), joined, tol)
    spans = subspace_sum(null_basis(A, tol), null_basis(B, tol), tol).dim == A.shape[1]
    return DisjointRangeAdditivity(ranges_disjoint=disjoint, additive=additive, kernels_span=spans)


@dataclass(frozen=True, eq=False)
class KernelCharacterization:
    """Independent verdicts of the four-way range/kernel equivalence.

    Conditions evaluated, in order: the adjoint ranges split directly;
    a projection witness Q with A* = Q (A* + B*) exists (built when the
    split holds, ``None`` otherwise); the kernels of A and B span the
    domain; the ranges add.  The first three are mutually equivalent and
    imply the fourth; the converse needs disjoint adjoint ranges.
    """

    adjoint_ranges_direct_closed: bool
    witness_q: Projection | None
    kernels_span: bool
    range_additive: bool


def kernel_characterization(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> KernelCharacterization:
    A, B = _pair(A, B)
    ras = range_basis(adjoint(A), tol)
    rbs = range_basis(adjoint(B), tol)
    direct = intersect(ras, rbs, tol).dim == 0

    witness = None
    if direct:
        rest = subspace_sum(ras, rbs, tol).perp()
        complement = subspace_sum(rbs, rest, tol)
        try:
            candidate = oblique_projection(ras, complement, tol)
        except ComplementError:
            candidate = None
        if candidate is not None:
            lhs = adjoint(A)
            rhs = candidate.matrix @ (adjoint(A) + adjoint(B))
            scale = 1.0 + fro(A) + fro(B)
            if fro(lhs - rhs) <= tol.residual_atol * scale:
                witness = candidate

    spans = subspace_sum(null_basis(A, tol), null_basis(B, tol), tol).dim == A.shape[1]
    additive = is_range_additive(A, B, tol)
    return KernelCharacterization(
        adjoint_ranges_direct_closed=direct,
        witness_q=witness,
        kernels_span=spans,
        range_additive=additive,
    )

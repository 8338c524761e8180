"""Matrix partial orders: minus, star, sharp, core and their one-sided kin.

Every predicate returns an :class:`OrderReport` rather than a bare bool.
The report carries the primary verdict, the independently evaluated
cross-characterizations (so their agreement can be audited), witness
projections when the order holds, the rank bookkeeping of the triple
(A, B, B - A), and boundary flags for decisions that fell near a cutoff.

Witness conventions: ``witness_p`` satisfies A = P B and ``witness_q``
satisfies A* = Q B*, both to the residual tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ComplementError, GroupInvertibilityError, OrderConditionError, VerificationError
from .linalg import (
    DEFAULT_TOLERANCE,
    ToleranceConfig,
    adjoint,
    as_matrix,
    fro,
    range_contains,
    rank_info,
)
from .subspaces import (
    Projection,
    Subspace,
    intersect,
    is_direct_sum,
    minimal_angle_cos,
    null_basis,
    oblique_projection,
    ominus,
    orthogonal_projection,
    range_basis,
    subspace_equal,
    subspace_sum,
)

__all__ = [
    "ORDER_NAMES",
    "RankData",
    "OrderReport",
    "minus_order",
    "left_minus_order",
    "right_minus_order",
    "star_order",
    "left_star_order",
    "right_star_order",
    "sharp_order",
    "core_order",
    "weak_minus_order",
    "order_predicate",
    "inner_inverse_witness",
]

ORDER_NAMES = (
    "minus",
    "left_minus",
    "right_minus",
    "star",
    "left_star",
    "right_star",
    "sharp",
    "core",
    "weak_minus",
)


@dataclass(frozen=True)
class RankData:
    rank_a: int
    rank_b: int
    rank_diff: int


@dataclass(frozen=True, eq=False)
class OrderReport:
    order_name: str
    holds: bool
    characterization_verdicts: dict[str, bool]
    witness_p: Projection | None
    witness_q: Projection | None
    rank_data: RankData
    boundary_flags: tuple[str, ...] = field(default=())


def _pair(A, B, square: bool = False):
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    if A.shape != B.shape:
        raise ValueError("shape mismatch")
    if square and A.shape[0] != A.shape[1]:
        raise ValueError("square matrices required")
    return A, B


def _rank_triple(A, B, diff, tol, flags):
    out = []
    for mat, label in ((A, "A"), (B, "B"), (diff, "B-A")):
        rank, near = rank_info(mat, tol)
        if near:
            flags.append(f"rank({label}) within 10x of cutoff")
        out.append(rank)
    return RankData(*out)


def _identity_close(lhs, rhs, tol, scale):
    return fro(lhs - rhs) <= tol.residual_atol * (1.0 + scale)


def _split_holds(part: Subspace, rest: Subspace, whole: Subspace, tol) -> bool:
    """Whether ``whole`` is the direct sum of ``part`` and ``rest``."""
    if intersect(part, rest, tol).dim != 0:
        return False
    return subspace_equal(subspace_sum(part, rest, tol), whole, tol)


def _angle_margin_ok(ra: Subspace, rd: Subspace, tol, flags) -> bool:
    c0 = minimal_angle_cos(ra, rd)
    margin = 1.0 - c0
    if tol.angle_gap / 10.0 < margin < tol.angle_gap * 10.0:
        flags.append("minimal angle within 10x of the gap")
    return margin > tol.angle_gap


def _left_witness(ra: Subspace, complement: Subspace, tol) -> Projection | None:
    try:
        return oblique_projection(ra, complement, tol)
    except ComplementError:
        return None


def _kernels_span(X, Y, tol) -> bool:
    n = X.shape[1]
    return subspace_sum(null_basis(X, tol), null_basis(Y, tol), tol).dim == n


def minus_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Minus order A <=- B: R(B) splits as R(A) plus R(B - A) on both sides.

    The primary verdict works at the subspace level; the rank, angle,
    kernel and projection characterizations are recorded independently.
    """
    A, B = _pair(A, B)
    diff = B - A
    flags: list[str] = []
    ranks = _rank_triple(A, B, diff, tol, flags)

    ra, rd, rb = (range_basis(X, tol) for X in (A, diff, B))
    ras, rds, rbs = (range_basis(adjoint(X), tol) for X in (A, diff, B))

    holds = _split_holds(ra, rd, rb, tol) and _split_holds(ras, rds, rbs, tol)

    # The angle route restates disjointness as a minimal-angle margin; the
    # span part of the condition is still required.
    down = subspace_sum(ra, rd, tol)
    down_s = subspace_sum(ras, rds, tol)
    spans = subspace_equal(down, rb, tol) and subspace_equal(down_s, rbs, tol)
    angle_ok = (spans
                and _angle_margin_ok(ra, rd, tol, flags)
                and _angle_margin_ok(ras, rds, tol, flags))
    kernels_ok = _kernels_span(A, diff, tol) and _kernels_span(adjoint(A), adjoint(diff), tol)

    # Canonical left witness: project onto R(A) along R(B-A) + the
    # orthogonal leftover of R(A) + R(B-A).
    witness_p = _left_witness(ra, subspace_sum(rd, down.perp(), tol), tol)
    projection_ok = (
        witness_p is not None
        and _identity_close(A, witness_p.matrix @ B, tol, fro(B))
        and range_contains(B, A, tol)
    )

    witness_q = None
    if holds:
        witness_q = _left_witness(ras, subspace_sum(rds, down_s.perp(), tol), tol)

    verdicts = {
        "ranges": holds,
        "ranks": ranks.rank_a + ranks.rank_diff == ranks.rank_b,
        "angles": angle_ok,
        "kernels": kernels_ok,
        "projection": projection_ok,
    }
    return OrderReport("minus", holds, verdicts, witness_p if holds else None,
                       witness_q, ranks, tuple(flags))


def left_minus_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Left minus order: R(B) = R(A) direct-plus R(B - A) (codomain side only).

    The witness projects onto R(A) along R(B - A) + N(B*).
    """
    A, B = _pair(A, B)
    diff = B - A
    flags: list[str] = []
    ranks = _rank_triple(A, B, diff, tol, flags)

    ra, rd, rb = (range_basis(X, tol) for X in (A, diff, B))
    holds = _split_holds(ra, rd, rb, tol)

    witness_p = _left_witness(ra, subspace_sum(rd, rb.perp(), tol), tol)
    projection_ok = (
        witness_p is not None
        and _identity_close(A, witness_p.matrix @ B, tol, fro(B))
        and range_contains(B, A, tol)
    )
    verdicts = {"ranges": holds, "projection": projection_ok}
    return OrderReport("left_minus", holds, verdicts, witness_p if holds else None,
                       None, ranks, tuple(flags))


def right_minus_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Right minus order: the left condition applied to the adjoints."""
    A, B = _pair(A, B)
    mirrored = left_minus_order(adjoint(A), adjoint(B), tol)
    return OrderReport("right_minus", mirrored.holds, mirrored.characterization_verdicts,
                       None, mirrored.witness_p, mirrored.rank_data, mirrored.boundary_flags)


def star_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Star order: A*A = A*B and AA* = BA*.

    Cross-check: R(B) splits orthogonally as R(A) + R(B - A) on both
    sides.  Witnesses are the orthogonal projections onto R(A), R(A*).
    """
    A, B = _pair(A, B)
    diff = B - A
    flags: list[str] = []
    ranks = _rank_triple(A, B, diff, tol, flags)

    scale = fro(A) * (fro(A) + fro(B))
    gram_left = _identity_close(adjoint(A) @ A, adjoint(A) @ B, tol, scale)
    gram_right = _identity_close(A @ adjoint(A), B @ adjoint(A), tol, scale)
    holds = gram_left and gram_right

    ortho = _orthogonal_split(A, B, diff, tol) and _orthogonal_split(adjoint(A), adjoint(B), adjoint(diff), tol)

    witness_p = witness_q = None
    if holds:
        witness_p = orthogonal_projection(range_basis(A, tol))
        witness_q = orthogonal_projection(range_basis(adjoint(A), tol))
    verdicts = {"gram_left": gram_left, "gram_right": gram_right, "orthogonal_ranges": ortho}
    return OrderReport("star", holds, verdicts, witness_p, witness_q, ranks, tuple(flags))


def _orthogonal_split(A, B, diff, tol) -> bool:
    ra = range_basis(A, tol)
    rd = range_basis(diff, tol)
    if not _split_holds(ra, rd, range_basis(B, tol), tol):
        return False
    return minimal_angle_cos(ra, rd) <= tol.subspace_atol(ra.ambient_dim)


def left_star_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Left star order: A*A = A*B together with R(A) inside R(B).

    Equivalent to R(B) = R(A) + R(B - A) with the summands orthogonal;
    that reformulation is recorded as the cross-check verdict.
    """
    A, B = _pair(A, B)
    diff = B - A
    flags: list[str] = []
    ranks = _rank_triple(A, B, diff, tol, flags)

    gram = _identity_close(adjoint(A) @ A, adjoint(A) @ B, tol, fro(A) * (fro(A) + fro(B)))
    inclusion = range_contains(B, A, tol)
    holds = gram and inclusion
    ortho = _orthogonal_split(A, B, diff, tol)

    witness_p = orthogonal_projection(range_basis(A, tol)) if holds else None
    verdicts = {"gram_left": gram, "range_inclusion": inclusion, "orthogonal_split": ortho}
    return OrderReport("left_star", holds, verdicts, witness_p, None, ranks, tuple(flags))


def right_star_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Right star order: the left-star condition applied to the adjoints."""
    A, B = _pair(A, B)
    mirrored = left_star_order(adjoint(A), adjoint(B), tol)
    return OrderReport("right_star", mirrored.holds, mirrored.characterization_verdicts,
                       None, mirrored.witness_p, mirrored.rank_data, mirrored.boundary_flags)


def sharp_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Sharp order on group-invertible matrices: A^2 = BA = AB."""
    A, B = _pair(A, B, square=True)
    for mat, label in ((A, "A"), (B, "B")):
        if not _group_ok(mat, tol):
            raise GroupInvertibilityError(f"{label} is not group invertible")
    diff = B - A
    flags: list[str] = []
    ranks = _rank_triple(A, B, diff, tol, flags)

    square = A @ A
    scale = fro(A) * (fro(A) + fro(B))
    left_id = _identity_close(square, B @ A, tol, scale)
    right_id = _identity_close(square, A @ B, tol, scale)
    holds = left_id and right_id

    witness_p = witness_q = None
    if holds:
        witness_p = _left_witness(range_basis(A, tol), null_basis(A, tol), tol)
        witness_q = _left_witness(range_basis(adjoint(A), tol), null_basis(adjoint(A), tol), tol)
    verdicts = {"square_equals_ba": left_id, "square_equals_ab": right_id}
    return OrderReport("sharp", holds, verdicts, witness_p, witness_q, ranks, tuple(flags))


def _group_ok(A, tol) -> bool:
    return rank_info(A @ A, tol)[0] == rank_info(A, tol)[0]


def core_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Core order on group-invertible A: A*A = A*B and A^2 = BA."""
    A, B = _pair(A, B, square=True)
    if not _group_ok(A, tol):
        raise GroupInvertibilityError("A is not group invertible")
    diff = B - A
    flags: list[str] = []
    ranks = _rank_triple(A, B, diff, tol, flags)

    scale = fro(A) * (fro(A) + fro(B))
    gram = _identity_close(adjoint(A) @ A, adjoint(A) @ B, tol, scale)
    square = _identity_close(A @ A, B @ A, tol, scale)
    holds = gram and square

    witness_p = witness_q = None
    if holds:
        witness_p = orthogonal_projection(range_basis(A, tol))
        witness_q = _left_witness(range_basis(adjoint(A), tol), null_basis(adjoint(A), tol), tol)
    verdicts = {"gram_left": gram, "square_equals_ba": square}
    return OrderReport("core", holds, verdicts, witness_p, witness_q, ranks, tuple(flags))


def weak_minus_order(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> OrderReport:
    """Weak minus order: R(A) meets R(B - A) trivially, and likewise for
    the adjoints.

    In finite dimension this coincides with the minus order; the library
    still evaluates only the intersection conditions so the coincidence
    remains a checkable theorem rather than an implementation artifact.
    """
    A, B = _pair(A, B)
    diff = B - A
    flags: list[str] = []
    ranks = _rank_triple(A, B, diff, tol, flags)

    ra, rd = range_basis(A, tol), range_basis(diff, tol)
    ras, rds = range_basis(adjoint(A), tol), range_basis(adjoint(diff), tol)
    left_trivial = intersect(ra, rd, tol).dim == 0
    right_trivial = intersect(ras, rds, tol).dim == 0
    holds = left_trivial and right_trivial

    witness_p = witness_q = None
    if holds:
        witness_p = _left_witness(ra, subspace_sum(rd, subspace_sum(ra, rd, tol).perp(), tol), tol)
        witness_q = _left_witness(ras, subspace_sum(rds, subspace_sum(ras, rds, tol).perp(), tol), tol)
    verdicts = {"left_intersection_trivial": left_trivial,
                "right_intersection_trivial": right_trivial}
    return OrderReport("weak_minus", holds, verdicts, witness_p, witness_q, ranks, tuple(flags))


_PREDICATES = {
    "minus": minus_order,
    "left_minus": left_minus_order,
    "right_minus": right_minus_order,
    "star": star_order,
    "left_star": left_star_order,
    "right_star": right_star_order,
    "sharp": sharp_order,
    "core": core_order,
    "weak_minus": weak_minus_order,
}


def order_predicate(name: str):
    """Look up an order predicate by name (hyphens and underscores both work)."""
    key = name.replace("-", "_")
    try:
        return _PREDICATES[key]
    except KeyError:
        raise ValueError(f"unknown order {name!r}; expected one of {', '.join(ORDER_NAMES)}") from None


def inner_inverse_witness(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """An inner inverse of A adapted to A <=(left-minus) B.

    Inverts A on M = N(B - A) ominus N(A) back onto that slice of the
    domain and annihilates R(B - A) plus the orthogonal leftover of R(B),
    which forces X A = X B and (A - B) X = 0.  Raises
    :class:`OrderConditionError` when the left minus order fails.
    """
    A, B = _pair(A, B)
    report = left_minus_order(A, B, tol)
    if not report.holds:
        raise OrderConditionError("order does not hold", report)
    diff = B - A
    m, n = A.shape
    m_slice = ominus(null_basis(diff, tol), null_basis(A, tol), tol)
    rd = range_basis(diff, tol)
    rest = range_basis(B, tol).perp()
    joined = np.hstack([A @ m_slice.basis, rd.basis, rest.basis])
    if joined.shape[1] != m:
        raise ComplementError("complement condition violated")
    target = np.hstack([m_slice.basis, np.zeros((n, m - m_slice.dim), dtype=np.complex128)])
    try:
        witness = np.linalg.solve(joined.T, target.T).T
    except np.linalg.LinAlgError as exc:
        raise ComplementError("complement condition violated") from exc

    scale = (1.0 + fro(A)) * (1.0 + fro(witness))
    if fro(A @ witness @ A - A) > tol.residual_atol * scale:
        raise VerificationError("inner inverse failed A X A = A")
    if fro(witness @ A - witness @ B) > tol.residual_atol * scale:
        raise VerificationError("inner inverse failed X A = X B")
    if fro((A - B) @ witness) > tol.residual_atol * scale:
        raise VerificationError("inner inverse failed (A - B) X = 0")
    return witness

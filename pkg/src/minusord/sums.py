"""Constructive consequences for sums A + B with A below A + B.

Everything here assumes the minus (or one-sided minus) relation between A
and A + B and turns it into concrete operators: the oblique/optimal
projection pair (P, Q) with A = P (A + B) = (A + B) Q, the projection-sum
idempotent E, the Fill-Fishkind expression for the Moore-Penrose inverse
of the sum, reflexive inverses of the sum with prescribed spaces, the
two-summand decomposition of such inverses, and inverse additivity under
the star, sharp and core orders.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ComplementError, OrderConditionError, VerificationError
from .geninv import core_inverse, group_inverse, pinv, reflexive_inverse
from .linalg import (
    DEFAULT_TOLERANCE,
    ToleranceConfig,
    adjoint,
    as_matrix,
    effective_condition,
    fro,
)
from .orders import core_order, left_minus_order, minus_order, sharp_order, star_order
from .subspaces import (
    Projection,
    Subspace,
    intersect,
    is_direct_sum,
    null_basis,
    oblique_projection,
    range_basis,
    subspace_equal,
    subspace_sum,
)

__all__ = [
    "SplitWitness",
    "AgreeingSplit",
    "build_split",
    "fill_fishkind_pinv",
    "st_projections",
    "agreeing_split",
    "sum_reflexive_inverse",
    "werner_decomposition",
    "ordered_inverse_additivity",
    "INVERSE_KINDS",
]

INVERSE_KINDS = ("moore_penrose", "group", "core")

#: Relative tolerance for the internal Fill-Fishkind cross-check, scaled by
#: one plus the effective condition number of A + B.
FF_VERIFY_RTOL = 1e-8


def _pair(A, B):
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    if A.shape != B.shape:
        raise ValueError("shape mismatch")
    return A, B


def _require_minus(A, total, tol, message):
    report = minus_order(A, total, tol)
    if not report.holds:
        raise OrderConditionError(message, report)
    return report


@dataclass(frozen=True, eq=False)
class SplitWitness:
    """Projection pair for A against A + B.

    ``p`` satisfies A = P (A + B); ``q`` satisfies A = (A + B) Q; ``e`` is
    the idempotent P_{R(A)} P + P_{R(B)} (I - P) with range R(A + B);
    ``optimal`` records whether ``e`` came out Hermitian, which happens
    exactly for the optimal choice of complements.
    """

    p: Projection
    q: Projection
    e: np.ndarray
    optimal: bool


def build_split(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE,
                m1: Subspace | None = None, n1: Subspace | None = None) -> SplitWitness:
    """Construct the (P, Q, E) split for A against A + B.

    P projects onto R(A) + M1 along R(B) + N1.  By default M1 is all of
    N(A*) cap N(B*) and N1 is zero, the choice that makes E Hermitian; a
    caller may pass any other pair of subspaces that still splits the
    codomain.  Q is built the same way on the adjoint side and transposed
    back, so A = (A + B) Q.
    """
    A, B = _pair(A, B)
    total = A + B
    _require_minus(A, total, tol, "A is not minus-below A + B")

    ra, rb = range_basis(A, tol), range_basis(B, tol)
    if m1 is None:
        m1 = subspace_sum(ra, rb, tol).perp()
    if n1 is None:
        n1 = Subspace.zero(A.shape[0])
    p = oblique_projection(subspace_sum(ra, m1, tol), subspace_sum(rb, n1, tol), tol)

    ras, rbs = range_basis(adjoint(A), tol), range_basis(adjoint(B), tol)
    leftover = subspace_sum(ras, rbs, tol).perp()
    q = oblique_projection(subspace_sum(ras, leftover, tol), rbs, tol).adjoint()

    eye = np.eye(A.shape[0], dtype=np.complex128)
    e = ra.projector() @ p.matrix + rb.projector() @ (eye - p.matrix)

    scale = 1.0 + fro(total)
    if fro(A - p.matrix @ total) > tol.residual_atol * scale:
        raise VerificationError("split witness failed A = P (A + B)")
    if fro(A - total @ q.matrix) > tol.residual_atol * scale:
        raise VerificationError("split witness failed A = (A + B) Q")
    if fro(e @ e - e) > tol.residual_atol * (1.0 + fro(e) ** 2):
        raise VerificationError("projection sum E is not idempotent")
    if not subspace_equal(range_basis(e, tol), range_basis(total, tol), tol):
        raise VerificationError("projection sum E has the wrong range")

    optimal = fro(e - adjoint(e)) <= tol.residual_atol * (1.0 + fro(e))
    return SplitWitness(p=p, q=q, e=e, optimal=optimal)


def fill_fishkind_pinv(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """Moore-Penrose inverse of A + B assembled from the parts.

    Computes Q A+ P + (I - Q) B+ (I - P) with the optimal split and
    cross-checks it against the direct SVD route before returning.
    """
    A, B = _pair(A, B)
    total = A + B
    report = left_minus_order(A, total, tol)
    if not report.holds:
        raise OrderConditionError("order fails: A is not left-minus-below A + B", report)
    witness = build_split(A, B, tol)
    m, n = A.shape
    eye_m = np.eye(m, dtype=np.complex128)
    eye_n = np.eye(n, dtype=np.complex128)
    assembled = (witness.q.matrix @ pinv(A, tol) @ witness.p.matrix
                 + (eye_n - witness.q.matrix) @ pinv(B, tol) @ (eye_m - witness.p.matrix))
    oracle = pinv(total, tol)
    bound = max(tol.residual_atol, FF_VERIFY_RTOL) * (1.0 + effective_condition(total, tol))
    if fro(assembled - oracle) > bound:
        raise VerificationError("assembled pseudoinverse disagrees with the SVD route")
    return assembled


def st_projections(A, B, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> tuple[np.ndarray, np.ndarray]:
    """The idempotents S = (P_{N(B)^perp} P_{N(A)})+ and
    T = (P_{N(A*)} P_{N(B*)^perp})+.

    Under the minus relation of A below A + B these recover the optimal
    split: I - S equals Q and I - T equals P.  Both are verified
    idempotent before returning.
    """
    A, B = _pair(A, B)
    _require_minus(A, A + B, tol, "precondition failure: ranges do not split the sum")

    pn_a = null_basis(A, tol).projector()
    pn_b_perp = null_basis(B, tol).perp().projector()
    s = pinv(pn_b_perp @ pn_a, tol)

    pn_a_star = null_basis(adjoint(A), tol).projector()
    pn_b_star_perp = null_basis(adjoint(B), tol).perp().projector()
    t = pinv(pn_a_star @ pn_b_star_perp, tol)

    for mat, label in ((s, "S"), (t, "T")):
        if fro(mat @ mat - mat) > tol.residual_atol * (1.0 + fro(mat) ** 2):
            raise VerificationError(f"{label} is not idempotent")
    return s, t


@dataclass(frozen=True, eq=False)
class AgreeingSplit:
    """A split of A + B agreeing with prescribed complements.

    ``p`` projects onto R(A) along N1 = R(B) + M; ``q`` is the
    right-multiplication projection agreeing with N.  The four subspaces
    are the canonical complements entering the two-summand formula:
    X_A keeps range ``n1s`` and null space ``n1``, X_B keeps ``n2s`` and
    ``n2``.
    """

    p: Projection
    q: Projection
    n1: Subspace
    n2: Subspace
    n1s: Subspace
    n2s: Subspace


def agreeing_split(A, B, range_complement: Subspace, kernel_complement: Subspace,
                   tol: ToleranceConfig = DEFAULT_TOLERANCE) -> AgreeingSplit:
    """Split A + B against a complement M of R(A + B) and a complement N
    of N(A + B).

    Canonical choices: N1 = R(B) + M, N2 = R(A) + M on the codomain side
    and N1* = N(B) cap N, N2* = N(A) cap N on the domain side.  The
    defining projection identities are verified before returning.
    """
    A, B = _pair(A, B)
    total = A + B
    _require_minus(A, total, tol, "A is not minus-below A + B")
    m, n = A.shape
    if range_complement.ambient_dim != m or kernel_complement.ambient_dim != n:
        raise ValueError("ambient mismatch")

    r_total = range_basis(total, tol)
    n_total = null_basis(total, tol)
    if (r_total.dim + range_complement.dim != m
            or not is_direct_sum(r_total, range_complement, tol)):
        raise ComplementError("complement condition violated: M does not complement R(A + B)")
    if (n_total.dim + kernel_complement.dim != n
            or not is_direct_sum(n_total, kernel_complement, tol)):
        raise ComplementError("complement condition violated: N does not complement N(A + B)")

    ra, rb = range_basis(A, tol), range_basis(B, tol)
    n1 = subspace_sum(rb, range_complement, tol)
    n2 = subspace_sum(ra, range_complement, tol)
    p = oblique_projection(ra, n1, tol)

    ras, rbs = range_basis(adjoint(A), tol), range_basis(adjoint(B), tol)
    n1s = intersect(null_basis(B, tol), kernel_complement, tol)
    n2s = intersect(null_basis(A, tol), kernel_complement, tol)
    q = oblique_projection(ras, subspace_sum(rbs, kernel_complement.perp(), tol), tol).adjoint()

    _verify_split_identities(A, B, p, q, n1, n2, n1s, n2s,
                             range_complement, kernel_complement, tol)
    return AgreeingSplit(p=p, q=q, n1=n1, n2=n2, n1s=n1s, n2s=n2s)


def _verify_split_identities(A, B, p, q, n1, n2, n1s, n2s,
                             range_complement, kernel_complement, tol):
    """Check the two projection-sum identities tying the complements to
    the prescribed (M, N) pair."""
    total = A + B
    ra, rb = range_basis(A, tol), range_basis(B, tol)
    eye_m = np.eye(A.shape[0], dtype=np.complex128)
    eye_n = np.eye(A.shape[1], dtype=np.complex128)

    lhs = (oblique_projection(ra, n1, tol).matrix @ p.matrix
           + oblique_projection(rb, n2, tol).matrix @ (eye_m - p.matrix))
    rhs = oblique_projection(range_basis(total, tol), range_complement, tol).matrix
    scale = 1.0 + fro(lhs) + fro(rhs)
    if fro(lhs - rhs) > tol.residual_atol * scale:
        raise VerificationError("codomain projection identity failed for the given complements")

    lhs = (q.matrix @ oblique_projection(n1s, null_basis(A, tol), tol).matrix
           + (eye_n - q.matrix) @ oblique_projection(n2s, null_basis(B, tol), tol).matrix)
    rhs = oblique_projection(kernel_complement, null_basis(total, tol), tol).matrix
    scale = 1.0 + fro(lhs) + fro(rhs)
    if fro(lhs - rhs) > tol.residual_atol * scale:
        raise VerificationError("domain projection identity failed for the given complements")


def sum_reflexive_inverse(A, B, range_complement: Subspace, kernel_complement: Subspace,
                          tol: ToleranceConfig = DEFAULT_TOLERANCE,
                          n1: Subspace | None = None, n2: Subspace | None = None,
                          n1s: Subspace | None = None, n2s: Subspace | None = None) -> np.ndarray:
    """Reflexive inverse of A + B with null space ``range_complement`` and
    range ``kernel_complement``, assembled from reflexive inverses of the
    summands.

    Alternate admissible complements may be supplied through ``n1``,
    ``n2``, ``n1s``, ``n2s``; the projection identities they must satisfy
    are re-verified, and the assembled output is provably independent of
    the choice.
    """
    A, B = _pair(A, B)
    split = agreeing_split(A, B, range_complement, kernel_complement, tol)
    chosen = (
        split.n1 if n1 is None else n1,
        split.n2 if n2 is None else n2,
        split.n1s if n1s is None else n1s,
        split.n2s if n2s is None else n2s,
    )
    if any(x is not None for x in (n1, n2, n1s, n2s)):
        _verify_split_identities(A, B, split.p, split.q, *chosen,
                                 range_complement, kernel_complement, tol)
    c1, c2, c1s, c2s = chosen
    xa = reflexive_inverse(A, c1s, c1, tol)
    xb = reflexive_inverse(B, c2s, c2, tol)
    eye_m = np.eye(A.shape[0], dtype=np.complex128)
    eye_n = np.eye(A.shape[1], dtype=np.complex128)
    return (split.q.matrix @ xa @ split.p.matrix
            + (eye_n - split.q.matrix) @ xb @ (eye_m - split.p.matrix))


def werner_decomposition(A, B, range_complement: Subspace, kernel_complement: Subspace,
                         tol: ToleranceConfig = DEFAULT_TOLERANCE) -> tuple[np.ndarray, np.ndarray]:
    """The two summands whose sum is the prescribed reflexive inverse of
    A + B.

    Returns (X_A, X_B) where X_A is the reflexive inverse of A with range
    N(B) cap N and null space R(B) + M, and X_B the mirror image.  The
    compressed form Q X_A P of the first summand is checked against X_A
    before returning.
    """
    A, B = _pair(A, B)
    split = agreeing_split(A, B, range_complement, kernel_complement, tol)
    xa = reflexive_inverse(A, split.n1s, split.n1, tol)
    xb = reflexive_inverse(B, split.n2s, split.n2, tol)

    compressed = split.q.matrix @ xa @ split.p.matrix
    if fro(compressed - xa) > tol.residual_atol * (1.0 + fro(xa)):
        raise VerificationError("compressed first summand disagrees with the direct route")
    return xa, xb


def ordered_inverse_additivity(A, B, kind: str,
                               tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """Inverse additivity under the order matching ``kind``.

    kind = "moore_penrose" needs A star-below A + B and returns
    A+ + B+; "group" needs the sharp order and returns A# + B#; "core"
    needs the core order on the pair and on the adjoint pair and returns
    the sum of core inverses.  The sum is verified against the directly
    computed inverse of A + B.
    """
    A, B = _pair(A, B)
    total = A + B
    if kind == "moore_penrose":
        report = star_order(A, total, tol)
        if not report.holds:
            raise OrderConditionError("required order fails: A is not star-below A + B", report)
        result = pinv(A, tol) + pinv(B, tol)
        oracle = pinv(total, tol)
    elif kind == "group":
        report = sharp_order(A, total, tol)
        if not report.holds:
            raise OrderConditionError("required order fails: A is not sharp-below A + B", report)
        result = group_inverse(A, tol) + group_inverse(B, tol)
        oracle = group_inverse(total, tol)
    elif kind == "core":
        report = core_order(A, total, tol)
        if not report.holds:
            raise OrderConditionError("required order fails: A is not core-below A + B", report)
        mirrored = core_order(adjoint(A), adjoint(total), tol)
        if not mirrored.holds:
            raise OrderConditionError("required order fails: A* is not core-below (A + B)*",
                                      mirrored)
        result = core_inverse(A, tol) + core_inverse(B, tol)
        oracle = core_inverse(total, tol)
    else:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(INVERSE_KINDS)}")

    bound = max(tol.residual_atol, 1e-9) * (1.0 + fro(oracle))
    if fro(result - oracle) > bound:
        raise VerificationError("inverse additivity failed the direct-route check")
    return result

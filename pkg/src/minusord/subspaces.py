"""Subspace geometry: orthonormal bases, angles, sums, projections.

A subspace of C^n is represented by an orthonormal basis stored as the
columns of an (n, k) array; the zero subspace keeps its ambient dimension
and carries an empty basis.  All set operations (sum, intersection,
relative complement) go through rank-revealing SVD factorizations with the
shared rank cutoff from :class:`~minusord.linalg.ToleranceConfig`.
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

__all__ = [
    "Subspace",
    "Projection",
    "AngleEquivalences",
    "range_basis",
    "null_basis",
    "subspace_sum",
    "intersect",
    "ominus",
    "is_direct_sum",
    "subspace_equal",
    "minimal_angle_cos",
    "angle_equivalences",
    "orthogonal_projection",
    "oblique_projection",
]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A linear subspace of C^n held as an orthonormal column basis.

    Parameters
    ----------
    basis : ndarray
        Array of shape (ambient_dim, dim) with orthonormal columns.  The
        zero subspace is the (ambient_dim, 0) empty array.
    """

    basis: np.ndarray

    def __post_init__(self):
        arr = as_matrix(self.basis, "basis")
        if arr.shape[0] < 1:
            raise ValueError("ambient dimension must be positive")
        if arr.shape[1] > arr.shape[0]:
            raise ValueError("more basis vectors than the ambient dimension")
        object.__setattr__(self, "basis", arr)

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(np.zeros((ambient_dim, 0), dtype=np.complex128))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(np.eye(ambient_dim, dtype=np.complex128))

    @classmethod
    def from_span(cls, vectors, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> "Subspace":
        """Orthonormalize the columns of ``vectors`` into a Subspace.

        Rank-deficient spans are compressed with the shared rank cutoff.
        """
        arr = as_matrix(vectors, "vectors")
        if arr.shape[1] == 0:
            return cls.zero(arr.shape[0])
        u, s, _ = np.linalg.svd(arr, full_matrices=False)
        if s.size == 0 or s[0] == 0.0:
            return cls.zero(arr.shape[0])
        cutoff = tol.effective_rank_rtol(arr.shape) * s[0]
        rank = int(np.count_nonzero(s > cutoff))
        return cls(u[:, :rank])

    def perp(self) -> "Subspace":
        """Orthogonal complement."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        u, _, _ = np.linalg.svd(self.basis, full_matrices=True)
        return Subspace(u[:, self.dim:])

    def projector(self) -> np.ndarray:
        """Matrix of the orthogonal projection onto this subspace."""
        return self.basis @ adjoint(self.basis)

    def contains_vector(self, v, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        v = np.asarray(v, dtype=np.complex128).reshape(-1)
        if v.shape[0] != self.ambient_dim:
            raise ValueError("ambient mismatch")
        nv = float(np.linalg.norm(v))
        if nv == 0.0:
            return True
        resid = v - self.projector() @ v
        return float(np.linalg.norm(resid)) <= tol.subspace_atol(self.ambient_dim) * nv


@dataclass(frozen=True, eq=False)
class Projection:
    """An idempotent together with its range and null space.

    ``matrix`` is the idempotent itself; ``range`` and ``nullspace`` record
    the decomposition it projects along.  For an orthogonal projection the
    nullspace is the orthogonal complement of the range and the matrix is
    Hermitian.
    """

    matrix: np.ndarray
    range: Subspace
    nullspace: Subspace

    def __post_init__(self):
        mat = as_matrix(self.matrix, "projection matrix")
        if mat.shape[0] != mat.shape[1]:
            raise ValueError("projection matrix must be square")
        # loose idempotency screen; constructors verify the tight version
        if fro(mat @ mat - mat) > 1e-6 * (1.0 + fro(mat) ** 2):
            raise ValueError("matrix is not idempotent")
        object.__setattr__(self, "matrix", mat)

    def complement(self) -> "Projection":
        """The complementary projection I - P, onto nullspace along range."""
        eye = np.eye(self.matrix.shape[0], dtype=np.complex128)
        return Projection(eye - self.matrix, self.nullspace, self.range)

    def adjoint(self) -> "Projection":
        """The adjoint idempotent P*, onto N(P)^perp along R(P)^perp."""
        return Projection(adjoint(self.matrix), self.nullspace.perp(), self.range.perp())

    def is_hermitian(self, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        return fro(self.matrix - adjoint(self.matrix)) <= tol.residual_atol * (1.0 + fro(self.matrix))


def _check_ambient(m_space: Subspace, n_space: Subspace):
    if m_space.ambient_dim != n_space.ambient_dim:
        raise ValueError("ambient mismatch")


def range_basis(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Subspace:
    """Orthonormal basis of the column space of ``A``."""
    return Subspace.from_span(as_matrix(A), tol)


def null_basis(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Subspace:
    """Orthonormal basis of the null space of ``A``."""
    A = as_matrix(A)
    if A.shape[1] == 0:
        raise ValueError("matrix must have at least one column")
    u, s, vh = np.linalg.svd(A, full_matrices=True)
    if s.size == 0 or s[0] == 0.0:
        rank = 0
    else:
        cutoff = tol.effective_rank_rtol(A.shape) * s[0]
        rank = int(np.count_nonzero(s > cutoff))
    v = vh.conj().T
    return Subspace(v[:, rank:])


def subspace_sum(m_space: Subspace, n_space: Subspace,
                 tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Subspace:
    """The subspace M + N, by re-orthonormalizing the joined bases."""
    _check_ambient(m_space, n_space)
    return Subspace.from_span(np.hstack([m_space.basis, n_space.basis]), tol)


def intersect(m_space: Subspace, n_space: Subspace,
              tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Subspace:
    """The subspace M intersect N.

    Null vectors (x; y) of [B_M | B_N] satisfy B_M x = -B_N y, so the
    vectors B_M x run over the intersection.  The null space is read off
    the SVD of the joined bases with the shared cutoff; each coefficient
    block has norm 1/sqrt(2), so the final orthonormalization is stable.
    """
    _check_ambient(m_space, n_space)
    if m_space.dim == 0 or n_space.dim == 0:
        return Subspace.zero(m_space.ambient_dim)
    joined = np.hstack([m_space.basis, n_space.basis])
    _, s, vh = np.linalg.svd(joined, full_matrices=True)
    cutoff = tol.effective_rank_rtol(joined.shape) * (s[0] if s.size else 0.0)
    rank = int(np.count_nonzero(s > cutoff))
    coeff = vh.conj().T[:, rank:]
    if coeff.shape[1] == 0:
        return Subspace.zero(m_space.ambient_dim)
    return Subspace.from_span(m_space.basis @ coeff[: m_space.dim, :], tol)


def ominus(m_space: Subspace, n_space: Subspace,
           tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Subspace:
    """The relative orthogonal complement M ominus N = M intersect (M cap N)^perp.

    Computed by projecting the basis of M off the intersection and
    re-orthonormalizing; the dimension drops by exactly dim(M cap N).
    """
    _check_ambient(m_space, n_space)
    inter = intersect(m_space, n_space, tol)
    if inter.dim == 0:
        return m_space
    reduced = m_space.basis - inter.projector() @ m_space.basis
    return Subspace.from_span(reduced, tol)


def is_direct_sum(m_space: Subspace, n_space: Subspace,
                  tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Whether M + N is direct, i.e. dim(M) + dim(N) == dim(M + N)."""
    _check_ambient(m_space, n_space)
    return subspace_sum(m_space, n_space, tol).dim == m_space.dim + n_space.dim


def subspace_equal(m_space: Subspace, n_space: Subspace,
                   tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Whether two subspaces coincide.

    Dimensions must match and the largest principal-angle sine between
    them, measured as c0(M, N^perp), must fall below the equality
    threshold derived from the rank cutoff.
    """
    _check_ambient(m_space, n_space)
    if m_space.dim != n_space.dim:
        return False
    if m_space.dim == 0:
        return True
    gap = minimal_angle_cos(m_space, n_space.perp())
    return gap <= tol.subspace_atol(m_space.ambient_dim)


def minimal_angle_cos(m_space: Subspace, n_space: Subspace) -> float:
    """Cosine of the minimal angle between two subspaces.

    This is sup |<x, y>| over unit vectors x in M, y in N, i.e. the
    largest singular value of B_M* B_N, clipped into [0, 1] against
    floating-point overshoot.  Either subspace being zero gives 0.
    """
    _check_ambient(m_space, n_space)
    if m_space.dim == 0 or n_space.dim == 0:
        return 0.0
    s = np.linalg.svd(adjoint(m_space.basis) @ n_space.basis, compute_uv=False)
    return float(np.clip(s[0], 0.0, 1.0))


@dataclass(frozen=True)
class AngleEquivalences:
    """Independent verdicts of the three equivalent angle conditions.

    In finite dimension, c0(M, N) < 1, the sum M + N being direct, and
    M^perp + N^perp spanning the whole space are equivalent; each field is
    evaluated on its own so the equivalence itself is observable.
    """

    c0: float
    c0_lt_1: bool
    direct_sum_closed: bool
    complements_span: bool


def angle_equivalences(m_space: Subspace, n_space: Subspace,
                       tol: ToleranceConfig = DEFAULT_TOLERANCE) -> AngleEquivalences:
    _check_ambient(m_space, n_space)
    c0 = minimal_angle_cos(m_space, n_space)
    trivial = intersect(m_space, n_space, tol).dim == 0
    spans = subspace_sum(m_space.perp(), n_space.perp(), tol).dim == m_space.ambient_dim
    return AngleEquivalences(
        c0=c0,
        c0_lt_1=c0 < 1.0 - tol.angle_gap,
        direct_sum_closed=trivial,
        complements_span=spans,
    )


def orthogonal_projection(m_space: Subspace) -> Projection:
    """Orthogonal projection onto M."""
    return Projection(m_space.projector(), m_space, m_space.perp())


def oblique_projection(m_space: Subspace, n_space: Subspace,
                       tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Projection:
    """Projection onto M along N, for complementary M and N.

    The matrix solves P [B_M | B_N] = [B_M | 0].  Raises
    :class:`ComplementError` when M and N do not split the ambient space.
    """
    _check_ambient(m_space, n_space)
    n = m_space.ambient_dim
    if m_space.dim + n_space.dim != n or not is_direct_sum(m_space, n_space, tol):
        raise ComplementError("not a complementary pair")
    joined = np.hstack([m_space.basis, n_space.basis])
    target = np.hstack([m_space.basis, np.zeros((n, n_space.dim), dtype=np.complex128)])
    try:
        matrix = np.linalg.solve(joined.T, target.T).T
    except np.linalg.LinAlgError as exc:
        raise ComplementError("not a complementary pair") from exc
    return Projection(matrix, m_space, n_space)

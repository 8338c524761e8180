"""Generalized inverses: Moore-Penrose, prescribed-space reflexive, group, core.

A reflexive inverse of A with prescribed range N and null space M is the
unique X with A X A = A, X A X = X, R(X) = N, N(X) = M; it exists exactly
when N complements N(A) in the domain and M complements R(A) in the
codomain.  Then A X is the projection onto R(A) along M and X A the
projection onto N along N(A).
"""

from __future__ import annotations

import numpy as np

from .exceptions import ComplementError, GroupInvertibilityError
from .linalg import (
    DEFAULT_TOLERANCE,
    ToleranceConfig,
    adjoint,
    as_matrix,
    numerical_rank,
)
from .subspaces import Subspace, is_direct_sum, null_basis, range_basis

__all__ = [
    "pinv",
    "reflexive_inverse",
    "is_group_invertible",
    "group_inverse",
    "core_inverse",
]


def pinv(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """Moore-Penrose inverse via SVD with the shared rank cutoff."""
    A = as_matrix(A)
    u, s, vh = np.linalg.svd(A, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((A.shape[1], A.shape[0]), dtype=np.complex128)
    cutoff = tol.effective_rank_rtol(A.shape) * s[0]
    rank = int(np.count_nonzero(s > cutoff))
    inv = np.zeros_like(s)
    inv[:rank] = 1.0 / s[:rank]
    return (vh.conj().T * inv) @ u.conj().T


def reflexive_inverse(A, range_space: Subspace, nullspace: Subspace,
                      tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """The reflexive inverse of A with range ``range_space`` and null space
    ``nullspace``.

    Parameters
    ----------
    A : array_like, shape (m, n)
    range_space : Subspace of C^n
        Must complement N(A) in the domain.
    nullspace : Subspace of C^m
        Must complement R(A) in the codomain.

    Returns
    -------
    X : ndarray, shape (n, m)
        X inverts A from ``range_space`` onto R(A) and annihilates
        ``nullspace``; equivalently X = (A restricted to range_space)^-1
        composed with the projection onto R(A) along ``nullspace``.
    """
    A = as_matrix(A, "A")
    m, n = A.shape
    if range_space.ambient_dim != n or nullspace.ambient_dim != m:
        raise ValueError("ambient mismatch")
    ra = range_basis(A, tol)
    ker = null_basis(A, tol)
    if (ra.dim + nullspace.dim != m) or not is_direct_sum(ra, nullspace, tol):
        raise ComplementError("complement condition violated: R(A) and the "
                              "prescribed null space do not split the codomain")
    if (range_space.dim + ker.dim != n) or not is_direct_sum(range_space, ker, tol):
        raise ComplementError("complement condition violated: the prescribed "
                              "range and N(A) do not split the domain")
    bn = range_space.basis
    joined = np.hstack([A @ bn, nullspace.basis])
    target = np.hstack([bn, np.zeros((n, nullspace.dim), dtype=np.complex128)])
    try:
        return np.linalg.solve(joined.T, target.T).T
    except np.linalg.LinAlgError as exc:
        raise ComplementError("complement condition violated") from exc


def is_group_invertible(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Whether rank(A @ A) == rank(A), i.e. R(A) and N(A) split the space."""
    A = as_matrix(A, "A")
    if A.shape[0] != A.shape[1]:
        raise ValueError("square matrix required")
    return numerical_rank(A @ A, tol) == numerical_rank(A, tol)


def group_inverse(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """Group inverse: the reflexive inverse with range R(A), null space N(A)."""
    A = as_matrix(A, "A")
    if not is_group_invertible(A, tol):
        raise GroupInvertibilityError("not group invertible")
    return reflexive_inverse(A, range_basis(A, tol), null_basis(A, tol), tol)


def core_inverse(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """Core inverse: the reflexive inverse with range R(A), null space N(A*).

    Defined for group-invertible A; coincides with A# A A+ (checked in the
    test suite as an independent route).
    """
    A = as_matrix(A, "A")
    if not is_group_invertible(A, tol):
        raise GroupInvertibilityError("not group invertible")
    return reflexive_inverse(A, range_basis(A, tol), null_basis(adjoint(A), tol), tol)

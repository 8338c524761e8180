"""Shared numerical primitives: tolerances, SVD, numerical rank.

Everything in the package operates on dense complex numpy arrays.  Real
input is accepted at every entry point and widened to complex128; NaN or
infinite entries are rejected up front so the decompositions never see
them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOLERANCE",
    "as_matrix",
    "as_vector",
    "adjoint",
    "fro",
    "svd",
    "singular_values",
    "numerical_rank",
    "rank_info",
    "range_contains",
    "effective_condition",
]

_EPS = float(np.finfo(np.float64).eps)

#: Safety factor on top of max(m, n) * eps for the default rank cutoff.
RANK_SAFETY_FACTOR = 16.0

#: Multiple of the effective rank cutoff used as the principal-angle-sine
#: threshold when testing two subspaces for equality.  Large enough to
#: absorb error from compositions of well-conditioned solves, small enough
#: that genuinely distinct subspaces in the supported regime never pass.
SUBSPACE_EQ_FACTOR = 1e6


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical thresholds shared by every predicate in the package.

    Parameters
    ----------
    rank_rtol : float or None
        Relative singular-value cutoff for rank decisions: singular values
        sigma with ``sigma <= rank_rtol * sigma_max`` count as zero.  When
        ``None`` (the default) each matrix uses ``16 * eps * max(m, n)``,
        the usual dense-rank heuristic.
    residual_atol : float
        Cutoff for formula residuals.  Residuals are always compared
        against ``residual_atol`` times a problem-size scale documented at
        each operation.
    angle_gap : float
        Margin below one for minimal-angle tests: ``c0 < 1 - angle_gap``
        counts as "strictly less than one".
    """

    rank_rtol: float | None = None
    residual_atol: float = 1e-10
    angle_gap: float = 1e-8

    def __post_init__(self):
        if self.rank_rtol is not None and not 0.0 <= self.rank_rtol < 1.0:
            raise ValueError("rank_rtol must satisfy 0 <= rank_rtol < 1")
        if self.residual_atol < 0.0:
            raise ValueError("residual_atol must be nonnegative")
        if not 0.0 <= self.angle_gap < 1.0:
            raise ValueError("angle_gap must satisfy 0 <= angle_gap < 1")

    def effective_rank_rtol(self, shape: tuple[int, ...]) -> float:
        """Relative rank cutoff in effect for a matrix of the given shape."""
        if self.rank_rtol is not None:
            return self.rank_rtol
        return RANK_SAFETY_FACTOR * _EPS * max(max(shape), 1)

    def subspace_atol(self, ambient_dim: int) -> float:
        """Threshold on principal-angle sines for subspace equality tests."""
        return SUBSPACE_EQ_FACTOR * self.effective_rank_rtol((ambient_dim, ambient_dim))


DEFAULT_TOLERANCE = ToleranceConfig()


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce ``a`` to a finite two-dimensional complex128 array."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be two-dimensional, got shape {arr.shape}")
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def as_vector(a, name: str = "vector") -> np.ndarray:
    """Coerce ``a`` to a finite one-dimensional complex128 array.

    Column vectors of shape (n, 1) are accepted and flattened.
    """
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def adjoint(A) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(A).conj().T


def fro(A) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(A)))


def svd(A, tol: ToleranceConfig = DEFAULT_TOLERANCE):
    """Economy singular value decomposition.

    Returns
    -------
    (U, S, V) : tuple of ndarray
        ``A = U @ np.diag(S) @ V.conj().T`` with U, V having orthonormal
        columns and S sorted in descending order.  Non-convergence raises
        ``numpy.linalg.LinAlgError``.
    """
    A = as_matrix(A)
    u, s, vh = np.linalg.svd(A, full_matrices=False)
    return u, s, vh.conj().T


def singular_values(A) -> np.ndarray:
    A = as_matrix(A)
    if min(A.shape) == 0:
        return np.zeros(0)
    return np.linalg.svd(A, compute_uv=False)


def rank_info(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> tuple[int, bool]:
    """Numerical rank together with a near-boundary flag.

    The flag is set when any singular value falls within a factor of ten
    of the cutoff, i.e. when the rank decision is not clearly resolved.
    """
    A = as_matrix(A)
    s = singular_values(A)
    if s.size == 0 or s[0] == 0.0:
        return 0, False
    cutoff = tol.effective_rank_rtol(A.shape) * s[0]
    rank = int(np.count_nonzero(s > cutoff))
    near = bool(np.any((s > cutoff / 10.0) & (s < cutoff * 10.0)))
    return rank, near


def numerical_rank(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> int:
    """Number of singular values above the relative cutoff.

    Zero matrices have rank zero by convention (the cutoff degenerates).
    """
    return rank_info(A, tol)[0]


def range_contains(B, A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Whether the column space of ``A`` lies inside that of ``B``.

    Tested as rank([B | A]) == rank(B) with the shared cutoff.
    """
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    if A.shape[0] != B.shape[0]:
        raise ValueError("row counts differ")
    return numerical_rank(np.hstack([B, A]), tol) == numerical_rank(B, tol)


def effective_condition(A, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> float:
    """Ratio of the largest singular value to the smallest one above the
    rank cutoff.  Returns 0.0 for the zero matrix."""
    s = singular_values(A)
    if s.size == 0 or s[0] == 0.0:
        return 0.0
    cutoff = tol.effective_rank_rtol(np.shape(A)) * s[0]
    kept = s[s > cutoff]
    return float(s[0] / kept[-1])

"""Decoupling of least-squares problems for sums A + B.

When A sits left-minus-below A + B, the joint problem
min ||(A + B) x - c|| splits: the projection P with A = P (A + B) yields
the positive definite weight W = P*P + (I - P*)(I - P), and the joint
solutions are exactly the simultaneous solutions of the two weighted
normal equations A* W (A x - c) = 0 and B* W (B x - c) = 0.  When the
relation is left-star the canonical P is orthogonal and W collapses to
the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import MembershipError, OrderConditionError, VerificationError
from .geninv import pinv
from .linalg import (
    DEFAULT_TOLERANCE,
    ToleranceConfig,
    adjoint,
    as_matrix,
    as_vector,
    fro,
    numerical_rank,
)
from .orders import left_minus_order
from .subspaces import Projection
from .sums import build_split

__all__ = [
    "Weight",
    "DecoupledLeastSquares",
    "solve_system",
    "wlss_solve",
    "decoupled_lss",
]


@dataclass(frozen=True, eq=False)
class Weight:
    """A Hermitian positive semidefinite weight for least squares.

    ``source_projection`` records the idempotent the weight was derived
    from, when there is one.
    """

    matrix: np.ndarray
    source_projection: Projection | None = None

    @classmethod
    def identity(cls, n: int) -> "Weight":
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def from_projection(cls, projection: Projection) -> "Weight":
        """W = P*P + (I - P*)(I - P), positive definite for idempotent P."""
        p = as_matrix(projection.matrix, "projection matrix")
        eye = np.eye(p.shape[0], dtype=np.complex128)
        w = adjoint(p) @ p + (eye - adjoint(p)) @ (eye - p)
        return cls(w, projection)

    def validate(self, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> None:
        """Raise ValueError unless the matrix is Hermitian and PSD."""
        w = as_matrix(self.matrix, "weight")
        if w.shape[0] != w.shape[1]:
            raise ValueError("weight must be square")
        scale = 1.0 + fro(w)
        if fro(w - adjoint(w)) > tol.residual_atol * scale:
            raise ValueError("weight is not Hermitian")
        smallest = float(np.linalg.eigvalsh((w + adjoint(w)) / 2.0)[0])
        if smallest < -tol.residual_atol * scale:
            raise ValueError("weight is not positive semidefinite")


def _as_weight(w) -> Weight:
    if isinstance(w, Weight):
        return w
    return Weight(as_matrix(w, "weight"))


def solve_system(A, B, a, b, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """Solve A x = a and B x = b simultaneously through the single system
    (A + B) x = a + b.

    Requires a in R(A), b in R(B) and A left-minus-below A + B; then the
    minimum-norm solution of the summed system solves both equations,
    which is verified before returning.
    """
    A, B = as_matrix(A, "A"), as_matrix(B, "B")
    if A.shape != B.shape:
        raise ValueError("shape mismatch")
    a = as_vector(a, "a")
    b = as_vector(b, "b")
    if a.shape[0] != A.shape[0] or b.shape[0] != B.shape[0]:
        raise ValueError("right-hand side length mismatch")
    for mat, vec, label in ((A, a, "a"), (B, b, "b")):
        if numerical_rank(np.hstack([mat, vec[:, None]]), tol) != numerical_rank(mat, tol):
            raise MembershipError(f"membership fails: {label} is outside the column space")
    total = A + B
    report = left_minus_order(A, total, tol)
    if not report.holds:
        raise OrderConditionError("order fails: A is not left-minus-below A + B", report)
    x = pinv(total, tol) @ (a + b)
    scale = 1.0 + fro(A) + fro(B) + float(np.linalg.norm(a) + np.linalg.norm(b))
    if (np.linalg.norm(A @ x - a) > tol.residual_atol * scale
            or np.linalg.norm(B @ x - b) > tol.residual_atol * scale):
        raise VerificationError("summed solution failed to solve the pieces")
    return x


def wlss_solve(C, y, w, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> np.ndarray:
    """Minimum-norm solution of the weighted least-squares normal equation
    C* W (C x - y) = 0."""
    C = as_matrix(C, "C")
    y = as_vector(y, "y")
    if y.shape[0] != C.shape[0]:
        raise ValueError("right-hand side length mismatch")
    weight = _as_weight(w)
    weight.validate(tol)
    gram = adjoint(C) @ weight.matrix @ C
    return pinv(gram, tol) @ (adjoint(C) @ weight.matrix @ y)


@dataclass(frozen=True, eq=False)
class DecoupledLeastSquares:
    """Joint and decoupled least-squares solutions with cross-residuals.

    ``x_joint`` minimizes ||(A + B) x - c||; ``x_system`` solves the two
    weighted normal equations simultaneously; ``residuals`` holds the
    cross-verification norms (each solution plugged into the other
    problem's stationarity conditions).
    """

    x_joint: np.ndarray
    x_system: np.ndarray
    weight: Weight
    residuals: dict[str, float]


def decoupled_lss(A, B, c, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> DecoupledLeastSquares:
    """Split the joint least-squares problem for A + B into weighted
    problems for A and B separately.

    The weight comes from the optimal split projection, so it is the
    identity whenever that projection is orthogonal (in particular under
    the left-star relation).
    """
    A, B = as_matrix(A, "A"), as_matrix(B, "B")
    if A.shape != B.shape:
        raise ValueError("shape mismatch")
    c = as_vector(c, "c")
    if c.shape[0] != A.shape[0]:
        raise ValueError("right-hand side length mismatch")
    total = A + B
    report = left_minus_order(A, total, tol)
    if not report.holds:
        raise OrderConditionError("order fails: A is not left-minus-below A + B", report)

    witness = build_split(A, B, tol)
    weight = Weight.from_projection(witness.p)
    weight.validate(tol)
    w = weight.matrix

    x_joint = pinv(total, tol) @ c
    stacked = np.vstack([adjoint(A) @ w @ A, adjoint(B) @ w @ B])
    rhs = np.concatenate([adjoint(A) @ w @ c, adjoint(B) @ w @ c])
    x_system = pinv(stacked, tol) @ rhs

    def joint_normal(x):
        return float(np.linalg.norm(adjoint(total) @ (total @ x - c)))

    def weighted_normal(mat, x):
        return float(np.linalg.norm(adjoint(mat) @ w @ (mat @ x - c)))

    residuals = {
        "joint_normal_at_joint": joint_normal(x_joint),
        "joint_normal_at_system": joint_normal(x_system),
        "weighted_a_at_joint": weighted_normal(A, x_joint),
        "weighted_b_at_joint": weighted_normal(B, x_joint),
        "weighted_a_at_system": weighted_normal(A, x_system),
        "weighted_b_at_system": weighted_normal(B, x_system),
    }
    scale = (1.0 + fro(A) + fro(B)) * (1.0 + float(np.linalg.norm(c)))
    for key, value in residuals.items():
        if value > tol.residual_atol * scale * 100.0:
            raise VerificationError(f"cross-residual {key} exceeded tolerance")
    return DecoupledLeastSquares(x_joint=x_joint, x_system=x_system,
                                 weight=weight, residuals=residuals)

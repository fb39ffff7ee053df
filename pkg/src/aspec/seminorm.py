"""Membership, seminorm, and adjoint calculus induced by the weight.

A square matrix X has a finite weighted seminorm exactly when it leaves the
null space of the weight invariant; for those members the seminorm is the
operator norm of the compressed matrix A^(1/2) X (A^(1/2))^dagger.  An
independent route to the same number goes through the supremum of the state
functionals f(X*AX)/f(A), realized as a Hermitian eigenvalue problem; both
are exposed so they can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    ComplexMatrix,
    ToleranceConfig,
    check_same_shape,
    check_square,
    max_abs,
)
from .psd import PsdDecomposition


class NotMemberError(ValueError):
    """X has infinite seminorm: it moves the weight's null space."""


@dataclass(frozen=True)
class ASeminormValue:
    """Seminorm outcome; ``value`` is meaningful only when ``finite``."""

    finite: bool
    value: float | None = None


@dataclass(frozen=True)
class VectorState:
    """State f(Z) = <Z h, h> / <A h, h> for a unit vector h with <A h, h> > 0."""

    h: np.ndarray
    weight: float

    def __post_init__(self):
        if not self.weight > 0:
            raise ValueError("vector state needs <A h, h> > 0")

    def __call__(self, z: ComplexMatrix) -> complex:
        return complex(self.h.conj() @ (z @ self.h)) / self.weight


def _membership_defect(d: PsdDecomposition, x: ComplexMatrix) -> float:
    comp = np.eye(d.dim) - d.proj
    return max_abs(d.proj @ x @ comp)


def a_membership(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff X maps the null space of the weight into itself."""
    x = np.asarray(x, dtype=np.complex128)
    check_square(x, "X")
    check_same_shape(x, d.a)
    return _membership_defect(d, x) <= tol.atol + tol.rtol * max_abs(x)


def membership_certificate(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> ComplexMatrix:
    """Certificate U with A^(1/2) X = U A^(1/4) and U*U <= c A^(1/2), c the squared seminorm.

    Raises NotMemberError when X is not a member.
    """
    if not a_membership(d, x, tol):
        raise NotMemberError("X moves the null space of the weight; no certificate exists")
    return d.sqrt @ x @ d.pinv_power(0.25)


def compressed(d: PsdDecomposition, x: ComplexMatrix) -> ComplexMatrix:
    """The compression A^(1/2) X (A^(1/2))^dagger carrying all seminorm data."""
    return d.sqrt @ x @ d.sqrt_pinv


def a_seminorm(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> ASeminormValue:
    """Weighted seminorm of X: infinite for non-members, else the norm of the compression."""
    x = np.asarray(x, dtype=np.complex128)
    check_square(x, "X")
    check_same_shape(x, d.a)
    if not a_membership(d, x, tol):
        return ASeminormValue(finite=False)
    svals = np.linalg.svd(compressed(d, x), compute_uv=False)
    return ASeminormValue(finite=True, value=float(svals[0]) if svals.size else 0.0)


def a_seminorm_oracle(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """State-supremum route to the seminorm.

    sqrt of the largest generalized eigenvalue of the pencil (X*AX, A) on the
    range of the weight, evaluated as the top eigenvalue of
    (A^(1/2))^dagger X*AX (A^(1/2))^dagger.  The supremum over all states is
    attained at a vector state, so this equals the seminorm for members.
    """
    x = np.asarray(x, dtype=np.complex128)
    if not a_membership(d, x, tol):
        raise NotMemberError("the state supremum diverges for non-members")
    gram = d.sqrt_pinv @ (x.conj().T @ d.a @ x) @ d.sqrt_pinv
    gram = (gram + gram.conj().T) / 2
    mu_max = float(np.max(np.linalg.eigvalsh(gram)))
    return float(np.sqrt(max(mu_max, 0.0)))


def a_adjoint(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> ComplexMatrix:
    """Canonical weighted adjoint A^dagger X* A, satisfying A X = (adjoint)* A.

    Weighted adjoints are not unique; this pins the representative supported
    on the range of the weight.  Raises NotMemberError for non-members.
    """
    x = np.asarray(x, dtype=np.complex128)
    if not a_membership(d, x, tol):
        raise NotMemberError("non-members admit no weighted adjoint")
    return d.pinv @ x.conj().T @ d.a


def random_member(d: PsdDecomposition, rng: np.random.Generator, scale: float = 1.0) -> ComplexMatrix:
    """Random member for the given weight: P M P + (1-P) M' (1-P) with Gaussian M, M'.

    The construction keeps the null space of the weight invariant, so
    membership holds by design (up to rounding).
    """
    n = d.dim
    shape = (n, n)
    m = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) * (scale / np.sqrt(2))
    m2 = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) * (scale / np.sqrt(2))
    comp = np.eye(n) - d.proj
    return d.proj @ m @ d.proj + comp @ m2 @ comp


def is_a_selfadjoint(a: ComplexMatrix, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff A X is Hermitian within tolerance, i.e. A X = X* A."""
    a = np.asarray(a, dtype=np.complex128)
    x = np.asarray(x, dtype=np.complex128)
    check_square(a, "A")
    check_same_shape(a, x)
    ax = a @ x
    return max_abs(ax - ax.conj().T) <= tol.atol + tol.rtol * max_abs(ax)

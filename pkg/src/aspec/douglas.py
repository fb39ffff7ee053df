"""Factorization solvers for operator equations of majorization type.

``douglas_solve`` answers "is X*X dominated by a multiple of Y*Y, and if so
produce Z with X = Z*Y"; in finite dimensions the domination question is
exactly null-space containment N(Y) <= N(X), which is decided via the SVD of
Y instead of searching for a scale factor.  ``power_factorize`` peels a
fractional power off a dominating PSD matrix: X = V B^alpha with both
operator inequalities on V checked by the caller's tests.
"""

from __future__ import annotations

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


class NotMajorizedError(ValueError):
    """No finite scale alpha gives X*X <= alpha Y*Y (null spaces incompatible)."""


def douglas_solve(x: ComplexMatrix, y: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> ComplexMatrix:
    """Solve X = Z*Y for the minimal-norm Z, or raise NotMajorizedError.

    Solvability holds iff N(Y) is contained in N(X); the returned canonical
    solution is Z = (X Y^dagger)*.
    """
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    check_square(x, "X")
    check_same_shape(x, y)
    _, svals, vh = np.linalg.svd(y)
    smax = svals[0] if svals.size else 0.0
    null_mask = svals <= tol.rank_rtol * smax if smax > 0 else np.ones_like(svals, dtype=bool)
    null_basis = vh[null_mask].conj().T  # columns span N(Y)
    if null_basis.shape[1]:
        defect = max_abs(x @ null_basis)
        if defect > tol.atol + tol.rtol * max_abs(x):
            raise NotMajorizedError(
                f"N(Y) is not contained in N(X) (defect {defect:.3e}); no finite majorization constant exists"
            )
    y_pinv = np.linalg.pinv(y, rcond=tol.rank_rtol)
    return (x @ y_pinv).conj().T


def power_factorize(
    x: ComplexMatrix,
    b: PsdDecomposition,
    alpha: float,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> ComplexMatrix:
    """Factor X = V B^alpha for 0 < alpha < 1/2, given X*X <= B.

    Returns V = X (B^alpha)^dagger.  The factor satisfies V*V <= B^(1-2 alpha)
    and V V* <= (X X*)^(1-2 alpha), up to the absolute tolerance.
    """
    if not 0 < alpha < 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2), got {alpha}")
    x = np.asarray(x, dtype=np.complex128)
    check_square(x, "X")
    check_same_shape(x, b.a)
    gram_gap = float(np.min(np.linalg.eigvalsh(b.a - x.conj().T @ x)))
    if gram_gap < -(tol.atol + tol.rtol * max_abs(b.a)):
        raise ValueError(f"X*X is not dominated by B (eigenvalue defect {gram_gap:.3e})")
    return x @ b.pinv_power(alpha)

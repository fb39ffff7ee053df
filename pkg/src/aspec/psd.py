"""Validation of the PSD weight and its derived spectral objects.

One eigendecomposition of the weight is computed and cached; every derived
matrix (fractional powers, pseudoinverse, range projection) comes from the
same eigenpairs, so Moore-Penrose identities hold to rounding error rather
than to a tolerance stack.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    ComplexMatrix,
    ToleranceConfig,
    check_square,
    max_abs,
)


class NotPsdError(ValueError):
    """The weight is not positive semidefinite (or not Hermitian) within tolerance."""


@dataclass(frozen=True)
class PsdDecomposition:
    """Cached spectral data of a PSD weight.

    Eigenvalues below the rank cutoff are hard-zeroed, so ``rank``, ``gap``
    and every derived matrix agree on which directions count as the range.
    """

    a: ComplexMatrix
    sqrt: ComplexMatrix
    quarter: ComplexMatrix
    pinv: ComplexMatrix
    sqrt_pinv: ComplexMatrix
    proj: ComplexMatrix
    rank: int
    gap: float
    # cached eigendecomposition; eigvals already clamped and hard-zeroed
    eigvals: np.ndarray = field(repr=False, default=None)
    eigvecs: np.ndarray = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return self.a.shape[0]

    @property
    def range_basis(self) -> np.ndarray:
        """Orthonormal basis Q of the range, shape (dim, rank)."""
        return self.eigvecs[:, self.eigvals > 0]

    @property
    def range_eigvals(self) -> np.ndarray:
        """Retained (positive) eigenvalues, shape (rank,)."""
        return self.eigvals[self.eigvals > 0]

    def power(self, s: float) -> ComplexMatrix:
        """A^s by spectral calculus on the retained eigenvalues."""
        w = np.where(self.eigvals > 0, self.eigvals, 0.0)
        ws = np.where(w > 0, w**s, 0.0)
        return (self.eigvecs * ws) @ self.eigvecs.conj().T

    def pinv_power(self, s: float) -> ComplexMatrix:
        """(A^s)^dagger = pseudoinverse of the s-th power, same eigenbasis."""
        safe = np.where(self.eigvals > 0, self.eigvals, 1.0)
        ws = np.where(self.eigvals > 0, safe ** (-s), 0.0)
        return (self.eigvecs * ws) @ self.eigvecs.conj().T


def psd_decompose(a: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> PsdDecomposition:
    """Validate the weight and precompute its derived objects.

    Raises NotPsdError if ``a`` is not square, not Hermitian within tolerance,
    or has an eigenvalue below -atol.  Eigenvalues in [-atol, 0] are clamped
    to 0; eigenvalues at or below rank_rtol * max eigenvalue are hard-zeroed.
    """
    a = np.asarray(a, dtype=np.complex128)
    check_square(a, "weight")
    herm_gap = max_abs(a - a.conj().T)
    if herm_gap > tol.atol + tol.rtol * max_abs(a):
        raise NotPsdError(f"weight is not Hermitian within tolerance (defect {herm_gap:.3e})")
    h = (a + a.conj().T) / 2
    w, u = np.linalg.eigh(h)
    if w[0] < -tol.atol:
        raise NotPsdError(f"weight has negative eigenvalue {w[0]:.3e}")
    w = np.clip(w, 0.0, None)
    lam_max = float(w[-1]) if w.size else 0.0
    w = np.where(w > tol.rank_rtol * lam_max, w, 0.0) if lam_max > 0 else np.zeros_like(w)
    retained = w > 0
    rank = int(np.count_nonzero(retained))
    gap = float(np.min(w[retained])) if rank else 0.0

    def spectral(f):
        vals = np.where(retained, f(np.where(retained, w, 1.0)), 0.0)
        return (u * vals) @ u.conj().T

    return PsdDecomposition(
        a=h,
        sqrt=spectral(np.sqrt),
        quarter=spectral(lambda x: x**0.25),
        pinv=spectral(lambda x: 1.0 / x),
        sqrt_pinv=spectral(lambda x: x**-0.5),
        proj=spectral(lambda x: np.ones_like(x)),
        rank=rank,
        gap=gap,
        eigvals=w,
        eigvecs=u,
    )


def fractional_power(d: PsdDecomposition, s: float) -> ComplexMatrix:
    """A^s for s > 0, with the hard-zeroed small eigenvalues kept at zero."""
    if s <= 0:
        raise ValueError(f"exponent must be positive, got {s}")
    return d.power(s)

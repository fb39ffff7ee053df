"""Weighted invertibility: decisions, canonical inverses, and certificates.

X is invertible relative to the weight exactly when the compression of X to
the range of the weight is invertible as an ordinary r x r matrix.  The
canonical inverse inverts that compression and is zero on the null space; the
invertible form completes it by the identity on the null space, giving an
inverse that is also invertible in the ordinary sense.  A certificate of the
two-sided state inequalities is produced from generalized eigenvalue pencils
on the range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .linalg import (
    DEFAULT_TOL,
    ComplexMatrix,
    ToleranceConfig,
    check_same_shape,
    check_square,
)
from .psd import PsdDecomposition
from .seminorm import NotMemberError, a_membership, a_seminorm, compressed


class ConvergenceError(RuntimeError):
    """The truncated inverse series did not reach the tolerance within max_terms."""


@dataclass(frozen=True)
class AInverseResult:
    """Outcome of the invertibility decision.

    ``canonical`` inverts the compression on the range and vanishes on the
    null space; ``invertible_form`` extends it by the identity on the null
    space and has full ordinary rank.  Both are present iff ``invertible``.
    """

    invertible: bool
    canonical: ComplexMatrix | None = None
    invertible_form: ComplexMatrix | None = None


@dataclass(frozen=True)
class ThvnCertificate:
    """Constants witnessing two-sided invertibility.

    c bounds the state ratios: (1/c) f(A) <= f(X*AX) <= c f(A) for every
    state; alpha bounds A^2 <= alpha A X X* A.  Both are inflated by
    (1 + rtol) so the inequalities hold strictly under floating point.
    """

    c: float
    alpha: float


def range_compression(d: PsdDecomposition, x: ComplexMatrix) -> ComplexMatrix:
    """Q* X Q in an orthonormal basis Q of the range of the weight (rank x rank)."""
    q = d.range_basis
    return q.conj().T @ np.asarray(x, dtype=np.complex128) @ q


def a_invertible(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> AInverseResult:
    """Decide weighted invertibility and build the canonical and invertible inverses.

    Non-members are reported as not invertible.  The decision threshold ties
    to the same rank policy as the weight decomposition: the compression is
    deemed invertible when its smallest singular value exceeds rank_rtol
    times its largest.
    """
    x = np.asarray(x, dtype=np.complex128)
    check_square(x, "X")
    check_same_shape(x, d.a)
    if not a_membership(d, x, tol):
        return AInverseResult(invertible=False)
    n = d.dim
    eye = np.eye(n)
    if d.rank == 0:
        return AInverseResult(invertible=True, canonical=np.zeros((n, n), dtype=np.complex128), invertible_form=eye.astype(np.complex128))
    c = range_compression(d, x)
    svals = np.linalg.svd(c, compute_uv=False)
    if svals[-1] <= tol.rank_rtol * svals[0] or svals[0] == 0.0:
        return AInverseResult(invertible=False)
    q = d.range_basis
    canonical = q @ np.linalg.inv(c) @ q.conj().T
    return AInverseResult(invertible=True, canonical=canonical, invertible_form=canonical + (eye - d.proj))


def neumann_a_inverse(
    d: PsdDecomposition,
    x: ComplexMatrix,
    tol: ToleranceConfig = DEFAULT_TOL,
    max_terms: int = 10_000,
) -> ComplexMatrix:
    """Weighted inverse of (1 - X) by geometric series, for seminorm of X below 1.

    Sums the powers of the compression P X P on the range and completes by
    the identity on the null space.  Truncates once a term's seminorm drops
    below atol; raises ConvergenceError if max_terms is hit first.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be positive")
    x = np.asarray(x, dtype=np.complex128)
    norm = a_seminorm(d, x, tol)
    if not norm.finite:
        raise NotMemberError("series inverse requires a member")
    if norm.value >= 1:
        raise ValueError(f"seminorm {norm.value:.6g} is not below 1; the series diverges")
    p = d.proj
    pxp = p @ x @ p
    total = p.copy()
    term = p.copy()
    for _ in range(max_terms):
        term = term @ pxp
        term_norm = np.linalg.svd(compressed(d, term), compute_uv=False)
        if (term_norm[0] if term_norm.size else 0.0) < tol.atol:
            break
        total = total + term
    else:
        raise ConvergenceError(f"series still above atol after {max_terms} terms")
    return total + (np.eye(d.dim) - p)


def _range_pencil_eigvalsh(d: PsdDecomposition, m: ComplexMatrix) -> np.ndarray:
    """Eigenvalues of the pencil (M, A) restricted to the range of the weight."""
    q = d.range_basis
    scale = d.range_eigvals**-0.5
    t = (q.conj().T @ m @ q) * scale[:, None] * scale[None, :]
    return np.linalg.eigvalsh((t + t.conj().T) / 2)


def thvn_certificate(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> ThvnCertificate | None:
    """Certificate constants for weighted invertibility, or None when not invertible.

    c comes from the extreme generalized eigenvalues of (X*AX, A) on the
    range; alpha from the top generalized eigenvalue of (A^2, A X X* A).
    Raises NotMemberError for non-members.
    """
    x = np.asarray(x, dtype=np.complex128)
    if not a_membership(d, x, tol):
        raise NotMemberError("certificates are defined for members only")
    result = a_invertible(d, x, tol)
    if not result.invertible:
        return None
    inflate = 1.0 + tol.rtol
    if d.rank == 0:
        return ThvnCertificate(c=inflate, alpha=inflate)
    mus = _range_pencil_eigvalsh(d, x.conj().T @ d.a @ x)
    c = max(float(mus[-1]), 1.0 / float(mus[0]))
    lam = d.range_eigvals
    comp = range_compression(d, x)
    m_r = np.diag(lam.astype(np.complex128) ** 2)
    n_r = (comp @ comp.conj().T) * lam[:, None] * lam[None, :]
    alphas = scipy.linalg.eigh((m_r + m_r.conj().T) / 2, (n_r + n_r.conj().T) / 2, eigvals_only=True)
    return ThvnCertificate(c=c * inflate, alpha=float(alphas[-1]) * inflate)

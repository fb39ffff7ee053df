"""Weighted spectrum, spectral radius, numerical range, and boundary demos.

Away from zero the weighted spectrum of a member X coincides with the
ordinary eigenvalues of P X, where P projects onto the range of the weight;
membership of zero is decided by the compression rank test, never by the
eigensolver (P X always has structural zero eigenvalues when the weight is
singular).  The numerical range is computed by support functions: each
direction is one Hermitian generalized eigenproblem on the range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .invert import AInverseResult, a_invertible
from .linalg import (
    DEFAULT_TOL,
    ComplexMatrix,
    ToleranceConfig,
    check_same_shape,
    check_square,
)
from .psd import PsdDecomposition
from .seminorm import (
    NotMemberError,
    VectorState,
    a_membership,
    a_seminorm,
    compressed,
    random_member,
)


class SpectrumPointError(ValueError):
    """An approach value sits on the spectrum, so no inverse exists there."""


@dataclass(frozen=True)
class ASpectrumResult:
    """Finite spectrum with its radius; points sorted by (Re, Im)."""

    points: tuple[complex, ...]
    radius: float
    contains_zero: bool


@dataclass(frozen=True)
class NumericalRangePolygon:
    """Support-function approximation of the weighted numerical range.

    ``vertices`` is the convex hull of the touching points (inner polygon,
    counterclockwise).  ``angles`` and ``support`` hold the outer half-plane
    data: the true range satisfies Re(z e^{-i angle_k}) <= support_k for all k.
    """

    directions: int
    vertices: tuple[complex, ...]
    angles: tuple[float, ...]
    support: tuple[float, ...]

    def contains(self, z: complex, slack: float) -> bool:
        """Membership in the outer half-plane intersection, within slack."""
        return all(
            (z * np.exp(-1j * theta)).real <= h + slack
            for theta, h in zip(self.angles, self.support)
        )


@dataclass(frozen=True)
class MollifierStep:
    """One approach step: normalized approximate inverse and its two defect seminorms."""

    x_n: ComplexMatrix
    left_defect: float
    right_defect: float


def _cluster_radius(tol: ToleranceConfig, scale: float) -> float:
    return 10 * tol.atol + tol.rtol * scale


def _cluster(values, radius: float) -> list[complex]:
    """Greedy centroid clustering of complex points within the given radius."""
    clusters: list[list[complex]] = []
    for z in sorted(values, key=lambda w: (w.real, w.imag)):
        for cl in clusters:
            if abs(z - np.mean(cl)) <= radius:
                cl.append(z)
                break
        else:
            clusters.append([z])
    return sorted((complex(np.mean(cl)) for cl in clusters), key=lambda w: (w.real, w.imag))


def _require_member(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig) -> ComplexMatrix:
    x = np.asarray(x, dtype=np.complex128)
    check_square(x, "X")
    check_same_shape(x, d.a)
    if not a_membership(d, x, tol):
        raise NotMemberError("operation requires a member (finite seminorm)")
    return x


def a_spectrum(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> ASpectrumResult:
    """Weighted spectrum of a member X.

    Nonzero part: clustered eigenvalues of P X.  Zero membership: the
    compression rank test of the invertibility module.  Left and right
    variants coincide with this set in finite dimensions.
    """
    x = _require_member(d, x, tol)
    px = d.proj @ x
    scale = float(np.linalg.norm(px, 2)) if px.size else 0.0
    radius = _cluster_radius(tol, scale)
    eigs = np.linalg.eigvals(px)
    points = _cluster([complex(z) for z in eigs if abs(z) > radius], radius)
    inv = a_invertible(d, x, tol)
    if not inv.invertible:
        points.append(0j)
    points = sorted(points, key=lambda w: (w.real, w.imag))
    r = max((abs(z) for z in points), default=0.0)
    return ASpectrumResult(points=tuple(points), radius=float(r), contains_zero=not inv.invertible)


def a_spectral_radius(d: PsdDecomposition, x: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Largest point modulus of the weighted spectrum (eigenvalue route)."""
    return a_spectrum(d, x, tol).radius


def gelfand_sequence(
    d: PsdDecomposition,
    x: ComplexMatrix,
    n_max: int,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> list[float]:
    """Root-norm sequence of the compressed powers: the n-th entry is the
    seminorm of X^n raised to 1/n.

    Runs on the compression of X with per-step norm rescaling (log-scale
    bookkeeping), so powers never overflow even for radius above 1.  The
    sequence is bounded below by the spectral radius and converges to it.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    x = _require_member(d, x, tol)
    w = compressed(d, x)
    terms: list[float] = []
    cur = np.eye(d.dim, dtype=np.complex128)
    log_scale = 0.0
    dead = False
    for n in range(1, n_max + 1):
        if not dead:
            cur = cur @ w
            nrm = float(np.linalg.norm(cur, 2))
            if nrm == 0.0:
                dead = True
            else:
                log_scale += np.log(nrm)
                cur = cur / nrm
        terms.append(0.0 if dead else float(np.exp(log_scale / n)))
    return terms


Side = Literal["left", "right"]


def spectrum_witness(
    d: PsdDecomposition,
    x: ComplexMatrix,
    lam: complex,
    side: Side,
    tol: ToleranceConfig = DEFAULT_TOL,
    spot_checks: int = 20,
) -> VectorState | None:
    """Vector state certifying that lam belongs to the requested one-sided spectrum.

    Right side: a state built on w with X*(A w) = conj(lam) (A w), which makes
    f(A (X - lam) Y) vanish for every Y.  Left side: a state built from an
    eigenvector of the compressed operator, which forces f(X*AX) = |f(AX)|^2
    with f(AX) = lam.  The returned state is verified against its side's
    multiplicativity identity and spot-checked on random members; None is
    returned when no searched vector state verifies (an outcome, not an error).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    x = _require_member(d, x, tol)
    spec = a_spectrum(d, x, tol)
    scale = float(np.linalg.norm(d.proj @ x, 2))
    radius = _cluster_radius(tol, scale)
    if not any(abs(lam - z) <= radius + tol.atol for z in spec.points):
        raise ValueError(f"{lam} is not a point of the weighted spectrum")
    if d.rank == 0:
        return None
    q = d.range_basis
    lam_r = d.range_eigvals
    comp = q.conj().T @ x @ q
    if side == "left":
        scaling = lam_r**0.5  # similarity to the compressed operator A^(1/2) X (A^(1/2))^+
        m_r = comp * scaling[:, None] / scaling[None, :]
        evals, evecs = np.linalg.eig(m_r)
        target = lam
        back = lam_r**-0.5
    else:
        m_r = comp.conj().T
        evals, evecs = np.linalg.eig(m_r)
        target = np.conj(lam)
        back = lam_r**-1.0
    rng = np.random.default_rng(2024)
    order = np.argsort(np.abs(evals - target))
    for idx in order:
        if abs(evals[idx] - target) > radius + tol.atol:
            break
        h = q @ (back * evecs[:, idx])
        nh = float(np.linalg.norm(h))
        if nh == 0.0:
            continue
        h = h / nh
        weight = float((h.conj() @ (d.a @ h)).real)
        if weight <= tol.atol:
            continue
        state = VectorState(h=h, weight=weight)
        if _verify_witness(d, x, lam, side, state, tol, spot_checks, rng):
            return state
    return None


def _verify_witness(
    d: PsdDecomposition,
    x: ComplexMatrix,
    lam: complex,
    side: Side,
    state: VectorState,
    tol: ToleranceConfig,
    spot_checks: int,
    rng: np.random.Generator,
) -> bool:
    a = d.a
    fax = state(a @ x)
    mag = max(1.0, abs(fax) ** 2)
    bound = tol.atol + tol.rtol * mag
    if abs(fax - lam) > bound:
        return False
    if side == "left":
        if abs(state(x.conj().T @ a @ x) - abs(fax) ** 2) > bound:
            return False
    else:
        faxxa = state(a @ x @ x.conj().T @ a)
        faxa = state(a @ x.conj().T @ a)
        fa2 = state(a @ a)
        big = max(1.0, abs(faxxa), abs(fax * faxa), abs(fax) ** 2 * abs(fa2))
        if abs(faxxa - fax * faxa) > tol.atol + tol.rtol * big:
            return False
        if abs(fax * faxa - abs(fax) ** 2 * fa2) > tol.atol + tol.rtol * big:
            return False
    shift = x - lam * np.eye(d.dim)
    for _ in range(spot_checks):
        y = random_member(d, rng)
        val = state(a @ shift @ y) if side == "right" else state(a @ y @ shift)
        if abs(val) > tol.atol + tol.rtol * max(1.0, float(np.linalg.norm(y, 2)) * float(np.linalg.norm(shift, 2)) * float(np.linalg.norm(a, 2))):
            return False
    return True


def _convex_hull(points: list[complex], eps: float) -> list[complex]:
    """Monotone-chain hull, counterclockwise, robust to coincident and collinear points."""
    uniq: list[complex] = []
    for z in sorted(points, key=lambda w: (w.real, w.imag)):
        if not uniq or abs(z - uniq[-1]) > eps:
            uniq.append(z)
    dedup: list[complex] = []
    for z in uniq:
        if all(abs(z - w) > eps for w in dedup):
            dedup.append(z)
    if len(dedup) <= 2:
        return dedup

    def cross(o: complex, p: complex, q: complex) -> float:
        return (p.real - o.real) * (q.imag - o.imag) - (p.imag - o.imag) * (q.real - o.real)

    lower: list[complex] = []
    for z in dedup:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], z) <= eps:
            lower.pop()
        lower.append(z)
    upper: list[complex] = []
    for z in reversed(dedup):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], z) <= eps:
            upper.pop()
        upper.append(z)
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 2 else dedup[:1]


def a_numerical_range(
    d: PsdDecomposition,
    x: ComplexMatrix,
    directions: int,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> NumericalRangePolygon:
    """Polygonal approximation of the weighted numerical range {f(AX)}.

    Each direction solves one Hermitian generalized eigenproblem on the
    range; the top eigenvalue is the support value (outer data) and the top
    eigenvector's state gives the touching point (inner hull vertex).
    """
    if directions < 3:
        raise ValueError("directions must be at least 3")
    x = _require_member(d, x, tol)
    if d.rank == 0:
        return NumericalRangePolygon(directions=directions, vertices=(), angles=(), support=())
    q = d.range_basis
    lam = d.range_eigvals
    ax = d.a @ x
    ax_r = q.conj().T @ ax @ q
    scale = lam**-0.5
    angles: list[float] = []
    support: list[float] = []
    touch: list[complex] = []
    for k in range(directions):
        theta = 2 * np.pi * k / directions
        h_r = np.exp(-1j * theta) * ax_r
        h_r = (h_r + h_r.conj().T) / 2
        t = h_r * scale[:, None] * scale[None, :]
        vals, vecs = np.linalg.eigh((t + t.conj().T) / 2)
        angles.append(theta)
        support.append(float(vals[-1]))
        v = q @ (scale * vecs[:, -1])
        denom = float((v.conj() @ (d.a @ v)).real)
        touch.append(complex(v.conj() @ (ax @ v)) / denom)
    spread = max((abs(z) for z in touch), default=0.0)
    hull = _convex_hull(touch, eps=tol.atol + tol.rtol * spread)
    return NumericalRangePolygon(
        directions=directions,
        vertices=tuple(hull),
        angles=tuple(angles),
        support=tuple(support),
    )


def boundary_mollifier(
    d: PsdDecomposition,
    x: ComplexMatrix,
    lam: complex,
    approach: list[complex],
    tol: ToleranceConfig = DEFAULT_TOL,
) -> list[MollifierStep]:
    """Normalized approximate inverses along an approach to a spectrum point.

    For each approach value the canonical inverse of (value - X) is built and
    normalized to unit seminorm; the two defect seminorms of the normalized
    inverse against (lam - X) tend to zero along a valid approach.  Raises
    SpectrumPointError if an approach value lies on the spectrum.
    """
    x = _require_member(d, x, tol)
    spec = a_spectrum(d, x, tol)
    scale = float(np.linalg.norm(d.proj @ x, 2))
    radius = _cluster_radius(tol, scale)
    if not any(abs(lam - z) <= radius + tol.atol for z in spec.points):
        raise ValueError(f"{lam} is not a point of the weighted spectrum")
    eye = np.eye(d.dim)
    shift = lam * eye - x
    steps: list[MollifierStep] = []
    for lam_n in approach:
        if any(abs(lam_n - z) <= radius + tol.atol for z in spec.points):
            raise SpectrumPointError(f"approach value {lam_n} lies on the spectrum")
        res: AInverseResult = a_invertible(d, lam_n * eye - x, tol)
        if not res.invertible:
            raise SpectrumPointError(f"approach value {lam_n} is not invertible against the weight")
        y = res.canonical
        norm_y = a_seminorm(d, y, tol)
        if not norm_y.finite or norm_y.value <= tol.atol:
            raise ValueError("inverse has vanishing seminorm; weight is degenerate")
        x_n = y / norm_y.value
        left = a_seminorm(d, x_n @ shift, tol)
        right = a_seminorm(d, shift @ x_n, tol)
        steps.append(MollifierStep(x_n=x_n, left_defect=float(left.value), right_defect=float(right.value)))
    return steps

"""Majorization-driven factorization solvers."""

import numpy as np
import pytest

from aspec.douglas import NotMajorizedError, douglas_solve, power_factorize
from aspec.linalg import approx_equal
from aspec.psd import psd_decompose

from conftest import cdiag, cmat


def test_diagonal_solve():
    # diagonal oracle: z_i = x_i / y_i on the support of y
    z = douglas_solve(cdiag(1, 0), cdiag(2, 0))
    assert approx_equal(z, cdiag(0.5, 0))
    assert approx_equal(z.conj().T @ cdiag(2, 0), cdiag(1, 0))


def test_identity_right_factor_forces_adjoint():
    rng = np.random.default_rng(3)
    x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    z = douglas_solve(x, np.eye(3, dtype=complex))
    assert approx_equal(z, x.conj().T)


def test_incompatible_null_spaces_rejected():
    with pytest.raises(NotMajorizedError):
        douglas_solve(cdiag(0, 1), cdiag(1, 0))


def test_solution_is_minimal_norm_and_majorized():
    rng = np.random.default_rng(4)
    for _ in range(20):
        n = int(rng.integers(2, 6))
        x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        y = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        z = douglas_solve(x, y)
        assert approx_equal(z.conj().T @ y, x)
        alpha = np.linalg.norm(x @ np.linalg.pinv(y), 2) ** 2
        gap = np.min(np.linalg.eigvalsh(alpha * y.conj().T @ y - x.conj().T @ x))
        assert gap >= -1e-8 * max(1.0, alpha)


def test_power_factorize_identity_weight():
    x = cmat([[0.3, 0.1], [0.0, -0.2j]])
    v = power_factorize(x, psd_decompose(np.eye(2, dtype=complex)), 0.25)
    assert approx_equal(v, x)


def test_power_factorize_diagonal():
    # diagonal oracle: v_i = x_i * b_i^(-1/4); 1 * 4^(-1/4) = 1/sqrt(2)
    x = cdiag(1, 0)
    b = psd_decompose(cdiag(4, 0))
    v = power_factorize(x, b, 0.25)
    assert approx_equal(v, cdiag(1 / np.sqrt(2), 0))
    assert approx_equal(v @ b.power(0.25), x)


def test_power_factorize_rejects_undominated():
    with pytest.raises(ValueError):
        power_factorize(cdiag(2, 0), psd_decompose(cdiag(1, 0)), 0.25)


def test_power_factorize_rejects_bad_alpha():
    b = psd_decompose(np.eye(2, dtype=complex))
    for alpha in (0.0, 0.5, 0.7, -0.1):
        with pytest.raises(ValueError):
            power_factorize(np.eye(2, dtype=complex) * 0.5, b, alpha)


def test_power_factorize_operator_inequalities():
    rng = np.random.default_rng(9)
    for _ in range(20):
        n = int(rng.integers(2, 6))
        x = 0.6 * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        pad = 0.5 * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        b = psd_decompose(x.conj().T @ x + pad.conj().T @ pad)
        alpha = float(rng.uniform(0.05, 0.45))
        v = power_factorize(x, b, alpha)
        assert approx_equal(v @ b.power(alpha), x)
        gap1 = np.min(np.linalg.eigvalsh(b.power(1 - 2 * alpha) - v.conj().T @ v))
        assert gap1 >= -1e-9
        xxs = psd_decompose(x @ x.conj().T)
        gap2 = np.min(np.linalg.eigvalsh(xxs.power(1 - 2 * alpha) - v @ v.conj().T))
        assert gap2 >= -1e-9

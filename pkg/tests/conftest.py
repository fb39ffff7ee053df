import numpy as np
import pytest

from aspec.linalg import DEFAULT_TOL


@pytest.fixture
def tol():
    return DEFAULT_TOL


def cmat(rows) -> np.ndarray:
    return np.asarray(rows, dtype=np.complex128)


def cdiag(*entries) -> np.ndarray:
    return np.diag(np.asarray(entries, dtype=np.complex128))

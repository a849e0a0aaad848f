import numpy as np
import pytest

BP_GRID = (0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
TAU_GRID = (0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 3.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (a + a.conj().T)


def random_density(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = a @ a.conj().T
    return rho / np.trace(rho)

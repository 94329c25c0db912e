import numpy as np
import pytest

from eigenstruct_numeric.kcf import KCFSpec, jordan, jordan_inf, left_block, right_block
from eigenstruct_numeric.tolerance import ToleranceProfile
from poly_core.sampling import complex_gaussian

EIGENVALUES = (0.0, 1.0, -1.0, 2.0, 1j)
MAX_SIZE = 8


def random_unitary(rng: np.random.Generator, size: int) -> np.ndarray:
    Q, R = np.linalg.qr(complex_gaussian(rng, (size, size)))
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def well_conditioned(rng: np.random.Generator, size: int) -> np.ndarray:
    """U diag(s) V with s in [1, 10], condition number at most 10."""
    if size == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    return random_unitary(rng, size) @ np.diag(rng.uniform(1.0, 10.0, size)) @ random_unitary(rng, size)


def random_kcf(rng: np.random.Generator) -> KCFSpec:
    """
    Small random KCF: singular blocks L_k, L_k^T with k <= 3, Jordan blocks of
    size <= 4 at well-separated eigenvalues, infinite blocks of size <= 3, total
    size at most 8 x 8 and at least 1 x 1.
    """
    while True:
        blocks = []
        rows = cols = 0
        for _ in range(rng.integers(1, 5)):
            kind = rng.integers(4)
            if kind == 0:
                block = right_block(int(rng.integers(0, 4)))
            elif kind == 1:
                block = left_block(int(rng.integers(0, 4)))
            elif kind == 2:
                eig = EIGENVALUES[rng.integers(len(EIGENVALUES))]
                block = jordan(-eig, int(rng.integers(1, 5)))
            else:
                block = jordan_inf(int(rng.integers(1, 4)))
            h, w = block.shape
            if rows + h <= MAX_SIZE and cols + w <= MAX_SIZE:
                blocks.append(block)
                rows, cols = rows + h, cols + w
        if rows >= 1 and cols >= 1:
            return KCFSpec(tuple(blocks))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def tol() -> ToleranceProfile:
    return ToleranceProfile(seed=11)

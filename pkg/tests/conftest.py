import numpy as np
import pytest

from ccsk.oracle import RngState


@pytest.fixture
def rng():
    return RngState(20250826)


def random_complex_matrix(rng: RngState, rows: int, cols: int) -> np.ndarray:
    return np.array([rng.complex_gaussian_vector(cols) for _ in range(rows)])

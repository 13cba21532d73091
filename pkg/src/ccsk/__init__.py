"""Unitary matrices via canonical coordinates of the second kind.

Compose U(n) elements from phase/column parameters through closed-form block
exponentials, and decompose arbitrary unitaries back into canonical
parameters, with an independent matrix-exponential oracle for verification.
"""

from .blockexp import KBlock, compose, exp_column_factor, exp_diagonal, exp_k, k_matrix
from .decompose import (DecomposeOptions, PeelConsistencyError, decompose,
                        normalize_thetas, roundtrip_error)
from .linalg import (adjoint, anti_hermiticity_defect, as_cmatrix, as_cvector,
                     frobenius_norm, mat_mul, unitarity_defect)
from .oracle import RngState, expm, random_params, random_unitary
from .params import (CcskParams, assemble_generator, params_from_generator,
                     split_generator)
from .special import Euler2Factors, ProjectorPair, euler2_factorize, projector_form

__all__ = [
    "CcskParams",
    "DecomposeOptions",
    "Euler2Factors",
    "KBlock",
    "PeelConsistencyError",
    "ProjectorPair",
    "RngState",
    "adjoint",
    "anti_hermiticity_defect",
    "as_cmatrix",
    "as_cvector",
    "assemble_generator",
    "compose",
    "decompose",
    "euler2_factorize",
    "exp_column_factor",
    "exp_diagonal",
    "exp_k",
    "expm",
    "frobenius_norm",
    "k_matrix",
    "mat_mul",
    "normalize_thetas",
    "params_from_generator",
    "projector_form",
    "random_params",
    "random_unitary",
    "roundtrip_error",
    "split_generator",
    "unitarity_defect",
]

__version__ = "0.1.0"

"""Closed-form exponentials of the generator pieces and the ordered product map.

The nontrivial factor acts on the leading j coordinates only. With
rho = ||z||_2 and ztilde = z / rho, its leading j x j block is

    [ I - (1 - cos rho) |ztilde><ztilde| ,  sin(rho) |ztilde> ]
    [       -sin(rho) <ztilde|           ,      cos(rho)      ]

and the ordered product  diag-phases * factor_2 * ... * factor_n  covers all
of U(n). The product is NOT the exponential of the summed generator (the
factors do not commute); see the oracle module for the generic exponential.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_cvector
from .params import CcskParams

__all__ = [
    "KBlock",
    "k_matrix",
    "exp_diagonal",
    "exp_k",
    "exp_column_factor",
    "compose",
]

# Below this norm, sin(rho)/rho and (1-cos(rho))/rho^2 are used directly on z
# instead of normalizing; removes the 0/0 in ztilde without a discontinuity.
_RHO_TINY = 1e-14


@dataclass(frozen=True)
class KBlock:
    """A column vector z with its norm and normalized direction, for block size j."""

    j: int
    z: np.ndarray
    rho: float
    ztilde: np.ndarray

    @classmethod
    def from_z(cls, z) -> "KBlock":
        z = as_cvector(z)
        rho = float(np.linalg.norm(z))
        ztilde = z / rho if rho > 0.0 else np.zeros_like(z)
        return cls(j=z.shape[0] + 1, z=z.copy(), rho=rho, ztilde=ztilde)


def k_matrix(z) -> np.ndarray:
    """The j x j anti-Hermitian block: z in the last column, -<z| in the last row.

    Satisfies K^3 = -<z|z> K, so K^2 is block-diagonal(-|z><z|, -<z|z>).
    """
    z = as_cvector(z)
    m = z.shape[0]
    k = np.zeros((m + 1, m + 1), dtype=np.complex128)
    k[:m, m] = z
    k[m, :m] = -z.conj()
    return k


def exp_diagonal(thetas) -> np.ndarray:
    """diag(e^{i theta_1}, ..., e^{i theta_n})."""
    thetas = np.asarray(thetas, dtype=np.float64)
    return np.diag(np.exp(1j * thetas))


def exp_k(z) -> np.ndarray:
    """Closed-form exponential of k_matrix(z), a (len(z)+1)-square unitary."""
    z = as_cvector(z)
    m = z.shape[0]
    rho = float(np.linalg.norm(z))
    out = np.eye(m + 1, dtype=np.complex128)
    if rho == 0.0:
        return out
    c, s = np.cos(rho), np.sin(rho)
    if rho < _RHO_TINY:
        sinc = s / rho
        # (1 - cos rho)/rho^2 == 0.5 to double precision at this scale
        out[:m, :m] -= 0.5 * np.outer(z, z.conj())
        out[:m, m] = sinc * z
        out[m, :m] = -sinc * z.conj()
    else:
        zt = z / rho
        out[:m, :m] -= (1.0 - c) * np.outer(zt, zt.conj())
        out[:m, m] = s * zt
        out[m, :m] = -s * zt.conj()
    out[m, m] = c
    return out


def exp_column_factor(z, n: int, j: int) -> np.ndarray:
    """exp_k(z) embedded in the leading j x j block of an n x n identity."""
    z = as_cvector(z)
    if not 2 <= j <= n:
        raise ValueError(f"need 2 <= j <= n, got j={j}, n={n}")
    if z.shape[0] != j - 1:
        raise ValueError(f"z must have length {j - 1} for j={j}, got {z.shape[0]}")
    out = np.eye(n, dtype=np.complex128)
    out[:j, :j] = exp_k(z)
    return out


def compose(p: CcskParams) -> np.ndarray:
    """Ordered product: diagonal phases, then the column factors j = 2..n."""
    n = p.n
    u = exp_diagonal(p.thetas)
    for j in range(2, n + 1):
        u = u @ exp_column_factor(p.z_column(j), n, j)
    return u

"""Inverse map: recover canonical parameters from an arbitrary unitary matrix.

The last row of the factor for column j is (-sin(rho) <ztilde|, cos(rho)), and
every earlier factor leaves row/column j untouched apart from the phase
e^{i theta_j}. So row j of the current leading block reads off theta_j, rho_j
and ztilde_j directly; multiplying by the factor's adjoint peels it away and
the recursion continues on the leading (j-1) x (j-1) block.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .blockexp import compose, exp_column_factor
from .linalg import frobenius_norm, unitarity_defect
from .params import CcskParams

__all__ = [
    "DecomposeOptions",
    "PeelConsistencyError",
    "decompose",
    "roundtrip_error",
    "normalize_thetas",
]


@dataclass(frozen=True)
class DecomposeOptions:
    unitarity_tol: float = 1e-10
    zero_tol: float = 1e-12

    def __post_init__(self):
        for name in ("unitarity_tol", "zero_tol"):
            v = getattr(self, name)
            if not 0.0 < v < 1.0:
                raise ValueError(f"{name} must be in (0, 1), got {v}")


class PeelConsistencyError(RuntimeError):
    """A peeled factor left residue in its row/column: the input was not
    numerically unitary even though it passed the defect gate."""

    def __init__(self, j: int, residue: float):
        self.j = j
        self.residue = residue
        super().__init__(
            f"peel at column j={j} left residue {residue:.3e}; "
            "input is not numerically unitary")


def decompose(u: np.ndarray, opts: DecomposeOptions | None = None) -> CcskParams:
    """Canonical parameters p with compose(p) == u (up to roundoff).

    Output ranges: theta in (-pi, pi], ||z_j|| in [0, pi/2]. When a pivot
    magnitude vanishes the phase convention theta_j := 0 applies; when
    sin(rho_j) vanishes the column z_j := 0.
    """
    if opts is None:
        opts = DecomposeOptions()
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"decompose requires a square matrix, got {u.shape}")
    n = u.shape[0]
    defect = unitarity_defect(u)
    if defect > opts.unitarity_tol * n:
        raise ValueError(
            f"input is not unitary: defect {defect:.3e} exceeds "
            f"{opts.unitarity_tol * n:.3e}")

    m = u.copy()
    thetas = np.zeros(n)
    cols: list[np.ndarray] = [np.zeros(j - 1, dtype=np.complex128)
                              for j in range(2, n + 1)]
    for j in range(n, 1, -1):
        pivot = m[j - 1, j - 1]
        c = min(abs(pivot), 1.0)
        rho = math.acos(c)
        theta = cmath.phase(pivot) if c > opts.zero_tol else 0.0
        z = np.zeros(j - 1, dtype=np.complex128)
        s = math.sin(rho)
        if s > opts.zero_tol:
            ztilde = -m[j - 1, : j - 1].conj() * cmath.exp(1j * theta) / s
            z = rho * ztilde
        thetas[j - 1] = theta
        cols[j - 2] = z

        factor = exp_column_factor(z, j, j)
        m[:j, :j] = m[:j, :j] @ factor.conj().T
        # The peeled row/column must now be e^{i theta} * e_j.
        expected = np.zeros(j, dtype=np.complex128)
        expected[j - 1] = cmath.exp(1j * theta)
        residue = max(
            float(np.linalg.norm(m[j - 1, :j] - expected)),
            float(np.linalg.norm(m[:j, j - 1] - expected)),
        )
        if residue > 10.0 * opts.unitarity_tol:
            raise PeelConsistencyError(j, residue)
    thetas[0] = cmath.phase(m[0, 0])
    # cmath.phase can return exactly -pi (e.g. a -0.0 imaginary part); wrap
    # onto the half-open interval so output is always canonical.
    return normalize_thetas(CcskParams(thetas, tuple(cols)))


def roundtrip_error(u: np.ndarray, opts: DecomposeOptions | None = None) -> float:
    """||compose(decompose(u)) - u||_F."""
    return frobenius_norm(compose(decompose(u, opts)) - np.asarray(u, dtype=np.complex128))


def _wrap_theta(t: float) -> float:
    w = math.remainder(t, 2.0 * math.pi)
    if w <= -math.pi:
        w += 2.0 * math.pi
    return w


def normalize_thetas(p: CcskParams) -> CcskParams:
    """Wrap every theta into (-pi, pi]; z columns unchanged."""
    return CcskParams(np.array([_wrap_theta(t) for t in p.thetas]), p.z_columns)

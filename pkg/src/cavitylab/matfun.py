"""Dense symmetric/Hermitian matrix utilities and the time-ordered propagator.

Matrices are plain ``numpy`` arrays; the helpers here validate the symmetry
invariants instead of wrapping arrays in classes.  All spectral work uses
``numpy.linalg.eigh`` (dimensions in this package stay well below ~200, so
O(n^3) eigensolves are cheap and unconditionally stable).  Units follow the
package convention hbar = 1.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import DimensionMismatch, NotPositiveDefinite

# Relative eigenvalue floor below which a matrix counts as not positive definite.
PD_TOLERANCE = 1e-12

SYMMETRY_TOLERANCE = 1e-12


def check_symmetric(a: np.ndarray) -> np.ndarray:
    """Validate that ``a`` is a real square symmetric matrix and return it as float."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    scale = max(np.abs(a).max(), 1.0)
    if np.abs(a - a.T).max() > SYMMETRY_TOLERANCE * scale:
        raise ValueError("matrix is not symmetric within tolerance")
    return a


def check_hermitian(a: np.ndarray) -> np.ndarray:
    """Validate that ``a`` is a square Hermitian matrix and return it as complex."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    scale = max(np.abs(a).max(), 1.0)
    if np.abs(a - a.conj().T).max() > SYMMETRY_TOLERANCE * scale:
        raise ValueError("matrix is not Hermitian within tolerance")
    return a


def _spd_eigh(a: np.ndarray, require_pd: bool) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecompose a symmetric matrix, optionally enforcing positive definiteness."""
    w, v = np.linalg.eigh(a)
    if require_pd and w[0] <= PD_TOLERANCE * max(w[-1], 0.0):
        raise NotPositiveDefinite(
            f"smallest eigenvalue {w[0]:.3e} is at or below tolerance "
            f"{PD_TOLERANCE:.0e} * {w[-1]:.3e}"
        )
    return w, v


def sym_power(a: np.ndarray, p: float) -> np.ndarray:
    """Fractional power A^p of a symmetric matrix via spectral decomposition.

    Positive definiteness is required (and checked) whenever p is not a
    nonnegative integer; the check errors instead of regularizing.
    """
    a = check_symmetric(a)
    needs_pd = p < 0 or p != np.floor(p)
    w, v = _spd_eigh(a, require_pd=needs_pd)
    b = (v * w**p) @ v.T
    return 0.5 * (b + b.T)


def trace_sqrt_product(a: np.ndarray, b: np.ndarray) -> float:
    """Tr((A^1/2 B A^1/2)^1/2) for positive definite A, B.

    Equals Tr(sqrt(A B)) since the eigenvalues of A B match those of the
    symmetrized product; the symmetric form keeps the eigenproblem Hermitian.
    """
    a = check_symmetric(a)
    b = check_symmetric(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape mismatch: {a.shape} vs {b.shape}")
    _spd_eigh(b, require_pd=True)
    sa = sym_power(a, 0.5)
    m = sa @ b @ sa
    w = np.linalg.eigvalsh(0.5 * (m + m.T))
    # Clip roundoff-negative eigenvalues of the (mathematically PD) product.
    return float(np.sum(np.sqrt(np.clip(w, 0.0, None))))


def propagate_unitary(h_of_t, t0: float, t1: float, steps: int = 1024) -> np.ndarray:
    """Time-ordered propagator for a time-dependent Hermitian matrix.

    Uses midpoint-sampled piecewise-constant exponentials:
    U = prod_i exp(-i H(t_i + dt/2) dt).  Exact for constant H; second-order
    accurate otherwise.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    dt = (t1 - t0) / steps
    h0 = check_hermitian(h_of_t(t0 + 0.5 * dt))
    u = scipy.linalg.expm(-1j * h0 * dt)
    for i in range(1, steps):
        h = check_hermitian(h_of_t(t0 + (i + 0.5) * dt))
        u = scipy.linalg.expm(-1j * h * dt) @ u
    return u


def unitarity_defect(u: np.ndarray) -> float:
    """Spectral-norm deviation of U^dag U from the identity."""
    d = u.conj().T @ u - np.eye(u.shape[0])
    return float(np.linalg.norm(d, 2))

"""Dense complex linear algebra kernel.

Operators are plain ``numpy`` arrays of ``complex128``. Everything here is a
pure function of its inputs and safe to call concurrently.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import tolerances as tol
from .errors import DimMismatch, NoConvergence, NotHermitian, NotPsd

__all__ = [
    "I2", "PAULI_X", "PAULI_Y", "PAULI_Z",
    "HermitianEigensystem", "hermitian_eig", "tensor", "embed",
    "partial_trace", "unitary_from_generator", "psd_sqrt",
    "as_operator", "require_hermitian",
]

I2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def as_operator(a: np.ndarray) -> np.ndarray:
    """Coerce to a square complex matrix with finite entries."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimMismatch(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def require_hermitian(a: np.ndarray, rtol: float = tol.HERMITIAN_RTOL) -> np.ndarray:
    """Validate Hermiticity of ``a`` relative to its Frobenius norm."""
    a = as_operator(a)
    scale = np.linalg.norm(a)
    if np.linalg.norm(a - a.conj().T) > rtol * scale:
        raise NotHermitian(
            f"matrix deviates from Hermiticity by "
            f"{np.linalg.norm(a - a.conj().T):.3e} (allowed {rtol * scale:.3e})"
        )
    return a


class HermitianEigensystem(NamedTuple):
    """Eigendecomposition A = V diag(w) V^+ with ``eigenvalues`` ascending and
    ``eigenvectors`` holding orthonormal eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eig(a: np.ndarray) -> HermitianEigensystem:
    """Eigendecompose a Hermitian matrix.

    Raises ``NotHermitian`` when the input is not symmetric within tolerance
    and ``NoConvergence`` when the underlying solver fails.
    """
    a = require_hermitian(a)
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(str(exc)) from exc
    return HermitianEigensystem(w, v)


def tensor(a: np.ndarray, b: np.ndarray, *rest: np.ndarray) -> np.ndarray:
    """Kronecker product of two or more operators."""
    out = np.kron(as_operator(a), as_operator(b))
    for c in rest:
        out = np.kron(out, as_operator(c))
    return out


def embed(op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """Embed a single-qubit operator at ``site`` of an ``n_sites`` register."""
    op = as_operator(op)
    if op.shape != (2, 2):
        raise DimMismatch("embed expects a single-qubit operator")
    if not 0 <= site < n_sites:
        raise DimMismatch(f"site {site} outside register of {n_sites} qubits")
    left = np.eye(2**site, dtype=complex)
    right = np.eye(2 ** (n_sites - site - 1), dtype=complex)
    return tensor(left, op, right)


def partial_trace(a: np.ndarray, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out all subsystems not listed in ``keep``.

    ``dims`` lists the subsystem dimensions in tensor order; their product
    must equal the matrix dimension. The kept subsystems retain their
    original relative order.
    """
    a = as_operator(a)
    dims = [int(d) for d in dims]
    if int(np.prod(dims)) != a.shape[0]:
        raise DimMismatch(
            f"product of dims {dims} does not match matrix dimension {a.shape[0]}"
        )
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= len(dims) for k in keep):
        raise DimMismatch(f"keep indices {keep} outside range for {len(dims)} subsystems")
    n = len(dims)
    t = a.reshape(dims + dims)
    # Row index i and column index n+i of traced subsystems are contracted.
    row = list(range(n))
    col = list(range(n, 2 * n))
    for i in range(n):
        if i not in keep:
            col[i] = row[i]
    out_sub = [row[k] for k in keep] + [col[k] for k in keep]
    traced = np.einsum(t, row + col, out_sub)
    d_keep = int(np.prod([dims[k] for k in keep])) if keep else 1
    return traced.reshape(d_keep, d_keep)


def unitary_from_generator(h: np.ndarray, phi: float, sign: int = +1) -> np.ndarray:
    """exp(sign * i * phi * h) for Hermitian ``h``, via eigendecomposition."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    w, v = hermitian_eig(h)
    phases = np.exp(sign * 1j * phi * w)
    return (v * phases) @ v.conj().T


def psd_sqrt(a: np.ndarray) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues slightly negative (down to the PSD tolerance) are clipped to
    zero; anything lower raises ``NotPsd``.
    """
    w, v = hermitian_eig(a)
    if w[0] < -tol.PSD_EIGENVALUE_TOL:
        raise NotPsd(f"eigenvalue {w[0]:.3e} below PSD tolerance {-tol.PSD_EIGENVALUE_TOL:.0e}")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T

"""Probe states and phase-encoded families.

A :class:`ProbeFamily` is the curve ``phi -> U(phi) rho U(phi)^+`` obtained by
conjugating an initial density matrix with ``U(phi) = exp(sign * i * phi * H)``
for a Hermitian generator ``H``. All Fisher-information machinery downstream
consumes these families.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import tolerances as tol
from .errors import BadTable, DimMismatch
from .linalg import as_operator, require_hermitian, unitary_from_generator

__all__ = [
    "DensityMatrix", "WernerSpec", "ClassicalTable", "ProbeFamily",
    "bell00", "nghz", "werner", "classically_correlated", "product_dephase",
    "excitation_generator", "encode", "d_rho_d_phi",
    "werner_family", "nghz_family", "bell_family", "classical_family",
    "family_from_descriptor", "load_family",
]


@dataclass(frozen=True)
class DensityMatrix:
    """A valid multi-qubit state: Hermitian, unit trace, PSD within tolerance."""

    mat: np.ndarray
    qubit_count: int

    def __post_init__(self):
        mat = require_hermitian(self.mat)
        object.__setattr__(self, "mat", mat)
        if mat.shape[0] != 2**self.qubit_count:
            raise DimMismatch(
                f"dimension {mat.shape[0]} is not 2**{self.qubit_count}"
            )
        if abs(np.trace(mat).real - 1.0) > tol.TRACE_ATOL:
            raise ValueError(f"trace {np.trace(mat).real!r} is not 1")
        w = np.linalg.eigvalsh(mat)
        if w[0] < -tol.PSD_EIGENVALUE_TOL:
            raise ValueError(f"negative eigenvalue {w[0]:.3e}")

    @classmethod
    def from_matrix(cls, mat: np.ndarray) -> "DensityMatrix":
        mat = as_operator(mat)
        n = int(round(np.log2(mat.shape[0])))
        if 2**n != mat.shape[0]:
            raise DimMismatch(f"dimension {mat.shape[0]} is not a power of two")
        return cls(mat, n)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.mat @ self.mat).real)


@dataclass(frozen=True)
class WernerSpec:
    """White noise mixed with a maximally entangled register state; ``eta``
    is the signal strength (0 = fully mixed, 1 = pure)."""

    n_qubits: int
    eta: float

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta must lie in [0, 1], got {self.eta}")


def _ghz_vector(n: int) -> np.ndarray:
    v = np.zeros(2**n, dtype=complex)
    v[0] = v[-1] = 1.0 / np.sqrt(2.0)
    return v


def nghz(n: int) -> DensityMatrix:
    """Equal superposition of the all-zero and all-one register states."""
    if n < 1:
        raise ValueError("need at least one qubit")
    v = _ghz_vector(n)
    return DensityMatrix(np.outer(v, v.conj()), n)


def bell00() -> DensityMatrix:
    """The two-qubit maximally entangled state (|00> + |11>)/sqrt(2)."""
    return nghz(2)


def werner(spec: WernerSpec) -> DensityMatrix:
    d = 2**spec.n_qubits
    mat = (1.0 - spec.eta) * np.eye(d, dtype=complex) / d + spec.eta * nghz(spec.n_qubits).mat
    return DensityMatrix(mat, spec.n_qubits)


def _computational_basis(d: int = 2) -> np.ndarray:
    return np.eye(d, dtype=complex)


@dataclass(frozen=True)
class ClassicalTable:
    """Joint outcome probabilities plus one orthonormal basis per subsystem.

    ``probs`` is an N-dimensional array, one axis per subsystem; axis sizes
    must match the basis dimensions (columns of each basis matrix are the
    local basis vectors). Bases default to computational.
    """

    probs: np.ndarray
    bases: tuple[np.ndarray, ...] | None = None

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=float)
        if probs.ndim < 1:
            raise BadTable("probability table needs at least one axis")
        if np.any(probs < 0):
            raise BadTable("negative probability in table")
        if abs(probs.sum() - 1.0) > tol.TABLE_SUM_ATOL:
            raise BadTable(f"table sums to {probs.sum()!r}, not 1")
        object.__setattr__(self, "probs", probs)
        if self.bases is None:
            bases = tuple(_computational_basis(d) for d in probs.shape)
        else:
            bases = tuple(as_operator(b) for b in self.bases)
            if len(bases) != probs.ndim:
                raise BadTable("need one basis per table axis")
            for ax, b in enumerate(bases):
                if b.shape[0] != probs.shape[ax]:
                    raise BadTable(
                        f"basis dim {b.shape[0]} does not match axis size {probs.shape[ax]}"
                    )
                if np.linalg.norm(b.conj().T @ b - np.eye(b.shape[0])) > tol.UNITARY_ATOL:
                    raise BadTable(f"basis for axis {ax} is not orthonormal")
        object.__setattr__(self, "bases", bases)

    @property
    def n_parts(self) -> int:
        return self.probs.ndim


def product_dephase(mat: np.ndarray, bases: Sequence[np.ndarray]) -> np.ndarray:
    """Project onto the diagonal of the product basis: sum_k P_k mat P_k with
    rank-one projectors P_k built from one basis vector per subsystem."""
    mat = as_operator(mat)
    out = np.zeros_like(mat)
    ranges = [range(b.shape[0]) for b in bases]
    for idx in itertools.product(*ranges):
        v = bases[0][:, idx[0]]
        for ax in range(1, len(bases)):
            v = np.kron(v, bases[ax][:, idx[ax]])
        amp = v.conj() @ mat @ v
        out += amp * np.outer(v, v.conj())
    return out


def classically_correlated(table: ClassicalTable) -> DensityMatrix:
    """State diagonal in the product of the table's local bases.

    The result is invariant under dephasing in that product basis, which is
    what makes it classically correlated.
    """
    shape = table.probs.shape
    d = int(np.prod(shape))
    rho = np.zeros((d, d), dtype=complex)
    for idx in itertools.product(*[range(s) for s in shape]):
        v = table.bases[0][:, idx[0]]
        for ax in range(1, len(shape)):
            v = np.kron(v, table.bases[ax][:, idx[ax]])
        rho += table.probs[idx] * np.outer(v, v.conj())
    residual = np.linalg.norm(product_dephase(rho, table.bases) - rho)
    if residual > tol.DEPHASE_ATOL:
        raise BadTable(f"dephasing fixed point violated by {residual:.3e}")
    return DensityMatrix.from_matrix(rho)


def excitation_generator(n: int) -> np.ndarray:
    """Total excitation number: sum over sites of |1><1| embedded at each site."""
    if n < 1:
        raise ValueError("need at least one qubit")
    d = 2**n
    h = np.zeros((d, d), dtype=complex)
    for basis_state in range(d):
        h[basis_state, basis_state] = bin(basis_state).count("1")
    return h


@dataclass(frozen=True)
class ProbeFamily:
    """Initial state plus Hermitian generator and sign convention for the
    unitary encoding exp(sign * i * phi * H)."""

    initial: DensityMatrix
    generator: np.ndarray
    sign: int = +1

    def __post_init__(self):
        gen = require_hermitian(self.generator)
        object.__setattr__(self, "generator", gen)
        if gen.shape[0] != self.initial.dim:
            raise DimMismatch("generator dimension does not match the state")
        if self.sign not in (+1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def n_qubits(self) -> int:
        return self.initial.qubit_count

    @property
    def dim(self) -> int:
        return self.initial.dim


def encode(family: ProbeFamily, phi: float) -> DensityMatrix:
    """The state at parameter value ``phi``."""
    if phi == 0.0:
        return family.initial
    u = unitary_from_generator(family.generator, phi, family.sign)
    mat = u @ family.initial.mat @ u.conj().T
    mat = (mat + mat.conj().T) / 2  # strip rounding skew before validation
    return DensityMatrix(mat, family.initial.qubit_count)


def d_rho_d_phi(family: ProbeFamily, phi: float) -> np.ndarray:
    """Exact derivative of ``encode`` at ``phi``:
    sign * i * (H rho_phi - rho_phi H). Traceless and Hermitian."""
    rho = encode(family, phi).mat
    h = family.generator
    comm = h @ rho - rho @ h
    return family.sign * 1j * comm


def werner_family(n: int, eta: float, sign: int = +1) -> ProbeFamily:
    return ProbeFamily(werner(WernerSpec(n, eta)), excitation_generator(n), sign)


def nghz_family(n: int, sign: int = +1) -> ProbeFamily:
    return ProbeFamily(nghz(n), excitation_generator(n), sign)


def bell_family(sign: int = +1) -> ProbeFamily:
    return ProbeFamily(bell00(), excitation_generator(2), sign)


def classical_family(table: ClassicalTable, sign: int = +1) -> ProbeFamily:
    state = classically_correlated(table)
    return ProbeFamily(state, excitation_generator(state.qubit_count), sign)


# --- state descriptors -----------------------------------------------------
#
# A descriptor is a JSON object:
#   {"kind": "werner" | "nghz" | "bell" | "classical" | "raw-matrix",
#    "n": int, "eta": float,                  (werner/nghz)
#    "table": {"probs": [...], "bases": [[[re, im], ...], ...]},  (classical)
#    "entries": [[[re, im], ...], ...],       (raw-matrix)
#    "generator": {"kind": "excitation-sum"} | {"kind": "raw", "entries": ...},
#    "sign": 1 | -1}
#
# Complex numbers are always [re, im] pairs. "generator" and "sign" are
# optional and default to the excitation sum and +1.


def _complex_from_pairs(entries) -> np.ndarray:
    arr = np.asarray(entries, dtype=float)
    if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 2:
        raise BadTable("matrix entries must be a square grid of [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def _pairs_from_complex(mat: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(mat, dtype=complex)]


def _state_from_descriptor(desc: dict) -> DensityMatrix:
    kind = desc.get("kind")
    if kind == "werner":
        return werner(WernerSpec(int(desc["n"]), float(desc["eta"])))
    if kind == "nghz":
        return nghz(int(desc["n"]))
    if kind == "bell":
        return bell00()
    if kind == "classical":
        t = desc["table"]
        bases = t.get("bases")
        if bases is not None:
            bases = tuple(_complex_from_pairs(b) for b in bases)
        return classically_correlated(ClassicalTable(np.asarray(t["probs"], dtype=float), bases))
    if kind == "raw-matrix":
        return DensityMatrix.from_matrix(_complex_from_pairs(desc["entries"]))
    raise BadTable(f"unknown state kind {kind!r}")


def family_from_descriptor(desc: dict) -> ProbeFamily:
    """Build a probe family from a parsed JSON descriptor."""
    state = _state_from_descriptor(desc)
    gen_spec = desc.get("generator", {"kind": "excitation-sum"})
    gkind = gen_spec.get("kind", "excitation-sum")
    if gkind == "excitation-sum":
        gen = excitation_generator(state.qubit_count)
    elif gkind == "raw":
        gen = _complex_from_pairs(gen_spec["entries"])
    else:
        raise BadTable(f"unknown generator kind {gkind!r}")
    sign = int(desc.get("sign", +1))
    return ProbeFamily(state, gen, sign)


def load_family(path: str | Path) -> ProbeFamily:
    """Read a state-descriptor JSON file into a probe family."""
    with open(path, "r", encoding="utf-8") as fh:
        return family_from_descriptor(json.load(fh))

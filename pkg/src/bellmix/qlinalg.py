"""Dense complex linear algebra for small multi-qubit density matrices.

Qubit 0 is the most significant bit of the computational-basis index, so
``kron(a, b)`` places ``a`` on qubit 0. Density matrices are plain
``numpy.ndarray`` objects of dtype complex128; the ``as_density`` helper
enforces the Hermitian / unit-trace / PSD contract.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable, Sequence
from functools import reduce

import numpy as np

MAX_DIM = 64


@dataclasses.dataclass(frozen=True)
class Tolerances:
    entry: float = 1e-12
    eig: float = 1e-10


_tolerances = Tolerances()


def tolerances() -> Tolerances:
    return _tolerances


def set_tolerances(entry: float | None = None, eig: float | None = None) -> Tolerances:
    """Override the global structural/eigenvalue tolerances; returns the previous setting."""
    global _tolerances
    previous = _tolerances
    _tolerances = Tolerances(
        entry=previous.entry if entry is None else float(entry),
        eig=previous.eig if eig is None else float(eig),
    )
    return previous


I2 = np.eye(2, dtype=np.complex128)
SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SY = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SZ = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = {"I": I2, "X": SX, "Y": SY, "Z": SZ}


def _square(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    return m


def qubit_count(m: np.ndarray) -> int:
    dim = np.shape(m)[0]
    n = int(dim).bit_length() - 1
    if dim < 2 or 2**n != dim or dim > MAX_DIM:
        raise ValueError(f"dimension {dim} is not a power of two in [2, {MAX_DIM}]")
    return n


def kron(*ops: np.ndarray) -> np.ndarray:
    """Tensor product, leftmost factor on the most significant qubits."""
    if not ops:
        raise ValueError("kron needs at least one operand")
    return reduce(np.kron, (_square(op) for op in ops))


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def is_hermitian(m: np.ndarray, atol: float | None = None) -> bool:
    atol = _tolerances.entry if atol is None else atol
    return bool(np.allclose(m, dagger(m), rtol=0.0, atol=atol))


def allclose(a: np.ndarray, b: np.ndarray, atol: float | None = None) -> bool:
    atol = _tolerances.entry if atol is None else atol
    return bool(np.allclose(a, b, rtol=0.0, atol=atol))


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def hermitian_eigh(m: np.ndarray, atol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    m = _square(m)
    if not is_hermitian(m, atol):
        raise ValueError("matrix is not Hermitian")
    # symmetrize so LAPACK sees an exactly Hermitian input
    return np.linalg.eigh(0.5 * (m + dagger(m)))


def hermitian_eigenvalues(m: np.ndarray, atol: float = 1e-10) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in ascending order.

    Raises ``ValueError`` if ``m`` deviates from Hermitian by more than ``atol``.
    """
    return hermitian_eigh(m, atol)[0]


def as_density(rho: np.ndarray, name: str = "rho") -> np.ndarray:
    """Validate and return ``rho`` as a complex density matrix."""
    rho = _square(rho, name)
    qubit_count(rho)
    tol = _tolerances
    if not is_hermitian(rho, tol.entry):
        raise ValueError(f"{name} is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol.entry:
        raise ValueError(f"{name} has trace {tr.real:.15g}, expected 1")
    lowest = hermitian_eigenvalues(rho)[0]
    if lowest < -tol.eig:
        raise ValueError(f"{name} is not positive semidefinite (eigenvalue {lowest:.3e})")
    return rho


def is_density(rho: np.ndarray) -> bool:
    try:
        as_density(rho)
    except ValueError:
        return False
    return True


def projector(vec: np.ndarray) -> np.ndarray:
    v = np.asarray(vec, dtype=np.complex128).reshape(-1)
    return np.outer(v, np.conj(v))


def permute_qubits(rho: np.ndarray, order: Sequence[int]) -> np.ndarray:
    """Reorder qubits so that new qubit ``k`` is old qubit ``order[k]``."""
    rho = _square(rho)
    n = qubit_count(rho)
    if sorted(order) != list(range(n)):
        raise ValueError(f"{list(order)} is not a permutation of {n} qubits")
    t = rho.reshape([2] * (2 * n))
    axes = list(order) + [n + k for k in order]
    return t.transpose(axes).reshape(2**n, 2**n)


def partial_trace(rho: np.ndarray, keep: int | Iterable[int]) -> np.ndarray:
    """Trace out every qubit not listed in ``keep``.

    The kept qubits stay in ascending order.
    """
    rho = _square(rho)
    n = qubit_count(rho)
    keep = sorted({keep} if isinstance(keep, (int, np.integer)) else set(keep))
    if not keep or any(not 0 <= k < n for k in keep):
        raise ValueError(f"invalid subsystem selection {keep} for {n} qubits")
    traced = [q for q in range(n) if q not in keep]
    t = permute_qubits(rho, keep + traced)
    dk, dt = 2 ** len(keep), 2 ** len(traced)
    return np.einsum("ajbj->ab", t.reshape(dk, dt, dk, dt))


def partial_transpose(rho: np.ndarray, subsystem: int = 1) -> np.ndarray:
    """Transpose one factor of a two-qubit operator (0 = first qubit, 1 = second)."""
    rho = _square(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"partial transpose needs a 4x4 matrix, got {rho.shape}")
    if subsystem not in (0, 1):
        raise ValueError(f"subsystem must be 0 or 1, got {subsystem}")
    t = rho.reshape(2, 2, 2, 2)
    t = t.transpose(2, 1, 0, 3) if subsystem == 0 else t.transpose(0, 3, 2, 1)
    return t.reshape(4, 4)


def bloch_vector(rho: np.ndarray) -> np.ndarray:
    rho = _square(rho)
    if rho.shape != (2, 2):
        raise ValueError("Bloch vector needs a single-qubit matrix")
    return np.array([np.trace(rho @ p).real for p in (SX, SY, SZ)])


def from_bloch(r: Sequence[float]) -> np.ndarray:
    x, y, z = r
    return 0.5 * (I2 + x * SX + y * SY + z * SZ)

"""Brute-force simulation of the Psi+-aligned teleportation protocol.

Measurements are simulated exactly: each Bell outcome is a projector
conjugation, the receiver applies the table correction, and the
unnormalized branches are summed in BellKind order.

Register layouts
    one qubit:  (input, A, B)                   -- Bell measurement on (input, A)
    two qubits: (input1, input2, A1, B1, A2, B2) -- measurements on (input1, A1)
                                                    and (input2, A2)
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping

import numpy as np

from bellmix.qlinalg import (
    I2,
    SX,
    SY,
    SZ,
    as_density,
    dagger,
    kron,
    partial_trace,
    permute_qubits,
    projector,
)
from bellmix.states import BellKind, BellWeights, bell_mixture, bell_projector

CorrectionTable = Mapping[BellKind, np.ndarray]


def default_correction_table() -> dict[BellKind, np.ndarray]:
    return {
        BellKind.PSI_PLUS: I2.copy(),
        BellKind.PSI_MINUS: SZ.copy(),
        BellKind.PHI_PLUS: SX.copy(),
        BellKind.PHI_MINUS: SY.copy(),
    }


def _branches_1q(rho_in: np.ndarray, channel: BellWeights, table: CorrectionTable) -> list[np.ndarray]:
    full = kron(rho_in, bell_mixture(channel))
    out = []
    for kind in BellKind:
        meas = kron(bell_projector(kind), I2)
        fix = kron(I2, I2, table[kind])
        op = fix @ meas
        out.append(partial_trace(op @ full @ dagger(op), 2))
    return out


def teleport_1q(
    rho_in: np.ndarray,
    channel: BellWeights,
    table: CorrectionTable | None = None,
    return_branches: bool = False,
):
    """Teleport one qubit through a Bell-mixture channel.

    With ``return_branches`` the per-outcome unnormalized states are also
    returned, in BellKind order.
    """
    rho_in = as_density(rho_in, "rho_in")
    if rho_in.shape != (2, 2):
        raise ValueError("teleport_1q needs a single-qubit state")
    if not isinstance(channel, BellWeights):
        channel = BellWeights.from_sequence(channel)
    branches = _branches_1q(rho_in, channel, table or default_correction_table())
    total = np.zeros((2, 2), dtype=np.complex128)
    for b in branches:
        total += b
    return (total, branches) if return_branches else total


# (input1, A1, input2, A2, B1, B2) expressed in the natural layout indices
_MEASURE_ORDER = (0, 2, 1, 4, 3, 5)


def teleport_2q(
    rho12: np.ndarray,
    channel: BellWeights,
    table: CorrectionTable | None = None,
    return_branches: bool = False,
):
    """Teleport both halves of a two-qubit state through two copies of ``channel``.

    Runs the full 64x64 simulation; the sixteen outcome branches are
    accumulated in lexicographic (outcome1, outcome2) order.
    """
    rho12 = as_density(rho12, "rho12")
    if rho12.shape != (4, 4):
        raise ValueError("teleport_2q needs a two-qubit state")
    if not isinstance(channel, BellWeights):
        channel = BellWeights.from_sequence(channel)
    table = table or default_correction_table()
    ch = bell_mixture(channel)
    full = permute_qubits(kron(rho12, ch, ch), _MEASURE_ORDER)
    i4 = np.eye(4, dtype=np.complex128)
    branches = []
    for k1, k2 in itertools.product(BellKind, repeat=2):
        meas = kron(bell_projector(k1), bell_projector(k2), i4)
        fix = kron(i4, i4, table[k1], table[k2])
        op = fix @ meas
        branches.append(partial_trace(op @ full @ dagger(op), (4, 5)))
    total = np.zeros((4, 4), dtype=np.complex128)
    for b in branches:
        total += b
    return (total, branches) if return_branches else total


def check_correction_table(table: CorrectionTable, atol: float = 1e-12) -> bool:
    """True if the table teleports pure states exactly through a pure Psi+ channel."""
    perfect = BellWeights(1.0, 0.0, 0.0, 0.0)
    probes = [
        np.array([1, 0]),
        np.array([0, 1]),
        np.array([1, 1]) / np.sqrt(2),
        np.array([1, 1j]) / np.sqrt(2),
        np.array([0.6, 0.8 * np.exp(0.7j)]),
    ]
    for vec in probes:
        rho = projector(vec)
        out = teleport_1q(rho, perfect, table)
        if abs(np.trace(rho @ out) - 1.0) > atol:
            return False
    return True

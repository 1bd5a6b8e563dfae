"""Analytic Pauli-channel layer of Bell-mixture teleportation.

Teleporting a qubit through a Bell-diagonal channel with the Psi+-aligned
protocol acts as I -> I, sigma_i -> lambda_i sigma_i on the input. The
single-qubit channel is the Pauli mixture

    rho -> w1 rho + w2 Z rho Z + w3 X rho X + w4 Y rho Y

so each Bell weight doubles as a Pauli error probability.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from bellmix.qlinalg import I2, SX, SY, SZ, as_density, dagger, kron
from bellmix.states import BellWeights, SchmidtState

CP_TOL = 1e-12

# Pauli error attached to each Bell weight, in (w1, w2, w3, w4) order
_WEIGHT_PAULIS = (I2, SZ, SX, SY)


class NotCompletelyPositive(ValueError):
    """Raised when a lambda triple lies outside the Bell-mixture tetrahedron."""

    def __init__(self, lambdas: PauliLambdas, weights: tuple[float, ...]):
        self.lambdas = lambdas
        self.weights = weights
        self.violating = tuple(i + 1 for i, w in enumerate(weights) if w < -CP_TOL)
        detail = ", ".join(f"w{i} = {weights[i - 1]:.6g}" for i in self.violating)
        super().__init__(f"{lambdas} is not realizable by a Bell mixture ({detail} < 0)")


@dataclasses.dataclass(frozen=True)
class PauliLambdas:
    lx: float
    ly: float
    lz: float

    def __post_init__(self):
        for v in self.as_tuple():
            if not math.isfinite(v) or abs(v) > 1 + CP_TOL:
                raise ValueError(f"each lambda must lie in [-1, 1], got {self.as_tuple()}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.lx, self.ly, self.lz)

    def __iter__(self):
        return iter(self.as_tuple())

    @property
    def sum_sq(self) -> float:
        return self.lx**2 + self.ly**2 + self.lz**2

    def raw_weights(self) -> tuple[float, float, float, float]:
        """Bell weights solving the linear system, without any sign check."""
        lx, ly, lz = self.as_tuple()
        return (
            (1 + lx + ly + lz) / 4,
            (1 - lx - ly + lz) / 4,
            (1 + lx - ly - lz) / 4,
            (1 - lx + ly - lz) / 4,
        )

    def is_cp(self, tol: float = CP_TOL) -> bool:
        return min(self.raw_weights()) >= -tol


def lambdas_from_weights(w: BellWeights) -> PauliLambdas:
    w1, w2, w3, w4 = w
    return PauliLambdas(w1 - w2 + w3 - w4, w1 - w2 - w3 + w4, w1 + w2 - w3 - w4)


def weights_from_lambdas(l: PauliLambdas, tol: float = CP_TOL) -> BellWeights:
    raw = l.raw_weights()
    if min(raw) < -tol:
        raise NotCompletelyPositive(l, raw)
    return BellWeights(*(max(w, 0.0) for w in raw))


def _cp_weights(l: PauliLambdas) -> BellWeights:
    return weights_from_lambdas(l)


def apply_pauli_channel_1q(rho: np.ndarray, l: PauliLambdas) -> np.ndarray:
    rho = as_density(rho)
    if rho.shape != (2, 2):
        raise ValueError("single-qubit channel needs a 2x2 state")
    w = _cp_weights(l)
    return sum(p * (s @ rho @ s) for p, s in zip(w, _WEIGHT_PAULIS))


def apply_channel_two_sided(rho12: np.ndarray, l: PauliLambdas) -> np.ndarray:
    """Apply the same Pauli channel independently to both qubits of a pair."""
    rho12 = as_density(rho12, "rho12")
    if rho12.shape != (4, 4):
        raise ValueError("two-sided channel needs a 4x4 state")
    w = _cp_weights(l)
    out = np.zeros((4, 4), dtype=np.complex128)
    for pa, sa in zip(w, _WEIGHT_PAULIS):
        if pa == 0:
            continue
        for pb, sb in zip(w, _WEIGHT_PAULIS):
            if pb == 0:
                continue
            k = kron(sa, sb)
            out += pa * pb * (k @ rho12 @ dagger(k))
    return out


def closed_form_max_entangled_output(l: PauliLambdas) -> np.ndarray:
    """Teleported image of (|00> + |11>)/sqrt(2) through two equal channels."""
    _cp_weights(l)
    lx2, ly2, lz2 = (v * v for v in l)
    plus, minus = lx2 + ly2, lx2 - ly2
    return 0.25 * np.array(
        [
            [1 + lz2, 0, 0, plus],
            [0, 1 - lz2, minus, 0],
            [0, minus, 1 - lz2, 0],
            [plus, 0, 0, 1 + lz2],
        ],
        dtype=np.complex128,
    )


def schmidt_output_formula(s: SchmidtState, l: PauliLambdas) -> np.ndarray:
    """Closed-form teleported image of alpha|00> + beta|11>, with no CP check.

    For lx != ly at lz = 1 this is not a physical state; it is exposed so
    that region can be inspected.
    """
    lx, ly, lz = l
    a, b = complex(s.alpha), complex(s.beta)
    pa, pb = abs(a) ** 2, abs(b) ** 2
    coh = a * b.conjugate()
    corner = (coh * (lx + ly) ** 2 + coh.conjugate() * (lx - ly) ** 2) / 4
    inner = coh.real * (lx * lx - ly * ly) / 2
    mid = (1 - lz * lz) / 4
    return np.array(
        [
            [(pa * (1 + lz) ** 2 + pb * (1 - lz) ** 2) / 4, 0, 0, corner],
            [0, mid, inner, 0],
            [0, inner, mid, 0],
            [corner.conjugate(), 0, 0, (pa * (1 - lz) ** 2 + pb * (1 + lz) ** 2) / 4],
        ],
        dtype=np.complex128,
    )


def closed_form_schmidt_output(s: SchmidtState, l: PauliLambdas) -> np.ndarray:
    _cp_weights(l)
    return schmidt_output_formula(s, l)


def two_bell_lambdas(w: float) -> PauliLambdas:
    """Lambdas of w P[Psi+] + (1 - w) P[Psi-]."""
    return lambdas_from_weights(BellWeights(w, 1.0 - w, 0.0, 0.0))


def two_bell_output(s: SchmidtState, w: float) -> np.ndarray:
    """The displayed two-Bell result: populations kept, coherences damped by (2w - 1)^2."""
    a, b = complex(s.alpha), complex(s.beta)
    d = (2 * w - 1) ** 2
    rho = np.zeros((4, 4), dtype=np.complex128)
    rho[0, 0], rho[3, 3] = abs(a) ** 2, abs(b) ** 2
    rho[0, 3] = d * a * b.conjugate()
    rho[3, 0] = d * a.conjugate() * b
    return rho

"""Bell states, Bell mixtures, Werner weights and Schmidt-form pure states.

Bell kinds are always ordered (Psi+, Psi-, Phi+, Phi-), matching the weight
vector (w1, w2, w3, w4). All Bell amplitudes are real.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from collections.abc import Sequence

import numpy as np

from bellmix.qlinalg import projector

WEIGHT_TOL = 1e-12


class BellKind(enum.IntEnum):
    PSI_PLUS = 0
    PSI_MINUS = 1
    PHI_PLUS = 2
    PHI_MINUS = 3

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def parse(cls, text: str) -> BellKind:
        key = text.strip().lower().replace("_", "").replace("-", "minus").replace("+", "plus")
        for kind in cls:
            if key in (kind.name.lower().replace("_", ""), _LABELS[kind].lower()):
                return kind
        raise ValueError(f"unknown Bell kind {text!r}")


_LABELS = {
    BellKind.PSI_PLUS: "Psi+",
    BellKind.PSI_MINUS: "Psi-",
    BellKind.PHI_PLUS: "Phi+",
    BellKind.PHI_MINUS: "Phi-",
}

_S = 1 / math.sqrt(2)
_BELL_VECTORS = {
    BellKind.PSI_PLUS: np.array([0, _S, _S, 0], dtype=np.complex128),
    BellKind.PSI_MINUS: np.array([0, _S, -_S, 0], dtype=np.complex128),
    BellKind.PHI_PLUS: np.array([_S, 0, 0, _S], dtype=np.complex128),
    BellKind.PHI_MINUS: np.array([_S, 0, 0, -_S], dtype=np.complex128),
}


def bell_state(kind: BellKind | int) -> np.ndarray:
    return _BELL_VECTORS[BellKind(kind)].copy()


def bell_projector(kind: BellKind | int) -> np.ndarray:
    return projector(_BELL_VECTORS[BellKind(kind)])


@dataclasses.dataclass(frozen=True)
class BellWeights:
    """Probabilities of (Psi+, Psi-, Phi+, Phi-) in a Bell-diagonal state."""

    w1: float
    w2: float
    w3: float
    w4: float

    def __post_init__(self):
        ws = self.as_tuple()
        if any(not math.isfinite(w) for w in ws):
            raise ValueError(f"weights must be finite, got {ws}")
        if any(w < -WEIGHT_TOL or w > 1 + WEIGHT_TOL for w in ws):
            raise ValueError(f"weights must lie in [0, 1], got {ws}")
        if abs(sum(ws) - 1.0) > WEIGHT_TOL:
            raise ValueError(f"weights must sum to 1, got sum {sum(ws)!r}")

    @classmethod
    def from_sequence(cls, ws: Sequence[float], renormalize_tol: float = 0.0) -> BellWeights:
        """Build from four numbers, rescaling if the sum is off by at most ``renormalize_tol``."""
        ws = [float(w) for w in ws]
        if len(ws) != 4:
            raise ValueError(f"expected 4 weights, got {len(ws)}")
        total = sum(ws)
        if renormalize_tol and abs(total - 1.0) <= renormalize_tol and total > 0:
            ws = [w / total for w in ws]
        return cls(*ws)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w1, self.w2, self.w3, self.w4)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())

    def __iter__(self):
        return iter(self.as_tuple())


@dataclasses.dataclass(frozen=True)
class SchmidtState:
    """The pure state alpha|00> + beta|11>."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > WEIGHT_TOL:
            raise ValueError(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")

    @classmethod
    def from_alpha2(cls, alpha2: float, phase: float = 0.0) -> SchmidtState:
        """alpha = sqrt(alpha2), beta = sqrt(1 - alpha2) * exp(i phase)."""
        if not 0.0 <= alpha2 <= 1.0:
            raise ValueError(f"alpha2 must lie in [0, 1], got {alpha2}")
        return cls(complex(math.sqrt(alpha2)), math.sqrt(1.0 - alpha2) * complex(math.cos(phase), math.sin(phase)))

    def vector(self) -> np.ndarray:
        return np.array([self.alpha, 0, 0, self.beta], dtype=np.complex128)

    @property
    def concurrence(self) -> float:
        return 2.0 * abs(self.alpha * self.beta)


def bell_mixture(w: BellWeights | Sequence[float]) -> np.ndarray:
    if not isinstance(w, BellWeights):
        w = BellWeights.from_sequence(w)
    rho = np.zeros((4, 4), dtype=np.complex128)
    for kind, wk in zip(BellKind, w):
        rho += wk * bell_projector(kind)
    return rho


def werner_weights(phi: float, pole: BellKind | int = BellKind.PSI_PLUS) -> BellWeights:
    """Weights of phi * P[pole] + (1 - phi) * I/4."""
    if not 0.0 <= phi <= 1.0:
        raise ValueError(f"phi must lie in [0, 1], got {phi}")
    ws = [(1.0 - phi) / 4] * 4
    ws[BellKind(pole)] = phi + (1.0 - phi) / 4
    return BellWeights(*ws)


def schmidt_density(s: SchmidtState) -> np.ndarray:
    return projector(s.vector())


def mef_bell_diagonal(w: BellWeights) -> float:
    """Maximally entangled fraction of a Bell-diagonal state: the largest weight."""
    return max(w.as_tuple())


def werner_admixture(w: BellWeights) -> float:
    """Pure-Bell admixture phi of a Werner-form weight vector, (4 max(w) - 1) / 3."""
    return (4.0 * mef_bell_diagonal(w) - 1.0) / 3.0

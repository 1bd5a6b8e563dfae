"""Entanglement and nonlocality diagnostics for two-qubit states."""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from bellmix.qlinalg import (
    SX,
    SY,
    SZ,
    as_density,
    hermitian_eigenvalues,
    hermitian_eigh,
    kron,
    partial_trace,
    partial_transpose,
)

DECISION_TOL = 1e-9

_YY = kron(SY, SY)
_SIGMAS = (SX, SY, SZ)
# eigen-weights below this are treated as exact zeros in the concurrence
_RANK_CUTOFF = 1e-13


def _two_qubit(rho: np.ndarray) -> np.ndarray:
    rho = as_density(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a two-qubit state, got shape {rho.shape}")
    return rho


def ppt_min_eigenvalue(rho: np.ndarray) -> float:
    """Smallest eigenvalue of the partial transpose; negative iff entangled."""
    return float(hermitian_eigenvalues(partial_transpose(_two_qubit(rho), 1))[0])


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence.

    The decreasing numbers s_i are the square roots of the eigenvalues of
    rho (Y x Y) conj(rho) (Y x Y), where conj is entrywise in the computational
    basis. They are obtained as singular values of W^T (Y x Y) W with
    rho = W W^dagger, which avoids taking square roots of eigenvalue noise.
    """
    rho = _two_qubit(rho)
    vals, vecs = hermitian_eigh(rho)
    keep = vals > _RANK_CUTOFF
    w = vecs[:, keep] * np.sqrt(vals[keep])
    s = np.zeros(4)
    if w.shape[1]:
        sv = np.linalg.svd(w.T @ _YY @ w, compute_uv=False)
        s[: len(sv)] = sv
    s = np.sort(s)[::-1]
    return float(max(0.0, s[0] - s[1] - s[2] - s[3]))


def t_matrix(rho: np.ndarray) -> np.ndarray:
    """Correlation matrix T_ij = Tr[rho (sigma_i x sigma_j)], i, j in (x, y, z)."""
    rho = _two_qubit(rho)
    return np.array([[np.trace(rho @ kron(si, sj)).real for sj in _SIGMAS] for si in _SIGMAS])


def horodecki_m(rho: np.ndarray) -> float:
    """Sum of the two largest eigenvalues of T^T T; CHSH is violated iff this exceeds 1."""
    t = t_matrix(rho)
    eig = hermitian_eigenvalues(t.T @ t)
    return float(eig[-1] + eig[-2])


def renyi2(rho: np.ndarray) -> float:
    rho = as_density(rho)
    purity = np.trace(rho @ rho).real
    return float(max(0.0, -math.log(purity)))


def two_e_deficit(rho12: np.ndarray) -> float:
    """S2(rho12) - max(S2(rho1), S2(rho2)); negative means the 2-E inequality fails."""
    rho12 = _two_qubit(rho12)
    marg = max(renyi2(partial_trace(rho12, 0)), renyi2(partial_trace(rho12, 1)))
    return renyi2(rho12) - marg


def two_e_violates(rho12: np.ndarray, tol: float = DECISION_TOL) -> tuple[bool, float]:
    deficit = two_e_deficit(rho12)
    return deficit < -tol, deficit


@dataclasses.dataclass(frozen=True)
class CriteriaReport:
    ppt_min_eig: float
    concurrence: float
    horodecki_m: float
    s2_deficit: float
    entangled: bool
    bell_violating: bool
    two_e_violating: bool
    tol: float = DECISION_TOL

    def lines(self) -> list[str]:
        yn = {True: "yes", False: "no"}
        return [
            f"ppt_min_eig     {self.ppt_min_eig:.12g}",
            f"concurrence     {self.concurrence:.12g}",
            f"horodecki_m     {self.horodecki_m:.12g}",
            f"s2_deficit      {self.s2_deficit:.12g}",
            f"entangled       {yn[self.entangled]}",
            f"bell_violating  {yn[self.bell_violating]}",
            f"2-E violating   {yn[self.two_e_violating]}",
        ]


def criteria_report(rho: np.ndarray, tol: float = DECISION_TOL) -> CriteriaReport:
    rho = _two_qubit(rho)
    ppt = ppt_min_eigenvalue(rho)
    m = horodecki_m(rho)
    deficit = two_e_deficit(rho)
    return CriteriaReport(
        ppt_min_eig=ppt,
        concurrence=concurrence(rho),
        horodecki_m=m,
        s2_deficit=deficit,
        entangled=ppt < -tol,
        bell_violating=m > 1 + tol,
        two_e_violating=deficit < -tol,
        tol=tol,
    )

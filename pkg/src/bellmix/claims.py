"""Executable checks of the teleportation-through-Bell-mixture results.

Each ``claim_*`` function is deterministic for fixed arguments and returns a
:class:`ClaimResult`. Grid claims walk the simplex grid from
:func:`simplex_grid`; sampling claims draw from ``numpy.random.default_rng(seed)``.
Points within ``BAND`` of an analytic boundary are skipped.
"""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Iterator

import numpy as np

from bellmix.channel import (
    NotCompletelyPositive,
    PauliLambdas,
    apply_channel_two_sided,
    apply_pauli_channel_1q,
    closed_form_max_entangled_output,
    closed_form_schmidt_output,
    lambdas_from_weights,
    schmidt_output_formula,
    two_bell_lambdas,
    weights_from_lambdas,
)
from bellmix.criteria import (
    DECISION_TOL,
    concurrence,
    horodecki_m,
    ppt_min_eigenvalue,
    two_e_violates,
)
from bellmix.qlinalg import (
    hermitian_eigenvalues,
    kron,
    max_abs_diff,
    partial_trace,
    projector,
)
from bellmix.states import (
    BellKind,
    BellWeights,
    SchmidtState,
    bell_mixture,
    mef_bell_diagonal,
    werner_weights,
)
from bellmix.teleport import teleport_1q, teleport_2q

BAND = 1e-6
WITNESS_ALPHA2 = (0.1, 0.25, 0.5, 0.75, 0.9)
STRICTNESS_WITNESS = BellWeights(0.7, 0.1, 0.1, 0.1)


@dataclasses.dataclass
class ClaimResult:
    claim_id: str
    passed: bool
    status: str  # PASS / FAIL, or WITNESS / NO_WITNESS for exploratory searches
    paper_backed: bool = True
    grid_size: int = 0
    sample_count: int = 0
    seed: int | None = None
    tolerance: float = DECISION_TOL
    witnesses: list[tuple[dict, float]] = dataclasses.field(default_factory=list)
    summary: str = ""

    def line(self) -> str:
        return f"{self.claim_id:<30} {self.status:<10} {self.summary}"

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["witnesses"] = [{"params": p, "value": v} for p, v in self.witnesses]
        return d


def _result(claim_id, failures, extra_witnesses=(), **kw) -> ClaimResult:
    passed = not failures
    return ClaimResult(
        claim_id=claim_id,
        passed=passed,
        status="PASS" if passed else "FAIL",
        witnesses=list(failures) + list(extra_witnesses),
        **kw,
    )


def simplex_grid(n: int) -> Iterator[BellWeights]:
    """All weight vectors k/n with nonnegative integer k summing to n, in lexicographic order."""
    if n < 1:
        raise ValueError("grid resolution must be positive")
    for k1 in range(n + 1):
        for k2 in range(n + 1 - k1):
            for k3 in range(n + 1 - k1 - k2):
                k4 = n - k1 - k2 - k3
                yield BellWeights(k1 / n, k2 / n, k3 / n, k4 / n)


def simplex_grid_size(n: int) -> int:
    return math.comb(n + 3, 3)


def random_schmidt_states(rng: np.random.Generator, count: int, lo: float = 0.01, hi: float = 0.99) -> list[SchmidtState]:
    a2 = rng.uniform(lo, hi, count)
    phase = rng.uniform(0.0, 2 * math.pi, count)
    return [SchmidtState.from_alpha2(float(x), float(p)) for x, p in zip(a2, phase)]


def random_density(rng: np.random.Generator, dim: int, rank: int | None = None) -> np.ndarray:
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_weights(rng: np.random.Generator) -> BellWeights:
    ws = rng.dirichlet(np.ones(4))
    ws[-1] = 1.0 - ws[:3].sum()
    return BellWeights.from_sequence(np.clip(ws, 0.0, 1.0), renormalize_tol=1e-9)


def _wdict(w: BellWeights) -> dict:
    return {"w": list(w)}


def claim_two_bell_inseparable(grid_n: int = 12, seed: int = 0, tol: float = DECISION_TOL) -> ClaimResult:
    """Two-Bell channel output of alpha|00> + beta|11> is entangled iff w != 1/2."""
    if grid_n < 3:
        raise ValueError("grid_n must be at least 3")
    rng = np.random.default_rng(seed)
    family = [SchmidtState.from_alpha2(a2) for a2 in WITNESS_ALPHA2] + random_schmidt_states(rng, 20)
    failures = []
    worst = -math.inf
    for w in np.linspace(0.0, 1.0, grid_n):
        w = float(w)
        if abs(w - 0.5) < BAND:
            continue
        l = two_bell_lambdas(w)
        for s in family:
            out = closed_form_schmidt_output(s, l)
            ppt = ppt_min_eigenvalue(out)
            worst = max(worst, ppt)
            c_expected = (2 * w - 1) ** 2 * s.concurrence
            if ppt >= -tol or abs(concurrence(out) - c_expected) > 1e-10:
                failures.append(({"w": w, "alpha": str(s.alpha), "beta": str(s.beta)}, ppt))
    boundary = max(ppt_min_eigenvalue(closed_form_schmidt_output(s, two_bell_lambdas(0.5))) for s in family)
    boundary_min = min(ppt_min_eigenvalue(closed_form_schmidt_output(s, two_bell_lambdas(0.5))) for s in family)
    if boundary_min < -tol:
        failures.append(({"w": 0.5}, boundary_min))
    return _result(
        "two_bell_inseparable",
        failures,
        [({"w": "off-1/2 grid", "stat": "max ppt_min_eig"}, worst), ({"w": 0.5, "stat": "max ppt_min_eig"}, boundary)],
        grid_size=grid_n,
        sample_count=len(family),
        seed=seed,
        tolerance=tol,
        summary=f"max ppt_min_eig off w=1/2: {worst:.3e}; at w=1/2: {boundary_min:.3e}",
    )


def claim_threshold_iff(grid_n: int = 12, tol: float = DECISION_TOL) -> ClaimResult:
    """Maximally entangled probe stays entangled iff lx^2 + ly^2 + lz^2 > 1."""
    if grid_n < 5:
        raise ValueError("grid_n must be at least 5")
    failures, checked = [], 0
    for w in simplex_grid(grid_n):
        l = lambdas_from_weights(w)
        if abs(l.sum_sq - 1.0) < BAND:
            continue
        checked += 1
        ppt = ppt_min_eigenvalue(closed_form_max_entangled_output(l))
        if (ppt < -tol) != (l.sum_sq > 1.0):
            failures.append((_wdict(w), ppt))
    witness = closed_form_max_entangled_output(lambdas_from_weights(STRICTNESS_WITNESS))
    return _result(
        "threshold_iff",
        failures,
        [(_wdict(STRICTNESS_WITNESS), ppt_min_eigenvalue(witness))],
        grid_size=grid_n,
        sample_count=checked,
        tolerance=tol,
        summary=f"{checked - len(failures)}/{checked} off-band grid points agree",
    )


def claim_bell_implies_threshold(
    sample_count: int = 1000, seed: int = 0, grid_n: int = 12, tol: float = DECISION_TOL
) -> ClaimResult:
    """CHSH violation of the channel implies lx^2 + ly^2 + lz^2 > 1, and not conversely."""
    if sample_count < 100:
        raise ValueError("sample_count must be at least 100")
    rng = np.random.default_rng(seed)
    channels = list(simplex_grid(grid_n)) + [random_weights(rng) for _ in range(sample_count)]
    failures = []
    for w in channels:
        m = horodecki_m(bell_mixture(w))
        s = lambdas_from_weights(w).sum_sq
        if m > 1 + tol and not s > 1 + tol:
            failures.append((_wdict(w), m))
    m_w = horodecki_m(bell_mixture(STRICTNESS_WITNESS))
    s_w = lambdas_from_weights(STRICTNESS_WITNESS).sum_sq
    if not (s_w > 1 + tol and m_w <= 1 + tol):
        failures.append((_wdict(STRICTNESS_WITNESS), m_w))
    return _result(
        "bell_implies_threshold",
        failures,
        [({**_wdict(STRICTNESS_WITNESS), "sum_l2": s_w}, m_w)],
        grid_size=grid_n,
        sample_count=len(channels),
        seed=seed,
        tolerance=tol,
        summary=f"{len(channels)} channels, strictness witness sum_l2={s_w:.12g} M={m_w:.12g}",
    )


def claim_two_e_iff_threshold(grid_n: int = 12, tol: float = DECISION_TOL) -> ClaimResult:
    """A Bell-mixture channel violates the 2-E inequality iff lx^2 + ly^2 + lz^2 > 1."""
    if grid_n < 5:
        raise ValueError("grid_n must be at least 5")
    failures, checked, worst_identity = [], 0, 0.0
    for w in simplex_grid(grid_n):
        s = lambdas_from_weights(w).sum_sq
        gap = abs(s - (4 * float(np.sum(w.as_array() ** 2)) - 1))
        worst_identity = max(worst_identity, gap)
        if gap > 1e-12:
            failures.append(({**_wdict(w), "stat": "identity gap"}, gap))
        if abs(s - 1.0) < BAND:
            continue
        checked += 1
        violates, deficit = two_e_violates(bell_mixture(w), tol)
        if violates != (s > 1.0):
            failures.append((_wdict(w), deficit))
    return _result(
        "two_e_iff_threshold",
        failures,
        grid_size=grid_n,
        sample_count=checked,
        tolerance=tol,
        summary=f"{checked - len([f for f in failures if 'stat' not in f[0]])}/{checked} agree; "
        f"max |sum_l2 - (4 sum w^2 - 1)| = {worst_identity:.1e}",
    )


def claim_full_range_two_bell(w: float, sample_count: int = 100, seed: int = 0, tol: float = DECISION_TOL) -> ClaimResult:
    """Every entangled alpha|00> + beta|11> stays entangled; concurrence scales by (2w - 1)^2."""
    if abs(w - 0.5) < BAND:
        raise ValueError("w = 1/2 gives a separable channel")
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"w must lie in [0, 1], got {w}")
    if sample_count < 100:
        raise ValueError("sample_count must be at least 100")
    rng = np.random.default_rng(seed)
    a2 = rng.uniform(0.0, 1.0, sample_count)
    phase = rng.uniform(0.0, 2 * math.pi, sample_count)
    states = [SchmidtState.from_alpha2(float(x), float(p)) for x, p in zip(a2, phase)]
    l = two_bell_lambdas(w)
    factor = (2 * w - 1) ** 2
    failures, worst = [], 0.0
    for s in states + [SchmidtState(1.0, 0.0)]:
        rho = projector(s.vector())
        out = closed_form_schmidt_output(s, l)
        c_in, c_out = concurrence(rho), concurrence(out)
        err = abs(c_out - factor * c_in)
        worst = max(worst, err)
        params = {"w": w, "alpha": str(s.alpha), "beta": str(s.beta)}
        if err > 1e-10:
            failures.append((params, c_out))
        if c_in > tol and not ppt_min_eigenvalue(out) < -tol:
            failures.append((params, ppt_min_eigenvalue(out)))
    return _result(
        f"full_range_two_bell(w={w:g})",
        failures,
        sample_count=sample_count,
        seed=seed,
        tolerance=tol,
        summary=f"C_out = {factor:.6g} * C_in, max error {worst:.1e}",
    )


def claim_lambda_z_one_uniqueness(grid_n: int = 12, probe_n: int = 50) -> ClaimResult:
    """lz = 1 is reachable only by two-Bell mixtures, which force lx = ly."""
    if grid_n < 10:
        raise ValueError("grid_n must be at least 10")
    failures, hits = [], 0
    for w in simplex_grid(grid_n):
        l = lambdas_from_weights(w)
        if abs(l.lz - 1.0) >= 1e-12:
            continue
        hits += 1
        w1, w2, w3, w4 = w
        if w3 + w4 >= 1e-12 or abs(l.lx - l.ly) > 1e-12 or abs(l.lx - (w1 - w2)) > 1e-12:
            failures.append((_wdict(w), l.lx - l.ly))
        if (abs(l.lx) > 1e-12) != (w1 != w2):
            failures.append((_wdict(w), l.lx))
    accepted = rejected = 0
    unphysical_min = math.inf
    grid = np.linspace(-1.0, 1.0, probe_n)
    for lx in grid:
        for ly in grid:
            probe = PauliLambdas(float(lx), float(ly), 1.0)
            try:
                weights_from_lambdas(probe)
                ok = True
            except NotCompletelyPositive:
                ok = False
                unphysical_min = min(
                    unphysical_min,
                    float(hermitian_eigenvalues(schmidt_output_formula(SchmidtState.from_alpha2(0.5), probe))[0]),
                )
            accepted += ok
            rejected += not ok
            if ok != (abs(lx - ly) <= 1e-9):
                failures.append(({"lx": float(lx), "ly": float(ly), "lz": 1.0}, float(lx - ly)))
    return _result(
        "lambda_z_one_uniqueness",
        failures,
        [({"stat": "min eigenvalue of displayed lz=1 matrix over rejected probes"}, unphysical_min)],
        grid_size=grid_n,
        sample_count=probe_n * probe_n,
        tolerance=1e-12,
        summary=f"{hits} grid points with lz=1; probes accepted {accepted}, rejected {rejected}",
    )


def _werner_probe_ppt(phi: float, pole: BellKind = BellKind.PSI_PLUS) -> float:
    l = lambdas_from_weights(werner_weights(phi, pole))
    return ppt_min_eigenvalue(closed_form_max_entangled_output(l))


def werner_boundary(pole: BellKind = BellKind.PSI_PLUS, xtol: float = 1e-12) -> float:
    """Bisect phi for the sign change of the probe's partial-transpose minimum."""
    lo, hi = 0.0, 1.0
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if _werner_probe_ppt(mid, pole) < 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def claim_werner_thresholds(grid_n: int = 40, tol: float = DECISION_TOL) -> ClaimResult:
    """Werner channels teleport the probe's entanglement iff phi > 1/sqrt(3)."""
    if grid_n < 20:
        raise ValueError("grid_n must be at least 20")
    critical = 1 / math.sqrt(3)
    failures, checked = [], 0
    for phi in np.linspace(0.0, 1.0, grid_n + 1):
        phi = float(phi)
        if abs(phi - critical) < BAND:
            continue
        checked += 1
        w = werner_weights(phi)
        lam = (4 * w.w1 - 1) / 3
        ppt = _werner_probe_ppt(phi)
        if (ppt < -tol) != (3 * lam * lam > 1):
            failures.append(({"phi": phi}, ppt))
    phi_star = werner_boundary()
    mef_star = mef_bell_diagonal(werner_weights(phi_star))
    if abs(phi_star - critical) > 1e-6:
        failures.append(({"phi": phi_star, "stat": "boundary"}, phi_star - critical))
    return _result(
        "werner_thresholds",
        failures,
        [({"stat": "phi at boundary"}, phi_star), ({"stat": "max weight at boundary"}, mef_star)],
        grid_size=grid_n,
        sample_count=checked,
        tolerance=tol,
        summary=f"boundary phi*={phi_star:.9f} (1/sqrt3={critical:.9f}), max weight there={mef_star:.9f}",
    )


def claim_marginal_preservation(sample_count: int = 50, seed: int = 0) -> ClaimResult:
    """For lz = 1 channels both single-qubit marginals of alpha|00> + beta|11> survive."""
    rng = np.random.default_rng(seed)
    failures, worst = [], 0.0
    for s in random_schmidt_states(rng, sample_count):
        w = float(rng.uniform(0.0, 1.0))
        rho = projector(s.vector())
        out = closed_form_schmidt_output(s, two_bell_lambdas(w))
        err = max(max_abs_diff(partial_trace(out, k), partial_trace(rho, k)) for k in (0, 1))
        worst = max(worst, err)
        if err > 1e-12:
            failures.append(({"w": w, "alpha": str(s.alpha), "beta": str(s.beta)}, err))
    return _result(
        "marginal_preservation",
        failures,
        sample_count=sample_count,
        seed=seed,
        tolerance=1e-12,
        summary=f"max marginal deviation {worst:.1e}",
    )


def claim_oracle_equivalence(sample_count: int = 200, seed: int = 0, atol: float = 1e-10) -> ClaimResult:
    """Brute-force protocol simulation agrees with the analytic Pauli channel."""
    rng = np.random.default_rng(seed)
    failures, worst = [], 0.0
    for i in range(sample_count):
        w = random_weights(rng) if i % 5 else BellWeights(*np.eye(4)[(i // 5) % 4])
        l = lambdas_from_weights(w)
        rank1, rank2 = 1 + i % 2, 1 + i % 4
        rho1 = np.eye(2) / 2 if i % 7 == 3 else random_density(rng, 2, rank1)
        rho2 = np.eye(4) / 4 if i % 7 == 3 else random_density(rng, 4, rank2)
        e1 = max_abs_diff(teleport_1q(rho1, w), apply_pauli_channel_1q(rho1, l))
        e2 = max_abs_diff(teleport_2q(rho2, w), apply_channel_two_sided(rho2, l))
        err = max(e1, e2)
        worst = max(worst, err)
        if err > atol:
            failures.append((_wdict(w), err))
    return _result(
        "oracle_equivalence",
        failures,
        sample_count=sample_count,
        seed=seed,
        tolerance=atol,
        summary=f"max entrywise difference {worst:.1e}",
    )


def _rotated_schmidt(alpha2: float, theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    ry = np.array([[c, -s], [s, c]], dtype=np.complex128)
    u = kron(ry, ry)
    return projector(u @ SchmidtState.from_alpha2(alpha2).vector())


def claim_unknown_basis_failure(
    w: float, n_theta: int = 13, n_alpha: int = 20, tol: float = DECISION_TOL
) -> ClaimResult:
    """Search Ry(theta)-rotated Schmidt states whose entanglement the two-Bell channel destroys.

    Exploratory: reports WITNESS or NO_WITNESS, never FAIL.
    """
    if not 0.0 < w <= 1.0 or abs(w - 0.5) < BAND:
        raise ValueError(f"w must lie in (0, 1] away from 1/2, got {w}")
    l = two_bell_lambdas(w)
    found = []
    unrotated_lost = 0
    for theta in np.linspace(0.0, math.pi / 2, n_theta):
        for a2 in np.linspace(0.5 / n_alpha, 0.5, n_alpha):
            rho = _rotated_schmidt(float(a2), float(theta))
            if concurrence(rho) <= tol:
                continue
            ppt = ppt_min_eigenvalue(apply_channel_two_sided(rho, l))
            if ppt >= -tol:
                if theta == 0.0:
                    unrotated_lost += 1
                found.append(({"w": w, "theta": float(theta), "alpha2": float(a2), "c_in": concurrence(rho)}, ppt))
    status = "WITNESS" if found else "NO_WITNESS"
    return ClaimResult(
        claim_id=f"unknown_basis_failure(w={w:g})",
        passed=unrotated_lost == 0,
        status=status,
        paper_backed=False,
        grid_size=n_theta * n_alpha,
        tolerance=tol,
        witnesses=found[:10],
        summary=(
            f"{len(found)} separable outputs from entangled rotated inputs"
            + (f"; first theta={found[0][0]['theta']:.4f} alpha2={found[0][0]['alpha2']:.4f}" if found else "")
        ),
    )


FULL_RANGE_WS = (0.6, 0.75, 0.9, 1.0)


def run_all(grid_n: int = 12, seed: int = 0, tol: float = DECISION_TOL) -> list[ClaimResult]:
    """Run every claim; grids below a claim's minimum resolution are raised to it."""
    results = [
        claim_oracle_equivalence(200, seed),
        claim_two_bell_inseparable(max(grid_n, 3), seed, tol),
        claim_threshold_iff(max(grid_n, 5), tol),
        claim_bell_implies_threshold(1000, seed, grid_n, tol),
        claim_two_e_iff_threshold(max(grid_n, 5), tol),
    ]
    results += [claim_full_range_two_bell(w, 100, seed, tol) for w in FULL_RANGE_WS]
    results += [
        claim_lambda_z_one_uniqueness(max(grid_n, 10)),
        claim_marginal_preservation(50, seed),
        claim_werner_thresholds(max(grid_n, 20), tol),
        claim_unknown_basis_failure(0.6, tol=tol),
    ]
    return results


def all_passed(results: list[ClaimResult]) -> bool:
    return all(r.passed for r in results if r.paper_backed)

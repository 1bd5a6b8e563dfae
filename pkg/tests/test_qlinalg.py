import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellmix import qlinalg as ql
from bellmix.qlinalg import I2, SX, SY, SZ, kron

PHI_PLUS = np.array([1, 0, 0, 1]) / np.sqrt(2)


def random_hermitian(seed, dim):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return a + a.conj().T


def test_kron_examples():
    assert np.array_equal(kron(SZ, I2), np.diag([1, 1, -1, -1]))
    assert np.array_equal(kron(I2, I2), np.eye(4))
    assert np.array_equal(kron(SX, SX), np.fliplr(np.eye(4)))


def test_kron_left_factor_is_most_significant():
    ket0, ket1 = np.diag([1, 0]), np.diag([0, 1])
    # |1><1| on qubit 0 selects indices 2, 3
    assert np.array_equal(np.diag(kron(ket1, ket0)).real, [0, 0, 1, 0])


def test_kron_rejects_nonsquare():
    with pytest.raises(ValueError):
        kron(np.ones((2, 3)), I2)


@pytest.mark.parametrize(
    "m, expected",
    [
        (np.diag([3, 1, 2]), [1, 2, 3]),
        (ql.projector(PHI_PLUS), [0, 0, 0, 1]),
        ((I2 + SX) / 2, [0, 1]),
    ],
)
def test_hermitian_eigenvalues_examples(m, expected):
    np.testing.assert_allclose(ql.hermitian_eigenvalues(m), expected, atol=1e-10)


def test_hermitian_eigenvalues_rejects_non_hermitian():
    with pytest.raises(ValueError):
        ql.hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))


@pytest.mark.parametrize("seed", range(5))
def test_eigenvalues_match_characteristic_polynomial(seed):
    m = random_hermitian(seed, 4)
    roots = np.sort(np.roots(np.poly(m)).real)
    np.testing.assert_allclose(ql.hermitian_eigenvalues(m), roots, atol=1e-7)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 6))
def test_eigen_sum_is_trace_and_local_pauli_invariant(seed, n):
    m = random_hermitian(seed, 2**n)
    eig = ql.hermitian_eigenvalues(m)
    assert abs(eig.sum() - np.trace(m).real) < 1e-9
    rng = np.random.default_rng(seed)
    paulis = [I2, SX, SY, SZ]
    u = kron(*(paulis[k] for k in rng.integers(0, 4, n)))
    np.testing.assert_allclose(ql.hermitian_eigenvalues(u @ m @ u.conj().T), eig, atol=1e-9)


def test_partial_transpose_examples():
    pt = ql.partial_transpose(ql.projector(PHI_PLUS))
    np.testing.assert_allclose(ql.hermitian_eigenvalues(pt), [-0.5, 0.5, 0.5, 0.5], atol=1e-12)
    p00 = ql.projector([1, 0, 0, 0])
    assert np.array_equal(ql.partial_transpose(p00, 0), p00)
    assert np.array_equal(ql.partial_transpose(np.eye(4) / 4), np.eye(4) / 4)


def test_partial_transpose_explicit_indices():
    m = np.arange(16).reshape(4, 4).astype(complex)
    pt = ql.partial_transpose(m, 1)
    # <i1 i2|PT|j1 j2> = <i1 j2|m|j1 i2>
    for i1, i2, j1, j2 in np.ndindex(2, 2, 2, 2):
        assert pt[2 * i1 + i2, 2 * j1 + j2] == m[2 * i1 + j2, 2 * j1 + i2]
    pt0 = ql.partial_transpose(m, 0)
    np.testing.assert_array_equal(pt0, ql.partial_transpose(m, 1).T)


@pytest.mark.parametrize("bad", [np.eye(2), np.eye(8)])
def test_partial_transpose_rejects_wrong_dimension(bad):
    with pytest.raises(ValueError):
        ql.partial_transpose(bad)


def test_partial_transpose_rejects_bad_subsystem():
    with pytest.raises(ValueError):
        ql.partial_transpose(np.eye(4), 2)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), sub=st.sampled_from([0, 1]))
def test_partial_transpose_involution(seed, sub):
    m = random_hermitian(seed, 4)
    twice = ql.partial_transpose(ql.partial_transpose(m, sub), sub)
    assert np.max(np.abs(twice - m)) <= 1e-14


def test_partial_trace_examples():
    np.testing.assert_allclose(ql.partial_trace(ql.projector(PHI_PLUS), 0), I2 / 2, atol=1e-12)
    np.testing.assert_allclose(ql.partial_trace(ql.projector(PHI_PLUS), 1), I2 / 2, atol=1e-12)
    p01 = ql.projector([0, 1, 0, 0])
    np.testing.assert_allclose(ql.partial_trace(p01, 0), np.diag([1, 0]), atol=1e-12)
    np.testing.assert_allclose(ql.partial_trace(p01, 1), np.diag([0, 1]), atol=1e-12)
    a, b = 0.6, 0.8j
    rho = ql.projector([a, 0, 0, b])
    np.testing.assert_allclose(ql.partial_trace(rho, 0), np.diag([0.36, 0.64]), atol=1e-12)


def test_partial_trace_multi_qubit_selection():
    rng = np.random.default_rng(1)
    mats = []
    for _ in range(3):
        g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        r = g @ g.conj().T
        mats.append(r / np.trace(r))
    full = kron(*mats)
    np.testing.assert_allclose(ql.partial_trace(full, (0, 2)), kron(mats[0], mats[2]), atol=1e-12)
    np.testing.assert_allclose(ql.partial_trace(full, 1), mats[1], atol=1e-12)


@pytest.mark.parametrize("keep", [2, -1, ()])
def test_partial_trace_rejects_invalid_keep(keep):
    with pytest.raises(ValueError):
        ql.partial_trace(np.eye(4) / 4, keep)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_partial_trace_of_product(seed):
    rng = np.random.default_rng(seed)
    ga = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    gb = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    a, b = ga @ ga.conj().T, gb @ gb.conj().T
    prod = kron(a, b)
    prod /= np.trace(prod)
    np.testing.assert_allclose(ql.partial_trace(prod, 0), a / np.trace(a), atol=1e-12)


def test_permute_qubits_moves_factors():
    mats = [np.diag([1, 0]), np.diag([0, 1]), (I2 + SX) / 2]
    out = ql.permute_qubits(kron(*mats), (2, 0, 1))
    np.testing.assert_allclose(out, kron(mats[2], mats[0], mats[1]))


def test_as_density_contracts():
    ql.as_density(np.eye(4) / 4)
    with pytest.raises(ValueError):
        ql.as_density(np.eye(4))
    with pytest.raises(ValueError):
        ql.as_density(np.diag([1.5, -0.5]))
    with pytest.raises(ValueError):
        ql.as_density(np.array([[0.5, 0.5], [0.0, 0.5]]))
    with pytest.raises(ValueError):
        ql.as_density(np.eye(3) / 3)


def test_set_tolerances_round_trip():
    previous = ql.set_tolerances(entry=1e-6)
    try:
        assert ql.tolerances().entry == 1e-6
        ql.as_density(np.diag([0.5 + 5e-7, 0.5]))
    finally:
        ql.set_tolerances(previous.entry, previous.eig)
    assert ql.tolerances() == previous


def test_bloch_round_trip():
    r = (0.1, -0.3, 0.5)
    np.testing.assert_allclose(ql.bloch_vector(ql.from_bloch(r)), r, atol=1e-15)

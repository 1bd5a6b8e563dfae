import math

import pytest

from bellmix import claims
from bellmix.channel import closed_form_schmidt_output, two_bell_lambdas
from bellmix.criteria import concurrence
from bellmix.states import SchmidtState


def test_simplex_grid_counts_and_order():
    assert [w.as_tuple() for w in claims.simplex_grid(1)] == [(0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)]
    for n in (1, 2, 5, 12):
        pts = [w.as_tuple() for w in claims.simplex_grid(n)]
        assert len(pts) == claims.simplex_grid_size(n) == math.comb(n + 3, 3)
        assert pts == sorted(pts)
    assert claims.simplex_grid_size(12) == 455


@pytest.mark.parametrize("fn, arg", [
    (claims.claim_two_bell_inseparable, 2),
    (claims.claim_threshold_iff, 4),
    (claims.claim_two_e_iff_threshold, 4),
    (claims.claim_lambda_z_one_uniqueness, 9),
    (claims.claim_werner_thresholds, 19),
])
def test_grid_preconditions(fn, arg):
    with pytest.raises(ValueError):
        fn(arg)


def test_two_bell_inseparable():
    r = claims.claim_two_bell_inseparable(12)
    assert r.passed and r.status == "PASS"


def test_two_bell_concurrence_example():
    s = SchmidtState.from_alpha2(0.25)
    c = concurrence(closed_form_schmidt_output(s, two_bell_lambdas(0.6)))
    assert c == pytest.approx(0.04 * 2 * math.sqrt(0.25 * 0.75), abs=1e-12)
    assert c == pytest.approx(0.0346, abs=1e-4)


def test_threshold_iff():
    r = claims.claim_threshold_iff(12)
    assert r.passed
    assert r.sample_count == 437  # 455 grid points minus 18 on the sum_l2 = 1 surface


def test_bell_implies_threshold_witness():
    r = claims.claim_bell_implies_threshold(200, seed=3)
    assert r.passed
    (params, m), = [wt for wt in r.witnesses if "sum_l2" in wt[0]]
    assert m == pytest.approx(0.72, abs=1e-9) and params["sum_l2"] == pytest.approx(1.08, abs=1e-9)


def test_two_e_iff_threshold():
    assert claims.claim_two_e_iff_threshold(12).passed


@pytest.mark.parametrize("w", [0.0, 0.3, 0.6, 0.75, 0.9, 1.0])
def test_full_range(w):
    assert claims.claim_full_range_two_bell(w, 100).passed


def test_full_range_rejects_half():
    with pytest.raises(ValueError):
        claims.claim_full_range_two_bell(0.5)


def test_full_range_concurrence_example():
    out = closed_form_schmidt_output(SchmidtState.from_alpha2(0.5), two_bell_lambdas(0.75))
    assert concurrence(out) == pytest.approx(0.25, abs=1e-12)


def test_lambda_z_uniqueness():
    r = claims.claim_lambda_z_one_uniqueness(12)
    assert r.passed
    # the displayed lz = 1 matrix has a negative eigenvalue somewhere in the rejected region
    (_, lowest), = r.witnesses
    assert lowest < 0


def test_werner_thresholds():
    r = claims.claim_werner_thresholds(40)
    assert r.passed
    vals = {p["stat"]: v for p, v in r.witnesses}
    assert vals["phi at boundary"] == pytest.approx(1 / math.sqrt(3), abs=1e-6)
    assert vals["max weight at boundary"] == pytest.approx((1 + math.sqrt(3)) / 4, abs=1e-6)


def test_werner_examples():
    from bellmix.channel import lambdas_from_weights
    from bellmix.states import werner_weights

    l = lambdas_from_weights(werner_weights(0.5))
    assert werner_weights(0.5).w1 == 0.625 and l.sum_sq == pytest.approx(0.75)
    assert lambdas_from_weights(werner_weights(0.6)).sum_sq == pytest.approx(1.08)


def test_marginal_preservation():
    assert claims.claim_marginal_preservation(50).passed


def test_oracle_equivalence_small():
    assert claims.claim_oracle_equivalence(30, seed=5).passed


def test_unknown_basis_search():
    r = claims.claim_unknown_basis_failure(0.6)
    assert r.status == "WITNESS" and not r.paper_backed
    assert r.passed  # unrotated states never lose their entanglement
    params, ppt = r.witnesses[0]
    assert params["theta"] > 0 and params["c_in"] > 0 and ppt >= -r.tolerance
    assert claims.claim_unknown_basis_failure(1.0).status == "NO_WITNESS"


def test_failed_claims_carry_witnesses():
    r = claims._result("x", [({"w": 1}, 0.1)])
    assert not r.passed and r.status == "FAIL" and r.witnesses


def test_run_all_is_deterministic():
    a = [r.to_dict() for r in claims.run_all(5, seed=1)]
    b = [r.to_dict() for r in claims.run_all(5, seed=1)]
    assert a == b
    assert claims.all_passed(claims.run_all(5, seed=1))

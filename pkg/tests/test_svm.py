import numpy as np
import pytest

from oracles import svm_grid_search, svm_primal
from tweetsent.errors import ConfigError, MissingClass
from tweetsent.models import LinearSVMClassifier, dual_cd, model_from_json, model_to_json

NEG, POS = 0, 2


def dense_rows(X):
    return [(list(range(len(r))), [float(v) for v in r]) for r in X]


def test_one_dimensional_analytic_optimum():
    res = dual_cd(dense_rows([[-1.0], [1.0]]), [-1.0, 1.0], 1, C=1.0, tol=1e-8, fit_intercept=False)
    assert res["w"][0] == pytest.approx(1.0, abs=1e-3)
    assert res["b"] == 0.0
    assert res["converged"]


FOUR_POINTS = np.array([[2.0, 2.0], [3.0, 1.0], [0.0, 0.0], [-1.0, 1.0]])
FOUR_LABELS = np.array([1.0, 1.0, -1.0, -1.0])


def test_four_point_instance_matches_grid_oracle():
    res = dual_cd(dense_rows(FOUR_POINTS), FOUR_LABELS.tolist(), 2, C=1.0, tol=1e-8)
    w_ref, b_ref = svm_grid_search(FOUR_POINTS, FOUR_LABELS, C=1.0)
    np.testing.assert_allclose(res["w"], w_ref, atol=1e-2)
    assert res["b"] == pytest.approx(b_ref, abs=1e-2)
    ours = svm_primal(np.array(res["w"]), res["b"], FOUR_POINTS, FOUR_LABELS, 1.0)
    ref = svm_primal(w_ref, b_ref, FOUR_POINTS, FOUR_LABELS, 1.0)
    assert ours <= ref + 1e-6


def test_dual_objective_monotone_and_box():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(30, 4))
    y = np.where(X[:, 0] + 0.3 * rng.normal(size=30) > 0, 1.0, -1.0)
    res = dual_cd(dense_rows(X), y.tolist(), 4, C=0.5, tol=1e-6, max_sweeps=500)
    hist = np.array(res["dual_objective"])
    assert np.all(np.diff(hist) >= -1e-12)
    alpha = np.array(res["alpha"])
    assert np.all((alpha >= 0) & (alpha <= 0.5))


def test_sweep_cap_reports_not_converged():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(40, 3))
    y = np.sign(rng.normal(size=40))
    res = dual_cd(dense_rows(X), y.tolist(), 3, C=10.0, tol=1e-12, max_sweeps=2)
    assert res["sweeps"] == 2 and not res["converged"]


def test_seed_controls_sweep_order_only_slightly():
    X = FOUR_POINTS
    a = dual_cd(dense_rows(X), FOUR_LABELS.tolist(), 2, seed=1, tol=1e-10)
    b = dual_cd(dense_rows(X), FOUR_LABELS.tolist(), 2, seed=1, tol=1e-10)
    c = dual_cd(dense_rows(X), FOUR_LABELS.tolist(), 2, seed=2, tol=1e-10)
    assert a == b
    np.testing.assert_allclose(a["w"], c["w"], atol=1e-6)


def test_classifier_one_vs_rest():
    X = np.array([[-1.0], [1.0]])
    svc = LinearSVMClassifier(C=1.0, tol=1e-8, fit_intercept=False).fit(X, [NEG, POS])
    assert svc.coef_.shape == (2, 1)
    # class POS is the second binary problem
    assert svc.coef_[1, 0] == pytest.approx(1.0, abs=1e-3)
    scores = svc.decision_function([[3.0]])
    assert scores[0, 1] == pytest.approx(3.0, abs=3e-3)
    assert svc.predict([[3.0]])[0] == POS


def test_zero_row_scores_are_biases():
    svc = LinearSVMClassifier().fit(FOUR_POINTS, [0, 0, 1, 2])
    np.testing.assert_array_equal(svc.decision_function([[0.0, 0.0]])[0], svc.intercept_)


def test_equal_decision_values_pick_lowest_label():
    svc = LinearSVMClassifier().fit(FOUR_POINTS, [0, 1, 1, 2])
    svc.coef_ = np.zeros_like(svc.coef_)
    svc.intercept_ = np.array([0.3, 0.3, 0.3])
    assert svc.predict([[1.0, 1.0]])[0] == 0


def test_missing_class():
    with pytest.raises(MissingClass):
        LinearSVMClassifier().fit(FOUR_POINTS, [1, 1, 1, 1])


def test_bad_c():
    with pytest.raises(ConfigError):
        LinearSVMClassifier(C=0).fit(FOUR_POINTS, [0, 0, 1, 1])


@pytest.mark.parametrize("seed", range(5))
def test_separable_three_class(seed):
    rng = np.random.default_rng(seed)
    centers = np.array([[-4.0, 0.0], [0.0, 4.0], [4.0, 0.0]])
    y = rng.integers(0, 3, size=36)
    X = centers[y] + rng.uniform(-0.8, 0.8, size=(36, 2))
    svc = LinearSVMClassifier(seed=seed, max_sweeps=20000).fit(X, y)
    assert (svc.predict(X) == y).mean() == 1.0
    assert all(svc.converged_)


def test_json_round_trip():
    svc = LinearSVMClassifier(C=0.7).fit(FOUR_POINTS, [0, 0, 1, 2])
    payload = model_to_json(svc)
    back = model_from_json(payload)
    np.testing.assert_array_equal(back.decision_function(FOUR_POINTS), svc.decision_function(FOUR_POINTS))
    assert '"sweeps"' in payload and '"converged"' in payload

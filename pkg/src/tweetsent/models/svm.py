import math

import numpy as np

from ..errors import ConfigError
from ..rng import SplitMix64, derive_seed
from ._base import LabelClassifier, as_csr


def _sparse_rows(X):
    X = as_csr(X)
    X.sort_indices()
    rows = []
    for i in range(X.shape[0]):
        s, e = X.indptr[i], X.indptr[i + 1]
        rows.append((X.indices[s:e].tolist(), X.data[s:e].tolist()))
    return rows


def dual_cd(rows, y, n_features, C=1.0, tol=1e-4, max_sweeps=1000, seed=0,
            fit_intercept=True):
    """Dual coordinate descent for the L1-loss (hinge) linear SVM.

    Solves ``min_w 0.5 * |w|^2 + C * sum_i max(0, 1 - y_i w.x_i)`` through
    its box-constrained dual. With ``fit_intercept`` the rows are augmented
    with a constant 1, so the bias is the last weight (and is regularized).

    Parameters
    ----------
    rows : list of (indices, values)
        Sparse rows.
    y : sequence of +1/-1

    Returns
    -------
    dict with ``w`` (length ``n_features``), ``b``, ``alpha``, ``sweeps``,
    ``converged``, ``max_violation`` and ``dual_objective`` (one per sweep).
    """
    n = len(rows)
    bias = 1.0 if fit_intercept else 0.0
    w = [0.0] * n_features
    b = 0.0
    alpha = [0.0] * n
    qd = [math.fsum(v * v for v in vals) + bias * bias for _, vals in rows]
    rng = SplitMix64(seed)
    order = list(range(n))
    history = []
    converged = False
    violation = math.inf
    sweeps = 0

    while sweeps < max_sweeps:
        sweeps += 1
        rng.shuffle(order)
        violation = 0.0
        for i in order:
            idx, vals = rows[i]
            yi = y[i]
            margin = b * bias
            for j, v in zip(idx, vals):
                margin += w[j] * v
            grad = yi * margin - 1.0
            a = alpha[i]
            if a == 0.0:
                pg = min(grad, 0.0)
            elif a == C:
                pg = max(grad, 0.0)
            else:
                pg = grad
            violation = max(violation, abs(pg))
            if pg == 0.0:
                continue
            if qd[i] == 0.0:
                # empty row without intercept: the dual term is linear in alpha
                alpha[i] = C
                continue
            new = min(max(a - grad / qd[i], 0.0), C)
            step = (new - a) * yi
            alpha[i] = new
            for j, v in zip(idx, vals):
                w[j] += step * v
            b += step * bias
        history.append(math.fsum(alpha) - 0.5 * (math.fsum(x * x for x in w) + b * b))
        if violation < tol:
            converged = True
            break

    return {
        "w": w,
        "b": b,
        "alpha": alpha,
        "sweeps": sweeps,
        "converged": converged,
        "max_violation": violation,
        "dual_objective": history,
    }


class LinearSVMClassifier(LabelClassifier):
    """One-vs-rest linear SVM trained by dual coordinate descent.

    Parameters
    ----------
    C : float, default=1.0
    tol : float, default=1e-4
        Stop once the largest projected-gradient violation in a sweep is
        below this.
    max_sweeps : int, default=1000
        Hitting the cap is not an error; see ``converged_``.
    seed : int, default=0
        Seeds the per-sweep permutation; each class gets its own stream.
    fit_intercept : bool, default=True
    """

    model_type = "svc"

    def __init__(self, C=1.0, tol=1e-4, max_sweeps=1000, seed=0, fit_intercept=True):
        self.C = C
        self.tol = tol
        self.max_sweeps = max_sweeps
        self.seed = seed
        self.fit_intercept = fit_intercept

    def _fit(self, X, y_index):
        if not self.C > 0:
            raise ConfigError("C must be > 0")
        if self.max_sweeps < 1:
            raise ConfigError("max_sweeps must be >= 1")
        rows = _sparse_rows(X)
        coef, intercept, dual = [], [], []
        self.n_sweeps_, self.converged_, self.dual_objective_history_ = [], [], []
        for k in range(len(self.classes_)):
            y = [1.0 if c == k else -1.0 for c in y_index]
            res = dual_cd(rows, y, X.shape[1], C=float(self.C), tol=self.tol,
                          max_sweeps=self.max_sweeps, seed=derive_seed(self.seed, k),
                          fit_intercept=self.fit_intercept)
            coef.append(res["w"])
            intercept.append(res["b"])
            dual.append(res["alpha"])
            self.n_sweeps_.append(res["sweeps"])
            self.converged_.append(res["converged"])
            self.dual_objective_history_.append(res["dual_objective"])
        self.coef_ = np.asarray(coef, dtype=np.float64)
        self.intercept_ = np.asarray(intercept, dtype=np.float64)
        self.dual_coef_ = np.asarray(dual, dtype=np.float64)

    def _scores(self, X):
        return np.asarray(as_csr(X) @ self.coef_.T) + self.intercept_

    def decision_function(self, X):
        return self._scores(self._check_predict_input(X))

    def _training_meta(self):
        meta = {"sweeps": list(getattr(self, "n_sweeps_", []))}
        meta["converged"] = list(getattr(self, "converged_", []))
        return meta

    def _state(self):
        return {"coef": self.coef_.tolist(), "intercept": self.intercept_.tolist()}

    def _load_state(self, state):
        self.coef_ = np.asarray(state["coef"], dtype=np.float64)
        self.intercept_ = np.asarray(state["intercept"], dtype=np.float64)

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from ..errors import MissingClass

FORMAT_VERSION = 1
# scores this close (relative) count as tied; summation order alone can
# split mathematically equal scores by a few ulps
TIE_RTOL = 1e-12


def argmax_lowest(scores):
    """Column of the best score per row, ties going to the lowest column."""
    scores = np.asarray(scores, dtype=np.float64)
    best = scores.max(axis=1, keepdims=True)
    tied = scores >= best - TIE_RTOL * np.maximum(1.0, np.abs(best))
    return np.argmax(tied, axis=1)


class LabelClassifier(ClassifierMixin, BaseEstimator):
    """Common validation and argmax prediction for the three classifiers.

    Subclasses implement ``_fit(X, y_index)`` and ``_scores(X)``; ``predict``
    picks the highest score, ties going to the lowest class label.
    """

    model_type = None
    _min_classes = 2

    def _check_fit_input(self, X, y):
        X, y = check_X_y(X, y, accept_sparse="csr", dtype=np.float64)
        classes, y_index = np.unique(y, return_inverse=True)
        if len(classes) < self._min_classes:
            raise MissingClass(
                f"need at least {self._min_classes} classes to train, got {classes.tolist()}"
            )
        self.classes_ = classes
        self.n_features_in_ = X.shape[1]
        return X, y_index

    def _check_predict_input(self, X):
        check_is_fitted(self, "classes_")
        X = check_array(X, accept_sparse="csr", dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, model expects {self.n_features_in_}"
            )
        return X

    def fit(self, X, y):
        X, y_index = self._check_fit_input(X, y)
        self._fit(X, y_index)
        return self

    def predict(self, X):
        scores = self._scores(self._check_predict_input(X))
        return self.classes_[argmax_lowest(scores)]

    def to_dict(self):
        check_is_fitted(self, "classes_")
        return {
            "format_version": FORMAT_VERSION,
            "model_type": self.model_type,
            "params": self.get_params(),
            "classes": [int(c) for c in self.classes_],
            "n_features": int(self.n_features_in_),
            "state": self._state(),
            "training": self._training_meta(),
        }

    def _training_meta(self):
        return {}

    @classmethod
    def from_dict(cls, payload):
        model = cls(**payload["params"])
        model.classes_ = np.asarray(payload["classes"])
        model.n_features_in_ = payload["n_features"]
        model._load_state(payload["state"])
        return model


def as_csr(X):
    return X if sp.issparse(X) else sp.csr_matrix(X)

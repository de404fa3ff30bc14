import numpy as np

from ..errors import ConfigError
from ._base import LabelClassifier


class MultinomialNaiveBayes(LabelClassifier):
    """Multinomial naive Bayes over term counts with additive smoothing.

    Parameters
    ----------
    alpha : float, default=1.0
        Additive (Laplace) smoothing constant, must be > 0.

    Attributes
    ----------
    class_log_prior_ : ndarray of shape (n_classes,)
    feature_log_prob_ : ndarray of shape (n_classes, n_features)
        ``log((count[c, j] + alpha) / (total[c] + alpha * n_features))``.
    """

    model_type = "nb"

    def __init__(self, alpha=1.0):
        self.alpha = alpha

    def _fit(self, X, y_index):
        if not self.alpha > 0:
            raise ConfigError("alpha must be > 0")
        n_classes = len(self.classes_)
        onehot = np.zeros((X.shape[0], n_classes))
        onehot[np.arange(X.shape[0]), y_index] = 1.0

        class_count = onehot.sum(axis=0)
        feature_count = np.asarray(X.T @ onehot).T
        total = feature_count.sum(axis=1, keepdims=True)

        self.class_count_ = class_count
        self.feature_count_ = feature_count
        self.class_log_prior_ = np.log(class_count) - np.log(class_count.sum())
        self.feature_log_prob_ = np.log(feature_count + self.alpha) - np.log(
            total + self.alpha * X.shape[1]
        )

    def _scores(self, X):
        return np.asarray(X @ self.feature_log_prob_.T) + self.class_log_prior_

    def predict_joint_log_proba(self, X):
        """Unnormalized ``log P(c) + sum_j x_j log P(j | c)`` per class."""
        return self._scores(self._check_predict_input(X))

    def _state(self):
        return {
            "alpha": self.alpha,
            "class_log_prior": self.class_log_prior_.tolist(),
            "feature_log_prob": self.feature_log_prob_.tolist(),
        }

    def _load_state(self, state):
        self.class_log_prior_ = np.asarray(state["class_log_prior"], dtype=np.float64)
        self.feature_log_prob_ = np.asarray(state["feature_log_prob"], dtype=np.float64)

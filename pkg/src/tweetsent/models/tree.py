import numpy as np

from ..errors import ConfigError
from ._base import LabelClassifier, as_csr

_LEAF = -1
_CHUNK = 256
# relative slack for treating two split scores as tied
_TIE_EPS = 1e-10


def gini(class_counts):
    """Gini impurity ``1 - sum_c p_c^2`` of a vector of class counts."""
    counts = np.asarray(class_counts, dtype=np.float64)
    n = counts.sum()
    if n <= 0:
        raise ValueError("gini needs a positive total count")
    p = counts / n
    return float(1.0 - np.dot(p, p))


def _split_scores(Xc, onehot, total):
    """Purity score ``sum L^2/nL + sum R^2/nR`` for each cut position.

    Cuts between equal values are -inf. Returns (scores, sorted values),
    both of shape (n - 1, k) and (n, k).
    """
    n = Xc.shape[0]
    order = np.argsort(Xc, axis=0, kind="stable")
    vals = np.take_along_axis(Xc, order, axis=0)
    left = np.cumsum(onehot[order], axis=0)[:-1]
    right = total - left
    n_left = np.arange(1, n, dtype=np.float64)[:, None]
    scores = (left * left).sum(axis=-1) / n_left + (right * right).sum(axis=-1) / (n - n_left)
    scores[vals[:-1] >= vals[1:]] = -np.inf
    return scores, vals


def best_split(Xn, onehot):
    """Best (column position, threshold, score) for one node, or None.

    Maximizing the purity score is the same as maximizing the weighted Gini
    decrease. Ties go to the lowest column, then the lowest threshold.
    """
    n, k = Xn.shape
    if n < 2 or k == 0:
        return None
    total = onehot.sum(axis=0)
    col_best = np.full(k, -np.inf)
    for start in range(0, k, _CHUNK):
        scores, _ = _split_scores(Xn[:, start:start + _CHUNK], onehot, total)
        col_best[start:start + _CHUNK] = scores.max(axis=0)
    best = col_best.max()
    if not np.isfinite(best):
        return None
    cutoff = best - _TIE_EPS * n
    col = int(np.flatnonzero(col_best >= cutoff)[0])
    scores, vals = _split_scores(Xn[:, col:col + 1], onehot, total)
    pos = int(np.flatnonzero(scores[:, 0] >= cutoff)[0])
    threshold = (vals[pos, 0] + vals[pos + 1, 0]) / 2.0
    return col, float(threshold), float(scores[pos, 0])


class CARTClassifier(LabelClassifier):
    """Binary decision tree grown with Gini splits at value midpoints.

    Rows go left when ``x[feature] <= threshold``. Growth stops at pure
    nodes, nodes smaller than ``min_samples_split``, at ``max_depth``, or
    when all rows of the node are identical. A split never raises the
    weighted Gini impurity; one that leaves it unchanged is still taken, so
    unlimited depth fits any data without conflicting duplicates.

    Parameters
    ----------
    max_depth : int or None, default=None
    min_samples_split : int, default=2
    """

    model_type = "dt"
    _min_classes = 1

    def __init__(self, max_depth=None, min_samples_split=2):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split

    def _fit(self, X, y_index):
        if self.max_depth is not None and self.max_depth < 0:
            raise ConfigError("max_depth must be >= 0 or None")
        if self.min_samples_split < 2:
            raise ConfigError("min_samples_split must be >= 2")
        X = as_csr(X)
        n_classes = len(self.classes_)
        onehot = np.zeros((X.shape[0], n_classes))
        onehot[np.arange(X.shape[0]), y_index] = 1.0

        feature, threshold, left, right, value = [], [], [], [], []

        def new_node(counts):
            feature.append(_LEAF)
            threshold.append(0.0)
            left.append(_LEAF)
            right.append(_LEAF)
            value.append(counts.astype(np.int64).tolist())
            return len(feature) - 1

        root_rows = np.arange(X.shape[0])
        stack = [(new_node(onehot.sum(axis=0)), root_rows, 0)]
        while stack:
            node, rows, depth = stack.pop()
            y_node = onehot[rows]
            counts = y_node.sum(axis=0)
            if (
                np.count_nonzero(counts) <= 1
                or len(rows) < self.min_samples_split
                or (self.max_depth is not None and depth >= self.max_depth)
            ):
                continue
            sub = X[rows]
            cols = np.unique(sub.indices)
            split = best_split(sub[:, cols].toarray(), y_node)
            if split is None:
                continue
            # zero-gain splits are kept: an impure node whose best split has
            # no gain (balanced XOR) still separates at the next level
            pos, thr, _ = split
            col = int(cols[pos])
            goes_left = sub[:, col].toarray().ravel() <= thr
            l_rows, r_rows = rows[goes_left], rows[~goes_left]
            feature[node] = col
            threshold[node] = thr
            left[node] = new_node(onehot[l_rows].sum(axis=0))
            right[node] = new_node(onehot[r_rows].sum(axis=0))
            # right pushed first so the left subtree is expanded first
            stack.append((right[node], r_rows, depth + 1))
            stack.append((left[node], l_rows, depth + 1))

        self.tree_feature_ = np.asarray(feature, dtype=np.int64)
        self.tree_threshold_ = np.asarray(threshold, dtype=np.float64)
        self.tree_left_ = np.asarray(left, dtype=np.int64)
        self.tree_right_ = np.asarray(right, dtype=np.int64)
        self.tree_value_ = np.asarray(value, dtype=np.int64)

    @property
    def node_count(self):
        return len(self.tree_feature_)

    def get_depth(self):
        depth = {0: 0}
        for node in range(self.node_count):
            if self.tree_feature_[node] != _LEAF:
                depth[self.tree_left_[node]] = depth[self.tree_right_[node]] = depth[node] + 1
        return max(depth.values())

    def apply(self, X):
        """Leaf index reached by each row."""
        X = as_csr(self._check_predict_input(X))
        feature, thr = self.tree_feature_.tolist(), self.tree_threshold_.tolist()
        left, right = self.tree_left_.tolist(), self.tree_right_.tolist()
        leaves = np.empty(X.shape[0], dtype=np.int64)
        for i in range(X.shape[0]):
            s, e = X.indptr[i], X.indptr[i + 1]
            row = dict(zip(X.indices[s:e].tolist(), X.data[s:e].tolist()))
            node = 0
            while feature[node] != _LEAF:
                node = left[node] if row.get(feature[node], 0.0) <= thr[node] else right[node]
            leaves[i] = node
        return leaves

    def _scores(self, X):
        counts = self.tree_value_[self.apply(X)].astype(np.float64)
        return counts / counts.sum(axis=1, keepdims=True)

    def predict_proba(self, X):
        """Class fractions of the leaf each row lands in."""
        return self._scores(X)

    def _training_meta(self):
        return {"node_count": self.node_count, "depth": self.get_depth()}

    def _state(self):
        return {
            "feature": self.tree_feature_.tolist(),
            "threshold": self.tree_threshold_.tolist(),
            "left": self.tree_left_.tolist(),
            "right": self.tree_right_.tolist(),
            "value": self.tree_value_.tolist(),
        }

    def _load_state(self, state):
        self.tree_feature_ = np.asarray(state["feature"], dtype=np.int64)
        self.tree_threshold_ = np.asarray(state["threshold"], dtype=np.float64)
        self.tree_left_ = np.asarray(state["left"], dtype=np.int64)
        self.tree_right_ = np.asarray(state["right"], dtype=np.int64)
        self.tree_value_ = np.asarray(state["value"], dtype=np.int64)

"""Independent reference computations used by the tests.

None of these share code with the package: they work from the textbook
formulas on raw Python data (fractions where exactness matters).
"""

import itertools
import math
from fractions import Fraction

import numpy as np


def nb_bruteforce(X, y, rows, alpha=Fraction(1)):
    """Exact multinomial naive Bayes joint probabilities by direct enumeration.

    Returns (classes, joint) where ``joint[r][k]`` is the Fraction
    ``P(c_k) * prod_j P(j | c_k) ** rows[r][j]``.
    """
    alpha = Fraction(alpha)
    classes = sorted(set(y))
    n_features = len(X[0])
    joint = []
    params = {}
    for c in classes:
        docs = [x for x, lab in zip(X, y) if lab == c]
        prior = Fraction(len(docs), len(y))
        sums = [sum(d[j] for d in docs) for j in range(n_features)]
        total = sum(sums)
        theta = [(Fraction(s) + alpha) / (total + alpha * n_features) for s in sums]
        params[c] = (prior, theta)
    for row in rows:
        out = []
        for c in classes:
            prior, theta = params[c]
            p = prior
            for j, count in enumerate(row):
                p *= theta[j] ** int(count)
            out.append(p)
        joint.append(out)
    return classes, joint


def exact_argmax_lowest(values):
    best = max(values)
    return values.index(best)


def exact_log(fr):
    """log of a positive Fraction without float underflow."""
    return math.log(fr.numerator) - math.log(fr.denominator)


def svm_primal(w, b, X, y, C):
    """Primal objective with the bias regularized like an extra weight."""
    margins = y * (X @ w + b)
    return 0.5 * (w @ w + b * b) + C * np.maximum(0.0, 1.0 - margins).sum()


def svm_grid_search(X, y, C=1.0, fit_intercept=True, span=4.0, points=41, rounds=6):
    """Coarse-to-fine grid minimization of the convex primal.

    Each round evaluates a full grid over (w..., b) and shrinks the box
    around the best point by a factor of 10.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    dim = X.shape[1] + (1 if fit_intercept else 0)
    center = np.zeros(dim)
    half = span
    best = None
    for _ in range(rounds):
        axes = [np.linspace(c - half, c + half, points) for c in center]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, dim)
        W = grid[:, : X.shape[1]]
        B = grid[:, X.shape[1]] if fit_intercept else np.zeros(len(grid))
        margins = y[None, :] * (W @ X.T + B[:, None])
        obj = 0.5 * ((W * W).sum(axis=1) + B * B) + C * np.maximum(0.0, 1.0 - margins).sum(axis=1)
        best = grid[np.argmin(obj)]
        center = best
        half = half / 10.0
    w = best[: X.shape[1]]
    b = best[X.shape[1]] if fit_intercept else 0.0
    return w, b


def gini_exact(counts):
    n = sum(counts)
    return 1 - sum(Fraction(c, n) ** 2 for c in counts)


def best_depth1_split(X, y):
    """All (feature, midpoint) splits with their weighted child Gini (exact)."""
    X = [list(map(float, r)) for r in X]
    labels = sorted(set(y))
    n = len(y)
    out = []
    for j in range(len(X[0])):
        values = sorted(set(r[j] for r in X))
        for lo, hi in zip(values, values[1:]):
            t = (lo + hi) / 2
            left = [lab for r, lab in zip(X, y) if r[j] <= t]
            right = [lab for r, lab in zip(X, y) if r[j] > t]
            g = Fraction(len(left), n) * gini_exact([left.count(c) for c in labels]) + Fraction(
                len(right), n
            ) * gini_exact([right.count(c) for c in labels])
            out.append((j, t, g))
    return out


def all_count_vectors(length, max_total):
    for combo in itertools.product(range(max_total + 1), repeat=length):
        if 0 < sum(combo) <= max_total:
            yield combo

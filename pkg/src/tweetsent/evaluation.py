"""Stratified train/test split, confusion matrices and per-class metrics."""

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal

import numpy as np

from .errors import ConfigError, DegenerateSplit, EmptyMatrix
from .lexicon import LABELS
from .rng import SplitMix64, derive_seed

__all__ = [
    "SplitIndices",
    "ConfusionMatrix",
    "MetricsReport",
    "split",
    "confusion",
    "metrics",
    "f1_score",
    "round_half_even",
]


@dataclass(frozen=True)
class SplitIndices:
    train: tuple
    test: tuple
    seed: int
    fraction: float

    def to_dict(self):
        return {"train": list(self.train), "test": list(self.test),
                "seed": self.seed, "fraction": self.fraction}

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d["train"]), tuple(d["test"]), d["seed"], d["fraction"])


def split(labels, fraction=0.8, seed=42):
    """Stratified split of document positions ``0..len(labels)-1``.

    Each label's ids are shuffled by SplitMix64 seeded from ``(seed, label)``;
    the first ``floor(fraction * n_label)`` go to train, the rest to test.
    """
    if not (0.0 < fraction < 1.0):
        raise ConfigError(f"split fraction must be in (0, 1), got {fraction}")
    by_label = {}
    for doc_id, label in enumerate(labels):
        by_label.setdefault(int(label), []).append(doc_id)

    train, test = [], []
    for label in sorted(by_label):
        ids = by_label[label]
        # guard against 0.8 * n landing a hair below an integer
        n_train = math.floor(fraction * len(ids) + 1e-9)
        if n_train == 0 or n_train == len(ids):
            raise DegenerateSplit(
                f"label {label} has {len(ids)} document(s); cannot give both "
                f"train and test at least one"
            )
        SplitMix64(derive_seed(seed, label)).shuffle(ids)
        train.extend(ids[:n_train])
        test.extend(ids[n_train:])
    return SplitIndices(tuple(sorted(train)), tuple(sorted(test)), seed, fraction)


@dataclass(frozen=True)
class ConfusionMatrix:
    """Rows are actual labels, columns predicted, both in label order."""

    m: tuple

    @property
    def array(self):
        return np.asarray(self.m, dtype=np.int64)

    @property
    def total(self):
        return int(self.array.sum())

    def to_list(self):
        return [list(row) for row in self.m]


def confusion(actual, predicted, n_labels=len(LABELS)):
    if len(actual) != len(predicted):
        raise ValueError(f"length mismatch: {len(actual)} actual vs {len(predicted)} predicted")
    m = [[0] * n_labels for _ in range(n_labels)]
    for a, p in zip(actual, predicted):
        m[int(a)][int(p)] += 1
    return ConfusionMatrix(tuple(tuple(row) for row in m))


def f1_score(precision, recall):
    """Harmonic mean; 0 when both inputs are 0."""
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


@dataclass(frozen=True)
class MetricsReport:
    precision: tuple
    recall: tuple
    f1: tuple
    support: tuple
    accuracy: float

    def to_dict(self):
        return {
            "accuracy": self.accuracy,
            "per_label": {
                LABELS[c].display: {
                    "precision": self.precision[c],
                    "recall": self.recall[c],
                    "f1": self.f1[c],
                    "support": self.support[c],
                }
                for c in range(len(self.precision))
            },
        }


def metrics(cm):
    m = cm.array
    total = int(m.sum())
    if total == 0:
        raise EmptyMatrix("confusion matrix has no entries")
    diag = np.diag(m)
    col = m.sum(axis=0)
    row = m.sum(axis=1)
    precision = tuple(float(d / c) if c else 0.0 for d, c in zip(diag, col))
    recall = tuple(float(d / r) if r else 0.0 for d, r in zip(diag, row))
    return MetricsReport(
        precision=precision,
        recall=recall,
        f1=tuple(f1_score(p, r) for p, r in zip(precision, recall)),
        support=tuple(int(r) for r in row),
        accuracy=float(diag.sum() / total),
    )


def round_half_even(value, places):
    """Decimal half-to-even rounding of the shortest repr of ``value``."""
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(float(value))).quantize(q, rounding=ROUND_HALF_EVEN))

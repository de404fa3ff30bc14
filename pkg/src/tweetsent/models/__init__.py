"""Naive Bayes, linear SVM and CART classifiers with JSON persistence."""

import json

from ..errors import IoError, ModelFormatError
from ._base import FORMAT_VERSION, LabelClassifier
from .naive_bayes import MultinomialNaiveBayes
from .svm import LinearSVMClassifier, dual_cd
from .tree import CARTClassifier, best_split, gini

__all__ = [
    "FORMAT_VERSION",
    "MODEL_TYPES",
    "LabelClassifier",
    "MultinomialNaiveBayes",
    "LinearSVMClassifier",
    "CARTClassifier",
    "dual_cd",
    "best_split",
    "gini",
    "model_to_json",
    "model_from_json",
    "save_model",
    "load_model",
]

MODEL_TYPES = {
    "nb": MultinomialNaiveBayes,
    "svc": LinearSVMClassifier,
    "dt": CARTClassifier,
}


def model_to_json(model):
    return json.dumps(model.to_dict(), sort_keys=True, indent=1) + "\n"


def model_from_json(text, expected_type=None):
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"model file is not JSON: {exc}") from exc
    version = payload.get("format_version")
    if version != FORMAT_VERSION:
        raise ModelFormatError(
            f"unsupported model format_version {version!r} (expected {FORMAT_VERSION})"
        )
    model_type = payload.get("model_type")
    if model_type not in MODEL_TYPES:
        raise ModelFormatError(f"unknown model_type {model_type!r}")
    if expected_type is not None and model_type != expected_type:
        raise ModelFormatError(f"expected a {expected_type!r} model, found {model_type!r}")
    try:
        return MODEL_TYPES[model_type].from_dict(payload)
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"corrupt {model_type} model: {exc}") from exc


def save_model(model, path):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(model_to_json(model))
    except OSError as exc:
        raise IoError(f"cannot write model {path}: {exc.strerror or exc}") from exc


def load_model(path, expected_type=None):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read model {path}: {exc.strerror or exc}") from exc
    return model_from_json(text, expected_type)

"""Bag-of-words vocabulary and sparse count matrices over stemmed tokens."""

from collections import Counter

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import ConfigError, EmptyVocabulary, IoError, MalformedLine

__all__ = [
    "Vocabulary",
    "StemCountVectorizer",
    "fit_vocabulary",
    "transform",
    "document_tokens",
]


def document_tokens(doc):
    """Stemmed tokens of a :class:`~tweetsent.textprep.TokenDoc` or a plain token list."""
    return doc.stemmed_tokens if hasattr(doc, "stemmed_tokens") else doc


class Vocabulary:
    """Term list in lexicographic (code point = UTF-8 byte) order."""

    def __init__(self, terms):
        terms = list(terms)
        if terms != sorted(set(terms)):
            raise ValueError("vocabulary terms must be unique and sorted")
        self.terms = tuple(terms)
        self.index = {t: i for i, t in enumerate(self.terms)}

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __contains__(self, term):
        return term in self.index

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and self.terms == other.terms

    def __repr__(self):
        return f"Vocabulary({len(self.terms)} terms)"

    def to_text(self):
        return "".join(t + "\n" for t in self.terms)

    def save(self, path):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_text())

    @classmethod
    def load(cls, path):
        try:
            with open(path, encoding="utf-8") as fh:
                terms = fh.read().splitlines()
        except OSError as exc:
            raise IoError(f"cannot read vocabulary {path}: {exc.strerror or exc}") from exc
        for line_no, term in enumerate(terms, start=1):
            if not term or any(ch.isspace() for ch in term):
                raise MalformedLine(line_no, "vocabulary term must be a non-empty word")
        return cls(terms)


def fit_vocabulary(docs, min_df=1, max_features=None):
    """Terms found in at least ``min_df`` documents.

    With ``max_features``, only the terms with the highest document frequency
    are kept, ties going to the lexicographically smaller term.
    """
    if min_df < 1:
        raise ConfigError("min_df must be >= 1")
    df = Counter()
    for doc in docs:
        df.update(set(document_tokens(doc)))
    terms = [t for t, n in df.items() if n >= min_df]
    if max_features is not None:
        if max_features < 1:
            raise ConfigError("max_features must be >= 1")
        terms = sorted(terms, key=lambda t: (-df[t], t))[:max_features]
    if not terms:
        raise EmptyVocabulary("no term reaches the document-frequency threshold")
    return Vocabulary(sorted(terms))


def transform(docs, vocab):
    """CSR count matrix, one row per document; unknown tokens are ignored."""
    indptr = [0]
    indices = []
    data = []
    index = vocab.index
    for doc in docs:
        counts = Counter(index[t] for t in document_tokens(doc) if t in index)
        for col in sorted(counts):
            indices.append(col)
            data.append(counts[col])
        indptr.append(len(indices))
    return sp.csr_matrix(
        (np.asarray(data, dtype=np.int64), np.asarray(indices, dtype=np.int64), np.asarray(indptr)),
        shape=(len(indptr) - 1, len(vocab)),
    )


class StemCountVectorizer(BaseEstimator, TransformerMixin):
    """Count vectorizer over pre-tokenized documents.

    Accepts :class:`~tweetsent.textprep.TokenDoc` objects (their stemmed
    tokens are used) or plain lists of tokens; applies no token pattern of
    its own.
    """

    def __init__(self, min_df=1, max_features=None):
        self.min_df = min_df
        self.max_features = max_features

    def fit(self, X, y=None):
        self.vocabulary_ = fit_vocabulary(X, self.min_df, self.max_features)
        return self

    def transform(self, X):
        check_is_fitted(self, "vocabulary_")
        return transform(X, self.vocabulary_)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "vocabulary_")
        return np.asarray(self.vocabulary_.terms, dtype=object)

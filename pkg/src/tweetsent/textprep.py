"""Tweet normalization, tokenization, stopword removal and stemming."""

import re
from dataclasses import dataclass
from importlib import resources

from sklearn.base import BaseEstimator, TransformerMixin

from .errors import IoError
from .porter import stem

__all__ = [
    "TokenDoc",
    "TweetPreprocessor",
    "bundled_path",
    "load_wordlist",
    "load_stopwords",
    "normalize_text",
    "tokenize",
    "remove_stopwords",
    "stem",
    "preprocess",
    "preprocess_text",
]

_URL = re.compile(r"(?:https?://|www\.)\S*", re.IGNORECASE)
_MENTION = re.compile(r"@\w+")
_NON_ALNUM = re.compile(r"[^\w\s]|_")


@dataclass(frozen=True)
class TokenDoc:
    doc_id: int
    raw_tokens: tuple
    stemmed_tokens: tuple


def bundled_path(name):
    """Filesystem path of a data file shipped with the package."""
    return resources.files("tweetsent").joinpath("data", name)


def load_wordlist(path):
    """One word per line, ``#`` comments and blank lines ignored."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise IoError(f"cannot read word list {path}: {exc.strerror or exc}") from exc
    words = set()
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def load_stopwords(path=None):
    return load_wordlist(path or bundled_path("stopwords_en.txt"))


def normalize_text(text):
    """Reduce a tweet to lowercase alphanumeric words separated by single spaces.

    URLs and @mentions are removed outright, ``#`` is dropped from hashtags
    (the word stays), and any other symbol becomes a space.

    >>> normalize_text("Check https://t.co/x #Peace NOW!!")
    'check peace now'
    """
    text = _URL.sub(" ", text)
    text = _MENTION.sub(" ", text)
    text = text.replace("#", "")
    text = text.lower()
    text = _NON_ALNUM.sub(" ", text)
    return " ".join(text.split())


def tokenize(normalized):
    return normalized.split()


def remove_stopwords(tokens, stopwords):
    return [t for t in tokens if t not in stopwords]


def preprocess_text(text, stopwords, doc_id=0):
    raw = remove_stopwords(tokenize(normalize_text(text)), stopwords)
    return TokenDoc(doc_id, tuple(raw), tuple(stem(t) for t in raw))


def preprocess(corpus, stopwords):
    """Token documents for every record of a cleaned corpus, in doc_id order.

    Documents that end up with no tokens are kept.
    """
    return [preprocess_text(doc.text, stopwords, doc.doc_id) for doc in corpus.records]


class TweetPreprocessor(BaseEstimator, TransformerMixin):
    """Stateless transformer from raw tweet strings to :class:`TokenDoc`.

    Parameters
    ----------
    stopwords : iterable of str or None
        Words to drop. ``None`` uses the bundled English list.
    keep : iterable of str
        Words exempt from stopword removal (e.g. negation cues).
    """

    def __init__(self, stopwords=None, keep=()):
        self.stopwords = stopwords
        self.keep = keep

    def _stopword_set(self):
        words = load_stopwords() if self.stopwords is None else frozenset(self.stopwords)
        return words - frozenset(self.keep)

    def fit(self, X, y=None):
        self.stopwords_ = self._stopword_set()
        return self

    def transform(self, X):
        words = getattr(self, "stopwords_", None) or self._stopword_set()
        return [preprocess_text(text, words, i) for i, text in enumerate(X)]

"""Lexicon-based polarity/subjectivity scoring and 3-class labels."""

import math
from dataclasses import dataclass
from enum import IntEnum

from .errors import IoError, MalformedLine, RangeError
from .textprep import bundled_path, load_wordlist

__all__ = [
    "SentimentLabel",
    "LABELS",
    "LexiconEntry",
    "SentimentScore",
    "SentimentScorer",
    "load_lexicon",
    "load_negators",
    "score",
    "to_label",
]

NEGATION_WINDOW = 2
NEGATION_FACTOR = -0.5


class SentimentLabel(IntEnum):
    NEGATIVE = 0
    NEUTRAL = 1
    POSITIVE = 2

    @property
    def display(self):
        return self.name.capitalize()


LABELS = tuple(SentimentLabel)


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    polarity: float
    subjectivity: float


@dataclass(frozen=True)
class SentimentScore:
    polarity: float = 0.0
    subjectivity: float = 0.0
    matched: int = 0


def load_lexicon(path=None):
    """Parse a ``word<TAB>polarity<TAB>subjectivity`` file into a dict.

    Later lines for the same word override earlier ones.
    """
    path = path or bundled_path("lexicon_en.tsv")
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise IoError(f"cannot read lexicon {path}: {exc.strerror or exc}") from exc

    lexicon = {}
    for line_no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3 or not parts[0].strip():
            raise MalformedLine(line_no, "expected word<TAB>polarity<TAB>subjectivity")
        word = parts[0].strip().lower()
        try:
            polarity, subjectivity = float(parts[1]), float(parts[2])
        except ValueError as exc:
            raise MalformedLine(line_no, "non-numeric score") from exc
        if not (-1.0 <= polarity <= 1.0):
            raise RangeError(word, f"polarity {polarity} not in [-1, 1]")
        if not (0.0 <= subjectivity <= 1.0):
            raise RangeError(word, f"subjectivity {subjectivity} not in [0, 1]")
        lexicon[word] = LexiconEntry(word, polarity, subjectivity)
    return lexicon


def load_negators(path=None):
    return load_wordlist(path or bundled_path("negators_en.txt"))


def score(raw_tokens, lexicon, negators=frozenset()):
    """Mean polarity and subjectivity over the lexicon hits of a document.

    A hit preceded (within two tokens) by a negator has its polarity scaled
    by -0.5. Expects pre-stem tokens, since stems rarely match lexicon forms.
    """
    polarities = []
    subjectivities = []
    for i, token in enumerate(raw_tokens):
        entry = lexicon.get(token)
        if entry is None:
            continue
        polarity = entry.polarity
        if any(t in negators for t in raw_tokens[max(0, i - NEGATION_WINDOW):i]):
            polarity *= NEGATION_FACTOR
        polarities.append(polarity)
        subjectivities.append(entry.subjectivity)
    if not polarities:
        return SentimentScore()
    return SentimentScore(
        polarity=math.fsum(polarities) / len(polarities),
        subjectivity=math.fsum(subjectivities) / len(subjectivities),
        matched=len(polarities),
    )


def to_label(polarity):
    if polarity > 0:
        return SentimentLabel.POSITIVE
    if polarity < 0:
        return SentimentLabel.NEGATIVE
    return SentimentLabel.NEUTRAL


class SentimentScorer:
    """Bundles a lexicon with its negator list.

    ``None`` for either argument loads the bundled asset.
    """

    def __init__(self, lexicon=None, negators=None):
        self.lexicon = load_lexicon() if lexicon is None else lexicon
        self.negators = load_negators() if negators is None else frozenset(negators)

    def score(self, raw_tokens):
        return score(raw_tokens, self.lexicon, self.negators)

    def label(self, raw_tokens):
        return to_label(self.score(raw_tokens).polarity)

    def score_docs(self, docs):
        return [self.score(doc.raw_tokens) for doc in docs]

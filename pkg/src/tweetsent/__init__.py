"""Tweet sentiment toolkit: lexicon labels, bag-of-words, NB / linear SVM / CART."""

from .corpus import CleanCorpus, RawRecord, clean, load_csv
from .evaluation import confusion, metrics, split
from .lexicon import SentimentLabel, SentimentScorer, load_lexicon, score, to_label
from .models import CARTClassifier, LinearSVMClassifier, MultinomialNaiveBayes
from .porter import stem
from .textprep import TokenDoc, TweetPreprocessor, normalize_text, preprocess
from .vectorizer import StemCountVectorizer, Vocabulary, fit_vocabulary, transform

__version__ = "0.1.0"

__all__ = [
    "CARTClassifier",
    "CleanCorpus",
    "LinearSVMClassifier",
    "MultinomialNaiveBayes",
    "RawRecord",
    "SentimentLabel",
    "SentimentScorer",
    "StemCountVectorizer",
    "TokenDoc",
    "TweetPreprocessor",
    "Vocabulary",
    "clean",
    "confusion",
    "fit_vocabulary",
    "load_csv",
    "load_lexicon",
    "metrics",
    "normalize_text",
    "preprocess",
    "score",
    "split",
    "stem",
    "to_label",
    "transform",
]

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline

from tweetsent import (
    CARTClassifier, LinearSVMClassifier, MultinomialNaiveBayes, SentimentScorer,
    StemCountVectorizer, TweetPreprocessor,
)

TEXTS = [
    "What a great and happy day", "so good, really wonderful news",
    "terrible and sad scenes tonight", "this is horrible, awful violence",
    "the meeting is on Monday", "schedule published for the session",
] * 3


@pytest.mark.parametrize("est", [
    MultinomialNaiveBayes(alpha=0.5), LinearSVMClassifier(C=2.0, seed=3),
    CARTClassifier(max_depth=4), StemCountVectorizer(min_df=2), TweetPreprocessor(),
])
def test_clone_and_params(est):
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    assert twin is not est


def test_set_params():
    nb = MultinomialNaiveBayes().set_params(alpha=3.0)
    assert nb.alpha == 3.0


@pytest.mark.parametrize("clf", [MultinomialNaiveBayes(), LinearSVMClassifier(), CARTClassifier()])
def test_pipeline_end_to_end(clf):
    scorer = SentimentScorer()
    docs = TweetPreprocessor().fit_transform(TEXTS)
    y = np.array([int(scorer.label(d.raw_tokens)) for d in docs])
    assert len(set(y)) == 3
    pipe = make_pipeline(TweetPreprocessor(), StemCountVectorizer(), clf)
    pipe.fit(TEXTS, y)
    assert pipe.score(TEXTS, y) == 1.0


def test_predict_before_fit():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        MultinomialNaiveBayes().predict([[1, 2]])


def test_feature_count_checked():
    nb = MultinomialNaiveBayes().fit([[1, 0], [0, 1]], [0, 2])
    with pytest.raises(ValueError):
        nb.predict([[1, 0, 0]])

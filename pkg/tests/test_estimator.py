import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from citeangle.estimator import FEATURE_NAMES, CitationAngleClassifier, check_series
from citeangle.series import CitationSeries, Corpus
from citeangle.synth import GenSpec, generate_corpus

from .conftest import FIX_ASB, FIX_SB, FIX_SG

X = np.array([FIX_SG, FIX_SB, FIX_ASB])


def test_predict_labels():
    clf = CitationAngleClassifier().fit(X)
    assert list(clf.predict(X)) == ["sg", "sb", "asb"]
    assert list(clf.classes_) == ["asb", "normal", "sb", "sg"]


def test_transform_features():
    feats = CitationAngleClassifier().fit(X).transform(X)
    assert feats.shape == (3, len(FEATURE_NAMES))
    col = dict(zip(FEATURE_NAMES, feats[2]))
    assert round(col["beta1"], 4) == 85.4261
    assert (col["SCa"], col["SCb"], col["AC_SB"], col["dt"]) == (30, 35, 1.3, 14)


def test_higher_cut():
    clf = CitationAngleClassifier(cut="higher").fit(X)
    # FIX_ASB is still ASB; FIX_SG reaches the higher SG tier
    assert list(clf.predict(X)) == ["sg", "sb", "asb"]
    clf = CitationAngleClassifier(beta1_higher_deg=89, cut="higher").fit(X)
    assert clf.predict(X)[0] == "normal"


def test_get_set_params_and_clone():
    clf = CitationAngleClassifier(sca_min=15)
    assert clf.get_params()["sca_min"] == 15
    other = clone(clf).set_params(dt_min=8)
    assert other.get_params()["dt_min"] == 8 and clf.dt_min == 10


def test_bad_params_fail_at_fit():
    with pytest.raises(ValueError):
        CitationAngleClassifier(beta1_higher_deg=10).fit(X)
    with pytest.raises(ValueError):
        CitationAngleClassifier(cut="none").fit(X)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        CitationAngleClassifier().predict(X)


def test_accepts_ragged_and_corpus_inputs():
    clf = CitationAngleClassifier().fit(X)
    ragged = [FIX_SG, FIX_SB + [3, 2, 1]]
    assert list(clf.predict(ragged)) == ["sg", "sb"]
    corpus = Corpus([CitationSeries("a", 1980, FIX_ASB)])
    assert list(clf.predict(corpus)) == ["asb"]


def test_score_against_planted_kinds():
    gen = generate_corpus(GenSpec(weights={"sg": 0.5, "sb": 0.5}), 200, seed=1)
    y = [gen.planted[pid] for pid in gen.corpus.ids]
    clf = CitationAngleClassifier().fit(gen.corpus, y)
    assert clf.score(gen.corpus, y) >= 0.95


def test_pipeline_transform():
    pipe = make_pipeline(CitationAngleClassifier())
    out = pipe.fit_transform(X)
    assert out.shape == (3, 10)


@pytest.mark.parametrize("bad", [
    [[0, 1, -1]],
    [[0, 1.5, 2]],
    [[0, np.nan, 2]],
    [[0, 1]],
    [],
    np.zeros((2, 3, 4)),
    [["a", "b", "c"]],
])
def test_check_series_rejects(bad):
    with pytest.raises(ValueError):
        check_series(bad)


def test_check_series_coerces_whole_floats():
    assert check_series(np.array([[0.0, 2.0, 5.0]])) == [[0, 2, 5]]

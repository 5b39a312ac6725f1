import pickle

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from grasp_gauge import OutOfRange, relative_size
from grasp_gauge.errors import DegenerateSpanRange
from grasp_gauge.estimators import RelativeSizeClassifier, SpanDepthInterpolator, check_lengths

from conftest import precision_profile

SPANS = np.array([100.0, 60.0, 20.0])


def test_classifier_params_and_clone():
    est = RelativeSizeClassifier(label_output="ordinal")
    assert est.get_params() == {"label_output": "ordinal"}
    twin = clone(est)
    assert twin.get_params() == est.get_params() and not hasattr(twin, "min_span_")


def test_classifier_fit_predict():
    est = RelativeSizeClassifier().fit(SPANS)
    assert (est.min_span_, est.max_span_) == (20.0, 100.0)
    dims = [10, 30, 60, 90, 120]
    assert est.predict(dims).tolist() == ["TooSmall", "Small", "Medium", "Large", "TooLarge"]
    assert est.transform([60])[0, 0] == pytest.approx(0.5)


def test_classifier_matches_profile_api():
    profile = precision_profile([100, 60, 20])
    est = RelativeSizeClassifier.from_profile(profile)
    dims = np.linspace(1, 150, 31)
    expected = [relative_size(profile, "precision", d).fraction for d in dims]
    assert est.transform(dims)[:, 0] == pytest.approx(expected)


def test_classifier_in_pipeline():
    pipe = make_pipeline(FunctionTransformer(lambda x: x * 10), RelativeSizeClassifier(label_output="ordinal"))
    pipe.fit(SPANS / 10)
    assert pipe.predict(np.array([6.0])).tolist() == [2]


def test_classifier_rejects_bad_input():
    with pytest.raises(ValueError):
        RelativeSizeClassifier().fit([100, 50])
    with pytest.raises(DegenerateSpanRange):
        RelativeSizeClassifier().fit([50, 50, 50])
    with pytest.raises(ValueError):
        RelativeSizeClassifier().fit([100, -1, 0])
    with pytest.raises(ValueError):
        RelativeSizeClassifier(label_output="x").fit(SPANS).predict([10])


def test_interpolator():
    est = SpanDepthInterpolator().fit([[100], [0], [50]], [60, 80, 75])
    assert est.predict([0, 50, 75]) == pytest.approx([80, 75, 67.5])
    assert est.area_ == pytest.approx(50 * 77.5 + 50 * 67.5)
    with pytest.raises(OutOfRange):
        est.predict([101])
    nan = clone(est).set_params(out_of_range="nan").fit([0, 100], [80, 60])
    assert np.isnan(nan.predict([101])[0])
    assert pickle.loads(pickle.dumps(est)).predict([25]) == pytest.approx(est.predict([25]))


def test_interpolator_from_profile():
    profile = precision_profile([100, 50, 0], [60, 75, 80])
    est = SpanDepthInterpolator.from_profile(profile)
    assert est.predict([75])[0] == pytest.approx(67.5)


def test_check_lengths():
    assert check_lengths([[1, 9], [2, 9]]).tolist() == [1.0, 2.0]
    with pytest.raises(ValueError):
        check_lengths([np.nan])

"""scikit-learn compatible wrappers around sizing and workspace operations.

``RelativeSizeClassifier`` learns a hand's precision span range from span
samples and maps object dimensions to size fractions (``transform``) or size
labels (``predict``). ``SpanDepthInterpolator`` learns a span-depth curve and
predicts depth at new spans. Both follow the usual estimator conventions
(constructor stores parameters only, ``fit`` returns ``self``, fitted state
ends in an underscore) so they clone, pickle and sit inside pipelines.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .errors import DegenerateSpanRange, OutOfRange
from .model import HandProfile
from .sizing import SizeClass, classify_fraction, fraction_of, span_range
from .workspace import CurveSource, SpanDepthCurve, build_precision_curve, graspable_area, interpolate_depth

MIN_POSES = 3


def check_lengths(X, *, min_samples: int = 1, name: str = "X") -> np.ndarray:
    """Validate a column of non-negative finite millimeter lengths; returns shape (n,).

    Accepts a 1-D array or a 2-D array whose first column holds the lengths
    (extra columns, such as depth next to span, are ignored).
    """
    arr = check_array(X, ensure_2d=False, dtype=float, ensure_min_samples=min_samples, input_name=name)
    if arr.ndim == 2:
        arr = arr[:, 0]
    if np.any(arr < 0):
        raise ValueError(f"{name} holds negative lengths")
    return arr


class RelativeSizeClassifier(ClassifierMixin, TransformerMixin, BaseEstimator):
    """Hand-relative object size classes from a precision span range.

    ``fit`` takes the precision pose spans (or an ``(n, 2)`` span/depth
    array); the closed-pose span is their minimum and the open-pose span their
    maximum. ``y`` is ignored.
    """

    def __init__(self, label_output: str = "label"):
        self.label_output = label_output

    def fit(self, X, y=None):
        spans = check_lengths(X, min_samples=MIN_POSES)
        m, M = float(spans.min()), float(spans.max())
        if not M > m:
            raise DegenerateSpanRange(f"maximum span {M} must exceed minimum span {m}")
        self.min_span_, self.max_span_ = m, M
        self.classes_ = np.array([c.label for c in SizeClass])
        self.n_features_in_ = 1 if np.ndim(X) == 1 else np.shape(X)[1]
        return self

    @classmethod
    def from_profile(cls, profile: HandProfile, **params) -> "RelativeSizeClassifier":
        m, M = span_range(profile)
        est = cls(**params)
        est.min_span_, est.max_span_ = m, M
        est.classes_ = np.array([c.label for c in SizeClass])
        est.n_features_in_ = 1
        return est

    def transform(self, X):
        check_is_fitted(self, ("min_span_", "max_span_"))
        dims = check_lengths(X)
        return np.array([[fraction_of(d, self.min_span_, self.max_span_)] for d in dims])

    def predict(self, X):
        fractions = self.transform(X)[:, 0]
        classes = [classify_fraction(f) for f in fractions]
        if self.label_output == "ordinal":
            return np.array([int(c) for c in classes])
        if self.label_output != "label":
            raise ValueError(f"label_output must be 'label' or 'ordinal', got {self.label_output!r}")
        return np.array([c.label for c in classes])


class SpanDepthInterpolator(RegressorMixin, BaseEstimator):
    """Piecewise-linear depth as a function of span.

    ``out_of_range`` controls spans outside the fitted extent: ``"raise"``
    (default) raises :class:`~grasp_gauge.errors.OutOfRange`, ``"nan"``
    returns NaN for them.
    """

    def __init__(self, out_of_range: str = "raise"):
        self.out_of_range = out_of_range

    def fit(self, X, y):
        spans = check_lengths(X, min_samples=1)
        depths = check_lengths(y, min_samples=1, name="y")
        if len(spans) != len(depths):
            raise ValueError(f"X has {len(spans)} samples but y has {len(depths)}")
        pts = sorted(zip(spans.tolist(), depths.tolist()))
        self.curve_ = SpanDepthCurve(tuple(pts), CurveSource.MEASURED)
        self.area_ = graspable_area(self.curve_)
        self.n_features_in_ = 1
        return self

    @classmethod
    def from_profile(cls, profile: HandProfile, **params) -> "SpanDepthInterpolator":
        est = cls(**params)
        est.curve_ = build_precision_curve(profile.precision)
        est.area_ = graspable_area(est.curve_)
        est.n_features_in_ = 1
        return est

    def predict(self, X):
        check_is_fitted(self, "curve_")
        if self.out_of_range not in ("raise", "nan"):
            raise ValueError(f"out_of_range must be 'raise' or 'nan', got {self.out_of_range!r}")
        spans = check_lengths(X)
        out = np.empty(len(spans))
        for i, s in enumerate(spans):
            try:
                out[i] = interpolate_depth(self.curve_, float(s))
            except OutOfRange:
                if self.out_of_range == "raise":
                    raise
                out[i] = np.nan
        return out

import math

import pytest
from hypothesis import assume, given, strategies as st

from grasp_gauge import (
    DegenerateSpanRange,
    MissingGraspSet,
    HandProfile,
    RelativeSize,
    SizeClass,
    WidthRange,
    classify,
    classify_object,
    object_dimension_for,
    relative_size,
)
from grasp_gauge.sizing import DEFAULT_FRACTIONS, classify_fraction

from conftest import cylinder, precision_profile

HAND_0_100 = precision_profile([100, 50, 0])
HAND_20_100 = precision_profile([100, 60, 20])


@pytest.mark.parametrize(
    "hand, dim, expected",
    [
        (HAND_0_100, 25, 0.25),
        (HAND_20_100, 20, 0.0),
        (HAND_20_100, 110, (110 - 20) / (100 - 20)),
    ],
)
def test_relative_size(hand, dim, expected):
    r = relative_size(hand, "precision", dim)
    assert r.fraction == pytest.approx(expected, abs=1e-12)
    assert (r.hand_min_span, r.hand_max_span) == (hand.precision.samples[-1].span, hand.precision.samples[0].span)


def test_relative_size_errors():
    no_precision = HandProfile("p", "", 10, WidthRange(0, 1))
    with pytest.raises(MissingGraspSet):
        relative_size(no_precision, "precision", 5)
    flat = precision_profile([50, 50, 50])
    with pytest.raises(DegenerateSpanRange):
        relative_size(flat, "precision", 5)


@pytest.mark.parametrize(
    "fraction, expected",
    [
        (DEFAULT_FRACTIONS["small"], SizeClass.SMALL),
        (DEFAULT_FRACTIONS["medium"], SizeClass.MEDIUM),
        (DEFAULT_FRACTIONS["large"], SizeClass.LARGE),
        (0.70, SizeClass.LARGE),
        (-0.01, SizeClass.TOO_SMALL),
        (0.30, SizeClass.SMALL),
        (1.0, SizeClass.LARGE),
        (1.0000001, SizeClass.TOO_LARGE),
    ],
)
def test_classify(fraction, expected):
    assert classify(RelativeSize(fraction, 0, 1)) is expected


def test_object_dimension_for():
    assert object_dimension_for(HAND_0_100, 0.5) == 50
    assert object_dimension_for(HAND_20_100, 0.75) == pytest.approx(80)
    assert relative_size(HAND_20_100, "precision", 80).fraction == pytest.approx(0.75)
    assert object_dimension_for(HAND_20_100, 0) == 20


def test_height_gate():
    hand = precision_profile([100, 50, 0], width=WidthRange(20, 60, False))
    assert not classify_object(hand, cylinder(50, height=10)).height_ok
    assert classify_object(hand, cylinder(50, height=10)).size is SizeClass.MEDIUM
    assert not classify_object(hand, cylinder(50, height=61)).height_ok
    unbounded = precision_profile([100, 50, 0], width=WidthRange(20, 60, True))
    assert classify_object(unbounded, cylinder(50, height=600)).height_ok


def test_object_at_max_span_is_large():
    assert classify_object(HAND_20_100, cylinder(100)).size is SizeClass.LARGE


def test_labels_are_ordered():
    assert [c.label for c in sorted(SizeClass)] == ["TooSmall", "Small", "Medium", "Large", "TooLarge"]


spans = st.floats(0.0, 500.0, allow_nan=False)


@given(spans, spans, st.floats(0.01, 600.0), st.sampled_from([0.1, 0.5, 2.0, 10.0]))
def test_affine_invariance(m, M, d, k):
    assume(M - m > 1e-3)
    base = (d - m) / (M - m)
    scaled = (k * d - k * m) / (k * M - k * m)
    assert math.isclose(base, scaled, rel_tol=1e-9, abs_tol=1e-12)
    hand = precision_profile([M, (M + m) / 2, m])
    hand_k = precision_profile([k * M, k * (M + m) / 2, k * m])
    f1 = relative_size(hand, "precision", d).fraction
    f2 = relative_size(hand_k, "precision", k * d).fraction
    assume(all(abs(f1 - b) > 1e-9 for b in (0.0, 0.3, 0.7, 1.0)))
    assert classify_fraction(f1) is classify_fraction(f2)


@given(st.floats(0.01, 600), st.floats(0.01, 600))
def test_monotone_in_object_size(d1, d2):
    assume(d1 < d2)
    c1 = classify(relative_size(HAND_20_100, "precision", d1))
    c2 = classify(relative_size(HAND_20_100, "precision", d2))
    assert c1 <= c2


@given(st.sampled_from([(0.0, 0.3), (0.3, 0.7), (0.7, 1.0)]), st.floats(0.01, 0.99))
def test_round_trip_class_constant_on_interior(interval, t):
    lo, hi = interval
    f = lo + t * (hi - lo)
    assume(lo < f < hi)
    d = object_dimension_for(HAND_20_100, f)
    expected = classify_fraction((lo + hi) / 2)
    assert classify(relative_size(HAND_20_100, "precision", d)) is expected

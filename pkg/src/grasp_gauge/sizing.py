"""Object size relative to a hand's precision span range.

An object dimension ``d`` is normalized as ``(d - m) / (M - m)`` where ``m``
and ``M`` are the closed-pose and open-pose precision spans. Fractions up to
0.30 are small, 0.70 and above large, anything between medium. Outside
``[0, 1]`` the object is too small or too large for the hand.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DegenerateSpanRange, MissingGraspSet
from .model import HandProfile, ObjectSpec, Pose

SMALL_UPPER = 0.30
LARGE_LOWER = 0.70
DEFAULT_FRACTIONS = {"small": 0.25, "medium": 0.50, "large": 0.75}


class SizeClass(enum.IntEnum):
    TOO_SMALL = 0
    SMALL = 1
    MEDIUM = 2
    LARGE = 3
    TOO_LARGE = 4

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    SizeClass.TOO_SMALL: "TooSmall",
    SizeClass.SMALL: "Small",
    SizeClass.MEDIUM: "Medium",
    SizeClass.LARGE: "Large",
    SizeClass.TOO_LARGE: "TooLarge",
}


@dataclass(frozen=True)
class RelativeSize:
    fraction: float
    hand_min_span: float
    hand_max_span: float


@dataclass(frozen=True)
class ObjectClassification:
    size: SizeClass
    height_ok: bool
    relative: RelativeSize


def span_range(profile: HandProfile, grasp: str = "precision") -> tuple[float, float]:
    """Return ``(m, M)``: closed-pose and open-pose precision spans."""
    if grasp != "precision":
        raise ValueError(f"only precision grasps are normalized, got {grasp!r}")
    pset = profile.precision
    if pset is None:
        raise MissingGraspSet(f"profile {profile.name!r} has no precision measurements")
    closed = pset.sample(Pose.closed())
    opened = pset.sample(Pose.open())
    if closed is None or opened is None:
        raise MissingGraspSet(f"profile {profile.name!r} lacks an open or closed precision pose")
    m, M = closed.span, opened.span
    if not M > m:
        raise DegenerateSpanRange(f"maximum span {M} must exceed minimum span {m}")
    return m, M


def fraction_of(object_dim: float, m: float, M: float) -> float:
    if not M > m:
        raise DegenerateSpanRange(f"maximum span {M} must exceed minimum span {m}")
    return (object_dim - m) / (M - m)


def relative_size(profile: HandProfile, grasp: str, object_dim: float) -> RelativeSize:
    if not object_dim > 0:
        raise ValueError(f"object dimension must be positive, got {object_dim}")
    m, M = span_range(profile, grasp)
    return RelativeSize(fraction_of(object_dim, m, M), m, M)


def classify_fraction(fraction: float) -> SizeClass:
    if fraction < 0:
        return SizeClass.TOO_SMALL
    if fraction <= SMALL_UPPER:
        return SizeClass.SMALL
    if fraction < LARGE_LOWER:
        return SizeClass.MEDIUM
    if fraction <= 1.0:
        return SizeClass.LARGE
    return SizeClass.TOO_LARGE


def classify(r: RelativeSize) -> SizeClass:
    return classify_fraction(r.fraction)


def object_dimension_for(profile: HandProfile, fraction: float, grasp: str = "precision") -> float:
    """Object dimension at ``fraction`` of the hand's span range; inverse of relative_size."""
    if not fraction >= 0:
        raise ValueError(f"fraction must be >= 0, got {fraction}")
    m, M = span_range(profile, grasp)
    return m + fraction * (M - m)


def height_ok(profile: HandProfile, obj: ObjectSpec) -> bool:
    w = profile.width
    return obj.height >= w.min_width and (obj.height <= w.max_width or w.object_height_unbounded)


def classify_object(profile: HandProfile, obj: ObjectSpec) -> ObjectClassification:
    rel = relative_size(profile, "precision", obj.grasp_diameter)
    return ObjectClassification(classify(rel), height_ok(profile, obj), rel)

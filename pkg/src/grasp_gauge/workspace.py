"""Piecewise-linear span-depth curves and object fit queries."""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import OutOfRange, WrongShape
from .model import HandProfile, ObjectSpec, PowerCylindricalSet, PowerSphericalSet, PrecisionSet, Shape
from .sizing import classify_fraction, fraction_of, height_ok, span_range, SizeClass


class CurveSource(enum.Enum):
    MEASURED = "measured"
    DERIVED = "derived"


@dataclass(frozen=True)
class SpanDepthCurve:
    """Depth as a function of span, sorted by strictly increasing span.

    Protocol curves carry at least three poses; the type itself accepts any
    non-empty point list so that derived and partial curves can be built.
    """

    points: tuple[tuple[float, float], ...]
    source: CurveSource = CurveSource.MEASURED

    def __post_init__(self):
        pts = tuple((float(s), float(d)) for s, d in self.points)
        if not pts:
            raise ValueError("curve needs at least one point")
        for s, d in pts:
            if not (s >= 0 and d >= 0):
                raise ValueError(f"negative span or depth in point ({s}, {d})")
        for (a, _), (b, _) in zip(pts, pts[1:]):
            if not b > a:
                raise ValueError(f"spans must increase strictly, got {a} then {b}")
        object.__setattr__(self, "points", pts)

    @property
    def spans(self) -> list[float]:
        return [p[0] for p in self.points]

    @property
    def depths(self) -> list[float]:
        return [p[1] for p in self.points]

    @property
    def min_span(self) -> float:
        return self.points[0][0]

    @property
    def max_span(self) -> float:
        return self.points[-1][0]


@dataclass(frozen=True)
class FitResult:
    fits: bool
    pose_fraction: Optional[float]
    limiting_constraint: str


@dataclass(frozen=True)
class SphericalFit:
    fit: FitResult
    enclosed: bool


def build_precision_curve(pset: PrecisionSet) -> SpanDepthCurve:
    pts = sorted((s.span, s.depth) for s in pset.samples)
    return SpanDepthCurve(tuple(pts), CurveSource.MEASURED)


def interpolate_depth(curve: SpanDepthCurve, span: float) -> float:
    spans = curve.spans
    if not curve.min_span <= span <= curve.max_span:
        raise OutOfRange(f"span {span} outside curve extent [{curve.min_span}, {curve.max_span}]")
    i = bisect.bisect_left(spans, span)
    s1, d1 = curve.points[i]
    if span == s1:
        return d1
    s0, d0 = curve.points[i - 1]
    t = (span - s0) / (s1 - s0)
    return d0 + t * (d1 - d0)


def graspable_area(curve: SpanDepthCurve) -> float:
    """Trapezoid-rule area (mm^2) under the curve between its end spans."""
    pts = curve.points
    return sum((s1 - s0) * (d0 + d1) / 2 for (s0, d0), (s1, d1) in zip(pts, pts[1:]))


def fits_precision(profile: HandProfile, obj: ObjectSpec) -> FitResult:
    m, M = span_range(profile)
    f = fraction_of(obj.grasp_diameter, m, M)
    if classify_fraction(f) in (SizeClass.TOO_SMALL, SizeClass.TOO_LARGE):
        return FitResult(False, None, "span")
    if not height_ok(profile, obj):
        return FitResult(False, None, "width")
    return FitResult(True, f, "none")


def _closure_fraction(capacity: Sequence[float], opening: Sequence[float], diameter: float) -> Optional[float]:
    """Pose fraction at which a closing hand first touches the object.

    ``capacity`` and ``opening`` are per-pose values ordered open to closed;
    ``opening`` is the actuation proxy mapped linearly onto [0, 1]. Returns
    None when no pose has capacity for ``diameter``.
    """
    lo, hi = opening[-1], opening[0]
    scale = hi - lo

    def frac(v):
        return (v - lo) / scale if scale > 0 else 0.0

    n = len(capacity)
    for j in range(n - 1, -1, -1):
        if diameter <= capacity[j]:
            if j == n - 1:
                return 0.0
            c_in, c_out = capacity[j + 1], capacity[j]
            t = (diameter - c_in) / (c_out - c_in) if c_out > c_in else 1.0
            f = frac(opening[j + 1]) + t * (frac(opening[j]) - frac(opening[j + 1]))
            return min(1.0, max(0.0, f))
    return None


def cylinder_capacity(pose) -> float:
    """Largest cylinder diameter the conservative inscribed-circle test admits at a pose."""
    spans = [s.span for s in pose.sections]
    span_line = max(pose.sections, key=lambda s: s.line)
    return min(min(spans), span_line.depth)


def fits_power_cylindrical(cset: PowerCylindricalSet, obj: ObjectSpec) -> FitResult:
    if obj.shape is not Shape.CYLINDER:
        raise WrongShape(f"{obj.name!r} is a {obj.shape.value}, not a cylinder")
    capacity = [cylinder_capacity(p) for p in cset.poses]
    opening = [max(p.sections, key=lambda s: s.line).span for p in cset.poses]
    f = _closure_fraction(capacity, opening, obj.grasp_diameter)
    if f is None:
        return FitResult(False, None, "span")
    return FitResult(True, f, "none")


def fits_power_spherical(sset: PowerSphericalSet, obj: ObjectSpec) -> SphericalFit:
    if obj.shape is not Shape.SPHERE:
        raise WrongShape(f"{obj.name!r} is a {obj.shape.value}, not a sphere")
    d = obj.grasp_diameter
    widest = [p.section.widest_diameter for p in sset.poses]
    f = _closure_fraction(widest, widest, d)
    enclosed = any(p.section.distal_diameter <= d <= p.section.widest_diameter for p in sset.poses)
    if f is None:
        return SphericalFit(FitResult(False, None, "widest_diameter"), False)
    return SphericalFit(FitResult(True, f, "none"), enclosed)

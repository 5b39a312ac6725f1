"""Planar two-finger hand model used as an independent oracle.

Frame: x runs along the span axis, y along depth, the palm is the line
y = 0. Each finger is a proximal and a distal link. ``theta1`` is the
proximal link angle from the palm measured on the finger's outward side
(90 deg points straight out of the palm, larger values lean inward) and
``theta2`` is the distal flexion relative to the proximal link (positive
curls inward). An optional prismatic ``base_travel`` slides the finger base
inward, which is how parallel-jaw grippers are described.

Grasp rules enforced here:

* precision: each contact face normal within 30 deg of the palm plane
  (inclusive) and both contacts at the same depth within 0.5 mm;
* power: both contacts strictly beyond the object center and each distal
  face at 80 deg or more to the span line (inclusive).

Precision curves come from exhaustive search over the joint grid. The two
fingers are tabulated independently and then joined on contact depth, which
visits every grid combination without materializing the 4-D product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
from scipy.special import cosdg, sindg

from .errors import ConstraintUnsatisfied, DisjointSpanRanges, JointLimitViolation, NoValidConfiguration
from .model import (
    ContactChoice,
    CylindricalSection,
    HandProfile,
    Method,
    Pose,
    PoseSample,
    PrecisionSet,
    Provenance,
    SectionLine,
    WidthRange,
)
from .workspace import CurveSource, SpanDepthCurve, interpolate_depth

PRECISION_FACE_LIMIT = 30.0
POWER_SPANLINE_LIMIT = 80.0
DEPTH_MATCH_TOL = 0.5
SPAN_WINDOW = 0.5
DEFAULT_GRID_STEP = 0.5
_LIMIT_EPS = 1e-9
_CHUNK = 1_000_000


@dataclass(frozen=True)
class FingerSpec:
    proximal_length: float
    distal_length: float
    theta1_limits: tuple[float, float]
    theta2_limits: tuple[float, float]
    base_travel: tuple[float, float] = (0.0, 0.0)

    def check(self) -> None:
        if not (self.proximal_length > 0 and self.distal_length > 0):
            raise ValueError("link lengths must be positive")
        for name in ("theta1_limits", "theta2_limits", "base_travel"):
            lo, hi = getattr(self, name)
            if not lo <= hi:
                raise ValueError(f"{name} interval [{lo}, {hi}] is empty")


@dataclass(frozen=True)
class PlanarHandModel:
    left_base_x: float
    right_base_x: float
    left: FingerSpec
    right: FingerSpec
    contact_choice: ContactChoice = ContactChoice.DISTAL_MIDPOINT
    name: str = "planar-hand"
    width: WidthRange = field(default_factory=lambda: WidthRange(0.0, 0.0, True))

    def __post_init__(self):
        if not self.left_base_x < self.right_base_x:
            raise ValueError("left base must lie left of the right base")
        self.left.check()
        self.right.check()

    def mirrored(self) -> "PlanarHandModel":
        """Reflection across the depth axis."""
        return replace(
            self,
            left_base_x=-self.right_base_x,
            right_base_x=-self.left_base_x,
            left=self.right,
            right=self.left,
        )


@dataclass(frozen=True)
class JointConfig:
    theta1_left: float
    theta2_left: float
    theta1_right: float
    theta2_right: float
    travel_left: float = 0.0
    travel_right: float = 0.0


@dataclass(frozen=True)
class ContactFrame:
    position: tuple[float, float]
    surface_angle_vs_palm: float
    surface_angle_vs_spanline: float


@dataclass(frozen=True)
class CurveComparison:
    max_abs_depth_error: float
    span_range_mismatch: float
    passed: bool


# --------------------------------------------------------------------------
# single-finger geometry, vectorized over joint arrays

_SIDE = {"left": -1.0, "right": 1.0}


def _contact_fraction(choice: ContactChoice) -> float:
    return 1.0 if choice is ContactChoice.FINGERTIP else 0.5


def _finger_geometry(finger: FingerSpec, base_x, side, theta1, theta2, travel, k):
    """Return base, joint, contact and tip coordinates plus the distal angle.

    ``side`` is -1 for the left finger (outward = -x) and +1 for the right.
    """
    theta1 = np.asarray(theta1, dtype=float)
    phi = theta1 + np.asarray(theta2, dtype=float)
    bx = base_x - side * np.asarray(travel, dtype=float)
    l1, l2 = finger.proximal_length, finger.distal_length
    jx = bx + side * (l1 * cosdg(theta1))
    jy = l1 * sindg(theta1)
    dx, dy = side * cosdg(phi), sindg(phi)
    cx = jx + k * l2 * dx
    cy = jy + k * l2 * dy
    tx = jx + l2 * dx
    ty = jy + l2 * dy
    return bx, (jx, jy), (cx, cy), (tx, ty), phi


def face_angle_vs_palm(phi):
    """Angle between the distal face's inward normal and the palm plane, degrees."""
    psi = np.mod(90.0 - np.asarray(phi, dtype=float) + 180.0, 360.0) - 180.0
    return np.abs(psi)


def _angle_vs_spanline(side, phi, contact, other):
    # interior angle between the distal link (contact back toward its joint)
    # and the span line toward the opposing contact
    vx, vy = -side * cosdg(phi), -sindg(phi)
    wx, wy = other[0] - contact[0], other[1] - contact[1]
    if math.hypot(wx, wy) < 1e-12:
        wx, wy = -side, 0.0
    return abs(math.degrees(math.atan2(vx * wy - vy * wx, vx * wx + vy * wy)))


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    """lo, lo+step, ..., plus hi; halving ``step`` yields a superset."""
    n = int(math.floor((hi - lo) / step + 1e-9))
    vals = lo + step * np.arange(n + 1)
    if vals[-1] < hi - 1e-12:
        vals = np.append(vals, hi)
    return vals


def _within(value, lo, hi) -> bool:
    return lo - _LIMIT_EPS <= value <= hi + _LIMIT_EPS


def check_config(model: PlanarHandModel, config: JointConfig) -> None:
    checks = [
        ("theta1_left", config.theta1_left, model.left.theta1_limits),
        ("theta2_left", config.theta2_left, model.left.theta2_limits),
        ("theta1_right", config.theta1_right, model.right.theta1_limits),
        ("theta2_right", config.theta2_right, model.right.theta2_limits),
        ("travel_left", config.travel_left, model.left.base_travel),
        ("travel_right", config.travel_right, model.right.base_travel),
    ]
    for name, value, (lo, hi) in checks:
        if not _within(value, lo, hi):
            raise JointLimitViolation(f"{name}={value} outside [{lo}, {hi}]")


def _pose_geometry(model: PlanarHandModel, config: JointConfig):
    check_config(model, config)
    k = _contact_fraction(model.contact_choice)
    left = _finger_geometry(
        model.left, model.left_base_x, -1.0, config.theta1_left, config.theta2_left, config.travel_left, k
    )
    right = _finger_geometry(
        model.right, model.right_base_x, 1.0, config.theta1_right, config.theta2_right, config.travel_right, k
    )
    return left, right


def _as_point(xy) -> tuple[float, float]:
    return float(xy[0]), float(xy[1])


def forward_kinematics(model: PlanarHandModel, config: JointConfig) -> tuple[ContactFrame, ContactFrame]:
    left, right = _pose_geometry(model, config)
    cl, cr = _as_point(left[2]), _as_point(right[2])
    frames = []
    for side, geom, here, there in ((-1.0, left, cl, cr), (1.0, right, cr, cl)):
        phi = float(geom[4])
        frames.append(
            ContactFrame(
                here,
                float(face_angle_vs_palm(phi)),
                _angle_vs_spanline(side, phi, here, there),
            )
        )
    return frames[0], frames[1]


def precision_valid(frames: tuple[ContactFrame, ContactFrame]) -> bool:
    a, b = frames
    return (
        a.surface_angle_vs_palm <= PRECISION_FACE_LIMIT
        and b.surface_angle_vs_palm <= PRECISION_FACE_LIMIT
        and abs(a.position[1] - b.position[1]) <= DEPTH_MATCH_TOL
    )


def power_valid(frames: tuple[ContactFrame, ContactFrame], object_center_depth: float) -> bool:
    return all(
        f.position[1] > object_center_depth and f.surface_angle_vs_spanline >= POWER_SPANLINE_LIMIT
        for f in frames
    )


# --------------------------------------------------------------------------
# precision curve search


def _finger_table(model: PlanarHandModel, which: str, step: float, constrained: bool = True):
    finger = getattr(model, which)
    base_x = model.left_base_x if which == "left" else model.right_base_x
    side = _SIDE[which]
    t1, t2, tr = np.meshgrid(
        _grid(*finger.theta1_limits, step),
        _grid(*finger.theta2_limits, step),
        _grid(*finger.base_travel, step),
        indexing="ij",
    )
    t1, t2, tr = t1.ravel(), t2.ravel(), tr.ravel()
    k = _contact_fraction(model.contact_choice)
    bx, joint, contact, tip, phi = _finger_geometry(finger, base_x, side, t1, t2, tr, k)
    if not constrained:
        return joint, tip
    keep = (face_angle_vs_palm(phi) <= PRECISION_FACE_LIMIT) & (contact[1] >= 0)
    return contact[0][keep], contact[1][keep]


def _pair_chunks(xl, yl, xr, yr):
    """Yield (span, depth) arrays for every left/right pair with matching depth."""
    order = np.argsort(yr, kind="stable")
    xr, yr = xr[order], yr[order]
    lo = np.searchsorted(yr, yl - DEPTH_MATCH_TOL, side="left")
    hi = np.searchsorted(yr, yl + DEPTH_MATCH_TOL, side="right")
    counts = hi - lo
    start = 0
    n = len(xl)
    while start < n:
        total = 0
        stop = start
        while stop < n and (total == 0 or total + counts[stop] <= _CHUNK):
            total += counts[stop]
            stop += 1
        c = counts[start:stop]
        if total:
            rep = np.repeat(np.arange(start, stop), c)
            offsets = np.arange(total) - np.repeat(np.cumsum(c) - c, c)
            ridx = np.repeat(lo[start:stop], c) + offsets
            span = xr[ridx] - xl[rep]
            depth = (yl[rep] + yr[ridx]) / 2
            ok = span >= 0
            yield span[ok], depth[ok]
        start = stop


def _precision_tables(model: PlanarHandModel, grid_step: float):
    xl, yl = _finger_table(model, "left", grid_step)
    xr, yr = _finger_table(model, "right", grid_step)
    return xl, yl, xr, yr


def _span_bounds(model, tables, grid_step) -> tuple[float, float]:
    lo, hi = math.inf, -math.inf
    for span, _ in _pair_chunks(*tables):
        if len(span):
            lo = min(lo, float(span.min()))
            hi = max(hi, float(span.max()))
    if hi < lo:
        raise NoValidConfiguration(
            f"no precision-valid configuration for {model.name!r} at grid step {grid_step}"
        )
    return lo, hi


def precision_span_bounds(model: PlanarHandModel, grid_step: float = DEFAULT_GRID_STEP) -> tuple[float, float]:
    """Minimum and maximum precision-valid span on the joint grid."""
    if not grid_step > 0:
        raise ValueError("grid_step must be positive")
    return _span_bounds(model, _precision_tables(model, grid_step), grid_step)


def derive_precision_curve(
    model: PlanarHandModel, n_poses: int = 3, grid_step: float = DEFAULT_GRID_STEP
) -> SpanDepthCurve:
    """Span-depth curve of precision grasps found by exhaustive grid search.

    Spans are the grid minimum and maximum plus ``n_poses - 2`` evenly spaced
    spans between them. The depth reported at each span is the deepest
    precision-valid grasp whose span lies within 0.5 mm of it (inside the
    range for the two end points).
    """
    if n_poses < 3:
        raise ValueError("n_poses must be at least 3")
    if not grid_step > 0:
        raise ValueError("grid_step must be positive")
    tables = _precision_tables(model, grid_step)
    s_min, s_max = _span_bounds(model, tables, grid_step)
    if not s_max > s_min:
        raise NoValidConfiguration(f"precision span range of {model.name!r} is a single value {s_min}")
    targets = np.linspace(s_min, s_max, n_poses)
    targets[0], targets[-1] = s_min, s_max
    windows = [(t - SPAN_WINDOW, t + SPAN_WINDOW) for t in targets]
    windows[0] = (s_min, s_min + SPAN_WINDOW)
    windows[-1] = (s_max - SPAN_WINDOW, s_max)
    best = np.full(n_poses, -np.inf)
    for span, depth in _pair_chunks(*tables):
        for i, (a, b) in enumerate(windows):
            sel = depth[(span >= a) & (span <= b)]
            if len(sel):
                best[i] = max(best[i], float(sel.max()))
    points = [(float(t), float(d)) for t, d in zip(targets, best) if np.isfinite(d)]
    return SpanDepthCurve(tuple(points), CurveSource.DERIVED)


def absolute_max_span(model: PlanarHandModel, grid_step: float = DEFAULT_GRID_STEP) -> float:
    """Widest separation of the distal ends with grasp rules ignored."""
    (ljx, _), (ltx, _) = _finger_table(model, "left", grid_step, constrained=False)
    (rjx, _), (rtx, _) = _finger_table(model, "right", grid_step, constrained=False)
    return float(max(rjx.max(), rtx.max()) - min(ljx.min(), ltx.min()))


def derive_profile(
    model: PlanarHandModel, n_poses: int = 3, grid_step: float = DEFAULT_GRID_STEP, measurer: str = ""
) -> HandProfile:
    """Hand profile whose precision set is the derived curve."""
    curve = derive_precision_curve(model, n_poses, grid_step)
    pts = list(reversed(curve.points))
    samples = []
    for i, (span, depth) in enumerate(pts):
        if i == 0:
            pose = Pose.open()
        elif i == len(pts) - 1:
            pose = Pose.closed()
        else:
            pose = Pose.intermediate(i)
        samples.append(PoseSample(pose, round(span, 2) + 0.0, round(depth, 2) + 0.0))
    abs_span = math.ceil(absolute_max_span(model, grid_step) * 100) / 100
    return HandProfile(
        name=model.name,
        configuration="planar-model",
        absolute_max_span=max(abs_span, samples[0].span),
        width=model.width,
        precision=PrecisionSet(model.contact_choice, tuple(samples)),
        provenance=Provenance(measurer, Method.CAD_MODEL, ()),
    )


# --------------------------------------------------------------------------
# power sections


def _crossings(polyline, y) -> list[float]:
    xs = []
    for (x0, y0), (x1, y1) in zip(polyline, polyline[1:]):
        if y0 == y1:
            if y == y0:
                xs.extend((x0, x1))
            continue
        if min(y0, y1) <= y <= max(y0, y1):
            xs.append(x0 + (y - y0) / (y1 - y0) * (x1 - x0))
    return xs


def face_separation(left_poly, right_poly, y) -> Optional[float]:
    """Span between the innermost points of two finger polylines at depth ``y``."""
    xl, xr = _crossings(left_poly, y), _crossings(right_poly, y)
    if not xl or not xr:
        return None
    return min(xr) - max(xl)


def _finger_polyline(geom) -> list[tuple[float, float]]:
    bx, joint, contact, _tip, _phi = geom
    return [(float(bx), 0.0), _as_point(joint), _as_point(contact)]


def derive_power_sections(
    model: PlanarHandModel, config: JointConfig, sweep: int = 400
) -> tuple[CylindricalSection, CylindricalSection, CylindricalSection]:
    """Inner, Mid and SpanLine sections of a cylindrical power grasp pose.

    Inner sits at the base joints on the palm, SpanLine at the contacts, and
    Mid at the depth of widest face separation strictly between the two
    (found by a ``sweep``-sample scan). Spans are along the span axis.
    """
    frames = forward_kinematics(model, config)
    left, right = _pose_geometry(model, config)
    lp, rp = _finger_polyline(left), _finger_polyline(right)
    (cxl, cyl), (cxr, cyr) = frames[0].position, frames[1].position
    top = min(cyl, cyr)
    if not top > 0:
        raise ConstraintUnsatisfied("contacts do not lie above the palm")
    inner_span = face_separation(lp, rp, 0.0)
    mid_depth, mid_span = None, -math.inf
    for y in np.linspace(0.0, top, sweep + 2)[1:-1]:
        sep = face_separation(lp, rp, float(y))
        if sep is not None and sep > mid_span:
            mid_depth, mid_span = float(y), sep
    line_span = cxr - cxl
    line_depth = (cyl + cyr) / 2
    if inner_span is None or mid_depth is None or min(inner_span, mid_span, line_span) < 0:
        raise ConstraintUnsatisfied("fingers cross; no enclosed region")
    diameter = min(inner_span, mid_span, line_span, line_depth)
    if not power_valid(frames, diameter / 2):
        raise ConstraintUnsatisfied(
            "configuration is not a valid power grasp: contacts must lie beyond the "
            "object center with distal faces at >= 80 deg to the span line"
        )
    return (
        CylindricalSection(SectionLine.INNER, inner_span, 0.0),
        CylindricalSection(SectionLine.MID, mid_span, mid_depth),
        CylindricalSection(SectionLine.SPAN_LINE, line_span, line_depth),
    )


# --------------------------------------------------------------------------
# cross-checking


def compare_profiles(derived: SpanDepthCurve, measured: SpanDepthCurve, tolerance: float) -> CurveComparison:
    lo = max(derived.min_span, measured.min_span)
    hi = min(derived.max_span, measured.max_span)
    if lo > hi:
        raise DisjointSpanRanges(
            f"derived [{derived.min_span}, {derived.max_span}] and measured "
            f"[{measured.min_span}, {measured.max_span}] do not overlap"
        )
    err = 0.0
    for span, depth in measured.points:
        if lo <= span <= hi:
            err = max(err, abs(depth - interpolate_depth(derived, span)))
    mismatch = max(abs(derived.min_span - measured.min_span), abs(derived.max_span - measured.max_span))
    return CurveComparison(err, mismatch, err <= tolerance and mismatch <= tolerance)

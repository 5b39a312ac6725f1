"""Measurement data model for hand workspace profiles.

All lengths are millimeters. The hand frame has three axes: *span* runs
between the opposing fingers, *depth* points out of the palm, and *width*
runs along the height of the reference cylinder.

Constructors are deliberately lenient: they canonicalize ordering but do not
reject protocol violations. ``validate_profile`` reports those as data.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Optional

UNITS = "mm"


class PoseKind(enum.IntEnum):
    OPEN = 0
    INTERMEDIATE = 1
    CLOSED = 2


@dataclass(frozen=True, order=True)
class Pose:
    """Actuation pose label; sorts Open, Intermediate(1..n), Closed."""

    kind: PoseKind
    index: int = 0

    _TEXT = re.compile(r"^(open|closed|intermediate-([1-9][0-9]*))$")

    @classmethod
    def open(cls) -> "Pose":
        return cls(PoseKind.OPEN)

    @classmethod
    def closed(cls) -> "Pose":
        return cls(PoseKind.CLOSED)

    @classmethod
    def intermediate(cls, index: int) -> "Pose":
        return cls(PoseKind.INTERMEDIATE, index)

    @classmethod
    def parse(cls, text: str) -> "Pose":
        match = cls._TEXT.match(text)
        if match is None:
            raise ValueError(
                f"bad pose label {text!r}; expected 'open', 'closed' or 'intermediate-N'"
            )
        if match.group(2):
            return cls.intermediate(int(match.group(2)))
        return cls.open() if match.group(1) == "open" else cls.closed()

    def __str__(self) -> str:
        if self.kind is PoseKind.INTERMEDIATE:
            return f"intermediate-{self.index}"
        return self.kind.name.lower()


class ContactChoice(enum.Enum):
    DISTAL_MIDPOINT = "distal_midpoint"
    FINGERTIP = "fingertip"


class SectionLine(enum.IntEnum):
    INNER = 0
    MID = 1
    SPAN_LINE = 2

    @property
    def label(self) -> str:
        return {0: "inner", 1: "mid", 2: "span_line"}[int(self)]

    @classmethod
    def parse(cls, text: str) -> "SectionLine":
        for line in cls:
            if line.label == text:
                return line
        raise ValueError(f"bad section line {text!r}; expected inner, mid or span_line")


class Method(enum.Enum):
    PHYSICAL = "physical"
    CAD_MODEL = "cad_model"


class Shape(enum.Enum):
    CYLINDER = "cylinder"
    SPHERE = "sphere"
    BOX = "box"


@dataclass(frozen=True)
class WidthRange:
    """Minimum and maximum width.

    ``object_height_unbounded`` records the ``+`` suffix on the maximum width:
    the hand does not limit object height, although ``max_width`` still holds
    the measured height of the hand.
    """

    min_width: float
    max_width: float
    object_height_unbounded: bool = False


@dataclass(frozen=True)
class PoseSample:
    pose: Pose
    span: float
    depth: float


def _pose_key(item) -> tuple:
    return (item.pose, repr(item))


@dataclass(frozen=True)
class PrecisionSet:
    contact_choice: ContactChoice
    samples: tuple[PoseSample, ...]

    def __post_init__(self):
        # canonical order is by pose label, so any permutation of the same
        # samples builds an equal set
        object.__setattr__(self, "samples", tuple(sorted(self.samples, key=_pose_key)))

    def sample(self, pose: Pose) -> Optional[PoseSample]:
        for s in self.samples:
            if s.pose == pose:
                return s
        return None


@dataclass(frozen=True)
class CylindricalSection:
    line: SectionLine
    span: float
    depth: float


@dataclass(frozen=True)
class CylindricalPose:
    pose: Pose
    sections: tuple[CylindricalSection, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "sections", tuple(sorted(self.sections, key=lambda s: (s.line, repr(s))))
        )

    def section(self, line: SectionLine) -> Optional[CylindricalSection]:
        for s in self.sections:
            if s.line == line:
                return s
        return None


@dataclass(frozen=True)
class PowerCylindricalSet:
    poses: tuple[CylindricalPose, ...]

    def __post_init__(self):
        object.__setattr__(self, "poses", tuple(sorted(self.poses, key=_pose_key)))


@dataclass(frozen=True)
class SphericalSection:
    base_diameter: float
    widest_diameter: float
    distal_diameter: float


@dataclass(frozen=True)
class SphericalPose:
    pose: Pose
    section: SphericalSection


@dataclass(frozen=True)
class PowerSphericalSet:
    poses: tuple[SphericalPose, ...]

    def __post_init__(self):
        object.__setattr__(self, "poses", tuple(sorted(self.poses, key=_pose_key)))


@dataclass(frozen=True)
class Provenance:
    measurer: str = ""
    method: Method = Method.PHYSICAL
    photo_refs: tuple[str, ...] = ()


@dataclass(frozen=True)
class HandProfile:
    name: str
    configuration: str
    absolute_max_span: float
    width: WidthRange
    precision: Optional[PrecisionSet] = None
    power_cylindrical: Optional[PowerCylindricalSet] = None
    power_spherical: Optional[PowerSphericalSet] = None
    provenance: Provenance = field(default_factory=Provenance)
    units: str = UNITS


@dataclass(frozen=True)
class ObjectSpec:
    name: str
    shape: Shape
    grasp_diameter: float
    height: float
    id: Optional[str] = None


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Issue:
    severity: Severity
    code: str
    message: str
    path: str

    def __str__(self) -> str:
        return f"{self.severity.value}: {self.code} at {self.path}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...] = ()

    @property
    def errors(self) -> list[Issue]:
        return [i for i in self.issues if i.severity is Severity.ERROR]

    @property
    def warnings(self) -> list[Issue]:
        return [i for i in self.issues if i.severity is Severity.WARNING]

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> list[str]:
        return [i.code for i in self.issues]


class _Collector:
    def __init__(self):
        self.issues: list[Issue] = []

    def error(self, code, path, message):
        self.issues.append(Issue(Severity.ERROR, code, message, path))

    def warn(self, code, path, message):
        self.issues.append(Issue(Severity.WARNING, code, message, path))

    def nonneg(self, value, path):
        if not value >= 0:
            self.error("NEGATIVE_LENGTH", path, f"length must be >= 0, got {value}")


def _check_labels(out: _Collector, poses: list[Pose], path: str) -> None:
    if len(poses) < 3:
        out.error(
            "MIN_THREE_POSES",
            path,
            f"need at least 3 poses (open, closed, one intermediate), got {len(poses)}",
        )
    seen = set()
    for i, pose in enumerate(poses):
        if pose in seen:
            out.error("DUPLICATE_POSE", f"{path}[{i}]", f"pose {pose} recorded twice")
        seen.add(pose)
    kinds = [p.kind for p in poses]
    if poses and PoseKind.OPEN not in kinds:
        out.error("MISSING_OPEN_POSE", path, "no open (maximum span) pose")
    if poses and PoseKind.CLOSED not in kinds:
        out.error("MISSING_CLOSED_POSE", path, "no closed (minimum span) pose")
    if len(poses) >= 3 and PoseKind.INTERMEDIATE not in kinds:
        out.error("MISSING_INTERMEDIATE_POSE", path, "no intermediate pose")


def _check_decreasing(out: _Collector, values: list[float], path: str, what: str) -> None:
    for i in range(1, len(values)):
        a, b = values[i - 1], values[i]
        if a == b:
            out.error(
                "SPAN_TIE",
                f"{path}[{i}]",
                f"{what} {b} equals the previous pose; poses must differ strictly",
            )
        elif a < b:
            out.error(
                "SPAN_NOT_DECREASING",
                f"{path}[{i}]",
                f"{what} {b} exceeds previous pose's {a}; open to closed must decrease",
            )


def _validate_precision(out: _Collector, pset: PrecisionSet) -> None:
    path = "precision.samples"
    _check_labels(out, [s.pose for s in pset.samples], path)
    for i, s in enumerate(pset.samples):
        out.nonneg(s.span, f"{path}[{i}].span")
        out.nonneg(s.depth, f"{path}[{i}].depth")
    _check_decreasing(out, [s.span for s in pset.samples], path, "span")


def _validate_cylindrical(out: _Collector, cset: PowerCylindricalSet) -> None:
    path = "power_cylindrical.poses"
    _check_labels(out, [p.pose for p in cset.poses], path)
    span_line = []
    for i, pose in enumerate(cset.poses):
        ppath = f"{path}[{i}].sections"
        lines = [s.line for s in pose.sections]
        if sorted(lines) != list(SectionLine):
            out.error(
                "SECTION_LINES",
                ppath,
                "need exactly one inner, one mid and one span_line section",
            )
        for j, s in enumerate(pose.sections):
            out.nonneg(s.span, f"{ppath}[{j}].span")
            out.nonneg(s.depth, f"{ppath}[{j}].depth")
        depths = [s.depth for s in pose.sections]
        if len(set(lines)) == len(lines) and any(
            depths[k] >= depths[k + 1] for k in range(len(depths) - 1)
        ):
            out.error(
                "SECTION_DEPTH_ORDER",
                ppath,
                "section depths must satisfy inner < mid < span_line",
            )
        sl = pose.section(SectionLine.SPAN_LINE)
        if sl is not None:
            span_line.append(sl.span)
    if len(span_line) == len(cset.poses):
        _check_decreasing(out, span_line, path, "span_line span")


def _validate_spherical(out: _Collector, sset: PowerSphericalSet) -> None:
    path = "power_spherical.poses"
    _check_labels(out, [p.pose for p in sset.poses], path)
    for i, pose in enumerate(sset.poses):
        sec = pose.section
        ppath = f"{path}[{i}]"
        for name in ("base_diameter", "widest_diameter", "distal_diameter"):
            out.nonneg(getattr(sec, name), f"{ppath}.{name}")
        if sec.widest_diameter < max(sec.base_diameter, sec.distal_diameter):
            out.warn(
                "WIDEST_NOT_WIDEST",
                ppath,
                "widest_diameter is smaller than the base or distal diameter",
            )
    _check_decreasing(
        out, [p.section.widest_diameter for p in sset.poses], path, "widest_diameter"
    )


def validate_profile(profile: HandProfile) -> ValidationReport:
    """Check every protocol rule and return the findings in a fixed order."""
    out = _Collector()
    if profile.units != UNITS:
        out.error("UNITS", "units", f"only {UNITS!r} is supported, got {profile.units!r}")
    out.nonneg(profile.absolute_max_span, "absolute_max_span")

    w = profile.width
    out.nonneg(w.min_width, "width.min_width")
    out.nonneg(w.max_width, "width.max_width")
    if w.min_width > w.max_width:
        out.error(
            "WIDTH_RANGE",
            "width",
            f"min_width {w.min_width} exceeds max_width {w.max_width}",
        )

    if profile.precision is None and profile.power_cylindrical is None and profile.power_spherical is None:
        out.error("NO_GRASP_SET", "", "profile records no precision or power grasp set")

    if profile.precision is not None:
        _validate_precision(out, profile.precision)
        for i, s in enumerate(profile.precision.samples):
            if s.span > profile.absolute_max_span:
                out.error(
                    "ABS_SPAN_LT_GRASP_SPAN",
                    f"precision.samples[{i}].span",
                    f"absolute_max_span {profile.absolute_max_span} is below "
                    f"the {s.pose} precision span {s.span}",
                )
    if profile.power_cylindrical is not None:
        _validate_cylindrical(out, profile.power_cylindrical)
    if profile.power_spherical is not None:
        _validate_spherical(out, profile.power_spherical)
    return ValidationReport(tuple(out.issues))

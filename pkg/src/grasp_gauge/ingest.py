"""Reading and writing hand profiles, object sets and planar hand models.

Documents are JSON with a top-level ``"schema_version": 1``. Lengths are
stored at 0.01 mm resolution and written with two fractional digits, so
``parse(serialize(p)) == p`` for any profile already on that grid.

Parsing never raises anything but :class:`ParseError`; every problem found
in a document is collected into its ``diagnostics`` list. Warnings (unknown
fields, duplicate object names) do not stop parsing and are issued through
:mod:`warnings` as :class:`ParseWarning`.
"""

from __future__ import annotations

import enum
import json
import json.decoder
import json.scanner
import math
import warnings
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .model import (
    UNITS,
    ContactChoice,
    CylindricalPose,
    CylindricalSection,
    HandProfile,
    Method,
    ObjectSpec,
    Pose,
    PoseSample,
    PowerCylindricalSet,
    PowerSphericalSet,
    PrecisionSet,
    Provenance,
    SectionLine,
    Shape,
    SphericalPose,
    SphericalSection,
    WidthRange,
)

SCHEMA_VERSION = 1
RESOLUTION_DIGITS = 2


class DiagnosticKind(enum.Enum):
    SYNTAX_ERROR = "SyntaxError"
    UNKNOWN_FIELD = "UnknownField"
    TYPE_MISMATCH = "TypeMismatch"
    MISSING_FIELD = "MissingField"
    UNIT_ERROR = "UnitError"
    DUPLICATE_NAME = "DuplicateName"


_WARNING_KINDS = {DiagnosticKind.UNKNOWN_FIELD, DiagnosticKind.DUPLICATE_NAME}


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    kind: DiagnosticKind
    message: str

    @property
    def is_warning(self) -> bool:
        return self.kind in _WARNING_KINDS

    def __str__(self) -> str:
        level = "warning" if self.is_warning else "error"
        return f"{self.line}:{self.column}: {level}: {self.kind.value}: {self.message}"


class ParseError(ValueError):
    def __init__(self, diagnostics: list[ParseDiagnostic]):
        self.diagnostics = diagnostics
        super().__init__("\n".join(str(d) for d in diagnostics))


class ParseWarning(UserWarning):
    def __init__(self, diagnostic: ParseDiagnostic):
        self.diagnostic = diagnostic
        super().__init__(str(diagnostic))


# --------------------------------------------------------------------------
# position-tracking JSON decoding


@dataclass
class _Node:
    value: Any  # dict[str, _Node] | list[_Node] | scalar
    pos: int


class _DuplicateKey(Exception):
    pass


def _pairs(pairs):
    out = {}
    for key, node in pairs:
        if key in out:
            raise _DuplicateKey(key, node.pos)
        out[key] = node
    return out


def _located(scan_once):
    def scan(string, idx):
        value, end = scan_once(string, idx)
        return _Node(value, idx), end

    return scan


class _LocatingDecoder(json.JSONDecoder):
    """JSON decoder whose containers hold ``_Node`` values with source offsets."""

    def __init__(self):
        super().__init__(object_pairs_hook=_pairs)

        def parse_object(s_and_end, strict, scan_once, object_hook, pairs_hook, memo):
            return json.decoder.JSONObject(
                s_and_end, strict, _located(scan_once), object_hook, pairs_hook, memo
            )

        def parse_array(s_and_end, scan_once):
            return json.decoder.JSONArray(s_and_end, _located(scan_once))

        self.parse_object = parse_object
        self.parse_array = parse_array
        self.scan_once = json.scanner.py_make_scanner(self)


def _line_col(text: str, pos: int) -> tuple[int, int]:
    pos = max(0, min(pos, len(text)))
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Reader:
    """Walks a decoded node tree, building values and collecting diagnostics."""

    def __init__(self, text: str):
        self.text = text
        self.diagnostics: list[ParseDiagnostic] = []

    def report(self, node_or_pos, kind: DiagnosticKind, message: str) -> None:
        pos = node_or_pos.pos if isinstance(node_or_pos, _Node) else node_or_pos
        line, col = _line_col(self.text, pos)
        self.diagnostics.append(ParseDiagnostic(line, col, kind, message))

    @property
    def failed(self) -> bool:
        return any(not d.is_warning for d in self.diagnostics)

    def decode(self) -> Optional[_Node]:
        text = self.text
        start = json.decoder.WHITESPACE.match(text, 0).end()
        try:
            value, end = _LocatingDecoder().scan_once(text, start)
        except StopIteration as exc:
            self.report(exc.value, DiagnosticKind.SYNTAX_ERROR, "expecting a JSON value")
            return None
        except json.JSONDecodeError as exc:
            self.report(exc.pos, DiagnosticKind.SYNTAX_ERROR, exc.msg)
            return None
        except _DuplicateKey as exc:
            key, pos = exc.args
            self.report(pos, DiagnosticKind.SYNTAX_ERROR, f"duplicate key {key!r}")
            return None
        except RecursionError:
            self.report(start, DiagnosticKind.SYNTAX_ERROR, "document nested too deeply")
            return None
        except ValueError as exc:
            # e.g. integer literals beyond the int conversion limit
            self.report(start, DiagnosticKind.SYNTAX_ERROR, str(exc))
            return None
        end = json.decoder.WHITESPACE.match(text, end).end()
        if end != len(text):
            self.report(end, DiagnosticKind.SYNTAX_ERROR, "extra data after document")
            return None
        return _Node(value, start)

    # field helpers; each returns None after reporting a problem

    def obj(self, node: _Node, where: str, fields: dict[str, bool]) -> Optional[dict]:
        """Check ``node`` is an object; ``fields`` maps allowed names to required-ness."""
        if not isinstance(node.value, dict):
            self.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where} must be an object")
            return None
        members = node.value
        for key, child in members.items():
            if key not in fields:
                self.report(
                    child, DiagnosticKind.UNKNOWN_FIELD, f"unknown field {where}.{key} ignored"
                )
        for key, required in fields.items():
            if required and key not in members:
                self.report(
                    node, DiagnosticKind.MISSING_FIELD, f"{where} is missing field {key!r}"
                )
        return {k: v for k, v in members.items() if k in fields}

    def array(self, node: _Node, where: str) -> Optional[list]:
        if not isinstance(node.value, list):
            self.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where} must be an array")
            return None
        return node.value

    def number(self, node: _Node, where: str) -> Optional[float]:
        v = node.value
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            self.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where} must be a number")
            return None
        try:
            v = float(v)
        except OverflowError:
            v = math.inf
        if not math.isfinite(v):
            self.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where} must be finite")
            return None
        return v

    def length(self, node: _Node, where: str, positive: bool = False) -> Optional[float]:
        v = self.number(node, where)
        if v is None:
            return None
        if v < 0 or (positive and v == 0):
            bound = "> 0" if positive else ">= 0"
            self.report(
                node, DiagnosticKind.TYPE_MISMATCH, f"{where} must be a length {bound} mm, got {v:g}"
            )
            return None
        return round(v, RESOLUTION_DIGITS) + 0.0

    def text_value(self, node: _Node, where: str) -> Optional[str]:
        if not isinstance(node.value, str):
            self.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where} must be a string")
            return None
        return node.value

    def boolean(self, node: _Node, where: str) -> Optional[bool]:
        if not isinstance(node.value, bool):
            self.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where} must be true or false")
            return None
        return node.value

    def choice(self, node: _Node, where: str, convert: Callable[[str], Any]):
        s = self.text_value(node, where)
        if s is None:
            return None
        try:
            return convert(s)
        except ValueError as exc:
            self.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where}: {exc}")
            return None

    def schema_version(self, members: dict) -> None:
        node = members.get("schema_version")
        if node is None:
            return
        if isinstance(node.value, bool) or node.value != SCHEMA_VERSION:
            self.report(
                node,
                DiagnosticKind.TYPE_MISMATCH,
                f"unsupported schema_version {node.value!r}; expected {SCHEMA_VERSION}",
            )


def _enum_by_value(cls):
    def convert(s):
        try:
            return cls(s)
        except ValueError:
            allowed = ", ".join(m.value for m in cls)
            raise ValueError(f"{s!r} is not one of {allowed}") from None

    return convert


def _decode_text(data) -> tuple[Optional[str], Optional[ParseDiagnostic]]:
    if isinstance(data, str):
        return data, None
    try:
        return bytes(data).decode("utf-8"), None
    except UnicodeDecodeError as exc:
        prefix = bytes(data)[: exc.start].decode("utf-8", errors="replace")
        line, col = _line_col(prefix, len(prefix))
        return None, ParseDiagnostic(
            line, col, DiagnosticKind.SYNTAX_ERROR, f"invalid UTF-8 at byte {exc.start}"
        )


def _finish(reader: _Reader, value):
    if reader.failed or value is None:
        if not reader.failed:
            reader.report(0, DiagnosticKind.SYNTAX_ERROR, "document could not be read")
        raise ParseError(reader.diagnostics)
    for d in reader.diagnostics:
        warnings.warn(ParseWarning(d), stacklevel=3)
    return value


# --------------------------------------------------------------------------
# hand profiles

_PROFILE_FIELDS = {
    "schema_version": False,
    "name": True,
    "configuration": False,
    "units": False,
    "absolute_max_span": True,
    "width": True,
    "precision": False,
    "power_cylindrical": False,
    "power_spherical": False,
    "provenance": False,
}


def _read_pose(r: _Reader, node: _Node, where: str) -> Optional[Pose]:
    return r.choice(node, where, Pose.parse)


def _read_width(r: _Reader, node: _Node) -> Optional[WidthRange]:
    m = r.obj(node, "width", {"min_width": True, "max_width": True, "object_height_unbounded": False})
    if m is None:
        return None
    lo = r.length(m["min_width"], "width.min_width") if "min_width" in m else None
    hi = r.length(m["max_width"], "width.max_width") if "max_width" in m else None
    unbounded = False
    if "object_height_unbounded" in m:
        unbounded = r.boolean(m["object_height_unbounded"], "width.object_height_unbounded")
    if lo is None or hi is None or unbounded is None:
        return None
    return WidthRange(lo, hi, unbounded)


def _read_precision(r: _Reader, node: _Node) -> Optional[PrecisionSet]:
    m = r.obj(node, "precision", {"contact_choice": True, "samples": True})
    if m is None:
        return None
    choice = None
    if "contact_choice" in m:
        choice = r.choice(m["contact_choice"], "precision.contact_choice", _enum_by_value(ContactChoice))
    samples = []
    items = r.array(m["samples"], "precision.samples") if "samples" in m else None
    ok = choice is not None and items is not None
    for i, item in enumerate(items or []):
        where = f"precision.samples[{i}]"
        s = r.obj(item, where, {"pose": True, "span": True, "depth": True})
        if s is None or len(s) < 3:
            ok = False
            continue
        pose = _read_pose(r, s["pose"], f"{where}.pose")
        span = r.length(s["span"], f"{where}.span")
        depth = r.length(s["depth"], f"{where}.depth")
        if pose is None or span is None or depth is None:
            ok = False
            continue
        samples.append(PoseSample(pose, span, depth))
    return PrecisionSet(choice, tuple(samples)) if ok else None


def _read_cylindrical(r: _Reader, node: _Node) -> Optional[PowerCylindricalSet]:
    m = r.obj(node, "power_cylindrical", {"poses": True})
    if m is None or "poses" not in m:
        return None
    items = r.array(m["poses"], "power_cylindrical.poses")
    if items is None:
        return None
    ok = True
    poses = []
    for i, item in enumerate(items):
        where = f"power_cylindrical.poses[{i}]"
        p = r.obj(item, where, {"pose": True, "sections": True})
        if p is None or len(p) < 2:
            ok = False
            continue
        pose = _read_pose(r, p["pose"], f"{where}.pose")
        secs = r.array(p["sections"], f"{where}.sections")
        if pose is None or secs is None:
            ok = False
            continue
        sections = []
        for j, sec_node in enumerate(secs):
            swhere = f"{where}.sections[{j}]"
            s = r.obj(sec_node, swhere, {"line": True, "span": True, "depth": True})
            if s is None or len(s) < 3:
                ok = False
                continue
            line = r.choice(s["line"], f"{swhere}.line", SectionLine.parse)
            span = r.length(s["span"], f"{swhere}.span")
            depth = r.length(s["depth"], f"{swhere}.depth")
            if line is None or span is None or depth is None:
                ok = False
                continue
            sections.append(CylindricalSection(line, span, depth))
        poses.append(CylindricalPose(pose, tuple(sections)))
    return PowerCylindricalSet(tuple(poses)) if ok else None


_SPHERE_FIELDS = ("base_diameter", "widest_diameter", "distal_diameter")


def _read_spherical(r: _Reader, node: _Node) -> Optional[PowerSphericalSet]:
    m = r.obj(node, "power_spherical", {"poses": True})
    if m is None or "poses" not in m:
        return None
    items = r.array(m["poses"], "power_spherical.poses")
    if items is None:
        return None
    ok = True
    poses = []
    for i, item in enumerate(items):
        where = f"power_spherical.poses[{i}]"
        p = r.obj(item, where, dict.fromkeys(("pose",) + _SPHERE_FIELDS, True))
        if p is None or len(p) < 4:
            ok = False
            continue
        pose = _read_pose(r, p["pose"], f"{where}.pose")
        values = [r.length(p[k], f"{where}.{k}") for k in _SPHERE_FIELDS]
        if pose is None or None in values:
            ok = False
            continue
        poses.append(SphericalPose(pose, SphericalSection(*values)))
    return PowerSphericalSet(tuple(poses)) if ok else None


def _read_provenance(r: _Reader, node: _Node) -> Optional[Provenance]:
    m = r.obj(node, "provenance", {"measurer": False, "method": False, "photo_refs": False})
    if m is None:
        return None
    measurer, method, refs = "", Method.PHYSICAL, ()
    ok = True
    if "measurer" in m:
        measurer = r.text_value(m["measurer"], "provenance.measurer")
        ok &= measurer is not None
    if "method" in m:
        method = r.choice(m["method"], "provenance.method", _enum_by_value(Method))
        ok &= method is not None
    if "photo_refs" in m:
        items = r.array(m["photo_refs"], "provenance.photo_refs")
        if items is None:
            return None
        texts = [r.text_value(n, f"provenance.photo_refs[{i}]") for i, n in enumerate(items)]
        ok &= None not in texts
        refs = tuple(texts)
    return Provenance(measurer, method, refs) if ok else None


def _read_profile(r: _Reader, root: _Node) -> Optional[HandProfile]:
    m = r.obj(root, "profile", _PROFILE_FIELDS)
    if m is None:
        return None
    r.schema_version(m)
    fields: dict[str, Any] = {}
    if "name" in m:
        fields["name"] = r.text_value(m["name"], "name")
    fields["configuration"] = ""
    if "configuration" in m:
        fields["configuration"] = r.text_value(m["configuration"], "configuration")
    if "units" in m:
        units = r.text_value(m["units"], "units")
        if units is not None and units != UNITS:
            r.report(
                m["units"], DiagnosticKind.UNIT_ERROR, f"units must be {UNITS!r}, got {units!r}"
            )
    if "absolute_max_span" in m:
        fields["absolute_max_span"] = r.length(m["absolute_max_span"], "absolute_max_span")
    if "width" in m:
        fields["width"] = _read_width(r, m["width"])
    readers = {
        "precision": _read_precision,
        "power_cylindrical": _read_cylindrical,
        "power_spherical": _read_spherical,
        "provenance": _read_provenance,
    }
    for key, read in readers.items():
        if key in m:
            node = m[key]
            if node.value is None and key != "provenance":
                continue
            fields[key] = read(r, node)
    if r.failed:
        return None
    return HandProfile(**fields)


def parse_hand_profile(data) -> HandProfile:
    """Parse a hand profile document (bytes or str).

    The returned profile is *not* checked against the measurement protocol;
    run :func:`grasp_gauge.model.validate_profile` for that. Raises
    :class:`ParseError` listing every problem found.
    """
    text, bad = _decode_text(data)
    if bad is not None:
        raise ParseError([bad])
    reader = _Reader(text)
    root = reader.decode()
    profile = _read_profile(reader, root) if root is not None else None
    return _finish(reader, profile)


# --------------------------------------------------------------------------
# object sets


def parse_object_set(data) -> list[ObjectSpec]:
    """Parse an object set document; an empty or blank input is an empty set."""
    text, bad = _decode_text(data)
    if bad is not None:
        raise ParseError([bad])
    if not text.strip():
        return []
    r = _Reader(text)
    root = r.decode()
    if root is None:
        raise ParseError(r.diagnostics)
    m = r.obj(root, "object set", {"schema_version": False, "objects": True})
    objects: list[ObjectSpec] = []
    if m is not None:
        r.schema_version(m)
        items = r.array(m["objects"], "objects") if "objects" in m else None
        seen: set[str] = set()
        for i, item in enumerate(items or []):
            where = f"objects[{i}]"
            o = r.obj(
                item,
                where,
                {"name": True, "id": False, "shape": True, "grasp_diameter": True, "height": True},
            )
            if o is None or not {"name", "shape", "grasp_diameter", "height"} <= o.keys():
                continue
            name = r.text_value(o["name"], f"{where}.name")
            oid = None
            if "id" in o and o["id"].value is not None:
                oid = r.text_value(o["id"], f"{where}.id")
                if oid is None:
                    continue
            shape = r.choice(o["shape"], f"{where}.shape", _enum_by_value(Shape))
            diameter = r.length(o["grasp_diameter"], f"{where}.grasp_diameter", positive=True)
            height = r.length(o["height"], f"{where}.height", positive=True)
            if None in (name, shape, diameter, height):
                continue
            if name in seen:
                r.report(
                    o["name"], DiagnosticKind.DUPLICATE_NAME, f"object name {name!r} repeats; both kept"
                )
            seen.add(name)
            objects.append(ObjectSpec(name, shape, diameter, height, oid))
    return _finish(r, objects)


# --------------------------------------------------------------------------
# canonical output


def _num(x: float) -> str:
    return f"{x:.{RESOLUTION_DIGITS}f}"


def _emit(value, indent: int = 0) -> str:
    """Render nested dict/list data; floats use fixed two-digit formatting."""
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        body = ",\n".join(f"{pad}{json.dumps(k)}: {_emit(v, indent + 1)}" for k, v in value.items())
        return "{\n" + body + "\n" + "  " * indent + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        body = ",\n".join(pad + _emit(v, indent + 1) for v in value)
        return "[\n" + body + "\n" + "  " * indent + "]"
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, int):
        return str(value)
    return _num(value)


def profile_to_dict(profile: HandProfile) -> dict:
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "name": profile.name,
        "configuration": profile.configuration,
        "units": profile.units,
        "absolute_max_span": float(profile.absolute_max_span),
        "width": {
            "min_width": float(profile.width.min_width),
            "max_width": float(profile.width.max_width),
            "object_height_unbounded": profile.width.object_height_unbounded,
        },
    }
    if profile.precision is not None:
        doc["precision"] = {
            "contact_choice": profile.precision.contact_choice.value,
            "samples": [
                {"pose": str(s.pose), "span": float(s.span), "depth": float(s.depth)}
                for s in profile.precision.samples
            ],
        }
    if profile.power_cylindrical is not None:
        doc["power_cylindrical"] = {
            "poses": [
                {
                    "pose": str(p.pose),
                    "sections": [
                        {"line": s.line.label, "span": float(s.span), "depth": float(s.depth)}
                        for s in p.sections
                    ],
                }
                for p in profile.power_cylindrical.poses
            ]
        }
    if profile.power_spherical is not None:
        doc["power_spherical"] = {
            "poses": [
                {
                    "pose": str(p.pose),
                    "base_diameter": float(p.section.base_diameter),
                    "widest_diameter": float(p.section.widest_diameter),
                    "distal_diameter": float(p.section.distal_diameter),
                }
                for p in profile.power_spherical.poses
            ]
        }
    doc["provenance"] = {
        "measurer": profile.provenance.measurer,
        "method": profile.provenance.method.value,
        "photo_refs": list(profile.provenance.photo_refs),
    }
    return doc


def serialize_hand_profile(profile: HandProfile) -> bytes:
    return (_emit(profile_to_dict(profile)) + "\n").encode("utf-8")


def serialize_object_set(objects: list[ObjectSpec]) -> bytes:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "objects": [
            {
                "name": o.name,
                "id": o.id,
                "shape": o.shape.value,
                "grasp_diameter": float(o.grasp_diameter),
                "height": float(o.height),
            }
            for o in objects
        ],
    }
    return (_emit(doc) + "\n").encode("utf-8")


# --------------------------------------------------------------------------
# planar hand models


def _read_interval(r: _Reader, node: _Node, where: str) -> Optional[tuple[float, float]]:
    items = r.array(node, where)
    if items is None:
        return None
    if len(items) != 2:
        r.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where} must be [low, high]")
        return None
    lo, hi = (r.number(n, f"{where}[{i}]") for i, n in enumerate(items))
    if lo is None or hi is None:
        return None
    if lo > hi:
        r.report(node, DiagnosticKind.TYPE_MISMATCH, f"{where} interval [{lo:g}, {hi:g}] is empty")
        return None
    return lo, hi


def _read_finger(r: _Reader, node: _Node, where: str):
    from .kinematics import FingerSpec

    m = r.obj(
        node,
        where,
        {"L1": True, "L2": True, "theta1_limits": True, "theta2_limits": True, "base_travel": False},
    )
    if m is None or not {"L1", "L2", "theta1_limits", "theta2_limits"} <= m.keys():
        return None
    l1 = r.length(m["L1"], f"{where}.L1", positive=True)
    l2 = r.length(m["L2"], f"{where}.L2", positive=True)
    t1 = _read_interval(r, m["theta1_limits"], f"{where}.theta1_limits")
    t2 = _read_interval(r, m["theta2_limits"], f"{where}.theta2_limits")
    travel = (0.0, 0.0)
    if "base_travel" in m:
        travel = _read_interval(r, m["base_travel"], f"{where}.base_travel")
    if None in (l1, l2, t1, t2, travel):
        return None
    return FingerSpec(l1, l2, t1, t2, travel)


def parse_hand_model(data):
    """Parse a planar hand model document into a ``PlanarHandModel``."""
    from .kinematics import PlanarHandModel

    text, bad = _decode_text(data)
    if bad is not None:
        raise ParseError([bad])
    r = _Reader(text)
    root = r.decode()
    if root is None:
        raise ParseError(r.diagnostics)
    m = r.obj(
        root,
        "model",
        {
            "schema_version": False,
            "name": False,
            "units": False,
            "bases": True,
            "fingers": True,
            "contact_choice": True,
            "width": False,
        },
    )
    model = None
    if m is not None:
        r.schema_version(m)
        name = r.text_value(m["name"], "name") if "name" in m else "planar-hand"
        if "units" in m:
            units = r.text_value(m["units"], "units")
            if units is not None and units != UNITS:
                r.report(m["units"], DiagnosticKind.UNIT_ERROR, f"units must be {UNITS!r}, got {units!r}")
        bases = fingers = choice = None
        if "bases" in m:
            b = r.obj(m["bases"], "bases", {"left": True, "right": True})
            if b is not None and len(b) == 2:
                bases = (r.number(b["left"], "bases.left"), r.number(b["right"], "bases.right"))
                if None in bases:
                    bases = None
                elif not bases[0] < bases[1]:
                    r.report(m["bases"], DiagnosticKind.TYPE_MISMATCH, "bases.left must be less than bases.right")
                    bases = None
        if "fingers" in m:
            f = r.obj(m["fingers"], "fingers", {"left": True, "right": True})
            if f is not None and len(f) == 2:
                fingers = (_read_finger(r, f["left"], "fingers.left"), _read_finger(r, f["right"], "fingers.right"))
        if "contact_choice" in m:
            choice = r.choice(m["contact_choice"], "contact_choice", _enum_by_value(ContactChoice))
        width = WidthRange(0.0, 0.0, True)
        if "width" in m:
            width = _read_width(r, m["width"])
        if not r.failed and None not in (name, bases, choice, width) and fingers and None not in fingers:
            model = PlanarHandModel(bases[0], bases[1], fingers[0], fingers[1], choice, name, width)
    return _finish(r, model)


def serialize_hand_model(model) -> bytes:
    def finger(f):
        return {
            "L1": float(f.proximal_length),
            "L2": float(f.distal_length),
            "theta1_limits": [float(v) for v in f.theta1_limits],
            "theta2_limits": [float(v) for v in f.theta2_limits],
            "base_travel": [float(v) for v in f.base_travel],
        }

    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": model.name,
        "units": UNITS,
        "bases": {"left": float(model.left_base_x), "right": float(model.right_base_x)},
        "fingers": {"left": finger(model.left), "right": finger(model.right)},
        "contact_choice": model.contact_choice.value,
        "width": {
            "min_width": float(model.width.min_width),
            "max_width": float(model.width.max_width),
            "object_height_unbounded": model.width.object_height_unbounded,
        },
    }
    return (_emit(doc) + "\n").encode("utf-8")

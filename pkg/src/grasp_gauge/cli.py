"""grasp-gauge command line interface.

Exit status: 0 success, 1 invalid input (parse, validation or search
failure), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings

from . import __version__
from .errors import GraspGaugeError, NoValidConfiguration
from .ingest import (
    ParseError,
    ParseWarning,
    parse_hand_model,
    parse_hand_profile,
    parse_object_set,
    serialize_hand_profile,
)
from .kinematics import DEFAULT_GRID_STEP, derive_profile
from .model import validate_profile
from .render import RenderSpec, format_csv, format_table, render_svg
from .sizing import SizeClass, classify_object, span_range
from .workspace import build_precision_curve, graspable_area

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2

_CLASS_COLORS = {
    SizeClass.TOO_SMALL.label: "35",
    SizeClass.SMALL.label: "34",
    SizeClass.MEDIUM.label: "32",
    SizeClass.LARGE.label: "33",
    SizeClass.TOO_LARGE.label: "31",
}


class _Invalid(Exception):
    """Input rejected; message already printed."""


class _IOFailure(Exception):
    pass


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _IOFailure(f"{path}: {exc.strerror or exc}") from exc


def _write(path: str, data: bytes) -> None:
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise _IOFailure(f"{path}: {exc.strerror or exc}") from exc


def _parse(path: str, parser):
    data = _read(path)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ParseWarning)
        try:
            value = parser(data)
        except ParseError as exc:
            for d in exc.diagnostics:
                _err(f"{path}:{d}")
            raise _Invalid() from exc
    for w in caught:
        if isinstance(w.message, ParseWarning):
            _err(f"{path}:{w.message.diagnostic}")
    return value


def _load_profile(path: str):
    profile = _parse(path, parse_hand_profile)
    report = validate_profile(profile)
    for issue in report.issues:
        _err(f"{path}: {issue}")
    if not report.ok:
        raise _Invalid()
    return profile


def _use_color(args) -> bool:
    return bool(getattr(args, "color", False)) and not os.environ.get("GRASP_GAUGE_NO_COLOR")


def _emit_table(args, header, rows, colors=None) -> None:
    if args.format == "csv":
        sys.stdout.write(format_csv(header, rows))
    else:
        sys.stdout.write(format_table(header, rows, colors if _use_color(args) else None))


def cmd_validate(args) -> int:
    _load_profile(args.profile)
    return EXIT_OK


def cmd_classify(args) -> int:
    profile = _load_profile(args.profile)
    objects = _parse(args.objects, parse_object_set)
    rows = []
    try:
        for obj in objects:
            c = classify_object(profile, obj)
            rows.append(
                [
                    obj.name,
                    obj.id or "",
                    f"{obj.grasp_diameter:.2f}",
                    f"{c.relative.fraction:.2f}",
                    c.size.label,
                    "yes" if c.height_ok else "no",
                ]
            )
    except GraspGaugeError as exc:
        _err(f"{args.profile}: {exc}")
        return EXIT_INVALID
    header = ["name", "id", "grasp_diameter", "fraction", "size", "height_ok"]
    _emit_table(args, header, rows, _CLASS_COLORS)
    return EXIT_OK


def _power_cyl_series(profile):
    series = []
    for p in profile.power_cylindrical.poses:
        pts = tuple((s.span, s.depth) for s in sorted(p.sections, key=lambda s: s.line))
        series.append((str(p.pose), pts))
    return series


def cmd_plot(args) -> int:
    profile = _load_profile(args.profile)
    if args.grasp == "precision":
        if profile.precision is None:
            _err(f"{args.profile}: profile has no precision measurements")
            return EXIT_INVALID
        curve = build_precision_curve(profile.precision)
        series = [("precision", curve.points)]
        title = f"{profile.name}: precision grasp"
    else:
        if profile.power_cylindrical is None:
            _err(f"{args.profile}: profile has no cylindrical power measurements")
            return EXIT_INVALID
        series = _power_cyl_series(profile)
        title = f"{profile.name}: cylindrical power grasp"
    spec = RenderSpec(tuple(series), title=title, width_px=args.width, height_px=args.height)
    _write(args.out, render_svg(spec).encode("utf-8"))
    return EXIT_OK


def cmd_compare(args) -> int:
    profiles = [_load_profile(p) for p in args.profiles]
    names = [p.name for p in profiles]
    metrics = {"m (mm)": [], "M (mm)": [], "absolute_max_span (mm)": [], "graspable_area (mm^2)": []}
    for p in profiles:
        try:
            m, M = span_range(p)
            metrics["m (mm)"].append(f"{m:.2f}")
            metrics["M (mm)"].append(f"{M:.2f}")
        except GraspGaugeError:
            metrics["m (mm)"].append("-")
            metrics["M (mm)"].append("-")
        metrics["absolute_max_span (mm)"].append(f"{p.absolute_max_span:.2f}")
        area = graspable_area(build_precision_curve(p.precision)) if p.precision else None
        metrics["graspable_area (mm^2)"].append("-" if area is None else f"{area:.2f}")
    rows = [[k] + v for k, v in metrics.items()]
    _emit_table(args, ["metric"] + names, rows)
    if args.objects:
        objects = _parse(args.objects, parse_object_set)
        matrix = []
        for obj in objects:
            row = [obj.name, obj.id or ""]
            for p in profiles:
                try:
                    row.append(classify_object(p, obj).size.label)
                except GraspGaugeError:
                    row.append("-")
            matrix.append(row)
        sys.stdout.write("\n")
        _emit_table(args, ["object", "id"] + names, matrix, _CLASS_COLORS)
    return EXIT_OK


def cmd_derive(args) -> int:
    model = _parse(args.model, parse_hand_model)
    try:
        profile = derive_profile(model, args.poses, args.grid_step)
    except NoValidConfiguration as exc:
        _err(f"{args.model}: {exc}")
        return EXIT_INVALID
    data = serialize_hand_profile(profile)
    if args.out:
        _write(args.out, data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def _positive_int(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _poses(text):
    v = int(text)
    if v < 3:
        raise argparse.ArgumentTypeError("need at least 3 poses")
    return v


def _step(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasp-gauge", description="Hand workspace measurement profiles: validate, classify, plot, derive."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a hand profile against the measurement protocol")
    p.add_argument("profile")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="classify objects by size relative to a hand")
    p.add_argument("profile")
    p.add_argument("objects")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("--color", action="store_true", help="ANSI colors for size classes")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("plot", help="render a span-depth plot as SVG")
    p.add_argument("profile")
    p.add_argument("--grasp", choices=("precision", "power-cyl"), default="precision")
    p.add_argument("--out", required=True)
    p.add_argument("--width", type=_positive_int, default=800)
    p.add_argument("--height", type=_positive_int, default=600)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("compare", help="compare two or more hands")
    p.add_argument("profiles", nargs="+")
    p.add_argument("--objects")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("--color", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("derive", help="derive a precision profile from a planar hand model")
    p.add_argument("model")
    p.add_argument("--poses", type=_poses, default=3)
    p.add_argument("--grid-step", type=_step, default=DEFAULT_GRID_STEP)
    p.add_argument("--out")
    p.set_defaults(func=cmd_derive)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compare" and len(args.profiles) < 2:
        parser.error("compare needs at least two profiles")
    try:
        return args.func(args)
    except _Invalid:
        return EXIT_INVALID
    except _IOFailure as exc:
        _err(f"error: {exc}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

from pathlib import Path

import pytest

from grasp_gauge import (
    ContactChoice,
    HandProfile,
    ObjectSpec,
    Pose,
    PoseSample,
    PrecisionSet,
    Shape,
    WidthRange,
    parse_hand_model,
    parse_hand_profile,
    parse_object_set,
)

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_profile(name: str) -> HandProfile:
    return parse_hand_profile(fixture_path(name).read_bytes())


def load_objects(name: str = "ycb_objects.json"):
    return parse_object_set(fixture_path(name).read_bytes())


def load_model(name: str):
    return parse_hand_model(fixture_path(name).read_bytes())


def precision_profile(spans, depths=None, *, abs_span=None, width=None, name="hand") -> HandProfile:
    """Profile with a precision set whose spans are listed open to closed."""
    depths = depths or [50.0] * len(spans)
    poses = [Pose.open()] + [Pose.intermediate(i) for i in range(1, len(spans) - 1)] + [Pose.closed()]
    samples = tuple(PoseSample(p, float(s), float(d)) for p, s, d in zip(poses, spans, depths))
    return HandProfile(
        name=name,
        configuration="test",
        absolute_max_span=float(abs_span if abs_span is not None else max(spans)),
        width=width or WidthRange(10.0, 60.0, False),
        precision=PrecisionSet(ContactChoice.FINGERTIP, samples),
    )


def cylinder(diameter, height=50.0, name="obj") -> ObjectSpec:
    return ObjectSpec(name, Shape.CYLINDER, diameter, height)


def sphere(diameter, name="ball") -> ObjectSpec:
    return ObjectSpec(name, Shape.SPHERE, diameter, diameter)


@pytest.fixture
def cylindrical_profile():
    return load_profile("model_o_cylindrical.json")


@pytest.fixture
def spherical_profile():
    return load_profile("model_o_spherical.json")


@pytest.fixture
def ycb_objects():
    return load_objects()


@pytest.fixture
def two_link_model():
    return load_model("two_link_model.json")


@pytest.fixture
def parallel_jaw_model():
    return load_model("parallel_jaw_model.json")


# --- acceptance reporting: one PASS/FAIL line per criterion

_ACCEPTANCE: dict[str, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(key, title): acceptance criterion")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("acceptance")
    if marker and (report.when == "call" or report.failed or report.skipped):
        key, title = marker.args
        entry = _ACCEPTANCE.setdefault(key, [title, "PASS", ""])
        if report.failed or report.skipped:
            entry[1] = "FAIL" if report.failed else "SKIP"
            entry[2] = report.head_line or ""
    return report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        title, status, _ = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{key} {status}: {title}")

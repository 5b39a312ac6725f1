import csv
import io
import json
import math
import re

import pytest

from grasp_gauge import parse_hand_profile, relative_size, serialize_hand_profile, serialize_object_set
from grasp_gauge.cli import main

from conftest import cylinder, fixture_path, load_objects, load_profile, precision_profile


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def hand_file(tmp_path):
    path = tmp_path / "hand.json"
    path.write_bytes(serialize_hand_profile(precision_profile([100, 50, 0], [60, 75, 80], abs_span=120)))
    return path


@pytest.fixture
def objects_file(tmp_path):
    path = tmp_path / "objects.json"
    objs = [cylinder(d, name=f"c{d}") for d in (25, 50, 75, 120)]
    path.write_bytes(serialize_object_set(objs))
    return path


def test_validate_exit_codes(capsys, hand_file, tmp_path):
    assert run(capsys, "validate", hand_file)[0] == 0
    code, _, err = run(capsys, "validate", fixture_path("two_samples.json"))
    assert code == 1 and "MIN_THREE_POSES" in err
    code, _, err = run(capsys, "validate", tmp_path / "missing.json")
    assert code == 2 and "missing.json" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": ')
    code, _, err = run(capsys, "validate", bad)
    assert code == 1 and re.search(r"bad\.json:1:\d+: error: SyntaxError", err)


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 2


def test_classify_table(capsys, hand_file, objects_file):
    code, out, _ = run(capsys, "classify", hand_file, objects_file)
    assert code == 0
    sizes = [line.split()[-2] for line in out.splitlines()[2:]]
    assert sizes == ["Small", "Medium", "Large", "TooLarge"]


def test_classify_csv_matches_library(capsys, hand_file, objects_file):
    code, out, _ = run(capsys, "classify", hand_file, objects_file, "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["name", "id", "grasp_diameter", "fraction", "size", "height_ok"]
    profile = parse_hand_profile(hand_file.read_bytes())
    for row in rows:
        f = relative_size(profile, "precision", float(row["grasp_diameter"])).fraction
        assert row["fraction"] == f"{f:.2f}"


def test_classify_csv_quotes_commas(capsys, hand_file, tmp_path):
    path = tmp_path / "o.json"
    path.write_bytes(serialize_object_set([cylinder(30, name="can, soup")]))
    _, out, _ = run(capsys, "classify", hand_file, path, "--format", "csv")
    assert '"can, soup"' in out


def test_classify_color_and_env(capsys, hand_file, objects_file, monkeypatch):
    _, out, _ = run(capsys, "classify", hand_file, objects_file, "--color")
    assert "\x1b[" in out
    monkeypatch.setenv("GRASP_GAUGE_NO_COLOR", "1")
    _, out, _ = run(capsys, "classify", hand_file, objects_file, "--color")
    assert "\x1b[" not in out


def _count(svg, pattern):
    return len(re.findall(pattern, svg))


def test_plot_precision(capsys, tmp_path):
    out = tmp_path / "p.svg"
    src = fixture_path("model_o_cylindrical.json")
    assert run(capsys, "plot", src, "--out", out)[0] == 0
    svg = out.read_text()
    assert _count(svg, "<polyline") == 1
    profile = load_profile("model_o_cylindrical.json")
    max_span = max(s.span for s in profile.precision.samples)
    assert _count(svg, 'class="xtick"') == math.ceil(max_span / 10) + 1
    again = tmp_path / "q.svg"
    run(capsys, "plot", src, "--out", again)
    assert again.read_bytes() == out.read_bytes()


def test_plot_power_cylindrical(capsys, tmp_path):
    out = tmp_path / "c.svg"
    src = fixture_path("model_o_cylindrical.json")
    assert run(capsys, "plot", src, "--grasp", "power-cyl", "--out", out, "--width", 640)[0] == 0
    svg = out.read_text()
    assert _count(svg, "<polyline") == 3
    assert 'width="640"' in svg


def test_plot_missing_grasp_set(capsys, tmp_path):
    code, _, err = run(capsys, "plot", fixture_path("model_o_spherical.json"), "--grasp", "power-cyl", "--out", tmp_path / "x.svg")
    assert code == 1 and "cylindrical" in err


def test_compare(capsys):
    a, b = fixture_path("model_o_cylindrical.json"), fixture_path("model_o_spherical.json")
    code, out, _ = run(capsys, "compare", a, b, "--objects", fixture_path("ycb_objects.json"))
    assert code == 0
    metrics = {line.split()[0]: line.split()[-2:] for line in out.split("\n\n")[0].splitlines()[2:]}
    assert metrics["m"][0] != metrics["m"][1]
    marble = [line for line in out.splitlines() if line.startswith("marble")][0]
    assert marble.split()[-2:] == ["Small", "TooSmall"]


def test_compare_needs_two_profiles(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compare", str(fixture_path("minimal.json"))])
    assert exc.value.code == 2


def test_compare_empty_objects(capsys, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    a, b = fixture_path("minimal.json"), fixture_path("model_o_spherical.json")
    code, out, _ = run(capsys, "compare", a, b, "--objects", empty, "--format", "csv")
    assert code == 0
    matrix = out.replace("\r\n", "\n").split("\n\n")[1]
    rows = list(csv.reader(io.StringIO(matrix)))
    assert rows == [["object", "id", "minimal", "Model O (spherical)"]]


def test_derive_parallel_jaw(capsys, tmp_path):
    out = tmp_path / "jaw.json"
    assert run(capsys, "derive", fixture_path("parallel_jaw_model.json"), "--poses", 5, "--out", out)[0] == 0
    doc = json.loads(out.read_text())
    assert {s["depth"] for s in doc["precision"]["samples"]} == {40.0}
    assert [s["span"] for s in doc["precision"]["samples"]] == [85.0, 63.75, 42.5, 21.25, 0.0]
    assert run(capsys, "validate", out)[0] == 0


def test_derive_stdout_and_infeasible(capsys):
    code, out, _ = run(capsys, "derive", fixture_path("two_link_model.json"), "--grid-step", 2)
    assert code == 0 and json.loads(out)["provenance"]["method"] == "cad_model"
    code, _, err = run(capsys, "derive", fixture_path("infeasible_model.json"))
    assert code == 1 and err
    with pytest.raises(SystemExit):
        main(["derive", str(fixture_path("two_link_model.json")), "--poses", "2"])


def test_classify_objects_fixture(capsys):
    objects = load_objects()
    code, out, _ = run(capsys, "classify", fixture_path("model_o_spherical.json"), fixture_path("ycb_objects.json"))
    assert code == 0
    assert len(out.splitlines()) == len(objects) + 2

import csv
import json
import subprocess
import sys

import pytest

from icosilab.cli import main, render_object
from icosilab.checks import CATALOG
from icosilab.golden import GoldenNum


@pytest.mark.parametrize("obj", ["icosahedron", "icosidodecahedron-midpoint", "icosidodecahedron-slice",
                                 "golden-boxes", "octahedron", "imaginary-minimal", "d6-projection"])
def test_off_objects(tmp_path, obj):
    out = tmp_path / "x.off"
    assert main(["generate", obj, "--format", "off", "--out", str(out)]) == 0
    assert out.read_text().startswith("OFF\n")


def test_slice_off_counts(tmp_path):
    out = tmp_path / "s.off"
    assert main(["generate", "icosidodecahedron-slice", "--format", "off", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[1] == "30 32 60"


@pytest.mark.parametrize("obj", ["600cell", "d6-roots", "e8-roots", "icosian-minimal", "e8-projection"])
def test_off_rejected_for_non_3d(tmp_path, obj):
    assert main(["generate", obj, "--format", "off", "--out", str(tmp_path / "x.off")]) == 2


def test_usage_errors(tmp_path):
    out = str(tmp_path / "x")
    assert main(["generate", "dodecahedron", "--format", "json", "--out", out]) == 2
    assert main(["generate", "icosahedron", "--format", "ply", "--out", out]) == 2
    assert main(["verify", "no-such-check"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["verify", "all", "--convention", "weird"]) == 2


def test_write_failure(tmp_path):
    bad = str(tmp_path / "missing" / "dir" / "x.json")
    assert main(["generate", "icosahedron", "--format", "json", "--out", bad]) == 1


def test_d6_csv_rows(tmp_path):
    out = tmp_path / "d6.csv"
    assert main(["generate", "d6-roots", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == [f"x{i}" for i in range(1, 7)]
    assert len(rows) == 61


def test_e8_json_exact():
    data = json.loads(render_object("e8-roots", "json"))
    assert data["count"] == 240
    halves = [v for v in data["vectors"] if all(d == 2 for _, d in v)]
    assert len(halves) == 128
    assert all(sum(n for n, _ in v) % 4 == 0 for v in halves)


def test_600cell_json_round_trip():
    data = json.loads(render_object("600cell", "json"))
    assert data["count"] == 120
    q = data["quaternions"][0]
    assert all(len(c) == 4 for c in q)
    assert all(GoldenNum.from_tuple(c) is not None for c in q)


def test_float_precision():
    low = render_object("icosahedron", "csv", precision=3)
    high = render_object("icosahedron", "csv", precision=17)
    assert "1.62" in low and "1.6180339887498949" in high


def test_d6_projection_json_shells():
    data = json.loads(render_object("d6-projection", "json"))
    assert [s["count"] for s in data["shells"]] == [30, 30]
    assert data["shells"][0]["radius_sq"] == [4, 1, 0, 1]


def test_e8_projection_csv():
    rows = render_object("e8-projection", "csv").splitlines()
    assert len(rows) == 241


def test_verify_single(capsys):
    assert main(["verify", "group-order"]) == 0
    assert "PASS  group-order" in capsys.readouterr().out


def test_verify_json(capsys):
    assert main(["verify", "t-matrix", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out.strip())
    assert set(rep) == {"check_name", "status", "expected", "actual", "elapsed_ms"}
    assert rep["status"] == "pass" and rep["expected"] == rep["actual"]


def test_verify_verbatim_fails_with_witness(capsys):
    assert main(["verify", "e8-projection-shells", "--convention", "verbatim", "--json"]) == 1
    rep = json.loads(capsys.readouterr().out.strip())
    assert rep["status"] == "fail"
    assert rep["detail"]["witness"]["unscaled_norm_sq"] == "9/2+1/2√5"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "icosilab", "verify", "s-matrix"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "PASS" in res.stdout


def test_catalog_ids_stable():
    assert list(CATALOG) == [
        "group-order", "rotation-image", "slice-30", "icosidodeca-f-vector",
        "midpoint-similarity", "600cell-f-vector", "root-counts", "t-matrix",
        "d6-projection-shells", "icosian-e8-invariants", "minimal-icosians-240",
        "imaginary-d6-invariants", "s-matrix", "e8-projection-shells",
    ]

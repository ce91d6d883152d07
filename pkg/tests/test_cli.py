from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from germforge.cli import main, parse_group_spec, parse_params, serialize_output
from germforge.errors import UsageError
from germforge.parser import parse_polynomial

GERMS = Path(__file__).resolve().parents[1] / "scripts" / "germs"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_image_text(capsys):
    code, out, _ = run(capsys, "image", "--group", "product:2x2", "--h", "x^3+y^3+x*y")
    assert code == 0
    assert "F: X^2*Y^2 - 2*X*Y*Z^2 + Z^4 - " in out


def test_image_json_round_trips(capsys):
    code, out, _ = run(capsys, "image", str(GERMS / "double_fold.germ"), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    F = doc["image_equation"]["F"]
    p = parse_polynomial(F, ("X", "Y", "Z"))
    assert str(p) == F
    for q in doc["image_equation"]["coefficients"].values():
        assert str(parse_polynomial(q, ("X", "Y"))) == q


def test_presentation_matrix_rows(capsys):
    code, out, _ = run(capsys, "presentation", str(GERMS / "double_fold_specialized.germ"), "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["presentation_matrix"][1] == ["X^2", "-Z", "X", "Y"]
    assert len(doc["presentation_matrix"]) == 4 and all(len(r) == 4 for r in doc["presentation_matrix"])
    assert doc["cross_check"] == {"alpha_path_agrees": True, "det_equals_signed_image": True}


def test_double_points_symbolic(capsys):
    code, out, _ = run(capsys, "double-points", str(GERMS / "double_fold_symbolic.germ"), "--format", "json")
    assert code == 0
    dp = json.loads(out)["double_point"]
    assert len(dp["reflection_factors"]) == 2 and len(dp["non_reflection_factors"]) == 1


def test_multiplicity(capsys):
    code, out, _ = run(capsys, "multiplicity", str(GERMS / "double_fold.germ"), "--format", "json")
    rep = json.loads(out)["multiplicity_report"]
    assert code == 0 and (rep["multiplicity"], rep["lower_bound"], rep["upper_bound"]) == (4, 2, 4)


def test_file_group(capsys):
    code, out, _ = run(capsys, "orbit", str(GERMS / "dihedral6_file.germ"), "--format", "json")
    assert code == 0
    g = json.loads(out)["group"]
    assert g["order"] == 6 and len(g["reflections"]) == 3
    assert sorted(h["form"] for h in g["hyperplanes"]) == ["x + (1 + z3)*y", "x - y", "x - z3*y"]


def test_selfcheck(capsys):
    code, out, _ = run(capsys, "selfcheck")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS ") for line in lines)


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "image", "--group", "dihedral:5", "--h", "x")[0] == 1
    assert run(capsys, "image", "--group", "product:2x2", "--h", "x^-1")[0] == 1
    assert run(capsys, "image", "--group", "product:2x2", "--h", "w")[0] == 1
    assert run(capsys, "image", "--group", "product:2x2", "--h", "x*Z", "--params", "Z")[0] == 1
    code, _, err = run(capsys, "image", "--h", "x")
    assert code == 1 and "no group" in err


def test_mathematical_error(capsys):
    code, _, err = run(capsys, "image", "--group", "product:2x2", "--h", "1+x")
    assert code == 2 and err.startswith("error:")


def test_order_cap(capsys, monkeypatch, tmp_path):
    group = tmp_path / "big.group"
    group.write_text("dimension = 2\ngenerator = 1, 0; 0, z7\norbit_map = x; y^7\ndegrees = 1, 7\n")
    monkeypatch.setenv("GERMFORGE_ORDER_CAP", "5")
    code, _, err = run(capsys, "orbit", "--group", f"file:{group}", "--h", "y")
    assert code == 3 and "cap" in err.lower()


def test_parse_params():
    assert parse_params("p1, p2") == (["p1", "p2"], {})
    assert parse_params("p1=X, p2=Y, p3=1") == (["p1", "p2", "p3"], {"p1": "X", "p2": "Y", "p3": "1"})
    with pytest.raises(UsageError):
        parse_params("p1=")


def test_group_specs():
    assert parse_group_spec("product:3x2").order == 6
    assert parse_group_spec("trivial").order == 1
    for bad in ["dihedral:5", "dihedral:x", "klein", "product:2"]:
        with pytest.raises(UsageError):
            parse_group_spec(bad)


def test_serialize_empty():
    assert serialize_output({}, "json") == "{}"
    assert serialize_output({}, "text") == ""


def test_batch(capsys, tmp_path):
    for name in ["a.germ", "b.germ"]:
        (tmp_path / name).write_text((GERMS / "double_fold.germ").read_text())
    (tmp_path / "c.germ").write_text("group = product:2x2\nh = 1 + x\n")
    code, out, _ = run(capsys, "image", "--batch", str(tmp_path), "--jobs", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 2
    assert doc["a.germ"] == doc["b.germ"] and "error" in doc["c.germ"]


def test_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "germforge.cli", "presentation", str(GERMS / "dihedral6_symbolic.germ"), "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b'"-Z + X*p5"' in a

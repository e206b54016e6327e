import json

import pytest

from gkmlef import catalog
from gkmlef.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_su3(capsys):
    code, out, _ = run(capsys, "analyze", "--example", "su3", "--xi", "-1,1")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["profile"]["level_constants"] == ["-2", "-1", "1", "2"]
    assert report["profile"]["betti"] == [1, 0, 2, 0, 2, 0, 1]
    assert report["hard_lefschetz"]["holds"] is True


def test_analyze_so5_scale2(capsys):
    code, out, _ = run(capsys, "analyze", "--example", "so5",
                       "--scale", "2", "--xi", "-1,3")
    assert code == 0
    report = json.loads(out)
    assert report["self_indexing_normalizer"] == ["1/2", "3"]


def test_analyze_hirzebruch_exit_2(capsys):
    code, out, _ = run(capsys, "analyze", "--example", "hirzebruch1")
    assert code == 2
    report = json.loads(out)
    assert report["hypothesis"]["theorem_applicability"] == "not applicable"
    assert report["hard_lefschetz"]["holds"] is True  # verdict still reported


def test_analyze_input_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "analyze", str(bad), "--xi", "1")
    assert code == 1
    assert "error" in err


def test_analyze_nongeneric_xi_error(capsys):
    code, _, err = run(capsys, "analyze", "--example", "su3", "--xi", "1,1")
    assert code == 1
    assert "pairs to zero" in err


def test_report_determinism(capsys):
    _, out1, _ = run(capsys, "analyze", "--example", "su3")
    _, out2, _ = run(capsys, "analyze", "--example", "su3")
    assert out1 == out2


def test_text_format(capsys):
    code, out, _ = run(capsys, "analyze", "--example", "cp1", "--format", "text")
    assert code == 0
    assert "hard Lefschetz: holds" in out
    assert "semifree action: yes" in out


def test_shift_min(capsys):
    _, out, _ = run(capsys, "analyze", "--example", "su3", "--shift-min")
    report = json.loads(out)
    assert report["profile"]["level_constants"] == ["0", "1", "3", "4"]
    assert report["profile"]["min_shift"] == "-2"


def test_validate_good(capsys):
    code, out, _ = run(capsys, "validate", "--example", "su3")
    assert code == 0
    assert "verdict: valid" in out
    assert "FAIL" not in out


def test_validate_names_bad_edge(capsys, tmp_path):
    entry = catalog.get("su3")
    doc = json.loads(entry.document)
    doc["edges"][0]["weight"] = [1, 1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0
    assert "FAIL edge-parallel-to-positions" in out
    assert "verdict: invalid" in out


def test_render_su3(capsys, tmp_path):
    out_path = tmp_path / "img.svg"
    code, _, _ = run(capsys, "render", "--example", "su3", "--out", str(out_path))
    assert code == 0
    svg = out_path.read_text()
    assert svg.startswith('<?xml version="1.0"')
    assert svg.count("<circle") == 6
    assert svg.count("<line") == 9 + 1  # edges + xi arrow
    assert "xi = (-1, 1)" in svg


def test_render_determinism(capsys):
    _, out1, _ = run(capsys, "render", "--example", "so5")
    _, out2, _ = run(capsys, "render", "--example", "so5")
    assert out1 == out2
    assert out1.count("<circle") == 4
    assert out1.count("<line") == 6 + 1


def test_render_rank3_needs_projection(capsys):
    code, _, err = run(capsys, "render", "--example", "cp3")
    assert code == 1
    assert "projection" in err
    code, out, _ = run(capsys, "render", "--example", "cp3",
                       "--projection", "1,0,0;0,1,0")
    assert code == 0
    assert out.count("<circle") == 4

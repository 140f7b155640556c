import json

import pytest

from pseudolines.arrangement import triangle3
from pseudolines.arrfile import read_arr, read_comments, write_arr
from pseudolines.cli import main


@pytest.fixture
def tri(tmp_path):
    p = tmp_path / "t.arr"
    write_arr(p, triangle3())
    return p


def test_bounds(capsys):
    assert main(["bounds", "--mode", "projective", "--from", "4", "--to", "8"]) == 0
    out = capsys.readouterr().out
    assert "below bound" in out and out.count("\n") == 7


def test_bounds_json(capsys):
    assert main(["bounds", "--mode", "affine", "--from", "26", "--to", "26", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["bound"] == 203


def test_count(tri, capsys):
    assert main(["count", str(tri)]) == 0
    out = capsys.readouterr().out
    assert "triangles=1\n" in out and "wedges=3\n" in out


def test_count_json(tri, capsys):
    assert main(["count", "--json", str(tri)]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["triangles"] == 1 and d["touch"] == {"0": 1, "1": 1, "2": 1}


def test_verify_file(tri, capsys):
    assert main(["verify", str(tri)]) == 0
    assert main(["verify", str(tri), "--claim", "2"]) == 1


def test_verify_exhaustive(capsys):
    assert main(["verify", "--n", "6", "--mode", "projective"]) == 0
    assert "exhaustive_max=10" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.arr"
    p.write_text("affine 3\n1 1 2\n")
    assert main(["count", str(p)]) == 2
    assert "error" in capsys.readouterr().err


def test_usage_error():
    assert main(["nonsense"]) == 2
    assert main(["search"]) == 2


def test_ceiling_is_usage_error(capsys):
    assert main(["search", "--n", "12", "--mode", "projective"]) == 2


def test_double_and_far_line(tri, tmp_path):
    out = tmp_path / "five.arr"
    assert main(["double", str(tri), "--out", str(out)]) == 0
    assert read_arr(out).n == 5 and read_comments(out)["triangles"] == "5"
    six = tmp_path / "six.arr"
    assert main(["far-line", str(out), "--out", str(six)]) == 0
    assert read_comments(six)["triangles"] == "7"


def test_family(tmp_path):
    out = tmp_path / "f.arr"
    assert main(["family", "--m", "4", "--t", "1", "--offset", "2", "--mode", "projective",
                 "--out", str(out)]) == 0
    assert read_arr(out).n == 10 and read_comments(out)["triangles"] == "30"


def test_search_writes_record(tmp_path):
    out = tmp_path / "r.arr"
    assert main(["search", "--n", "6", "--exact", "--out", str(out)]) == 0
    c = read_comments(out)
    assert c["count"] == "7" and c["proof_status"] == "exhaustive"
    assert main(["search", "--n", "6", "--heuristic", "--seed", "3", "--out", str(out)]) == 0
    assert read_comments(out)["proof_status"] == "heuristic"


def test_render(tri, tmp_path):
    out = tmp_path / "t.svg"
    assert main(["render", str(tri), "--out", str(out)]) == 0
    assert out.read_text().count("<polyline") == 3


def test_table(capsys):
    assert main(["table"]) == 0
    out = capsys.readouterr().out
    assert "42 is a misprint" in out
    assert main(["table", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    row = next(r for r in rows if r["mode"] == "projective" and r["n"] == 26)
    assert row["bound"] == 215
    row = next(r for r in rows if r["mode"] == "affine" and r["n"] == 11)
    assert row["exact"] == 32
    row = next(r for r in rows if r["mode"] == "affine" and r["n"] == 7)
    assert row["witness"].endswith("affine/7.arr")

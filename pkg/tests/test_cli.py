import json
import os

import pytest

from artifact.cli import main
from artifact.formats import fixture_text, emit_layers, fixtures


@pytest.fixture
def tour_file(tmp_path):
    f = tmp_path / "t1.txt"
    f.write_text(fixture_text(0), encoding="utf-8")
    return str(f)


def test_verify_ok(tour_file, capsys):
    assert main(["verify", tour_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["report"]["ortho_magic"] and out["report"]["diag_sums"] == [130] * 4


def test_verify_negative(tmp_path, capsys):
    f = tmp_path / "id.txt"
    f.write_text(emit_layers(list(range(1, 65))), encoding="utf-8")
    assert main(["verify", str(f)]) == 1


def test_verify_json_input(tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps({"id": "x", "values": fixtures()[1].values}), encoding="utf-8")
    assert main(["verify", str(f)]) == 0


def test_input_errors(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text(fixture_text(0).replace(" 1 20", " 0 20", 1), encoding="utf-8")
    assert main(["verify", str(f)]) == 2
    assert "line" in capsys.readouterr().err
    assert main(["verify", str(tmp_path / "missing.txt")]) == 2
    assert main(["bogus"]) == 2


def test_canon(tour_file, capsys):
    assert main(["canon", tour_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["frenicle"]) == 64 and len(out["primary"]) == 64


def test_emit(tour_file, capsys):
    assert main(["emit", tour_file, "--format", "layers"]) == 0
    assert capsys.readouterr().out.split() == fixture_text(0).split()
    assert main(["emit", tour_file, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["values"][0] == 1


def test_fixtures_list_and_dump(tmp_path, capsys):
    assert main(["fixtures", "--list"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 8
    d = tmp_path / "fx"
    assert main(["fixtures", "--dump", str(d)]) == 0
    assert len(os.listdir(d)) == 16


def test_search_prefix(tmp_path, capsys):
    path = fixtures()[0].arrangement.path().tolist()
    f = tmp_path / "prefix.txt"
    f.write_text(" ".join(map(str, path[:30])) + "\n", encoding="utf-8")
    assert main(["search", "--prefix", str(f), "--threads", "2", "--split-depth", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["values"] == fixtures()[0].values
    out = tmp_path / "out"
    assert main(["search", "--prefix", str(f), "--mode", "closed", "--out", str(out)]) == 0
    assert len(os.listdir(out)) == 1


def test_search_bad_prefix(tmp_path):
    f = tmp_path / "prefix.txt"
    f.write_text("0 99\n", encoding="utf-8")
    assert main(["search", "--prefix", str(f)]) == 2

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from freeduals import dpr, dsig, formats
from freeduals.cli import run


@pytest.fixture
def snake_files(tmp_path):
    f = dpr.DiagMorphism(dpr.MarkedWord.parse("-"), dpr.MarkedWord.parse("-+-"), {1}, {1})
    g = dpr.DiagMorphism(dpr.MarkedWord.parse("-+-"), dpr.MarkedWord.parse("-"), {3}, {1})
    paths = []
    for name, m in (("f.json", f), ("g.json", g)):
        p = tmp_path / name
        p.write_text(formats.morphism_to_json(m))
        paths.append(str(p))
    return paths


def out_of(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compose_snake_gives_identity(capsys, snake_files):
    code, out, _ = out_of(capsys, ["compose", *snake_files, "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"dom": {"len": 1, "plus": []}, "cod": {"len": 1, "plus": []}, "A": [1], "B": [1]}


def test_compose_mismatch_is_domain_error(capsys, snake_files):
    code, _, err = out_of(capsys, ["compose", snake_files[0], snake_files[0]])
    assert code == 1 and "cannot compose" in err


def test_count_unit_to_alternating(capsys):
    code, out, _ = out_of(capsys, ["count", "--sig", "dpr", "--dom", "", "--cod", "+-+-"])
    assert code == 0 and out.strip() == "1"


def test_count_parallel(capsys):
    code, out, _ = out_of(capsys, ["count", "--dom", "-+-+", "--cod", "-+-+", "--workers", "3"])
    assert code == 0 and out.strip() == "3"


def test_theta(capsys):
    code, out, _ = out_of(capsys, ["theta", "--map", "0 0 1 2", "--format", "json"])
    data = json.loads(out)
    assert code == 0
    m = formats.morphism_from_dict(data)
    assert m.dom == dpr.MarkedWord.parse("+-" * 4) and m.cod == dpr.MarkedWord.parse("+-" * 3)
    assert dpr.validate(m)


def test_validate_inline(capsys):
    assert out_of(capsys, ["validate", "--dom", "-+", "--cod", ""])[0] == 0
    code, out, _ = out_of(capsys, ["validate", "--dom", "-", "--cod", "+", "--A", "1", "--B", "1"])
    assert code == 1 and "(ii)" in out


def test_validate_file(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"dom": {"len": 2, "plus": [1]}, "cod": {"len": 0, "plus": []}, "A": [], "B": []}))
    code, out, _ = out_of(capsys, ["validate", str(p), "--format", "json"])
    assert code == 1 and json.loads(out)["valid"] is False


def test_parse_error_reports_position(capsys):
    code, _, err = out_of(capsys, ["count", "--dom", "-+x", "--cod", ""])
    assert code == 2 and "position 3" in err


def test_malformed_json(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{\"dom\": ")
    code, _, err = out_of(capsys, ["decompose", str(p)])
    assert code == 2 and "line 1" in err


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["count", "--sig", "bogus", "--dom", "", "--cod", ""]) == 2
    assert run(["tree"]) == 2


def test_eval(capsys, snake_files):
    code, out, _ = out_of(capsys, ["eval", snake_files[1], "--dim", "2"])
    assert code == 0
    rows = [list(map(int, line.split())) for line in out.strip().splitlines()]
    assert len(rows) == 2 and len(rows[0]) == 8


def test_decompose(capsys, snake_files):
    code, out, _ = out_of(capsys, ["decompose", snake_files[1]])
    assert code == 0
    assert out.split() == ["id", "ε", "->", "ε", "elementary", "-+", "->", "ε", "id", "-", "->", "-"]


def test_tensor(capsys, snake_files):
    code, out, _ = out_of(capsys, ["tensor", snake_files[0], snake_files[1], "--format", "json"])
    m = formats.morphism_from_json(out)
    assert code == 0 and m.dom == dpr.MarkedWord.parse("--+-")


def test_render(capsys, snake_files, tmp_path):
    code, out, _ = out_of(capsys, ["render", snake_files[0]])
    assert code == 0 and "through: 1->1" in out
    target = tmp_path / "f.svg"
    assert run(["render", snake_files[0], "--format", "svg", "--out", str(target)]) == 0
    assert target.read_text().startswith("<svg")


def test_tree(capsys):
    assert out_of(capsys, ["tree", "--word", "-+-"])[1].strip() == "1 1"
    assert out_of(capsys, ["tree", "--code", "0 0 0"])[1].strip() == "++"


def test_check_commands(capsys):
    code, out, _ = out_of(capsys, ["check", "counterexample", "--sig", "cjv:x:x", "--format", "json"])
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = out_of(capsys, ["check", "zeta", "--sig", "cjv:x:x", "--dom", "x", "--cod", "x^ x x"])
    assert code == 0 and "PASS" in out
    code, _, _ = out_of(capsys, ["check", "omega", "--sig", "cjv:x,y:x", "--word-len", "3"])
    assert code == 0
    code, out, _ = out_of(capsys, ["check", "laws", "--seed", "5", "--samples", "30"])
    assert code == 0 and "seed 5" in out


def test_sequence_json_roundtrip(capsys, tmp_path):
    m = dsig.SigMorphism(dsig.DSEQ, (2,), (2, 4, 3, 1, 0, 2, 3, 1, 2), {1}, {9})
    p = tmp_path / "m.json"
    p.write_text(formats.morphism_to_json(m))
    code, out, _ = out_of(capsys, ["compose", str(p), "--format", "json"])
    assert code == 0 and formats.morphism_from_json(out) == m


@pytest.mark.parametrize("m", [
    dpr.counit(),
    dpr.identity(dpr.MarkedWord.parse("-+-")),
    dsig.unit(dsig.cjv_signature(["x", "y"], "x"), "x"),
    dsig.counit(dsig.DZ, -1),
])
def test_json_roundtrip(m):
    assert formats.morphism_from_json(formats.morphism_to_json(m)) == m


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "freeduals", "tree", "--word", "+"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "0 0"

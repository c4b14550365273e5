"""
Tests for the command-line tools
"""
import io
import json

from scripts.vankampen import main
from scripts import verify_catalog


def test_present_from_braid_file(tmp_path, capsys):
    braids = tmp_path / "trefoil.braids"
    braids.write_text("strings: 2\n1 1 1\n")
    assert main(["present", str(braids)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("gens: a b\n")
    assert len(out.splitlines()) == 2


def test_simplify_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("gens: a b\nb = a\n"))
    assert main(["simplify", "-"]) == 0
    assert capsys.readouterr().out == "gens: a\n"


def test_verify_text_and_json(tmp_path, capsys):
    document = tmp_path / "d4.pres"
    document.write_text("gens: s t\nstst = tsts\n")
    assert main(["verify", str(document), "--central", "(st)^2", "--expected-order", "8"]) == 0
    out = capsys.readouterr().out
    assert "quadratic quotient order: 8" in out
    assert "s t s t: central" in out

    assert main(["verify", str(document), "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 8
    assert report["abelianization"] == "Z^2"


def test_disc(capsys):
    assert main(["disc", "x^2 - y"]) == 0
    assert capsys.readouterr().out == "4*y\n"


def test_vk_writes_artifacts(tmp_path, capsys):
    braids, loops = tmp_path / "out.braids", tmp_path / "out.loops"
    assert main(["vk", "x^2 - y^3", "--seed", "2", "--emit-braids", str(braids), "--emit-loops", str(loops)]) == 0
    out = capsys.readouterr().out
    assert "# 2 strings, 1 critical values, 1 loops" in out
    assert braids.read_text().startswith("strings: 2\n")
    assert any(line.startswith("L ") for line in loops.read_text().splitlines())


def test_vk_json(capsys):
    assert main(["vk", "x^2 - y^2", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["strands"] == 2
    assert report["presentation"].startswith("gens: a b\n")


def test_catalog_dump(capsys):
    assert main(["catalog", "g24"]) == 0
    assert capsys.readouterr().out.startswith("# G24\n")


def test_precondition_exit_codes(tmp_path, capsys):
    assert main(["disc", "x^2 +"]) == 2
    assert main(["vk", "x*y - 1"]) == 2
    assert main(["vk", "x^2 - 2*x*y + y^2"]) == 2
    assert main(["catalog", "G99"]) == 2
    assert main(["simplify", str(tmp_path / "missing.pres")]) == 2
    bad = tmp_path / "bad.pres"
    bad.write_text("gens: a\nab\n")
    assert main(["verify", str(bad)]) == 2
    assert capsys.readouterr().out == ""


def test_verify_catalog_script(capsys):
    assert verify_catalog.main(["G24", "G34"]) == 0
    out = capsys.readouterr().out
    assert "G24 primary" in out
    assert "G34 primary" in out


def test_coset_limit_exit_code(tmp_path, capsys):
    free = tmp_path / "free.pres"
    free.write_text("gens: a b\n")
    assert main(["verify", str(free), "--max-cosets", "50"]) == 3
    assert "coset limit exceeded" in capsys.readouterr().out
    assert main(["catalog", "G24", "--verify", "--max-cosets", "50"]) == 3
    assert "overflow" in capsys.readouterr().out
    assert verify_catalog.main(["G24", "--max-cosets", "50"]) == 3

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from mincode import constructions as cons
from mincode.cli import main
from mincode.errors import MatrixFileError, RankDeficient
from mincode.matfile import format_matrix, parse_matrix, read_matrix, write_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def simplex_file(tmp_path):
    path = tmp_path / "s.txt"
    write_matrix(cons.simplex(2, 3), path, ["simplex"])
    return path


# -- matrix files -----------------------------------------------------------

@pytest.mark.parametrize("C", [cons.simplex(9, 2), cons.solomon_stiffler(5, [3]), cons.simplex(8, 2)])
def test_round_trip(tmp_path, C):
    path = tmp_path / "m.txt"
    write_matrix(C, path, ["comment line"])
    back = read_matrix(path)
    assert np.array_equal(back.G, C.G) and back.q == C.q


def test_comments_and_blank_lines_are_ignored():
    C = parse_matrix("# header next\n\n3 3 1\n# row\n1 2 0\n\n")
    assert C.G.tolist() == [[1, 2, 0]] and C.q == 3


@pytest.mark.parametrize("text,line,fragment", [
    ("2 3\n1 0 1\n", 1, "header"),
    ("x 3 1\n1 0 1\n", 1, "non-integer"),
    ("6 3 1\n1 0 1\n", 1, "prime power"),
    ("2 3 2\n1 0 1\n", 3, "expected 2 matrix rows"),
    ("2 3 1\n1 0\n", 2, "expected 3 entries"),
    ("2 3 1\n# c\n1 0 2\n", 3, "outside"),
    ("", 1, "missing header"),
])
def test_parse_errors_name_the_line(text, line, fragment):
    with pytest.raises(MatrixFileError) as info:
        parse_matrix(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}: ")
    assert fragment in str(info.value).lower()


def test_rank_deficient_file():
    with pytest.raises(RankDeficient):
        parse_matrix("2 2 2\n1 1\n1 1\n")


def test_format_header():
    assert format_matrix(cons.simplex(2, 3)).splitlines()[0] == "2 7 3"


# -- commands ---------------------------------------------------------------

@pytest.mark.parametrize("argv,header", [
    (["construct", "simplex", "--q", "2", "--m", "3"], "2 7 3"),
    (["construct", "solomon-stiffler", "--k", "5", "--u", "3"], "2 24 5"),
    (["construct", "solomon-stiffler", "--k", "5", "--u", "1", "--u", "3"], "2 23 5"),
    (["construct", "solomon-stiffler", "--k", "5", "--u", "1,3"], "2 23 5"),
    (["construct", "dual-bch", "--m", "5"], "2 31 10"),
    (["construct", "even-weight", "--n", "4"], "2 4 3"),
])
def test_construct_headers(capsys, argv, header):
    code, out, err = run(capsys, *argv)
    assert code == 0
    assert [l for l in out.splitlines() if not l.startswith("#")][0] == header
    assert "code: [" in err


def test_construct_to_file(capsys, tmp_path):
    path = tmp_path / "c.txt"
    code, out, _ = run(capsys, "construct", "simplex", "--q", "3", "--m", "2", "--out", str(path), "--json")
    assert code == 0 and json.loads(out)["n"] == 4
    assert read_matrix(path).n == 4


def test_extend(capsys, simplex_file, tmp_path):
    out_path = tmp_path / "e.txt"
    code, out, _ = run(capsys, "extend", "--in", str(simplex_file), "--out", str(out_path), "--json")
    doc = json.loads(out)
    assert code == 0 and (doc["n"], doc["k"], doc["d"], doc["w_max"]) == (11, 3, 4, 8)
    assert doc["minimal"] is True and doc["ab_satisfied"] is False
    assert doc["n_prime"] == 4 and doc["predicted_matches"] is True
    assert read_matrix(out_path).n == 11


def test_extend_self_orthogonal_ternary(capsys, tmp_path):
    path = tmp_path / "t.txt"
    write_matrix(cons.simplex(3, 2), path)
    code, out, _ = run(capsys, "extend", "--self-orthogonal", "--in", str(path), "--json")
    doc = json.loads(out)
    assert code == 0 and (doc["n"], doc["k"], doc["d"], doc["w_max"], doc["pad"]) == (7, 2, 3, 6, 1)
    assert doc["self_orthogonal"] is True


def test_extend_rejects_ab_failure(capsys, tmp_path):
    path = tmp_path / "ew.txt"
    write_matrix(cons.even_weight_code(4), path)
    code, _, err = run(capsys, "extend", "--in", str(path))
    assert code == 2 and "1/2" in err


def test_complement(capsys, tmp_path):
    path, out_path = tmp_path / "ew.txt", tmp_path / "c.txt"
    write_matrix(cons.even_weight_code(4), path)
    code, out, _ = run(capsys, "complement", "--in", str(path), "--h", "2", "--out", str(out_path), "--json")
    assert code == 0 and json.loads(out)["complement_threshold_met"] is True
    assert format_matrix(read_matrix(out_path)).splitlines()[0] == "2 27 5"
    bad = tmp_path / "rep.txt"
    bad.write_text("2 3 2\n1 1 0\n0 0 1\n")
    assert run(capsys, "complement", "--in", str(bad), "--h", "1")[0] == 2


def test_analyze_text_and_json(capsys, simplex_file):
    code, out, _ = run(capsys, "analyze", "--in", str(simplex_file))
    assert code == 0 and "minimal: yes" in out and "AB satisfied" in out
    _, first, _ = run(capsys, "analyze", "--in", str(simplex_file), "--json")
    _, second, _ = run(capsys, "analyze", "--in", str(simplex_file), "--json")
    assert first == second
    assert json.loads(first)["minimal"] is True


def test_analyze_cap_skips_minimality(capsys, tmp_path):
    path = tmp_path / "bch.txt"
    write_matrix(cons.dual_bch_trace(5), path)
    code, out, _ = run(capsys, "analyze", "--in", str(path), "--cap", "16", "--json")
    assert code == 0 and json.loads(out)["minimal"] == "skipped"


def test_analyze_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 3\n1 0 1\n")
    code, _, err = run(capsys, "analyze", "--in", str(bad))
    assert code == 1 and "line 1" in err
    assert run(capsys, "analyze", "--in", str(tmp_path / "missing.txt"))[0] == 1


def test_enumeration_cap_exit_code(capsys, tmp_path, monkeypatch):
    path = tmp_path / "s.txt"
    write_matrix(cons.simplex(2, 8), path)
    monkeypatch.setenv("MINCODE_CAP", "100")
    assert run(capsys, "analyze", "--in", str(path))[0] == 3


def test_predict(capsys):
    code, out, _ = run(capsys, "predict", "P6.1", "--q", "2", "--m", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and (doc["n"], doc["k"], doc["d"], doc["w_max"]) == (11, 3, 4, 8)
    assert doc["distribution"] == [[0, 1], [4, 3], [8, 4]]
    code, out, _ = run(capsys, "predict", "P4.11", "--n", "4", "--h", "2")
    assert code == 0 and "[35,5,12]_2" in out and "max weight 24" in out
    assert run(capsys, "predict", "P4.1", "--k", "4", "--u", "1,2")[0] == 0
    assert run(capsys, "predict", "nope")[0] == 1
    assert run(capsys, "predict", "P6.2", "--m", "4")[0] == 2


def test_reproduce_command(capsys):
    code, out, _ = run(capsys, "reproduce", "--table", "3")
    lines = out.splitlines()
    assert code == 0
    assert sum(l.startswith("PASS") for l in lines) == 3
    assert lines[-1] == "table 3: 3 passed, 0 failed, 0 skipped"
    code, out, _ = run(capsys, "reproduce", "--table", "tab:Solomon")
    assert code == 0 and "SKIPPED(typo)" in out and "13 passed" in out
    assert run(capsys, "reproduce", "--table", "99")[0] == 1


def test_module_entry_point(simplex_file):
    out = subprocess.run([sys.executable, "-m", "mincode", "analyze", "--in", str(simplex_file), "--json"],
                         capture_output=True, text=True, env=dict(os.environ))
    assert out.returncode == 0 and json.loads(out.stdout)["n"] == 7

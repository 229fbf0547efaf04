import json
import subprocess
import sys

import pytest

from signedhoffman.catalog import starter_catalog_path
from signedhoffman.cli import cli_dispatch
from signedhoffman.families import make_cycle, make_T
from signedhoffman.graph import parse_sg, to_sg


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.sg"
    path.write_text(to_sg(make_cycle(4, False)))
    return str(path)


def run(capsys, *argv):
    code = cli_dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verdict_line(capsys, c4_file):
    code, out, _ = run(capsys, "verdict", c4_file)
    assert code == 0
    assert out == f"{c4_file} Below2 x^4 - 4*x^2 + 4\n"


def test_family_piped_into_verdict():
    fam = subprocess.run([sys.executable, "-m", "signedhoffman", "family", "T:2,2,2"],
                         capture_output=True, text=True, check=True)
    res = subprocess.run([sys.executable, "-m", "signedhoffman", "verdict"],
                         input=fam.stdout, capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.split()[:2] == ["-", "Exactly2"]


def test_family_and_charpoly(capsys, tmp_path):
    code, out, _ = run(capsys, "family", "T:2,3,4")
    assert code == 0 and parse_sg(out) == make_T(2, 3, 4)
    path = tmp_path / "t.sg"
    path.write_text(out)
    code, out, _ = run(capsys, "charpoly", str(path))
    assert out.startswith("x^10")


def test_spectrum(capsys, c4_file):
    code, out, _ = run(capsys, "spectrum", c4_file, "--digits", "6")
    assert out.split() == ["-1.414214", "-1.414214", "1.414214", "1.414214"]


def test_canon_and_embed(capsys, c4_file, tmp_path):
    code, out, _ = run(capsys, "canon", c4_file, "--sg")
    lines = out.splitlines()
    assert len(lines[0]) > 0 and lines[1] == "4 4"
    tree = tmp_path / "tree.sg"
    tree.write_text(to_sg(make_T(2, 2, 2)))
    code, out, _ = run(capsys, "embed", c4_file, str(tree))
    assert (code, out) == (1, "none\n")
    code, out, _ = run(capsys, "embed", c4_file, c4_file)
    assert code == 0 and sorted(map(int, out.split())) == [0, 1, 2, 3]


def test_classify_n3(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3")
    lines = out.splitlines()
    assert len(lines) == 3
    assert sorted(line.split()[1] for line in lines) == ["Below2", "Exactly2", "Exactly2"]


def test_search_json(capsys):
    code, out, _ = run(capsys, "search", "Theta:6,2,0", "--depth", "1", "--band", "above2")
    doc = json.loads(out)
    assert code == 0 and doc["band"] == "above2"
    assert [lvl["size"] for lvl in doc["levels"]] == [1, 2]


def test_search_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SG_FRONTIER_CAP", "1")
    code, out, err = run(capsys, "search", "P:2", "--depth", "3")
    assert code == 2 and "exceeds cap 1" in err
    assert json.loads(out)["levels"]


def test_maximal(capsys):
    assert run(capsys, "maximal", "Theta:8,2,0")[:2] == (0, "true\n")
    assert run(capsys, "maximal", "P:3")[:2] == (0, "false\n")


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "table3:1", "--param", "n1=2")
    row, sign, lo, hi = out.split()
    assert (code, row, sign) == (0, "table3:1", "-1") and float(lo) <= float(hi) < 0
    code, out, _ = run(capsys, "table", "table3:6", "--param", "n1=5")
    assert code == 1 and out.split()[1] == "+1"
    code, out, _ = run(capsys, "table", "table2:P4_P4")
    assert code == 1 and out.startswith("table2:P4_P4 +1 0.0557")
    code, out, _ = run(capsys, "table", "table2:G4_G4")
    assert code == 0 and "skipped-missing-data" in out


def test_verify_exit_reflects_worst(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", str(starter_catalog_path()))
    assert code == 1
    assert "Table2_P4_P4:approx refuted" in out
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"version": 1, "entries": [
        {"name": "T222", "source": "text-constructed", "n": 7, "family": "T:2,2,2",
         "edges": [[u, v, "+"] for u, v, _ in make_T(2, 2, 2).edges()],
         "claims": {"verdict": "Exactly2"}}]}))
    code, out, _ = run(capsys, "verify", str(good))
    assert code == 0 and out.count("confirmed") == 2


@pytest.mark.parametrize("argv", [["bogus"], [], ["table", "table1:T_T", "--param", "a"],
                                  ["verdict", "/nonexistent.sg"], ["family", "T:1"],
                                  ["classify", "--n", "12"]])
def test_usage_errors_exit_2(capsys, argv):
    assert cli_dispatch(argv) == 2

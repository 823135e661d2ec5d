import json
import subprocess
import sys

import pytest

from hypernet import serialize
from hypernet.cli import main

from helpers import chain_hypergraph, hollow_tetra_with_cycle, running_example


@pytest.fixture
def hg(tmp_path):
    path = tmp_path / "running.hg"
    path.write_text(serialize(running_example()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_summary(capsys, hg):
    code, out, _ = run(capsys, "summary", hg)
    assert code == 0
    lines = dict(line.split("\t") for line in out.split("\n\n")[0].splitlines())
    assert lines["vertices"] == "4" and lines["edges"] == "5"
    assert lines["toplexes"] == "3" and lines["inclusiveness"] == "0.4"


def test_summary_json(capsys, hg):
    code, out, _ = run(capsys, "summary", hg, "--json")
    doc = json.loads(out)
    assert doc["toplex_count"] == 3 and doc["inclusiveness"] == 0.4
    assert doc["degree_histogram"]["total"] == 4


def test_scomponents(capsys, hg):
    _, out, _ = run(capsys, "scomponents", hg, "--s", "2", "--json")
    assert json.loads(out)["components"] == [["1", "2"], ["4"], ["5"]]


def test_betti(capsys, hg):
    _, out, _ = run(capsys, "betti", hg, "--cap", "2")
    assert out == "betti\t1,1,0\n"


def test_betti_components(capsys, tmp_path):
    path = tmp_path / "tetra.hg"
    path.write_text(serialize(hollow_tetra_with_cycle()))
    _, out, _ = run(capsys, "betti-components", str(path), "--s", "1", "--cap", "2", "--json")
    comps = json.loads(out)["components"]
    assert comps == [{"members": ["g1", "g2", "g3", "t1", "t2", "t3", "t4"], "betti": [1, 1, 1]}]


def test_sprofile_csv(capsys, hg):
    _, out, _ = run(capsys, "sprofile", hg, "--smax", "3", "--csv")
    assert out == "s,component_count,largest_component_size\n1,1,5\n2,3,2\n3,1,1\n"


def test_sdistance(capsys, hg):
    _, out, _ = run(capsys, "sdistance", hg, "--s", "1", "1", "5", "--json")
    assert json.loads(out)["distance"] == 2
    _, out, _ = run(capsys, "sdistance", hg, "--s", "2", "1", "4")
    assert out.splitlines()[1] == "1\t4\tinf"


def test_centrality(capsys, hg):
    _, out, _ = run(capsys, "centrality", hg, "--s", "2", "--measure", "closeness")
    assert out.splitlines() == ["edge\tcloseness", "1\t1", "2\t1", "4\t0", "5\t0"]


def test_maxdiam(capsys, tmp_path):
    path = tmp_path / "chain.hg"
    path.write_text(serialize(chain_hypergraph(7)))
    _, out, _ = run(capsys, "maxdiam", str(path), "--s", "2", "--json")
    assert json.loads(out)["diameter"] == 6


def test_section_and_cliquerecon(capsys, hg):
    _, out, _ = run(capsys, "section", hg, "--k", "3")
    assert out.splitlines()[-1] == "a,c,d: a, c, d"
    _, out, _ = run(capsys, "cliquerecon", hg, "--json")
    edges = [e["label"] for e in json.loads(out)["edges"]]
    assert edges == ["a,b,c", "a,c,d"]


def test_graph_outputs(capsys, hg):
    _, out, _ = run(capsys, "twosection", hg, "--csv")
    assert "a,d,2" in out.splitlines()
    _, out, _ = run(capsys, "linegraph", hg, "--json")
    links = json.loads(out)["links"]
    assert {"source": "1", "target": "2", "weight": 2} in links


def test_toplexhist(capsys, hg):
    _, out, _ = run(capsys, "toplexhist", hg)
    assert out == "value\tcount\n1\t3\n"


def test_convert_commutes_with_betti(capsys, hg, tmp_path):
    for fmt, suffix in (("csv", ".csv"), ("bipartite", ".pairs")):
        target = tmp_path / f"conv{suffix}"
        code, _, _ = run(capsys, "convert", hg, "--to", fmt, "--output", str(target))
        assert code == 0
        _, a, _ = run(capsys, "betti", hg, "--cap", "2")
        _, b, _ = run(capsys, "betti", str(target), "--cap", "2")
        assert a == b


def test_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("x: a, b\ny: b, c\n"))
    code, out, _ = run(capsys, "scomponents", "-", "--s", "1")
    assert code == 0 and out.splitlines()[1] == "0\t2\tx y"


@pytest.mark.parametrize("argv", [
    ["nosuchcommand", "f"],
    ["scomponents", "f"],
    ["scomponents", "f", "--s", "0"],
    ["betti", "f", "--cap", "-1"],
    ["summary", "f", "--bogus"],
    ["summary", "f", "--json", "--csv"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == "" and "usage:" in err


def test_data_errors_exit_2(capsys, hg, tmp_path):
    bad = tmp_path / "bad.hg"
    bad.write_text("x: a\nbroken line\n")
    code, _, err = run(capsys, "summary", str(bad))
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "sdistance", hg, "--s", "2", "1", "3")
    assert code == 2 and "size 1" in err
    code, _, _ = run(capsys, "summary", str(tmp_path / "missing.hg"))
    assert code == 2


def test_budget_env_reaches_cli(capsys, tmp_path, monkeypatch):
    path = tmp_path / "big.hg"
    path.write_text("x: " + ", ".join(str(i) for i in range(20)) + "\n")
    monkeypatch.setenv("HYPERNET_BUDGET", "100")
    code, _, err = run(capsys, "betti", str(path), "--cap", "3")
    assert code == 2 and "budget" in err


def test_console_entry_point(hg):
    proc = subprocess.run([sys.executable, "-m", "hypernet.cli", "betti", hg, "--cap", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "betti\t1,1,0\n"

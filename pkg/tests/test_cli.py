import json

import pytest

from ggraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_json_stdout(capsys):
    code, out, err = run(capsys, "build", "Z(12)")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 4 and len(data["edges"]) == 4
    assert "4 vertices, 4 edges" in err


def test_build_formats_to_file(capsys, tmp_path):
    for fmt in ("json", "dot", "edge-csv"):
        path = tmp_path / f"g.{fmt}"
        code, _, _ = run(capsys, "build", "Q(8)", "--kind", "ipg", "--format", fmt, "--out", str(path))
        assert code == 0 and path.stat().st_size > 0
    lines = (tmp_path / "g.edge-csv").read_text().strip().splitlines()
    assert len(lines) - 1 == 28


def test_build_bad_spec(capsys):
    code, _, err = run(capsys, "build", "Q(12)")
    assert code == 2 and "error" in err
    assert run(capsys, "build", "Z(3) y Z(2)")[0] == 2
    assert run(capsys, "build", "Sym(9)")[0] == 2


def test_unknown_subcommand_or_kind(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "build", "Z(4)", "--kind", "nope")[0] == 2


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "Z(60)")
    s = json.loads(out)
    assert code == 0 and s["order"] == 60 and s["vertices"] > 0
    assert s["kind"] == "diff"


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "t:twoprimes", "--max-order", "30")[0] == 0
    code, out, _ = run(capsys, "verify", "t:isol", "--max-order", "24")
    assert code == 1 and json.loads(out)["outcome"] == "DISCREPANCY"
    assert run(capsys, "verify", "t:isol", "--max-order", "24", "--allow-discrepancy")[0] == 0
    assert run(capsys, "verify", "bogus")[0] == 2


def test_verify_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv("GGRAPH_BUDGET", "5")
    assert run(capsys, "verify", "t:nilp", "--max-order", "120")[0] == 3


def test_clique(capsys):
    code, out, _ = run(capsys, "clique", "30")
    data = json.loads(out)
    assert code == 0 and data["exact_omega"] == 3
    assert data["divisor_search"][0]["value"] == 3
    code, out, _ = run(capsys, "clique", "16", "--kind", "power")
    assert json.loads(out)["exact_omega"] == 16


def test_embed(capsys, tmp_path):
    path = tmp_path / "p4.json"
    path.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}))
    code, out, _ = run(capsys, "embed", str(path))
    data = json.loads(out)
    assert code == 0 and data["verified"] and len(data["divisors"]) == 4


@pytest.mark.parametrize("payload", ['{"n": 2, "edges": [[0, 5]]}', '{"edges": []}', "not json"])
def test_embed_bad_input(capsys, tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(payload)
    assert run(capsys, "embed", str(path))[0] == 2


def test_embed_missing_file(capsys, tmp_path):
    assert run(capsys, "embed", str(tmp_path / "missing.json"))[0] == 2


def test_psl_scan(capsys):
    code, out, _ = run(capsys, "psl-scan", "--qmax", "9")
    rows = json.loads(out)
    assert code == 0 and [r["q"] for r in rows] == [4, 5, 7, 8, 9]
    assert all(r["agree"] for r in rows)


@pytest.mark.parametrize("n,kind,omega", [(12, "diff", 2), (8, "power", 8), (30, "ipg", 25)])
def test_clique_examples(capsys, n, kind, omega):
    code, out, _ = run(capsys, "clique", str(n), "--kind", kind)
    data = json.loads(out)
    assert code == 0 and data["exact_omega"] == omega == data["divisor_search"][0]["value"]


@pytest.mark.parametrize("graph,n_div", [({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]}, 5),
                                         ({"n": 1, "edges": []}, 1)])
def test_embed_examples(capsys, tmp_path, graph, n_div):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(graph))
    code, out, _ = run(capsys, "embed", str(path))
    data = json.loads(out)
    assert code == 0 and data["verified"] and len(data["divisors"]) == n_div


def test_embed_too_large(capsys, tmp_path):
    edges = [[i, j] for i in range(11) for j in range(i + 1, 11)]
    path = tmp_path / "k11.json"
    path.write_text(json.dumps({"n": 11, "edges": edges}))
    assert run(capsys, "embed", str(path))[0] == 2


def test_m11_writes_files(capsys, tmp_path):
    code, out, _ = run(capsys, "m11", "--out-dir", str(tmp_path))
    assert code == 0 and json.loads(out)["details"]["reduced_vertices"] == 825
    data = json.loads((tmp_path / "m11_reduced.json").read_text())
    assert data["n"] == 825
    assert (tmp_path / "m11_reduced.dot").read_text().startswith("graph")

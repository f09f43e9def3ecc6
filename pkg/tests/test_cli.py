import json

import pytest

from mdnum.cli import INPUT, NO, OK, RESOURCE, main
from mdnum.graph import cycle_graph, emit_edge_list, petersen_graph


@pytest.fixture
def c6(tmp_path):
    p = tmp_path / "c6.txt"
    p.write_text(emit_edge_list(cycle_graph(6)))
    return p


def test_compute_prints_value_and_witness(c6, capsys, tmp_path):
    assert main(["compute", str(c6)]) == OK
    out = capsys.readouterr().out
    assert out.startswith("md 3\n") and "e 0 " in out
    dest = tmp_path / "w.txt"
    assert main(["compute", str(c6), "--out", str(dest)]) == OK
    assert main(["verify", str(c6), str(dest)]) == OK
    assert "3 colors" in capsys.readouterr().out


def test_compute_accepts_graph6(tmp_path, capsys):
    p = tmp_path / "k4.g6"
    p.write_text("C~\n")
    assert main(["compute", str(p)]) == OK
    assert capsys.readouterr().out.startswith("md 1")


def test_verify_rejects_a_bad_coloring(c6, tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("".join(f"e {i} {i + 1}\n" for i in range(6)))
    assert main(["verify", str(c6), str(bad)]) == NO
    assert "not MD" in capsys.readouterr().out


def test_input_errors(tmp_path, capsys):
    broken = tmp_path / "broken.txt"
    broken.write_text("n 3\n0 0\n")
    assert main(["compute", str(broken)]) == INPUT
    assert main(["compute", str(tmp_path / "missing.txt")]) == INPUT
    assert main(["gen", "theta", "2", "3", "4"]) == INPUT
    assert main(["bound", "--epsilon", "0.7"]) == INPUT
    assert "error" in capsys.readouterr().err


def test_budget_exhaustion(tmp_path, capsys):
    p = tmp_path / "pet.txt"
    p.write_text(emit_edge_list(petersen_graph()))
    assert main(["compute", str(p), "--budget", "1"]) == RESOURCE
    assert "resource limit" in capsys.readouterr().err


@pytest.mark.parametrize("argv, md_value", [
    (["gen", "cycle", "7"], 3),
    (["gen", "theta", "2", "2", "4"], 3),
    (["gen", "umbrella", "1,1,1", "2,2,2"], 3),
    (["gen", "kr-box-path", "2", "3"], 3),
    (["gen", "afamily", "9", "1", "2"], 2),
    (["gen", "star", "4", "--emit", "graph6"], 4),
])
def test_gen(argv, md_value, capsys):
    assert main(argv) == OK
    assert f"md {md_value}" in capsys.readouterr().out.splitlines()[0]


def test_gen_output_round_trips_through_verify(tmp_path, capsys):
    assert main(["gen", "multipath", "1", "1", "1"]) == OK
    text = capsys.readouterr().out
    body = "".join(ln + "\n" for ln in text.splitlines() if not ln.startswith("#"))
    graph = tmp_path / "g.txt"
    graph.write_text("".join(ln + "\n" for ln in body.splitlines() if not ln.startswith("e ")))
    colors = tmp_path / "c.txt"
    colors.write_text("".join(ln + "\n" for ln in body.splitlines() if ln.startswith("e ")))
    assert main(["verify", str(graph), str(colors)]) == OK


def test_decide_half(c6, tmp_path, capsys):
    cert = tmp_path / "cert.txt"
    assert main(["decide-half", str(c6), "--certificate", str(cert)]) == OK
    assert capsys.readouterr().out.startswith("verdict: yes")
    assert main(["verify", str(c6), str(cert)]) == OK
    k4 = tmp_path / "k4.g6"
    k4.write_text("C~\n")
    assert main(["decide-half", str(k4)]) == NO
    path = tmp_path / "p.txt"
    path.write_text("n 3\n0 1\n1 2\n")
    assert main(["decide-half", str(path)]) == INPUT


def test_survey(tmp_path, capsys):
    assert main(["survey", "--enumerate", "5", "--check", "conjecture,half"]) == OK
    lines = capsys.readouterr().out.splitlines()
    records = [json.loads(ln) for ln in lines]
    assert len(records) == 22 and records[-1]["counterexamples"] == []
    assert all(r["checks"]["conjecture"] == "pass" for r in records[:-1])
    src = tmp_path / "in.g6"
    src.write_text("C~\nnot-a-graph\nDQo\n")
    out = tmp_path / "out.txt"
    assert main(["survey", str(src), "--out", str(out), "--jobs", "2"]) == OK
    assert "line 2" in out.read_text()
    assert main(["survey"]) == INPUT


def test_bound(capsys):
    assert main(["bound", "--epsilon", "1/3"]) == OK
    assert capsys.readouterr().out.startswith("C(1/3) = ")

"""Command-line interface: output formats, determinism, exit codes."""

import json

import pytest

from d43crystal import cli


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_level_1(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--level", "1")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 8
    assert "0,0,0,0,0,0 phi" in lines
    assert "1,0,0,0,0,0 1" in lines


def test_enumerate_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "enumerate", "--level", "2")
    _, out2, _ = run_cli(capsys, "enumerate", "--level", "2")
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 35


def test_graph_dot(capsys):
    code, out, _ = run_cli(capsys, "graph", "--level", "1")
    assert code == 0
    assert out.startswith("digraph B1 {")
    assert out.count("->") == 10


def test_graph_json(capsys):
    code, out, _ = run_cli(capsys, "graph", "--level", "1",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "d43crystal/1"
    assert doc["level"] == 1
    assert len(doc["nodes"]) == 8
    assert len(doc["edges"]) == 10


def test_graph_arrow_subset(capsys):
    code, out, _ = run_cli(capsys, "graph", "--level", "1",
                           "--format", "json", "--arrows", "12")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["edges"]) == 6
    assert all(e["label"] in (1, 2) for e in doc["edges"])


def test_graph_bad_arrows(capsys):
    code, _, err = run_cli(capsys, "graph", "--level", "1", "--arrows", "19")
    assert code == 2
    assert "error" in err


def test_decompose_text(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--level", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "i=0 j0=2 j1=2 size=27 highest=0,0,0,0,2,0"
    assert lines[1].startswith("i=1 j0=1 j1=1 size=8")


def test_decompose_json(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--level", "3",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "d43crystal/1"
    assert sum(c["size"] for c in doc["components"]) == 112


def test_tensor_connected(capsys):
    code, out, _ = run_cli(capsys, "tensor", "--level", "1",
                           "--check-connected")
    assert code == 0
    doc = json.loads(out)
    assert doc["connected"] == "pass"
    assert doc["vertices"] == 64


def test_check_perfect(capsys):
    code, out, _ = run_cli(capsys, "check", "perfect", "--level", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["P1"] == "pass"
    assert doc["P3"] == "skipped"
    assert [0, 0, 0, 0, 0, 0] in doc["minimal"]


def test_verify_lemmas(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemmas", "--lmax", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert all(v > 0 for v in doc["checks"].values())


def test_verify_appendix(capsys):
    code, out, _ = run_cli(capsys, "verify", "appendix", "--lmax", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert doc["checks"]["appendix_tuples_checked"] > 0


def test_verify_coherent(capsys):
    code, out, _ = run_cli(capsys, "verify", "coherent", "--level", "2",
                           "--box", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["checks"] == {"embeddings": True, "cover": True,
                             "limit_point": True}


def test_verify_relations(capsys):
    code, out, _ = run_cli(capsys, "verify", "relations")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"


def test_usage_errors(capsys):
    assert cli.run(["bogus"]) == 2
    capsys.readouterr()
    assert cli.run(["enumerate"]) == 2
    capsys.readouterr()
    assert cli.run([]) == 2
    capsys.readouterr()


def test_jobs_flag(capsys):
    code, out, _ = run_cli(capsys, "--jobs", "2", "verify", "lemmas",
                           "--lmax", "2")
    assert code == 0
    assert json.loads(out)["status"] == "pass"

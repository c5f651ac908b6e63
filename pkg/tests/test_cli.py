import json

import pytest

from edgeideal.cli import EXIT_FAILED, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, main

PRISM = "6\n0 3\n0 4\n0 5\n1 2\n1 4\n1 5\n2 3\n2 5\n3 4\n"


@pytest.fixture
def edges(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_verify_path(edges, capsys):
    assert main(["verify", edges("p5.edges", "5\n0 1\n1 2\n2 3\n3 4\n")]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert all(v["passed"] is not False for v in report["verdicts"] if v["applicable"])


def test_verify_square(edges):
    assert main(["verify", edges("c4.edges", "4\n0 1\n1 2\n2 3\n0 3\n")]) == EXIT_OK


def test_verify_prism(edges):
    path = edges("prism.edges", PRISM)
    assert main(["verify", path]) == EXIT_FAILED
    assert main(["verify", path, "--c5", "subgraph"]) == EXIT_OK


def test_gen_then_invariants(tmp_path, capsys):
    out = tmp_path / "star.edges"
    assert main(["gen", "star", "--n", "4", "--seed", "1", "--out", str(out)]) == EXIT_OK
    assert main(["invariants", str(out)]) == EXIT_OK
    inv = json.loads(capsys.readouterr().out)
    assert (inv["bight"], inv["c"], inv["d"], inv["d_prime"]) == (3, 1, 3, 3)


def test_betti_output(edges, capsys):
    path = edges("k2.edges", "2\n0 1\n")
    assert main(["betti", path]) == EXIT_OK
    assert capsys.readouterr().out == "0 0 1\n1 2 1\n"
    assert main(["betti", path, "--char", "0", "--char", "2"]) == EXIT_OK
    assert capsys.readouterr().out.count("# char") == 2


def test_classify(edges, capsys):
    assert main(["classify", edges("c5.edges", "5\n0 1\n1 2\n2 3\n3 4\n0 4\n")]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["c5_free"] is False


@pytest.mark.parametrize("text", ["2\n0 0\n", "2\n0 1\n0 1\n"])
def test_parse_errors_exit_2(edges, capsys, text):
    assert main(["invariants", edges("bad.edges", text)]) == EXIT_USAGE
    assert "line" in capsys.readouterr().err


def test_usage_errors(edges):
    assert main([]) == EXIT_USAGE
    assert main(["verify", "/nonexistent/file.edges"]) == EXIT_USAGE
    assert main(["betti", edges("k2.edges", "2\n0 1\n"), "--char", "4"]) == EXIT_USAGE
    assert main(["gen", "whisker", "--n", "3"]) == EXIT_USAGE
    assert main(["suite", "--corpus", "/nonexistent"]) == EXIT_USAGE


def test_resource_exit_3(edges, monkeypatch):
    from edgeideal import config

    saved = config.CUTOFFS
    try:
        config.set_cutoffs(decomposability=3)
        assert main(["search", "dq", "--max-n", "6", "--budget", "1"]) == EXIT_RESOURCE
    finally:
        config.CUTOFFS = saved


def test_search(capsys):
    assert main(["search", "dq", "--max-n", "5", "--budget", "0", "--seed", "3"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["counterexample"] is None


def test_suite_directory(tmp_path, capsys):
    (tmp_path / "a.edges").write_text("5\n0 1\n1 2\n2 3\n3 4\n")
    (tmp_path / "b.edges").write_text("4\n0 1\n1 2\n2 3\n0 3\n")
    assert main(["suite", "--corpus", str(tmp_path), "--char", "0", "--char", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "a.edges" in out and "# 2 graphs, 0 with failures" in out
    (tmp_path / "c.edges").write_text(PRISM)
    assert main(["suite", "--corpus", str(tmp_path)]) == EXIT_FAILED
    assert main(["suite", "--corpus", str(tmp_path), "--c5", "subgraph"]) == EXIT_OK

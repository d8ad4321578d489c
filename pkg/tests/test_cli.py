import json

import pytest

from ctfpolys import IdentityCheck, IdentityReport, build_graph, format_graph_text
from ctfpolys.cli import main

P8_TEXT = "v 3\ne 0 2\ne 0 1\ne 1 2\ne 0 1\ne 1 2\n"


@pytest.fixture()
def p8_file(tmp_path):
    path = tmp_path / "p8.g"
    path.write_text(P8_TEXT)
    return str(path)


def test_count_command(p8_file, capsys):
    code = main(["count", p8_file, "--family", "kappa_mod", "--p", "3", "--q", "3"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "12"


def test_count_with_group(p8_file, capsys):
    code = main(
        ["count", p8_file, "--family", "kappa_mod", "--p", "4", "--q", "2",
         "--group", "2,2"]
    )
    assert code == 0
    first = capsys.readouterr().out
    main(["count", p8_file, "--family", "kappa_mod", "--p", "4", "--q", "2"])
    assert capsys.readouterr().out == first


def test_classes_command(p8_file, capsys):
    code = main(["classes", p8_file, "--relation", "cut-eulerian"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("8 classes")

    code = main(["--format", "json", "classes", p8_file, "--relation", "cut",
                 "--filter", "acyclic"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["class_count"] == 2
    assert all(len(cls["representative"]) == 5 for cls in payload["classes"])


def test_polys_command(p8_file, capsys):
    code = main(["polys", p8_file])
    assert code == 0
    out = capsys.readouterr().out
    assert "tutte" in out and "y^3+x^2+2*x*y+2*y^2+x+y" in out

    code = main(["--format", "json", "polys", p8_file])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["tutte"]["monomials"] == [
        [2, 0, "1"], [1, 1, "2"], [1, 0, "1"], [0, 3, "1"], [0, 2, "2"], [0, 1, "1"],
    ]


def test_verify_command(p8_file, capsys):
    code = main(["verify", p8_file])
    out = capsys.readouterr().out
    assert code == 0
    assert "T1b" in out and "fail" not in out


def test_verify_exit_codes_with_failing_stub(p8_file, monkeypatch, capsys):
    import ctfpolys.cli as cli

    def fake_verify(graph):
        return IdentityReport(
            graph,
            (IdentityCheck("T1b", "stub", "fail", "crafted failure"),),
        )

    monkeypatch.setattr(cli, "verify_graph", fake_verify)
    code = main(["verify", p8_file])
    assert code == 2
    assert "crafted failure" in capsys.readouterr().out


def test_verify_operational_error_is_exit_1(tmp_path, capsys):
    code = main(["verify", str(tmp_path / "missing.g")])
    assert code == 1
    assert "error:" in capsys.readouterr().err

    bad = tmp_path / "bad.g"
    bad.write_text("v x\n")
    assert main(["verify", str(bad)]) == 1

    big = tmp_path / "big.g"
    big.write_text(format_graph_text(build_graph(2, [(0, 1)] * 13)))
    assert main(["verify", str(big)]) == 1


def test_corpus_command(capsys):
    code = main(["corpus", "--max-edges", "1", "--loops"])
    assert code == 0
    out = capsys.readouterr().out
    assert "0 with failures" in out


def test_example_command(capsys):
    code = main(["example"])
    assert code == 0
    out = capsys.readouterr().out
    assert "T = y^3+x^2+2*x*y+2*y^2+x+y" in out
    assert "kappa(2,2) = 2" in out
    assert "|O_ce| = 8" in out
    assert "#[O_ce] = 2" in out
    assert "states kappa(2,2) = #[O_ce] = 0" in out


def test_output_is_deterministic(p8_file, capsys):
    main(["example"])
    first = capsys.readouterr().out
    main(["example"])
    assert capsys.readouterr().out == first

    main(["--format", "json", "polys", p8_file])
    first = capsys.readouterr().out
    main(["--format", "json", "polys", p8_file])
    assert capsys.readouterr().out == first


def test_budget_override(tmp_path, capsys):
    path = tmp_path / "star13.g"
    path.write_text(format_graph_text(build_graph(14, [(0, k) for k in range(1, 14)])))
    assert main(["count", str(path), "--family", "tau_mod", "--p", "2"]) == 0
    assert capsys.readouterr().out.strip() == "1"

    path21 = tmp_path / "star21.g"
    path21.write_text(format_graph_text(build_graph(22, [(0, k) for k in range(1, 22)])))
    assert main(["count", str(path21), "--family", "tau_mod", "--p", "1"]) == 1
    capsys.readouterr()
    assert main(["--budget", "21", "count", str(path21), "--family", "tau_mod", "--p", "1"]) == 0
    assert capsys.readouterr().out.strip() == "0"

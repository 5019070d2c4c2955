"""End-to-end tests of the command-line interface, including exit codes."""

import json

import pytest

from setincl.cli import main


def run(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_spectrum_table(capsys):
    code, out, _ = run(["spectrum", "4", "1", "2"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 5
    assert lines[0].split() == ["√6", "1"]
    assert lines[-1].split() == ["-√6", "1"]


def test_spectrum_line_table(capsys):
    code, out, _ = run(["spectrum", "4", "1", "2", "--line"], capsys)
    assert code == 0
    values = [line.split()[0] for line in out.strip().split("\n")]
    assert values == ["3", "2", "0", "-1", "-2"]


def test_spectrum_surd_rendering(capsys):
    code, out, _ = run(["spectrum", "5", "1", "3", "--line"], capsys)
    assert code == 0
    assert "(5+√21)/2" in out and "(5-√21)/2" in out


def test_spectrum_json_schema(capsys):
    code, out, _ = run(["spectrum", "5", "2", "3", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert [entry["value"]["kind"] for entry in data] == ["int"] * 6
    assert sum(int(entry["multiplicity"]) for entry in data) == 20


def test_spectrum_csv(capsys):
    code, out, _ = run(["spectrum", "4", "1", "2", "--format", "csv"], capsys)
    assert code == 0
    rows = out.strip().split("\n")
    assert rows[0] == "value,multiplicity"
    assert len(rows) == 6


def test_spectrum_usage_error(capsys):
    code, _, err = run(["spectrum", "4", "2", "2"], capsys)
    assert code == 64
    assert "error" in err


def test_spectrum_canonicalization_notice(capsys):
    code, out, err = run(["spectrum", "5", "3", "4"], capsys)
    assert code == 0
    assert "canonicalized to (5,1,2)" in err
    assert "2√2" in out  # largest eigenvalue sqrt(8) of the reduced graph


def test_spectrum_out_file(tmp_path, capsys):
    target = tmp_path / "spec.json"
    code, out, _ = run(
        ["spectrum", "4", "1", "2", "--format", "json", "--out", str(target)], capsys
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())


def test_verify_pass(capsys):
    code, out, _ = run(["verify", "5", "2", "3"], capsys)
    assert code == 0
    assert "PASS" in out


def test_verify_line_pass(capsys):
    code, out, _ = run(["verify", "5", "1", "3", "--line"], capsys)
    assert code == 0
    assert "PASS" in out


def test_verify_negative_control(capsys):
    code, out, _ = run(
        ["verify", "4", "1", "2", "--inject-perturbation", "1e-4"], capsys
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_cap_exit(capsys):
    code, _, err = run(["verify", "10", "2", "3", "--max-vertices", "50"], capsys)
    assert code == 2
    assert "cap" in err


def test_aut_report(capsys):
    code, out, _ = run(["aut", "4", "1", "3", "--brute-force"], capsys)
    assert code == 0
    assert "Sym(4)xZ2" in out and "order: 48" in out and "agree" in out


def test_aut_json(capsys):
    code, out, _ = run(["aut", "5", "2", "3", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data == {
        "kind": "Sym(5)xZ2",
        "order": "240",
        "generators": 3,
        "verified_brute_force": None,
    }


def test_aut_brute_force_cap(capsys):
    code, _, err = run(["aut", "7", "2", "3", "--brute-force"], capsys)
    assert code == 2
    assert "cap" in err


def test_orbits(capsys):
    assert run(["orbits", "4", "1", "2", "--on", "edges"], capsys)[:2] == (
        0,
        "orbits on edges: 1\n",
    )
    assert run(["orbits", "4", "1", "2", "--on", "arcs"], capsys)[:2] == (
        0,
        "orbits on arcs: 2\n",
    )
    assert run(["orbits", "5", "2", "3", "--on", "arcs"], capsys)[:2] == (
        0,
        "orbits on arcs: 1\n",
    )


def test_export_edgelist(tmp_path, capsys):
    target = tmp_path / "g.edges"
    code, _, _ = run(["export", "3", "1", "2", "--out", str(target)], capsys)
    assert code == 0
    lines = target.read_text().strip().split("\n")
    assert lines[0] == "p 6 6" and len(lines) == 7


def test_export_graph6_stdout(capsys):
    code, out, _ = run(["export", "4", "1", "2", "--format", "graph6"], capsys)
    assert code == 0
    assert out.strip()


def test_scheme_check(capsys):
    code, out, _ = run(["scheme", "6", "2", "--check"], capsys)
    assert code == 0
    assert "PASS" in out


def test_scheme_table(capsys):
    code, out, _ = run(["scheme", "5", "2"], capsys)
    assert code == 0
    assert "p^s_(0,1)" in out


def test_scheme_precondition(capsys):
    code, _, err = run(["scheme", "5", "3", "--check"], capsys)
    assert code == 64
    assert "error" in err


def test_scheme_cap(capsys):
    code, _, _ = run(["scheme", "16", "8", "--check", "--max-dim", "100"], capsys)
    assert code == 2


def test_env_var_cap(monkeypatch, capsys):
    monkeypatch.setenv("SETINCL_BRUTE_CAP", "5")
    code, _, err = run(["aut", "4", "1", "2", "--brute-force"], capsys)
    assert code == 2 and "cap" in err


def test_unknown_subcommand(capsys):
    assert run(["bogus"], capsys)[0] == 64


def test_bad_integer_argument(capsys):
    assert run(["spectrum", "four", "1", "2"], capsys)[0] == 64

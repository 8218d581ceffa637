"""Command-line behaviour: tables, verification suites, exit codes."""

import json
import subprocess
import sys

import pytest

from genocchi import cli
from genocchi.errors import DenominatorVanishes


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classical_table(capsys):
    code, out, _ = run(capsys, "classical", "--n-max", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,G_n"
    assert "12,2073" in lines and "6,-3" in lines


def test_generalized_classical(capsys):
    code, out, _ = run(capsys, "classical", "--d", "3", "--char", "quadratic", "--n", "1")
    assert code == 0
    assert out.splitlines()[1] == "1,1,3,quadratic(3),0,-2"


def test_q_values(capsys):
    code, out, _ = run(capsys, "q", "--d", "1", "--r", "1", "--n", "1", "--q", "1/2")
    assert code == 0
    assert out.splitlines()[1].endswith(",-2/3,-4/3")
    code, out, _ = run(capsys, "q", "--backend", "symbolic", "--n", "1")
    assert out.splitlines()[1].endswith(",-1/(1+q),-2/(1+q)")


def test_barnes_unit_weights_match_q(capsys):
    _, q_out, _ = run(capsys, "q", "--r", "2", "--d", "3", "--char", "quadratic", "--q", "1/3")
    _, b_out, _ = run(capsys, "barnes", "--w", "1,1", "--d", "3", "--char", "quadratic",
                      "--q", "1/3")
    q_rows = [r.split(",") for r in q_out.splitlines()[1:]]
    b_rows = [r.split(",") for r in b_out.splitlines()[1:]]
    assert [r[-2:] for r in q_rows] == [r[-2:] for r in b_rows]


def test_hq_json(capsys):
    code, out, _ = run(capsys, "hq", "--r", "1", "--h", "2", "--n", "0", "--q", "1/2",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["command"] == "hq"
    assert data["rows"][0]["g"] == "4/3"


def test_float_backend_non_real_character(capsys, tmp_path):
    path = tmp_path / "chi5.json"
    path.write_text(json.dumps({"modulus": 5, "values": [0, 1, [1, 4], [3, 4], [1, 2]]}))
    code, out, _ = run(capsys, "q", "--backend", "float", "--q", "0.5", "--char", str(path),
                       "--n", "1")
    assert code == 0
    code, _, err = run(capsys, "q", "--q", "1/2", "--char", str(path))
    assert code == 2 and "not real" in err


def test_char_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "char", "enumerate", "--d", "5")
    assert code == 0 and len(out.splitlines()) == 5
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"modulus": 3, "values": [0, 1, -1]}))
    code, out, _ = run(capsys, "char", "validate", str(good))
    assert code == 0 and out.splitlines()[1].endswith("0 1 -1")


def test_verify_pass_and_summary(capsys):
    code, out, err = run(capsys, "verify", "shift", "--n-max", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["failed"] == 0 and data["summary"]["total"] == len(data["verdicts"])
    assert "passed" in err


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "classical", "--n-max", "4", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("n,G_n\n0,0\n")


# -- exit codes -------------------------------------------------------------------


def test_exit_verify_failure(capsys):
    code, _, _ = run(capsys, "verify", "distribution", "--d", "3", "--n-max", "1")
    assert code == cli.EXIT_VERIFY_FAIL


@pytest.mark.parametrize("argv", [
    ["q", "--q", "2"],
    ["q", "--q", "1/2", "--d", "4"],
    ["q"],
    ["barnes", "--q", "1/2"],
    ["barnes", "--q", "1/2", "--w", "1/2"],
    ["q", "--q", "1/2", "--n", "1", "--n-max", "2"],
    ["q", "--q", "1/2", "--x", "1/2"],
    ["verify", "prime-scan", "--n-max", "200"],
    ["char", "validate", "/nonexistent/chi.json"],
])
def test_exit_config(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == cli.EXIT_CONFIG
    assert err.startswith("qgen:")


def test_invalid_character_names_residues(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"modulus": 5, "values": [0, 1, 1, -1, 1]}))
    code, _, err = run(capsys, "char", "validate", str(bad))
    assert code == cli.EXIT_CONFIG
    assert "residues" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        cli.main(["q", "--format", "xml"])
    assert info.value.code == 2


def test_exit_compute(capsys, monkeypatch):
    def boom(params):
        raise DenominatorVanishes("1 + q^3 vanishes")
    monkeypatch.setattr(cli, "evaluate", boom)
    code, _, err = run(capsys, "q", "--q", "1/2")
    assert code == cli.EXIT_COMPUTE
    assert "computation error" in err


def test_exit_guard(capsys):
    code, _, err = run(capsys, "q", "--q", "1/2", "--d", "3", "--r", "3", "--guard", "10")
    assert code == cli.EXIT_GUARD and "guard" in err


# -- determinism ----------------------------------------------------------------------


@pytest.mark.parametrize("argv", [
    ["classical", "--n-max", "20"],
    ["q", "--backend", "symbolic", "--r", "2", "--d", "3", "--char", "quadratic"],
    ["barnes", "--w", "1,2", "--q", "1/3", "--format", "json"],
    ["verify", "oracle", "--n-max", "2", "--d", "3"],
    ["verify", "pascal", "--n-max", "6"],
])
def test_repeated_runs_identical(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "genocchi", "classical", "--n-max", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "n,G_n\n0,0\n1,1\n2,-1\n"


def test_verify_examples(capsys):
    code, out, err = run(capsys, "verify", "bridge")
    assert code == 0 and "15/15" in err
    code, out, _ = run(capsys, "verify", "prime-scan", "--n-max", "100", "--format", "json")
    assert code == 0 and json.loads(out)["verdicts"][0]["lhs"] == "6,8"
    code, out, _ = run(capsys, "verify", "limit", "--d", "1", "--r", "1", "--format", "json")
    lhs = [v["lhs"] for v in json.loads(out)["verdicts"] if v["params"]["x"] == 0]
    assert code == 0 and lhs == ["1", "-1", "0", "1", "0", "-3", "0", "17"]


def test_small_tables(capsys):
    code, out, _ = run(capsys, "classical", "--n-max", "0")
    assert out == "n,G_n\n0,0\n"
    code, out, _ = run(capsys, "classical", "--r", "1", "--d", "3", "--char", "quadratic",
                       "--n-max", "1")
    assert out.splitlines()[-1].endswith(",-2")
    code, out, _ = run(capsys, "char", "enumerate", "--d", "1")
    assert len(out.splitlines()) == 2

import json
import subprocess
import sys

from braidlogic import cli
from braidlogic.braids import BraidWord
from braidlogic.markov import parse_certificate, replay

from test_axioms import FreeGroupModel


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "s * T(s)")[:2] == (0, "1 2\n")
    assert run(capsys, "eval", "s * S")[:2] == (0, "\n")
    assert run(capsys, "eval", "T^2(S)")[:2] == (0, "-3\n")


def test_syntax_error_exits_2(capsys):
    code, out, err = run(capsys, "eval", "s * (S")
    assert code == 2 and out == ""
    assert "offset 6" in err
    code, _, err = run(capsys, "eval", "T^9999999(s)")
    assert code == 2 and "exceeds" in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "mirror", "T(s)", "--width", "2")[0] == 2
    assert run(capsys, "quote", "1 x")[0] == 2
    assert run(capsys, "markov", "s", "1", "--max-depth", "0")[0] == 2
    assert run(capsys, "axioms", "--cases", "0")[0] == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_quote(capsys):
    assert run(capsys, "quote", "1 -3")[:2] == (0, "(s * T(T(S)))\n")
    assert run(capsys, "quote", "")[:2] == (0, "1\n")


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "s*T(s)*s")
    assert code == 0
    assert json.loads(out) == {"width": 3, "infimum": 1, "factors": [], "word": "1 2 1"}
    code, out, _ = run(capsys, "normalize", "S", "--width", "3")
    data = json.loads(out)
    assert data["infimum"] == -1 and data["width"] == 3


def test_eq(capsys):
    assert run(capsys, "eq", "s*T(s)*s", "T(s)*s*T(s)")[:2] == (0, "equal\n")
    assert run(capsys, "eq", "s", "S")[:2] == (1, "unequal\n")
    assert run(capsys, "eq", "1", "s*S")[:2] == (0, "equal\n")


def test_markov_examples(capsys):
    code, out, _ = run(capsys, "markov", "s", "1")
    assert code == 0 and out.startswith("Equivalent (1 move)\n")
    code, out, _ = run(capsys, "markov", "s*s*s", "1")
    assert code == 1 and out.startswith("Distinct (jones)")
    code, out, _ = run(capsys, "markov", "s*s*s", "T(s)*s*s*s*T(S)")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Equivalent (1 move)" and lines[2] == "conj +2"
    cert = parse_certificate("\n".join(lines[1:]))
    assert replay(cert)


def test_markov_json_and_certificate_file(capsys, tmp_path):
    path = tmp_path / "cert.txt"
    code, out, _ = run(capsys, "markov", "s*T(s)", "1", "--json", "--certificate", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "Equivalent" and data["moves"] == 2
    cert = parse_certificate(path.read_text())
    assert replay(cert) and len(cert) == 2
    assert cert.start == BraidWord([1, 2]) and cert.end == BraidWord()


def test_markov_unknown_exits_3(capsys):
    code, out, _ = run(capsys, "markov", "s*s", "T(s)*s*T(s)", "--max-depth", "1", "--json")
    assert code == 3
    assert json.loads(out)["verdict"] == "Unknown"


def test_markov_json_distinct(capsys):
    code, out, _ = run(capsys, "markov", "s*s*s", "S*S*S", "--json")
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] == "Distinct" and data["invariant"] == "jones"
    assert data["left"] != data["right"]


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "1", "--components", "--width", "2")
    assert (code, json.loads(out)) == (0, {"components": 2})
    _, out, _ = run(capsys, "invariants", "s*s*s", "--alexander")
    assert json.loads(out) == {"alexander": "t^2 - t + 1"}
    _, out, _ = run(capsys, "invariants", "s*s*s", "--jones")
    assert json.loads(out)["jones"] not in ("1", "")
    _, out, _ = run(capsys, "invariants", "s")
    assert set(json.loads(out)) == {"components", "writhe", "alexander", "jones"}
    _, out, _ = run(capsys, "invariants", "s", "--bracket")
    assert json.loads(out) == {"bracket": "-A^3"}


def test_mirror(capsys):
    assert run(capsys, "mirror", "s*T(S)", "--width", "3")[:2] == (0, "2 -1\n")
    assert run(capsys, "mirror", "s")[:2] == (0, "1\n")


def test_axioms_default_run(capsys):
    code, out, _ = run(capsys, "axioms")
    reports = json.loads(out)
    assert code == 0 and len(reports) == 14
    assert all(r["failures"] == [] and r["cases"] == 1000 for r in reports)


def test_axioms_are_byte_identical_for_a_seed(capsys):
    _, first, _ = run(capsys, "axioms", "--seed", "9", "--cases", "40")
    _, second, _ = run(capsys, "axioms", "--seed", "9", "--cases", "40")
    assert first == second
    assert all(r["seed"] == 9 for r in json.loads(first))


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDLOGIC_SEED", "17")
    _, out, _ = run(capsys, "axioms", "--cases", "5")
    assert all(r["seed"] == 17 for r in json.loads(out))
    _, out, _ = run(capsys, "axioms", "--cases", "5", "--seed", "3")
    assert all(r["seed"] == 3 for r in json.loads(out))
    monkeypatch.setenv("BRAIDLOGIC_SEED", "abc")
    assert run(capsys, "axioms", "--cases", "5")[0] == 2


def test_injected_fault_gives_nonzero_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli, "MODEL_FACTORY", FreeGroupModel)
    code, out, _ = run(capsys, "axioms", "--cases", "50")
    assert code == 1
    failed = [r["axiom"] for r in json.loads(out) if r["failures"]]
    assert "braid.relation" in failed


def test_batch(capsys, tmp_path):
    path = tmp_path / "pairs.txt"
    path.write_text("# pairs\ns*T(s)*s ; T(s)*s*T(s)\n\ns ; S   # comment\ns * ( ; 1\n")
    code, out, _ = run(capsys, "batch", str(path), "--command", "eq")
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["line"] for r in records] == [2, 4, 5]
    assert [r["exit"] for r in records] == [0, 1, 2]
    assert records[0]["result"] == "equal"
    assert "error" in records[2]["result"]
    assert code == 2


def test_batch_markov_and_invariants(capsys, tmp_path):
    path = tmp_path / "terms.txt"
    path.write_text("s ; 1\ns*s*s ; 1\n")
    code, out, _ = run(capsys, "batch", str(path), "--command", "markov")
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["result"]["verdict"] for r in records] == ["Equivalent", "Distinct"]
    assert code == 1
    path.write_text("s*s*s\n")
    code, out, _ = run(capsys, "batch", str(path), "--command", "invariants")
    assert code == 0 and json.loads(out)["result"]["alexander"] == "t^2 - t + 1"


def test_batch_missing_file(capsys, tmp_path):
    assert run(capsys, "batch", str(tmp_path / "nope.txt"))[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "braidlogic", "eval", "s_2 * S"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "2 -1\n"


def test_json_output_is_stable(capsys):
    outs = {run(capsys, "markov", "s*T(s)*T(T(s))", "1", "--json")[1] for _ in range(3)}
    assert len(outs) == 1

import io
import subprocess
import sys

from conftest import FIXTURES
from defrev.cli import main


def fx(name, ext="dlt"):
    return str(FIXTURES / f"{name}.{ext}")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_prove(capsys):
    assert run(capsys, "prove", fx("eleven_rules"), "--lit", "p") == (0, "true\n", "")
    assert run(capsys, "prove", fx("eleven_rules"), "--lit", "c", "--tag=-phi")[1] == "true\n"
    assert run(capsys, "prove", fx("eleven_rules"), "--lit", "~p")[1] == "false\n"


def test_extension_and_tags(capsys):
    code, out, _ = run(capsys, "extension", fx("team"))
    assert code == 0 and out == "+partial: p\n-partial: ~p\n"
    code, out, _ = run(capsys, "extension", fx("team"), "--all-tags")
    assert out.splitlines()[0] == "p\t+∂,+ω,+σ,+Σ\t-Δ,-φ"


def test_beliefset(capsys):
    assert run(capsys, "beliefset", fx("harper"))[1] == "+{p, q} -{~p, ~q}\n"


def test_classify(capsys):
    assert run(capsys, "classify", fx("eleven_rules"), "--lit", "p")[1] == "attack_premises\n"
    assert run(capsys, "classify", fx("unreachable"), "--lit", "p", "--op", "expand")[1] == "infeasible_unreachable\n"
    code, out, _ = run(capsys, "classify", fx("taut"), "--lit", "p", "--op", "refutability")
    assert (code, out) == (0, "p\ttautological\t-\t27\n")


def test_revise_by_literal(capsys):
    code, out, _ = run(capsys, "revise", fx("team"), "--lit", "~p", "--strategy", "team_defeater")
    lines = out.splitlines()
    assert code == 0
    assert lines[:7] == [
        "status: ok",
        "instance: omega_plus_sigma_minus",
        "strategy: team_defeater",
        "+ (r3,r1)",
        "+ (r4,r2)",
        "- (r1,r3)",
        "- (r2,r4)",
    ]
    assert "r3 > r1." in lines and "r4 > r2." in lines


def test_revise_with_winner(capsys):
    out = run(capsys, "revise", fx("team"), "--lit", "~p", "--winner", "r4")[1]
    assert {"r1 > r3.", "r4 > r1.", "r4 > r2."} <= set(out.splitlines())


def test_contract_and_expand(capsys):
    out = run(capsys, "contract", fx("contr5"), "--lit", "p")[1]
    assert "- (r1,r3)" in out.splitlines()
    out = run(capsys, "expand", fx("three_can1"), "--lit", "p", "--relax")[1]
    assert "+ (r1,r3)" in out.splitlines()
    code, out, _ = run(capsys, "contract", fx("taut"), "--lit", "p")
    assert code == 0 and out.startswith("status: infeasible\n")


def test_search(capsys):
    code, out, _ = run(capsys, "search", fx("three_can1"), "--goal", "+partial p", "--all")
    blocks = out.split("\n\n")
    assert code == 0 and len(blocks) == 2
    assert "+ (r1,r3)" in blocks[0] and "+ (r5,r7)" in blocks[1]
    code, _, _ = run(capsys, "search", fx("contr_contr_taut"), "--goal", "-partial p", "--budget", "4")
    assert code == 3


def test_sat_and_oracle(capsys, tmp_path):
    emitted = tmp_path / "g.dlt"
    code, out, _ = run(capsys, "sat", fx("taut_clause", "cnf"), "--emit-theory", str(emitted))
    assert code == 0 and out.startswith("s SATISFIABLE\nv ")
    assert "gp_1: ~_c1 => _goal." in emitted.read_text()
    assert run(capsys, "sat", fx("forced_unsat", "cnf"))[1] == "s UNSATISFIABLE\n"
    assert run(capsys, "oracle", fx("all_clauses", "cnf"))[1] == "s UNSATISFIABLE\n"
    assert run(capsys, "sat", fx("all_clauses", "cnf"), "--budget", "1")[0] == 3
    out = run(capsys, "gamma", fx("forced_unsat", "cnf"))[1]
    assert out.count("=>") == 16


def test_agm(capsys, tmp_path):
    code, out, _ = run(
        capsys, "agm", fx("levi"), "--lit", "p", "--postulate", "LI", "--witness-dir", str(tmp_path)
    )
    path = tmp_path / "LI.dlt"
    assert code == 0 and out == f"LI\tviolated\t{path}\n"
    assert path.read_text().startswith("# D*p: ")
    code, out, _ = run(capsys, "agm", fx("levi"), "--lit", "p")
    ids = [line.split("\t")[0] for line in out.splitlines()]
    assert "K+6" in ids and "K-7" not in ids and "K+5" not in ids
    assert run(capsys, "agm", fx("levi"), "--lit", "p", "--postulate", "K-7")[0] == 1
    assert run(capsys, "agm", fx("levi"), "--lit", "p", "--postulate", "K-99")[0] == 1


def test_fmt(capsys, tmp_path):
    f = tmp_path / "t.dlt"
    f.write_text("z: b => a.\nr: => ~a.\nz > r.\nfacts: b.\n")
    assert run(capsys, "fmt", str(f))[1] == "facts: b.\nr: => ~a.\nz: b => a.\nz > r.\n"
    assert run(capsys, "fmt", str(f), "--in-place") == (0, "", "")
    assert f.read_text() == "facts: b.\nr: => ~a.\nz: b => a.\nz > r.\n"


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("r: => p.\n"))
    assert run(capsys, "prove", "-", "--lit", "p")[1] == "true\n"


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "nope")[0] == 1
    assert run(capsys, "prove", fx("team"))[0] == 1
    assert run(capsys, "prove", fx("team"), "--lit", "p", "--budget", "0")[0] == 1
    assert run(capsys, "prove", fx("team"), "--lit", "1x")[0] == 1
    code, _, err = run(capsys, "prove", str(tmp_path / "missing.dlt"), "--lit", "p")
    assert code == 2 and err.startswith("defrev: ")
    bad = tmp_path / "bad.dlt"
    bad.write_text("r: => p\n")
    code, _, err = run(capsys, "prove", str(bad), "--lit", "p")
    assert code == 2 and "2:1:" in err
    strict = tmp_path / "strict.dlt"
    strict.write_text("facts: a.\ns: a -> p.\nr: => ~p.\n")
    assert run(capsys, "contract", str(strict), "--lit", "p")[0] == 2
    assert run(capsys, "classify", fx("contr_contr_taut"), "--lit", "p", "--op", "refutability", "--budget", "100")[0] == 3


def test_deterministic(capsys):
    a = run(capsys, "search", fx("three_can1"), "--goal", "+partial p", "--all")
    b = run(capsys, "search", fx("three_can1"), "--goal", "+partial p", "--all")
    assert a == b


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "defrev", "prove", fx("eleven_rules"), "--lit", "p"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout == "true\n"

import json

import pytest

import fixmahon as fm
from fixmahon import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_f3_word(capsys):
    code, out, _ = run(capsys, "f3", "--word", "1 2 0 0 1")
    assert code == 0
    assert out == "0 0 1 2 1\n"


def test_transforms_match_library(capsys):
    word = "5 0 1 2 0 0 3 6 0 7 4"
    cases = {
        "phi": fm.phi,
        "psi": fm.psi,
        "f3": fm.f3,
        "f3-inv": fm.f3_inv,
    }
    for name, func in cases.items():
        code, out, _ = run(capsys, name, "--word", word)
        assert code == 0
        assert out.strip() == fm.format_word(func(fm.parse_word(word)))


def test_perm_transforms_match_library(capsys):
    code, out, _ = run(capsys, "phi", "--perm", "1 3 2 4")
    assert (code, out.strip()) == (0, "1 4 3 2")
    code, out, _ = run(capsys, "psi", "--perm", "1 4 3 2")
    assert (code, out.strip()) == (0, "1 3 2 4")
    code, out, _ = run(capsys, "f3", "--perm", "1 2 4 3")
    assert (code, out.strip()) == (0, "4 2 3 1")
    code, out, _ = run(capsys, "f3-inv", "--perm", "4 2 3 1")
    assert (code, out.strip()) == (0, "1 2 4 3")


def test_zder_roundtrip(capsys):
    code, out, _ = run(capsys, "zder", "--perm", "8 2 1 3 5 6 4 9 7")
    assert (code, out.strip()) == (0, "5 0 1 2 0 0 3 6 4")
    code, out, _ = run(capsys, "zder-inv", "--word", "5 0 1 2 0 0 3 6 4")
    assert (code, out.strip()) == (0, "8 2 1 3 5 6 4 9 7")


def test_stats_perm_text(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "8 2 1 3 5 6 4 9 7")
    assert code == 0
    lines = out.splitlines()
    assert "maj=17" in lines
    assert "maf=13" in lines
    assert "FIX={2,5,6}" in lines
    assert "DEZ={1,4,8}" in lines
    assert "zder=5 0 1 2 0 0 3 6 4" in lines


def test_stats_word_text(capsys):
    code, out, _ = run(capsys, "stats", "--word", "5 0 1 2 0 0 3 6 4")
    lines = out.splitlines()
    assert code == 0
    assert "maj=13" in lines
    assert "mafz=13" in lines
    assert "RISE_bullet={3,4,5,7,9}" in lines
    assert "Zero={2,5,6}" in lines


def test_stats_word_without_defined_modified_rise(capsys):
    code, out, _ = run(capsys, "stats", "--word", "1 2 1")
    assert code == 0
    assert "RISE_bullet=n/a" in out.splitlines()


def test_json_schema_and_key_order(capsys):
    code, out, _ = run(capsys, "phi", "--word", "0 3 0 1 2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == ["input", "operation", "result", "stats"]
    assert obj["operation"] == "phi"
    assert obj["result"] == "0 3 1 2 0"
    assert obj["stats"]["Pos"] == "3 1 2"
    # round trip through the documented schema
    assert json.loads(json.dumps(obj)) == obj


def test_table_formats(capsys):
    expected = fm.joint_distribution(3, ("fix", "des", "maj"))
    code, out, _ = run(capsys, "table", "--n", "3")
    assert code == 0
    assert out.rstrip("\n") == expected.to_text()
    code, out, _ = run(capsys, "table", "--n", "3", "--format", "csv")
    assert out.rstrip("\n") == expected.to_csv().rstrip("\n")
    code, out, _ = run(capsys, "table", "--n", "3", "--format", "json")
    assert json.loads(out) == expected.to_json_dict()


def test_table_custom_stats(capsys):
    code, out, _ = run(
        capsys, "table", "--n", "2", "--stats", "fix,exc,maj", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["counts"] == {"0,1,1": 1, "2,0,0": 1}


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "thm-1.1", "--n", "1")
    assert code == 0
    assert "PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--claim", "cor-1.5", "--n", "3", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["claim"] == "cor-1.5" and obj["pass"] is True


def test_verify_failure_exit_one(capsys, monkeypatch):
    failing = fm.VerificationReport(
        "thm-1.1", {"max_n": 2}, 3, False, {"input": "0 1"}
    )
    monkeypatch.setitem(cli.enumeration.CLAIMS, "thm-1.1", lambda **kw: failing)
    code, out, _ = run(capsys, "verify", "--claim", "thm-1.1", "--n", "2")
    assert code == 1
    assert "FAIL" in out and "counterexample" in out


def test_verify_identity_claims(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "id-1.27", "--max-n", "3")
    assert code == 0 and "PASS" in out
    code, out, _ = run(
        capsys, "verify", "--claim", "id-1.26", "--u", "2", "--t", "2"
    )
    assert code == 0 and "PASS" in out


def test_verify_jobs_flag_does_not_change_output(capsys):
    _, out1, _ = run(capsys, "verify", "--claim", "thm-1.1", "--n", "3", "--jobs", "1")
    _, out4, _ = run(capsys, "verify", "--claim", "thm-1.1", "--n", "3", "--jobs", "4")
    assert out1 == out4


def test_malformed_word_exits_two(capsys):
    code, out, err = run(capsys, "stats", "--word", "1 zz 2")
    assert code == 2
    assert out == ""
    assert "zz" in err


def test_domain_error_exits_two(capsys):
    code, _, err = run(capsys, "zder-inv", "--word", "0 1")
    assert code == 2
    assert "derangement" in err


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "stats")[0] == 2  # missing payload
    assert run(capsys, "verify", "--claim", "thm-9.9")[0] == 2  # unknown claim
    assert run(capsys, "nonsense")[0] == 2


def test_env_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("FIXMAHON_MAX_N", "3")
    code, _, err = run(capsys, "verify", "--claim", "thm-1.1", "--n", "5")
    assert code == 2
    assert "cap" in err
    code, _, err = run(capsys, "table", "--n", "5")
    assert code == 2
    monkeypatch.setenv("FIXMAHON_MAX_N", "nope")
    assert run(capsys, "table", "--n", "2")[0] == 2


def test_env_cap_can_raise_the_default(capsys, monkeypatch):
    monkeypatch.setenv("FIXMAHON_MAX_N", "10")
    code, out, _ = run(capsys, "table", "--n", "2", "--format", "csv")
    assert code == 0 and out.startswith("fix,des,maj,count")


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0

import json

import pytest

from blocklab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_core_on_a_core(capsys):
    code, out = run(capsys, "core", "--p", "5", "--partition", "2,2")
    assert code == 0
    assert "(2^2) is a 5-core" in out
    assert "3 4 2 0 1" in out


def test_core_with_weight(capsys):
    code, out = run(capsys, "core", "--p", "5", "--partition", "4,3,3,3,2,1,1")
    assert code == 0
    assert "weight: 3" in out
    assert "(1^2)" in out


def test_core_json(capsys):
    code, out = run(capsys, "core", "--p", "5", "--partition", "4,3,3,3,2,1,1",
                    "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["core"] == [1, 1]
    assert payload["weight"] == 3
    # lowest beads of the core sit at -7,-4,-3,-1,0 on columns 3,1,2,4,0
    assert payload["abacus"]["labels"] == [4, 1, 2, 0, 3]


def test_core_malformed_partition(capsys):
    assert run(capsys, "core", "--p", "5", "--partition", "2,3")[0] == 2
    assert run(capsys, "core", "--p", "4", "--partition", "2,1")[0] == 2


def test_block_text(capsys):
    code, out = run(capsys, "block", "--p", "5", "--core", "2,2",
                    "--format", "text")
    assert code == 0
    assert "d4: (7,2,1^5)!" in out
    assert "delta=0" in out


def test_block_lastm(capsys):
    code, out = run(capsys, "block", "--p", "11", "--core", "7,2,1,1,1,1,1")
    assert code == 0
    assert "delta=3" in out
    assert "mu_5 = (18,2^7,1^4) in d9" in out
    assert "nu_4 = (12,8,2^6,1^4) in d8" in out


def test_block_non_core_exits_2(capsys):
    assert run(capsys, "block", "--p", "3", "--core", "2,1")[0] == 2


def test_subs_pass(capsys):
    code, out = run(capsys, "subs", "--p", "5", "--core", "2,2")
    assert code == 0
    assert "verdict: PASS" in out


def test_subs_json_roundtrip(capsys):
    code, out = run(capsys, "subs", "--p", "5", "--core", "2,2",
                    "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert len(payload["members"]) == 14
    assert json.loads(json.dumps(payload)) == payload


def test_verify_small_sweep(capsys):
    code, out = run(capsys, "verify", "--primes", "3,5", "--max-core-rank", "8")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("PASS")


def test_verify_parallel_matches_serial(capsys):
    code1, out1 = run(capsys, "verify", "--primes", "3", "--max-core-rank", "6",
                      "--jobs", "1")
    code2, out2 = run(capsys, "verify", "--primes", "3", "--max-core-rank", "6",
                      "--jobs", "2")
    assert (code1, out1) == (code2, out2)


def test_verify_bad_prime(capsys):
    assert run(capsys, "verify", "--primes", "3,4")[0] == 2


def test_mull_fixpoint(capsys):
    code, out = run(capsys, "mull", "--p", "5", "--partition", "6,3,3,1,1")
    assert code == 0
    assert out.strip() == "(6,3^2,1^2)"


def test_mull_singular_exits_2(capsys):
    assert run(capsys, "mull", "--p", "3", "--partition", "1,1,1")[0] == 2


def test_matrix_full_csv(capsys):
    code, out = run(capsys, "matrix", "--p", "3", "--n", "4",
                    "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",4,3+1,2+2,2+1+1"
    assert lines[1] == "4,1,0,0,0"
    assert lines[3] == "2+2,1,0,1,0"
    assert lines[5] == "1+1+1+1,0,0,1,0"


def test_matrix_block(capsys):
    code, out = run(capsys, "matrix", "--p", "5", "--core", "2,2")
    assert code == 0
    assert len(out.strip().splitlines()) == 20


def test_matrix_needs_exactly_one_target(capsys):
    assert run(capsys, "matrix", "--p", "3")[0] == 2
    assert run(capsys, "matrix", "--p", "3", "--n", "4", "--core", "1")[0] == 2


def test_matrix_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("BLOCKLAB_MAX_N", "5")
    assert run(capsys, "matrix", "--p", "3", "--n", "6")[0] == 2


def test_matrix_weight3_refused(capsys):
    assert run(capsys, "matrix", "--p", "3", "--n", "9")[0] == 2


def test_young(capsys):
    code, out = run(capsys, "young", "--partition", "3,1")
    assert code == 0
    assert out == "###\n#\n"


def test_byte_stable_output(capsys):
    _, out1 = run(capsys, "block", "--p", "5", "--core", "2,2")
    _, out2 = run(capsys, "block", "--p", "5", "--core", "2,2")
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "m.csv"
    code, out = run(capsys, "matrix", "--p", "3", "--n", "4",
                    "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == ",4,3+1,2+2,2+1+1"


def test_unknown_command_exits_2(capsys):
    assert main(["frobnicate"]) == 2

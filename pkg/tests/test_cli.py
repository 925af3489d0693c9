import io
import json

import pytest

from src.cli.cli_core import BayonetToolkitCli
from src.models.hajos import Side

EIGHT_WORDS = ["b", "aaaab", "ba", "aaaaba", "abaa", "aaaaabaa", "aaabaaa", "aaaaaaabaaaaaaa"]


@pytest.fixture
def cli(config_manager):
    return BayonetToolkitCli(config_manager)


def test_check_code(cli):
    result = cli.run(["check-code", "aabb", "abaaa", "b", "ba"])
    assert result.verdict == "no"
    assert result.exit_code == 1
    assert "babaaabb" in result.text
    assert cli.run(["check-code", "a", "ba", "bb"]).exit_code == 0


def test_json_output(cli):
    stdout = io.StringIO()
    code = cli.main(["check-code", "a", "ab", "b", "--json"], stdout=stdout)
    document = json.loads(stdout.getvalue())
    assert code == 1
    assert document["verdict"] == "no"
    assert document["exit_code"] == 1
    witness = document["certificate"]["certificate"]
    assert sorted([witness["left"], witness["right"]]) == [["a", "b"], ["ab"]]


def test_cbc_commands(cli):
    assert cli.run(["check-cbc", *EIGHT_WORDS]).exit_code == 0
    assert cli.run(["check-cbc", "b", "ab", "ba", "--n", "3"]).exit_code == 1
    composed = cli.run(["compose", "--left", "b,ba", "--right", "b,ab", "--r", "0", "--n", "2"])
    assert composed.exit_code == 1
    assert composed.certificate["certificate"] == {"n": 2, "pairs": [[0, 0]]}
    assert cli.run(["count", "--n", "3"]).certificate["certificate"]["count"] == 48


def test_family_commands(cli):
    assert cli.run(["compatible", "b,ab", "b,ba"]).exit_code == 1
    assert cli.run(["compatible", "b,ab", "b,aba"]).exit_code == 0
    assert cli.run(["embed", "ab,abaa", "aab,ab", "--n", "5"]).exit_code == 1


def test_envelope_gives_unknown(cli):
    result = cli.run(["embed", "b,ab", "--n", "7", "--max-n", "6"])
    assert result.verdict == "unknown"
    assert result.exit_code == 2


def test_invalid_input(cli):
    assert cli.run(["no-such-command"]).exit_code == 3
    assert cli.run(["check-code", "aB"]).exit_code == 3
    assert cli.run(["inclusion", "b", "--n", "36"]).exit_code == 3


def test_hajos_commands(cli):
    result = cli.run(["hajos", "cbc", *EIGHT_WORDS])
    assert result.exit_code == 0
    sides = [step["side"] for step in result.certificate["certificate"]["steps"]]
    assert sides == [Side.DUAL.value, Side.DUAL.value]
    assert cli.run(["hajos", "number", "36"]).text == "hajos:true cbc_hajos:false"
    assert cli.run(["hajos", "number", "36"]).exit_code == 1
    assert cli.run(["hajos", "number", "30"]).exit_code == 0
    assert cli.run(["hajos", "family", "b,ba,abaa,aaabaaa", "--memberwise"]).exit_code == 0


def test_krasner_commands(cli):
    result = cli.run(["krasner", "enum", "--n", "4"])
    assert result.exit_code == 0
    assert cli.run(["krasner", "check", "--P", "0,1,2,3", "--Q", "0,4", "--n", "8"]).exit_code == 0
    assert cli.run(["krasner", "check", "--P", "0,2,4", "--Q", "0,3"]).exit_code == 1


def test_inclusion_and_completion(cli):
    result = cli.run(["inclusion", "b", "ab", "aaba", "aaab", "--n", "4"])
    assert result.exit_code == 0
    completed = cli.run(["complete", "b", "ba", "abaa", "aaabaaa"])
    assert completed.exit_code == 0
    assert completed.certificate["certificate"]["code"] == ["b", "ba", "aaaa", "abaa", "aaabaaa"]


def test_prefix_suffix_command(cli):
    assert cli.run(["prefix-suffix", "aa", "ab", "abbab", "bbaa"]).exit_code == 0
    assert cli.run(["prefix-suffix", "aaab", "aaba", "b", "ba"]).exit_code == 1


def test_verify_ambiguity(cli, tmp_path):
    path = tmp_path / "ambiguity.json"
    assert cli.run(["check-code", "aabb", "abaaa", "b", "ba", "--output", str(path)]).exit_code == 1
    verified = cli.run(["verify", "aabb", "abaaa", "b", "ba", "--certificate", str(path)])
    assert verified.exit_code == 0
    assert verified.certificate["certificate"]["kind"] == "ambiguity"


def test_verify_hajos_chain(cli, tmp_path):
    path = tmp_path / "chain.json"
    cli.run(["hajos", "cbc", *EIGHT_WORDS, "--output", str(path)])
    assert cli.run(["verify", "--certificate", str(path)]).exit_code == 0
    assert cli.run(["verify", *EIGHT_WORDS, "--certificate", str(path)]).exit_code == 0


def test_verify_rejects_tampered_factorization(cli, tmp_path):
    path = tmp_path / "factorization.json"
    path.write_text(json.dumps({"kind": "factorization", "n": 4, "P": [0, 1], "Q": [0, 1]}))
    result = cli.run(["verify", "--certificate", str(path)])
    assert result.exit_code == 1


def test_counterexample_round_trip(cli, tmp_path):
    path = tmp_path / "counterexample.json"
    result = cli.run(["counterexample", "--p1", "2", "--p2", "2", "--q1", "3", "--q2", "3", "--output", str(path)])
    assert result.exit_code == 0
    assert cli.run(["verify", "--certificate", str(path)]).exit_code == 0


def test_border_find_and_check(cli, tmp_path):
    family = tmp_path / "family.txt"
    family.write_text(" ".join(EIGHT_WORDS) + "\n")
    report_path = tmp_path / "report.json"
    assert cli.run(["border", "find", "--input", str(family), "--output", str(report_path)]).exit_code == 0
    assert cli.run(["verify", "--input", str(family), "--certificate", str(report_path)]).exit_code == 0
    checked = cli.run(["border", "check", "--input", str(family), "--P", "0,1,2,3", "--Q", "0,4"])
    assert checked.exit_code == 0


def test_family_members_must_be_cbc(cli):
    assert cli.run(["compatible", "b", "--n", "2"]).exit_code == 3
    assert cli.run(["stable", "b", "--n", "2"]).exit_code == 3
    assert cli.run(["stable", "b,ab", "--n", "2"]).exit_code == 0

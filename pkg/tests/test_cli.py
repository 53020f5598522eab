import json

import pytest

from schurweyl import cli
from schurweyl.cli import run_cli
from schurweyl.errors import BasisSolveFailure

ERROR_CASES = {
    "NotWeaklyDecreasing": ["schur-dim", "1,2", "2"],
    "NonPositiveRow": ["render", "2,0"],
    "InvalidPermutation": ["cycle-type", "1 1 2"],
    "DegreeMismatch": ["cycle-type", "(1 2)", "--degree", "2", "--conjugate-by", "2 3 1"],
    "DegreeTooLarge": ["sn-dim", "9"],
    "TooManyBoxes": ["tableaux", "13"],
    "NotQuasiIdempotent": ["qi-constant", "1*(1 2 3)"],
    "ZeroElement": ["qi-constant", "0"],
    "SizeTooLarge": ["schur-dim", "13", "2"],
    "TooManyRows": ["normalize-gl", "1,1,1", "0", "2"],
    "InvalidLabel": ["label-dim", "SL:2:[1,1]"],
    "MissingTwistRange": ["classify", "GL", "2", "--boxes", "1"],
}

JSON_CASES = [
    ["partitions", "4"],
    ["partitions", "5", "--max-rows", "2"],
    ["cycle-type", "(1 2 4)(5 6)(3)(7)", "--conjugate-by", "(1 7)"],
    ["tableaux", "3,2"],
    ["symmetrizer", "2,1"],
    ["qi-constant", "1/2*() + 1/2*(1 2)"],
    ["sn-dim", "2,2"],
    ["schur-dim", "2,1", "3"],
    ["schur-apply", "2", "1,2;3,4"],
    ["schur-weyl", "2", "3"],
    ["commutant", "2", "3"],
    ["classify", "GL", "2", "--boxes", "1", "--twists", "-1..1"],
    ["label-dim", "GL:2:[2,1]:k=-3"],
    ["normalize-gl", "5,4,2,2,2", "0", "5"],
    ["render", "3,1"],
]


def test_partitions_text():
    r = run_cli(["partitions", "3"])
    assert r.exit_code == 0
    assert r.stdout.splitlines() == ["3", "2,1", "1,1,1"]


def test_vanishing_from_cli():
    r = run_cli(["schur-dim", "1,1,1", "2"])
    assert (r.exit_code, r.stdout) == (0, "0\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["partitions", "-1"],
        ["partitions", "x"],
        ["schur-dim", "x", "2"],
        ["schur-dim", "2", "0"],
        ["schur-apply", "2", "1,2;3"],
        ["classify", "Q", "2"],
        ["classify", "GL", "2", "--twists", "3"],
        ["label-dim", "GL:2"],
        ["cycle-type", "(1 2"],
        ["qi-constant", "(1 2)"],
        ["nonsense"],
        [],
    ],
)
def test_malformed_arguments_exit_2(argv):
    r = run_cli(argv)
    assert r.exit_code == 2
    assert "usage" in r.stderr
    assert r.stdout == ""


@pytest.mark.parametrize("name", sorted(ERROR_CASES))
def test_domain_errors_exit_1(name):
    r = run_cli(ERROR_CASES[name])
    assert r.exit_code == 1
    assert r.stderr.startswith(f"error: {name}: ")
    assert r.stdout == ""


def test_error_messages_are_distinct():
    messages = {run_cli(argv).stderr for argv in ERROR_CASES.values()}
    assert len(messages) == len(ERROR_CASES)


def test_internal_solve_failure_is_reported(monkeypatch):
    def broken(y, A):
        raise BasisSolveFailure("image vector lies outside the Schur subspace")

    monkeypatch.setattr(cli, "apply_schur_functor", broken)
    r = run_cli(["schur-apply", "2", "1,0;0,1"])
    assert r.exit_code == 1
    assert r.stderr.startswith("error: BasisSolveFailure: ")


@pytest.mark.parametrize("argv", JSON_CASES, ids=lambda a: a[0])
def test_json_is_versioned_and_stable(argv):
    first = run_cli(["--json", *argv])
    second = run_cli([*argv, "--json"])
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    assert doc["schema_version"] == 1
    assert doc["command"] == argv[0]


def test_json_payloads():
    doc = json.loads(run_cli(["--json", "schur-weyl", "3", "3"]).stdout)
    assert [(e["sn_dimension"], e["schur_dimension"]) for e in doc["entries"]] == [(1, 10), (2, 8), (1, 1)]
    assert doc["total"] == doc["tensor_dimension"] == 27
    doc = json.loads(run_cli(["--json", "symmetrizer", "2,1"]).stdout)
    assert doc["quasi_idempotent_constant"] == "3/4"
    doc = json.loads(run_cli(["--json", "cycle-type", "2 4 3 1 6 5 7"]).stdout)
    assert doc["cycles"] == [[1, 2, 4], [5, 6], [3], [7]]
    assert doc["cycle_type"] == [3, 2, 1, 1]
    doc = json.loads(run_cli(["--json", "commutant", "2", "3"]).stdout)
    assert doc["commutant_dimension"] == doc["permutation_span_dimension"] == doc["sum_f_squared"] == 5


def test_text_outputs():
    assert run_cli(["cycle-type", "2 4 3 1 6 5 7"]).stdout == "(1 2 4)(5 6)(3)(7)\n3,2,1,1\n"
    assert run_cli(["tableaux", "2,1"]).stdout == "1 2 / 3\n1 3 / 2\n"
    assert run_cli(["tableaux", "3,2", "--count"]).stdout == "5\n"
    assert run_cli(["sn-dim", "2,1"]).stdout == "2\n"
    assert run_cli(["schur-apply", "2", "1,2;3,4"]).stdout == "1,2,4;6,10,16;9,12,16\n"
    assert run_cli(["normalize-gl", "1,1,1,1,1", "0", "5"]).stdout == "\t1\n"
    assert run_cli(["label-dim", "SL:2:[2]"]).stdout == "SL:2:[2]\t3\n"
    assert run_cli(["classify", "Sn", "3"]).stdout == "Sn:3:[3]\nSn:3:[2,1]\nSn:3:[1,1,1]\n"
    assert run_cli(["classify", "U", "2", "--boxes", "0", "--twists", "-1..0"]).stdout == "U:2:[]:k=-1\nU:2:[]:k=0\n"


def test_conjugation_pads_cycle_notation():
    r = run_cli(["cycle-type", "(1 2)", "--conjugate-by", "(2 3)"])
    assert r.exit_code == 0
    assert r.stdout.splitlines()[-1] == "(1 3)(2)"


def test_main_writes_streams(capsys):
    assert cli.main(["render", "2,1"]) == 0
    assert capsys.readouterr().out == "[ ][ ]\n[ ]\n"
    assert cli.main(["partitions", "-1"]) == 2
    assert "usage" in capsys.readouterr().err

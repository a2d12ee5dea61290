"""The command line interface, driven in process."""

import json

import pytest

from hopfcheck import cli
from hopfcheck.hopf_core import hopf_from_dict, verify_hopf_axioms

SAMPLE_MODEL = "tests/data/sample_model.json"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_registry_is_complete():
    assert len(cli.REGISTRY) == 19
    assert len({s.id for s in cli.REGISTRY}) == 19
    assert {s.expected for s in cli.REGISTRY} == {"pass", "fail"}
    designed_to_fail = {s.id for s in cli.REGISTRY if s.expected == "fail"}
    assert designed_to_fail == {"ty.pentagon-negative", "modcat.unitarity"}


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert len(out.strip().splitlines()) == 19


def test_list_filter(capsys):
    code, out, _ = run(capsys, "list", "modcat")
    assert code == 0
    assert len(out.strip().splitlines()) == 3
    code, _, err = run(capsys, "list", "zzz")
    assert code == 2
    assert "no checks match" in err


def test_single_check(capsys):
    code, out, _ = run(capsys, "verify", "--check", "kp.axioms")
    assert code == 0
    assert "PASS" in out


def test_designed_failure_matches(capsys):
    code, out, _ = run(capsys, "verify", "--check", "ty.pentagon-negative")
    assert code == 0
    assert "as designed" in out


def test_single_check_json(capsys):
    code, out, _ = run(capsys, "verify", "--check", "modcat.unitarity",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "fail"
    assert data["expected"] == "fail"
    assert set(data) == {"id", "verdict", "expected", "elapsed_ms",
                         "anchor", "witness"}


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 19
    by_id = {r["id"]: r for r in reports}
    assert by_id["model.twist-axioms"]["verdict"] == "skip"
    for r in reports:
        assert r["verdict"] in ("pass", "fail", "skip")
        if r["verdict"] != "skip":
            assert r["verdict"] == r["expected"]


def test_verify_all_with_model(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--model", SAMPLE_MODEL)
    assert code == 0
    assert "19/19" in out
    assert "0 skipped" in out


def test_model_check_requires_model(capsys):
    code, _, err = run(capsys, "verify", "--check", "model.twist-axioms")
    assert code == 2
    assert "--model" in err


def test_model_check_with_sample(capsys):
    code, out, _ = run(capsys, "verify", "--check", "model.twist-axioms",
                       "--model", SAMPLE_MODEL)
    assert code == 0
    assert "PASS" in out


def test_broken_model_fails_with_witness(capsys, tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text('{"generators": []}')
    code, out, _ = run(capsys, "verify", "--check", "model.twist-axioms",
                       "--model", str(bad))
    assert code == 1
    assert "exception" in out


def test_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--check", "nosuch")
    assert code == 2
    assert "unknown check" in err


def test_bad_tau(capsys):
    code, _, err = run(capsys, "verify", "--check", "ty.pentagon",
                       "--tau", "bogus")
    assert code == 2
    assert "--tau" in err


def test_wrong_tau_is_an_unexpected_failure(capsys):
    code, out, _ = run(capsys, "verify", "--check", "ty.pentagon",
                       "--tau", "1")
    assert code == 1
    assert "UNEXPECTED" in out


def test_negative_tau(capsys):
    code, out, _ = run(capsys, "verify", "--check", "ty.pentagon",
                       "--tau=-1/2")
    assert code == 0
    assert "PASS" in out


def test_usage_error(capsys):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys)[0] == 2


def test_export_round_trip(capsys, tmp_path):
    for model_id in sorted(cli._EXPORTS):
        first = tmp_path / f"{model_id}.json"
        second = tmp_path / f"{model_id}.2.json"
        assert run(capsys, "export", model_id, str(first))[0] == 0
        assert run(capsys, "export", model_id, str(second))[0] == 0
        assert first.read_bytes() == second.read_bytes()
        h = hopf_from_dict(json.loads(first.read_text()))
        assert verify_hopf_axioms(h).passed

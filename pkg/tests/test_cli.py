"""CLI behavior: spec invocations, exit codes, golden JSON corpus, schema."""

import json
import re
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from flagdom.cli import main

GOLDEN = Path(__file__).parent / "data" / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_orbits_verb_reports_quadric(capsys):
    code, out, _ = run(capsys, "orbits", "--form", "sl_r,3", "--flag", "proj")
    assert code == 0
    assert "q = 1" in out and "quadric" in out
    assert out.strip().count("\n") == 1  # exactly one orbit line


def test_polytope_boundary_point_is_outside(capsys):
    code, out, _ = run(capsys, "polytope", "--form", "sl_r,2", "--test", "1/2")
    assert code == 0 and "outside" in out


def test_bbw_classical_example(capsys):
    code, out, _ = run(capsys, "bbw", "--k-type", "a1", "--weight=-2")
    assert code == 0 and "degree 1" in out and "dimension 1" in out


def test_certify_text_output(capsys):
    code, out, _ = run(capsys, "certify", "--form", "su,2,1", "--flag", "gr,1",
                       "--orbit", "1,0", "--weight=-4")
    assert code == 0
    assert out.startswith("flagdom-certificate/1")
    assert "verdict: injective" in out


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "orbits", "--form", "so,3", "--flag", "proj")
    assert code == 1
    assert "supported" in err  # diagnostic names the supported families


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "nonsense")
    assert code == 2
    code, _, _ = run(capsys)
    assert code == 2


def test_malformed_flag_is_domain_error(capsys):
    code, _, err = run(capsys, "orbits", "--form", "sl_r,3", "--flag", "nope")
    assert code == 1 and "flag" in err


def test_format_env_default(capsys, monkeypatch):
    monkeypatch.setenv("FLAGDOM_FORMAT", "json")
    code, out, _ = run(capsys, "roots", "--type", "a1")
    assert code == 0
    assert json.loads(out)["verb"] == "roots"


def _golden_cases():
    manifest = json.loads((GOLDEN / "manifest.json").read_text())
    return [(case["name"], case["argv"]) for case in manifest]


@pytest.mark.parametrize("name,argv", _golden_cases())
def test_golden_corpus(capsys, name, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    expected = json.loads((GOLDEN / f"{name}.json").read_text())
    assert json.loads(out) == expected


@pytest.mark.parametrize("name,argv", _golden_cases())
def test_golden_corpus_validates_schema(name, argv):
    schema = json.loads(resources.files("flagdom")
                        .joinpath("schema/report.schema.json").read_text())
    payload = json.loads((GOLDEN / f"{name}.json").read_text())
    jsonschema.validate(payload, schema)
    if payload["verb"] == "certify":
        cert_schema = json.loads(resources.files("flagdom")
                                 .joinpath("schema/certificate.schema.json").read_text())
        jsonschema.validate(payload["certificate"], cert_schema)


@pytest.mark.parametrize("name,argv", _golden_cases())
def test_text_and_json_numeric_content_agree(capsys, name, argv):
    # every integer appearing in the JSON payload also appears in the text view
    code, json_out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    code, text_out, _ = run(capsys, *argv, "--format", "text")
    assert code == 0

    def collect_numbers(obj, acc):
        if isinstance(obj, bool):
            return
        if isinstance(obj, int):
            acc.add(obj)
        elif isinstance(obj, str):
            for tok in re.findall(r"-?\d+(?:/\d+)?", obj):
                acc.add(tok)
        elif isinstance(obj, dict):
            for v in obj.values():
                collect_numbers(v, acc)
        elif isinstance(obj, list):
            for v in obj:
                collect_numbers(v, acc)

    numbers = set()
    collect_numbers(json.loads(json_out), numbers)
    text_tokens = set(re.findall(r"-?\d+(?:/\d+)?", text_out))
    for value in numbers:
        token = str(value)
        assert token in text_tokens or token.lstrip("-") in text_tokens, (name, value)

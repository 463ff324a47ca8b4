import json
from unittest.mock import patch

import pytest

from orthospec.cli import Command, OutputFormat, build_config, build_parser, main
from orthospec.identities import CATALOG
from orthospec.numerics import BigReal
from orthospec.types import ReportRecord, VerificationReport


def parse(argv):
    return build_config(build_parser().parse_args(argv))


def failed_report(identity, **kwargs):
    zero = BigReal.zero(64)
    return VerificationReport(identity_id=identity.id, parameters=identity.describe_parameters(), precision=64,
                              terms_used={"s": 8}, partial_sum=zero, rhs_value=BigReal.one(64), abs_error=BigReal.one(64),
                              tail_estimate=zero, converged=False)


def test_list(capsys):
    assert main(["list"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(CATALOG)
    assert any(line.startswith("eq-13.3") for line in lines)


def test_list_json(capsys):
    assert main(["list", "--format", "json"]) == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert rows[0]["id"] == CATALOG[0].id
    assert {row["id"]: row["parameters"] for row in rows}["eq-7.1"] == {"n": "2"}


def test_verify_json_round_trips(capsys):
    assert main(["verify", "--id", "eq-5.8a", "--max-terms", "60", "--precision", "128",
                 "--tolerance", "1e-20", "--format", "json"]) == 0
    out = capsys.readouterr().out
    record = ReportRecord.from_json(out.strip())
    assert record.id == "eq-5.8a"
    assert record.converged
    assert record.to_json() + "\n" == out


def test_verify_text_is_deterministic(capsys):
    argv = ["verify", "--id", "eq-5.8a", "--id", "eq-5.8b", "--max-terms", "60", "--tolerance", "1e-20"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert first.splitlines()[-1] == "2/2 converged"


def test_verify_csv(capsys):
    assert main(["verify", "--id", "eq-7.1", "--param", "n=3", "--max-terms", "100", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "id,params,terms_used,abs_error,tail_estimate,converged"
    assert lines[1].startswith("eq-7.1,n=3,")
    assert lines[1].endswith(",true")


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.jsonl"
    assert main(["verify", "--id", "eq-5.8a", "--max-terms", "60", "--format", "json",
                 "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert ReportRecord.from_json(target.read_text().strip()).converged


def test_failed_verification_exits_one(capsys):
    with patch("orthospec.runner.verify", side_effect=failed_report):
        assert main(["verify", "--id", "eq-5.8a"]) == 1
    assert "0/1 converged" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "eq-5.3", "--param", "t=2"],
    ["verify", "--id", "eq-99.9"],
    ["verify"],
    ["generate", "--id", "eq-5.3", "--id", "eq-5.8a"],
    ["verify", "--id", "eq-5.3", "--param", "t"],
    ["verify", "--id", "eq-5.8a", "--precision", "10"],
    ["verify", "--id", "eq-5.8a", "--tolerance", "-1"],
    ["verify", "--id", "eq-5.8a", "--max-terms", "7"],
    ["verify", "--id", "eq-5.8a", "--config", "/nonexistent/orthospec.conf"],
])
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("orthospec:")


def test_unknown_command():
    with pytest.raises(SystemExit) as excinfo:
        main(["bogus"])
    assert excinfo.value.code == 2


def test_cross_validate(capsys):
    assert main(["cross-validate", "--id", "eq-4.7", "--count", "15"]) == 0
    out = capsys.readouterr().out
    assert "match" in out
    assert "MISMATCH" not in out


def test_cross_validate_without_model(capsys):
    assert main(["cross-validate", "--id", "eq-5.7"]) == 2
    assert "geometric model" in capsys.readouterr().err


def test_generate_json(capsys):
    assert main(["generate", "--id", "eq-12.1", "--count", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["id"] == "eq-12.1"
    assert all(len(values) == 3 for values in payload["series"].values())
    assert "finite" in payload["families"]


def test_generate_text(capsys):
    assert main(["generate", "--id", "eq-13.3", "--count", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("eq-13.3 [-] = pi^2/6")
    assert "    2: 1/4" in out


def test_config_file_precedence(tmp_path, monkeypatch):
    """Flags beat the file, the file beats the environment."""
    monkeypatch.setenv("ORTHOSPEC_PRECISION", "96")
    monkeypatch.setenv("ORTHOSPEC_MAX_TERMS", "300")
    conf = tmp_path / "run.conf"
    conf.write_text("# nightly run\nid = eq-5.8a, eq-5.8b\nprecision = 128\ntolerance = 1e-12\nformat = csv\n")
    config = parse(["verify", "--config", str(conf), "--tolerance", "1e-15"])
    assert config.command == Command.VERIFY
    assert config.ids == ["eq-5.8a", "eq-5.8b"]
    assert config.precision == 128
    assert config.tolerance == "1e-15"
    assert config.max_terms == 300
    assert config.format == OutputFormat.CSV


def test_environment_defaults(monkeypatch):
    monkeypatch.setenv("ORTHOSPEC_MAX_TERMS", "500")
    monkeypatch.delenv("ORTHOSPEC_PRECISION", raising=False)
    config = parse(["verify-all"])
    assert config.max_terms == 500
    assert config.precision == 256
    assert config.ids == []


def test_params_become_a_mapping():
    config = parse(["verify", "--id", "eq-13.2", "--param", "vertices = 1/3,1/2"])
    assert config.params == {"vertices": "1/3,1/2"}

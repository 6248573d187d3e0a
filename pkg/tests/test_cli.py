import json
from io import StringIO

import pytest
from rich.console import Console

from agents.signature_agent import SignatureAgent
from main import build_parser, main


def run(argv, config_path):
    buffer = StringIO()
    console = Console(file=buffer, width=200)
    code = main(["--config", str(config_path), *argv], console=console)
    return code, buffer.getvalue()


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_sigrank_text(temp_config):
    config_path, log_path = temp_config
    code, output = run(["sigrank", "-p", "163"], config_path)
    assert code == 0
    assert "[C:C⁺] = 2^79, [C⁺:C²] = 2^2" in output
    assert "✓ sigrank N=163: rank 79 of 81" in output
    assert "sigrank for N=163" in log_path.read_text(encoding="utf-8")


def test_sigrank_json(temp_config):
    config_path, _ = temp_config
    code, output = run(["sigrank", "-p", "29", "--format", "json"], config_path)
    assert code == 0
    document = json.loads(output)
    assert document["rank"] == 11
    assert document["deficiency"] == 3
    assert document["full_rank"] is False


def test_prop1_uses_configured_class_data(temp_config):
    config_path, _ = temp_config
    code, output = run(["prop1", "-p", "29", "--format", "json"], config_path)
    assert code == 0
    document = json.loads(output)
    assert document["statements"]["a1"]["provenance"] == "from-data"
    assert document["statements"]["b1"]["status"] == "fails"


def test_prop1_without_class_data(temp_config):
    config_path, _ = temp_config
    code, output = run(["prop1", "-p", "29", "--no-class-data", "--format", "json"], config_path)
    assert code == 0
    document = json.loads(output)
    assert document["statements"]["a1"]["status"] == "unknown"
    assert document["data_source"] is None


def test_no_log_flag(temp_config):
    config_path, log_path = temp_config
    code, _ = run(["--no-log", "sigrank", "-p", "5"], config_path)
    assert code == 0
    assert not log_path.exists()


def test_input_errors_exit_2(temp_config):
    config_path, _ = temp_config
    code, output = run(["sigrank", "-p", "15"], config_path)
    assert code == 2
    assert "composite_p" in output
    code, output = run(["augment", "-p", "5", "-d", "2", "-u", "2a"], config_path)
    assert code == 2
    assert "syntax_error" in output


def test_argparse_errors_exit_2(temp_config):
    config_path, _ = temp_config
    code, _ = run(["periods", "-p", "7"], config_path)
    assert code == 2


def test_contradiction_exits_3(temp_config, tmp_path):
    config_path, _ = temp_config
    data = tmp_path / "wrong.csv"
    data.write_text("p,n,h_K,h_minus,h_Kplus,h_strict_Kplus,source\n29,1,odd,odd,odd,odd,wrong\n", encoding="utf-8")
    code, output = run(["prop1", "-p", "29", "--class-data", str(data)], config_path)
    assert code == 3
    assert "contradiction" in output


def test_config_error_exits_2(tmp_path):
    code, output = run(["sigrank", "-p", "5"], tmp_path / "absent.json")
    assert code == 2
    assert "config_error" in output


def test_unexpected_failure_exits_1(temp_config, monkeypatch):
    config_path, _ = temp_config

    def boom(self, *args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(SignatureAgent, "sigrank", boom)
    code, output = run(["sigrank", "-p", "5"], config_path)
    assert code == 1
    assert "internal_error" in output


def test_augment_text(temp_config):
    config_path, _ = temp_config
    code, output = run(["augment", "-p", "163", "-d", "3", "-u", "a+4", "-u", "a^2-4*a-34"], config_path)
    assert code == 0
    assert "**Augmented rank:** 81 of 81" in output

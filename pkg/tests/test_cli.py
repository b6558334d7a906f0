import json
import os
from fractions import Fraction

import pytest

from mzv.cli import EXIT_FAIL, EXIT_OK, EXIT_PRECISION, EXIT_USAGE, load_fixture, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_product_stuffle(capsys):
    code, out, _ = run(capsys, "product", "--type", "stuffle", "2", "3")
    assert code == EXIT_OK
    assert out.strip() == "z2z3 + z3z2 + z5"


def test_product_shuffle_binary(capsys):
    code, out, _ = run(capsys, "product", "--type", "shuffle", "01", "1")
    assert code == EXIT_OK
    assert out.strip() == "101 + 2·011"


def test_product_mixable_weight_zero(capsys):
    _, out1, _ = run(capsys, "product", "--type", "mixable", "--weight", "0", "01", "1")
    _, out2, _ = run(capsys, "product", "--type", "shuffle", "01", "1")
    assert out1 == out2


def test_product_parse_error(capsys):
    code, _, err = run(capsys, "product", "--type", "shuffle", "0a", "1")
    assert code == EXIT_USAGE
    assert "error" in err


def test_product_mixed_alphabets(capsys):
    code, _, err = run(capsys, "product", "--type", "shuffle", "2,1", "01")
    assert code == EXIT_USAGE


def test_renorm_gz(capsys):
    code, out, _ = run(capsys, "renorm", "gz", "--args", "0,0", "--delta")
    assert code == EXIT_OK and out.strip() == "3/8"
    code, out, _ = run(capsys, "renorm", "gz", "--args", "0,-2")
    assert code == EXIT_OK and out.strip() == "-1/120"
    code, out, _ = run(capsys, "renorm", "gz", "--args", "-1,-1", "--direction", "1,1")
    assert code == EXIT_OK and out.strip() == "1/288"


def test_renorm_mp(capsys):
    code, out, _ = run(capsys, "renorm", "mp", "--args", "-1,-1", "--method", "birkhoff")
    assert code == EXIT_OK and out.strip() == "1/288"
    code, out, _ = run(capsys, "renorm", "mp", "--args", "-2,-1", "--method", "sym")
    assert code == EXIT_OK and out.strip() == "-1/240"


def test_renorm_gz_precision_exit(capsys):
    code, _, err = run(capsys, "renorm", "gz", "--args", "-1,-1", "--trunc", "2")
    assert code == EXIT_PRECISION
    assert "precision" in err.lower()


def test_renorm_usage_error(capsys):
    code, _, _ = run(capsys, "renorm", "gz", "--args", "1,2")
    assert code == EXIT_USAGE


def test_table_mp_csv(capsys):
    code, out, _ = run(capsys, "table", "mp", "--max", "2", "--format", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == ",a=0,a=1,a=2"
    assert lines[1] == "b=0,3/8,1/12,7/720"


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "mp", "--max", "1", "--format", "markdown")
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("| ")


def test_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "table", "mp", "--max", "3", "--format", "json")
    assert code == EXIT_OK
    parsed = json.loads(out)
    assert json.dumps(parsed, indent=2, sort_keys=True) == out.strip()


def test_table_mp_golden_diff_passes(capsys):
    code, _, err = run(capsys, "table", "mp", "--max", "6", "--diff-golden")
    assert code == EXIT_OK
    assert "all cells match" in err


def test_table_diff_against_corrupted_fixture(tmp_path, capsys):
    golden = load_fixture("mp")
    golden["rows"][0][0] = "1/7"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(golden))
    code, _, err = run(capsys, "table", "mp", "--max", "2", "--diff-golden", str(path))
    assert code == EXIT_FAIL
    assert "(a=0, b=0)" in err and "1/7" in err


def test_fixture_env_override(tmp_path, capsys, monkeypatch):
    golden = load_fixture("mp")
    path = tmp_path / "mp_table.json"
    path.write_text(json.dumps(golden))
    monkeypatch.setenv("MZV_FIXTURE_DIR", str(tmp_path))
    assert load_fixture("mp") == golden


def test_compare_gz_mp(capsys):
    code, out, _ = run(capsys, "compare", "gz-mp", "--max", "2", "--format", "json")
    assert code == EXIT_OK
    parsed = json.loads(out)
    assert parsed["required_agreement_holds"] is True
    assert json.dumps(parsed, indent=2, sort_keys=True) == out.strip()


def test_eval_mzv(capsys):
    code, out, _ = run(capsys, "eval", "mzv", "--args", "2", "--target", "1e-10", "--format", "json")
    assert code == EXIT_OK
    parsed = json.loads(out)
    assert parsed["value"].startswith("1.644934066848")
    assert "tail_model" in parsed


def test_eval_qmzv(capsys):
    code, out, _ = run(capsys, "eval", "qmzv", "--args", "2,1", "--q", "1/2", "--target", "1e-8")
    assert code == EXIT_OK
    assert "error <=" in out


def test_eval_bad_args(capsys):
    code, _, _ = run(capsys, "eval", "mzv", "--args", "1,2", "--target", "1e-8")
    assert code == EXIT_USAGE


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "weighted_euler", "--params", "n_max=4")
    assert code == EXIT_OK
    assert "[pass] weighted_euler" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "euler_decomp_symbolic", "--params", "total_max=6", "--json")
    assert code == EXIT_OK
    parsed = json.loads(out)
    assert parsed["passed"] is True


def test_usage_exit_code(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == EXIT_USAGE

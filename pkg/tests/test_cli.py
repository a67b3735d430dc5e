import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from silted.cli import run


def capture(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(argv)
    return code, buf.getvalue()


def test_count_examples():
    code, out = capture(["count", "a_ss", "--n", "9"])
    assert code == 0 and out.strip() == "572"
    code, out = capture(["count", "tm_lambda", "--n", "6", "--m", "2"])
    assert code == 0 and out.strip() == "28"
    code, out = capture(["count", "t_a", "--n", "8"])
    assert code == 0 and out.strip() == "1430"


def test_count_out_of_range_is_usage_error():
    code, _ = capture(["count", "a_ht_lambda", "--n", "3"])
    assert code == 1


def test_unknown_quantity_is_usage_error():
    assert run(["count", "no_such_thing", "--n", "4"]) == 1


def test_enumerate_a1():
    code, out = capture(["enumerate", "--family", "a", "--n", "1", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["silting"]) == 2


def test_enumerate_cap():
    code, _ = capture(["enumerate", "--family", "d-linear", "--n", "8", "--n-cap", "6"])
    assert code == 1


def test_classify_md_summary():
    code, out = capture(["classify", "--family", "d-linear", "--n", "4", "--format", "md"])
    assert code == 0
    assert "| a_s(Lambda_4) | 13 |" in out
    assert "| a_t(Lambda_4) | 7 |" in out


def test_classify_deterministic_bytes():
    args = ["classify", "--family", "d-linear", "--n", "5", "--format", "json"]
    code1, out1 = capture(args)
    code2, out2 = capture(args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_classify_csv():
    code, out = capture(["classify", "--family", "d-reversed", "--n", "4", "--format", "csv"])
    assert code == 0
    assert "a_s,11" in out


def test_realization_cli():
    code, out = capture(["realization", "--n", "5", "--orientation", "linear"])
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["hypothesesVerified"]


def test_tables_exit_code_and_content():
    code, out = capture(["tables", "--enum-max", "4", "--format", "md"])
    assert code == 0
    assert "a_s_lambda" in out and "overall: ok" in out


def test_cache_build_and_verify(tmp_path):
    code, out = capture(
        ["cache", "build", "--family", "a", "--n", "3", "--cache-dir", str(tmp_path)]
    )
    assert code == 0
    code, out = capture(
        ["cache", "verify", "--family", "a", "--n", "3", "--cache-dir", str(tmp_path)]
    )
    assert code == 0 and "verified" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "silted.cli", "count", "t_a", "--n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "42"

import io
import json
import subprocess
import sys

import pytest

from isingff.cli import RunConfig, config_from_args, main, parse_range
from isingff.exact import Series
from isingff.render import from_json


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_range():
    assert parse_range("1..4") == (1, 2, 3, 4)
    assert parse_range("2") == (2,)
    assert parse_range("1,3..4") == (1, 3, 4)


def test_config_from_flags_and_positionals():
    assert config_from_args(["table", "3", "1", "--format", "latex"]) == RunConfig("table", n=3, N=(1,), format="latex")
    assert config_from_args(["table", "--n", "3", "--N", "1"]).n == 3
    cfg = config_from_args(["verify", "ode", "--N", "1..2", "--jobs", "2"])
    assert cfg.suites == ["ode"] and cfg.N == (1, 2) and cfg.jobs == 2


def test_table_text():
    code, text = run("table", "2", "0")
    assert code == 0
    assert text.splitlines()[0] == "f^(2)_{0,0} = (t/4)·F_0·F_1"


def test_table_latex():
    code, text = run("table", "3", "1", "--format", "latex")
    assert code == 0
    assert "\\frac{3^5}{2^9} t^3 F_2^{3}" in text


def test_table_beyond_references_is_flagged():
    code, text = run("table", "4", "5")
    assert code == 0
    assert "beyond the reference tables" in text


def test_table_json_round_trips():
    from isingff.formfactors import expression

    code, text = run("table", "4", "2", "--format", "json")
    assert code == 0
    assert from_json(text) == expression(4, 2)


def test_series_examples():
    assert run("series", "2", "1", "6")[1].startswith("f^(2)_{1,1} = 3/64 t^2 + ")
    code, text = run("series", "3", "1", "8")
    assert "= 1/1024 t^3 + " in text and "leading (Selberg): 1/1024 t^3" in text
    assert run("series", "1", "0", "4")[1].startswith("f^(1)_{0,0} / lam_0 = 1 + 1/4 t + 9/64 t^2 + ")


def test_series_json_round_trips():
    code, text = run("series", "2", "2", "--order", "9", "--format", "json")
    obj = json.loads(text)
    s = Series.from_json_obj(obj["series"])
    assert s.order == 9 and s[3] == __import__("fractions").Fraction(5, 256)


@pytest.mark.parametrize("argv", [["table", "7", "1"], ["series", "5", "1"], ["verify", "nope"], ["table", "2"],
                                  ["verify", "--jobs", "0"], ["operator", "XX", "--N", "1"], ["frobnicate"]])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv, out=io.StringIO()) == 2


def test_verify_passes():
    code, text = run("verify", "wronskian", "--N", "1..6", "--power", "2..4")
    assert code == 0
    assert text.strip().splitlines()[-1] == "24/24 checks pass"


def test_verify_fixtures_counts_tables():
    code, text = run("verify", "fixtures")
    assert code == 0 and "16/16 checks pass" in text


def test_verify_ode_reports_printed_forms():
    code, text = run("verify", "ode", "--N", "2")
    assert code == 0
    assert "[display as printed]" in text
    assert "displays do not hold as printed" in text


def test_verify_fails_with_exit_1(monkeypatch):
    from isingff import suites
    from isingff.odes import Finding

    def broken(o):
        return [suites.Task(_failing_task)]

    monkeypatch.setitem(suites.SUITES, "broken", broken)
    code, text = run("verify", "broken")
    assert code == 1 and "FAILS" in text


def _failing_task():
    from isingff.odes import Finding
    from isingff.suites import Result

    return [Result("broken", Finding("always false", 0, False, (1,)))]


def test_verify_is_deterministic_across_jobs():
    args = ["verify", "--suite", "cancellation", "--suite", "operators", "--N", "1..3", "--format", "json"]
    a = run(*args, "--jobs", "1")[1]
    b = run(*args, "--jobs", "3")[1]
    assert a == b


def test_operator_json():
    from isingff.diffops import op_from_json_obj
    from isingff.operators import O2

    code, text = run("operator", "O2", "--N", "3")
    assert code == 0
    assert op_from_json_obj(json.loads(text)) == O2(3)


def test_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("ISINGFF_CACHE_DIR", str(tmp_path))
    first = run("table", "3", "2")[1]
    assert (tmp_path / "expr_3_2.json").exists()
    assert run("table", "3", "2")[1] == first


def test_console_script_entry_point():
    r = subprocess.run([sys.executable, "-m", "isingff.cli", "table", "2", "0"], capture_output=True, text=True)
    assert r.returncode == 0 and "(t/4)" in r.stdout

import json

import pytest

from ramanujan_pi.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_detect_degree(capsys):
    code, out, _ = call(capsys, "detect-degree", "--s", "3", "--z", "-1/250000")
    assert code == 0
    assert "d = 23" in out.splitlines()
    assert "0.20851441405707476267" in out


def test_verify_tables(capsys):
    code, out, _ = call(capsys, "verify-tables")
    assert code == 0
    assert out.splitlines()[-1] == "36/36 PASS"


def test_prove_positive(capsys):
    code, out, _ = call(capsys, "prove", "--series", "series-10n+1", "--catalog", "default")
    assert code == 0
    assert "PROVEN_NUMERIC" in out


def test_prove_json_certificate(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, out, _ = call(capsys, "prove", "--series", "series-28n+3", "--output", "json", "--certificate", str(path))
    assert code == 0
    rec = json.loads(out)
    assert rec["verdict"] == "PROVEN_NUMERIC"
    assert json.loads(path.read_text()) == rec


def test_verified_only_is_success(capsys):
    code, out, _ = call(capsys, "prove", "--series", "l3-d23-neg")
    assert code == 0
    assert "VERIFIED_ONLY" in out


def test_eval_series_explicit(capsys):
    code, out, _ = call(capsys, "eval-series", "--s", "2", "--z", "1/64", "--a", "5/16", "--b", "42/16")
    assert code == 0 and out.strip().endswith("PASS")


def test_eval_series_fail_exit_code(capsys):
    code, out, _ = call(capsys, "eval-series", "--s", "2", "--z", "1/64", "--a", "5/16", "--b", "43/16")
    assert code == 1 and out.strip().endswith("FAIL")


def test_negative_literals(capsys):
    code, out, _ = call(capsys, "derive-coefficients", "--level", "2", "--z", "-1/48", "--degree", "5")
    assert code == 0
    assert "C = 1/3" in out and "a = 3/16*sqrt(3)" in out


def test_identity_checks(capsys):
    assert call(capsys, "legendre-check", "--s", "4", "--alpha", "2+i")[0] == 0
    assert call(capsys, "legendre-check", "--s", "4", "--alpha", "3", "--branch", "upper")[0] == 0
    assert call(capsys, "clausen-check", "--s", "6", "--alpha", "-1/5")[0] == 0


def test_q_modulus(capsys):
    code, out, _ = call(capsys, "q-modulus", "--series", "l2-d5-neg", "--output", "json")
    rec = json.loads(out)
    assert code == 0 and rec["r"] == "9/4" and rec["identity"] is True
    assert rec["q"].startswith("-0.0000806995175703045992392")


def test_solve_transform(capsys):
    code, out, _ = call(capsys, "solve-transform", "--output", "json")
    pts = json.loads(out)["level2-degree5"]
    assert code == 0 and len(pts) == 10
    assert sum(p["consistent"] for p in pts) == 2


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["eval-series", "--s", "2", "--z", "1.5", "--a", "1", "--b", "1"],
    ["eval-series", "--s", "2", "--z", "1/64", "--a", "0.5", "--b", "1"],
    ["prove", "--series", "no-such-series"],
    ["verify-tables", "--digits", "5"],
    ["verify-tables", "--catalog", "/nonexistent/file"],
    ["detect-degree", "--z", "1/81"],
])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_detect_degree_failure(capsys):
    assert call(capsys, "detect-degree", "--s", "4", "--z", "1/7")[0] == 1


def test_deterministic(capsys):
    first = call(capsys, "prove", "--series", "series-28n+3", "--output", "json")
    second = call(capsys, "prove", "--series", "series-28n+3", "--output", "json")
    assert first == second


def test_environment_overrides(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("RAMANUJAN_PI_DIGITS", "20")
    code, out, _ = call(capsys, "eval-series", "--series", "l4-d3-pos")
    assert code == 0
    value = [l for l in out.splitlines() if l.startswith("value")][0]
    assert value.split("= ")[1] == "0.31830988618379067154"
    path = tmp_path / "tiny.catalog"
    path.write_text("[series]\nname = only\nlevel = 4\nz = 1/4\na = 1/4\nb = 3/2\n")
    monkeypatch.setenv("RAMANUJAN_PI_CATALOG", str(path))
    code, out, _ = call(capsys, "verify-tables")
    assert code == 0 and out.splitlines()[-1] == "1/1 PASS"

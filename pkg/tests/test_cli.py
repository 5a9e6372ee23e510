"""End-to-end tests of the command line interface.

Everything below drives main() in process (capsys picks up stdout/stderr);
the byte-identity checks at the bottom spawn real subprocesses because that
is the form the determinism promise is made in.
"""

import json
import os
import subprocess
import sys

import pytest

from boolprod import __version__
from boolprod.cli import main
from boolprod.errors import ConsistencyError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_boolean_expand_text(capsys):
    code, out, err = run_cli(capsys, "boolean-expand", "--n", "3", "--k", "2")
    assert code == 0
    assert out == "s[2,1]\n"
    assert err == ""


def test_boolean_expand_elementary_slice(capsys):
    code, out, _ = run_cli(capsys, "boolean-expand", "--n", "2", "--k", "1", "--p", "1")
    assert code == 0
    assert out == "s[1]\n"


def test_total_text(capsys):
    code, out, _ = run_cli(capsys, "total", "--n", "2")
    assert code == 0
    assert out == "s[2,1]\n"


def test_schur_at_text(capsys):
    code, out, _ = run_cli(capsys, "schur-at", "--lambda", "2,1", "--n", "3", "--k", "2")
    assert code == 0
    assert out == "2 s[3] + 5 s[2,1] + 4 s[1,1,1]\n"


def test_lascoux_text(capsys):
    code, out, _ = run_cli(capsys, "lascoux", "--n", "2", "--kind", "symmetric")
    assert code == 0
    assert out == "equal: true\nterms: 4 s[2,1] + 2 s[2] + 6 s[1,1] + 3 s[1] + s[-]\n"


def test_determinant_both_routes(capsys):
    code, out, _ = run_cli(capsys, "binom-det", "--lambda", "2,1", "--mu", "1", "--dim", "3")
    assert code == 0
    assert out == "8\n"
    code, out, _ = run_cli(capsys, "gv-count", "--lambda", "2,1", "--mu", "1", "--dim", "3")
    assert code == 0
    assert out == "8\n"


def test_derangement_text(capsys):
    code, out, _ = run_cli(capsys, "derangement", "--n", "2")
    assert code == 0
    assert out == "(1 + q) s[2] + (1 + q + q^2) s[1,1]\n"


def test_derangement_specialized(capsys):
    code, out, _ = run_cli(capsys, "derangement", "--n", "4", "--q", "-1")
    assert code == 0
    assert out == "s[3,1] + s[2,2] + s[2,1,1] + s[1,1,1,1]\ndimension = 9\n"


def test_charpoly_text(capsys):
    code, out, _ = run_cli(capsys, "charpoly", "--n", "3", "--method", "mobius")
    assert code == 0
    assert out == "chi = t^3 - 7t^2 + 15t - 9\nregions = 32\nbounded = 0\n"


def test_regions_text(capsys):
    code, out, _ = run_cli(capsys, "regions", "--n", "2")
    assert code == 0
    assert out == "regions = 6\nbounded = 0\n"


def test_bialphabet_text(capsys):
    code, out, _ = run_cli(capsys, "bialphabet", "--n", "2", "--m", "1", "--j", "1", "--k", "1")
    assert code == 0
    assert out == "s[1,1](X) s[-](Y) + s[1](X) s[1](Y) + s[-](X) s[2](Y)\n"


def test_json_envelope(capsys):
    code, out, _ = run_cli(capsys, "boolean-expand", "--n", "3", "--k", "2", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record == {
        "command": "boolean-expand",
        "params": {"k": 2, "n": 3, "p": None},
        "result": {"terms": [{"partition": "2,1", "coeff": "1"}]},
        "version": __version__,
    }


def test_json_coefficients_are_strings(capsys):
    _, out, _ = run_cli(capsys, "schur-at", "--lambda", "2,1", "--n", "3", "--k", "2",
                        "--format", "json")
    record = json.loads(out)
    assert record["params"]["lambda"] == "2,1"
    assert all(isinstance(t["coeff"], str) for t in record["result"]["terms"])
    assert record["result"]["terms"][0] == {"partition": "3", "coeff": "2"}


def test_json_chi_payload_is_integral(capsys):
    _, out, _ = run_cli(capsys, "charpoly", "--n", "2", "--format", "json")
    record = json.loads(out)
    assert record["result"] == {"n": 2, "chi": [2, -3, 1], "regions": 6, "bounded": 0}
    assert all(isinstance(c, int) for c in record["result"]["chi"])


def test_json_qpoly_terms(capsys):
    _, out, _ = run_cli(capsys, "derangement", "--n", "2", "--format", "json")
    record = json.loads(out)
    assert record["result"]["terms"] == [
        {"partition": "2", "coeffs_q": ["1", "1"]},
        {"partition": "1,1", "coeffs_q": ["1", "1", "1"]},
    ]


def test_json_bialphabet_terms(capsys):
    _, out, _ = run_cli(capsys, "bialphabet", "--n", "1", "--m", "1", "--j", "1",
                        "--k", "1", "--format", "json")
    record = json.loads(out)
    assert record["result"]["terms"] == [
        {"x": "1", "y": "-", "coeff": "1"},
        {"x": "-", "y": "1", "coeff": "1"},
    ]


def test_usage_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "gv-count", "--lambda", "1", "--mu", "2", "--dim", "3")
    assert code == 2
    assert err.startswith("error:")

    code, _, err = run_cli(capsys, "boolean-expand", "--n", "2", "--k", "3")
    assert code == 2
    assert "k" in err


def test_malformed_partition_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["schur-at", "--lambda", "1,x", "--n", "3", "--k", "2"])
    assert info.value.code == 2
    assert "invalid partition value" in capsys.readouterr().err


def test_capacity_errors_exit_3(capsys):
    code, _, err = run_cli(capsys, "total", "--n", "9")
    assert code == 3
    assert err.startswith("capacity:")

    code, _, err = run_cli(capsys, "charpoly", "--n", "6")
    assert code == 3
    assert "allow-long" in err


def test_consistency_errors_exit_4(capsys, monkeypatch):
    def broken(n, allow_long=False):
        raise ConsistencyError("forced for the test")

    monkeypatch.setattr("boolprod.cli.charpoly_ff", broken)
    code, _, err = run_cli(capsys, "charpoly", "--n", "2")
    assert code == 4
    assert err.startswith("inconsistent:")


def test_threads_variable_validation(capsys, monkeypatch):
    monkeypatch.setenv("BOOLPROD_THREADS", "abc")
    code, _, err = run_cli(capsys, "total", "--n", "2")
    assert code == 2
    assert "BOOLPROD_THREADS" in err

    monkeypatch.setenv("BOOLPROD_THREADS", "0")
    code, _, _ = run_cli(capsys, "total", "--n", "2")
    assert code == 2

    monkeypatch.setenv("BOOLPROD_THREADS", "4")
    code, out, _ = run_cli(capsys, "total", "--n", "2")
    assert code == 0
    assert out == "s[2,1]\n"


def test_timing_is_opt_in(capsys):
    _, out, _ = run_cli(capsys, "total", "--n", "2")
    assert "wall_time_ms" not in out

    _, out, _ = run_cli(capsys, "total", "--n", "2", "--timing")
    assert "wall_time_ms:" in out

    _, out, _ = run_cli(capsys, "total", "--n", "2", "--format", "json", "--timing")
    assert "wall_time_ms" in json.loads(out)

    _, out, _ = run_cli(capsys, "total", "--n", "2", "--format", "json")
    assert "wall_time_ms" not in json.loads(out)


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert capsys.readouterr().out.strip() == __version__


def _spawn(argv, threads=None):
    env = dict(os.environ)
    env.pop("BOOLPROD_THREADS", None)
    if threads is not None:
        env["BOOLPROD_THREADS"] = threads
    return subprocess.run(
        [sys.executable, "-m", "boolprod", *argv],
        capture_output=True,
        env=env,
        check=True,
    ).stdout


def test_output_is_byte_identical_across_runs():
    argv = ["schur-at", "--lambda", "2,1", "--n", "3", "--k", "2", "--format", "json"]
    assert _spawn(argv) == _spawn(argv)


def test_output_ignores_thread_count():
    argv = ["boolean-expand", "--n", "4", "--k", "2", "--format", "json"]
    assert _spawn(argv, threads="1") == _spawn(argv, threads="4")

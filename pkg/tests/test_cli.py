"""Command-line surface: output shapes and exit codes."""

import json

import pytest

from padichyper.cli import main


def test_verify_summary_exit_zero(capsys):
    assert main(["verify", "mt5", "--pmin", "5", "--pmax", "11"]) == 0
    out = capsys.readouterr().out
    assert out == "mt5: pass=6 fail=0 skip=0\ntotal: pass=6 fail=0 skip=0\n"


def test_verify_json_lines(capsys):
    assert main(["verify", "cor43", "--pmin", "5", "--pmax", "11",
                 "--format", "json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 15  # five cases at each of p = 5, 7, 11
    recs = [json.loads(line) for line in lines]
    assert all(rec["suite"] == "cor43" for rec in recs)
    assert sum(rec["status"] == "pass" for rec in recs) == 5
    assert sum(rec["status"].startswith("skip") for rec in recs) == 10


def test_verify_threads_identical_output(capsys):
    main(["verify", "mt4", "--pmin", "3", "--pmax", "31", "--format", "json"])
    serial = capsys.readouterr().out
    main(["verify", "mt4", "--pmin", "3", "--pmax", "31", "--format", "json",
          "--threads", "3"])
    assert capsys.readouterr().out == serial


def test_verify_rejects_bad_range(capsys):
    assert main(["verify", "mt1", "--pmin", "3", "--pmax", "7"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:") and "invalid range" in err


def test_verify_rejects_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus", "--pmin", "5", "--pmax", "7"])
    assert exc.value.code == 2


def test_gamma_value(capsys):
    assert main(["gamma", "--p", "5", "--x", "1/2"]) == 0
    assert capsys.readouterr().out == "-7 + O(5^2)\n"


def test_gamma_pole_is_usage_error(capsys):
    assert main(["gamma", "--p", "5", "--x", "1/5"]) == 2
    assert "error:" in capsys.readouterr().err


def test_geval_value(capsys):
    assert main(["geval", "--p", "7", "--upper", "1/2,1/3,2/3",
                 "--lower", "0,0,0", "--t", "1"]) == 0
    assert capsys.readouterr().out == "2 + O(7^2)\n"


def test_geval_rational_argument_reduced_mod_p(capsys):
    assert main(["geval", "--p", "7", "--upper", "1/3,2/3",
                 "--lower", "0,0", "--t", "1/2"]) == 0
    first = capsys.readouterr().out
    assert main(["geval", "--p", "7", "--upper", "1/3,2/3",
                 "--lower", "0,0", "--t", "4"]) == 0
    assert capsys.readouterr().out == first


def test_geval_bad_denominator(capsys):
    assert main(["geval", "--p", "7", "--upper", "1/3,2/3",
                 "--lower", "0,0", "--t", "1/7"]) == 2
    assert "error:" in capsys.readouterr().err


def test_ap_value(capsys):
    assert main(["ap", "--p", "5", "--curve", "0,0,0,1,0"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_ap_bad_curve(capsys):
    assert main(["ap", "--p", "5", "--curve", "1,2,3"]) == 2
    assert "error:" in capsys.readouterr().err


def test_fourier_lines(capsys):
    assert main(["fourier", "--form", "b", "--limit", "7"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert lines[0] == "1 1"
    assert lines[5] == "6 0"
    assert lines[6] == "7 2"


def test_trunc_value(capsys):
    assert main(["trunc", "--kind", "eq2", "--p", "7"]) == 0
    assert capsys.readouterr().out == "2\n"

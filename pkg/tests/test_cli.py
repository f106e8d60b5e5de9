import io
import sys
from pathlib import Path

from arithmeq.cli import main

INPUTS = Path(__file__).resolve().parent.parent / "inputs"


def run_cli(*argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = main([str(a) for a in argv])
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def test_field_report_octic97():
    code, out = run_cli("field", INPUTS / "oct97.field")
    assert code == 0
    assert "degree = 8" in out
    assert "disc = -82737443305587712" in out
    assert "disc.factored = -2^10 * 97^7" in out
    assert "signature = (2,3)" in out
    assert "index_primes = 2" in out


def test_field_report_gauss():
    code, out = run_cli("field", INPUTS / "gauss.field")
    assert code == 0
    assert "disc = -4" in out
    assert "signature = (0,1)" in out


def test_field_non_monic_errors(tmp_path):
    bad = tmp_path / "bad.field"
    bad.write_text("poly = 2, 0, 2\n")
    code, out = run_cli("field", bad)
    assert code == 2
    assert out.startswith("ERROR: MonicError")


def test_field_unknown_key(tmp_path):
    bad = tmp_path / "bad.field"
    bad.write_text("poly = 1, 0, 1\ncolor = blue\n")
    code, out = run_cli("field", bad)
    assert code == 2
    assert "unknown key" in out


def test_decompose_octic97():
    code, out = run_cli("decompose", INPUTS / "oct97.field", "2")
    assert code == 0
    assert out.splitlines() == [
        "place 2:0 e=1 f=1",
        "place 2:1 e=1 f=1",
        "place 2:2 e=2 f=1",
        "place 2:3 e=4 f=1",
    ]
    code, out = run_cli("decompose", INPUTS / "oct97.field", "97")
    assert out.splitlines() == ["place 97:0 e=8 f=1"]


def test_decompose_gauss_split():
    code, out = run_cli("decompose", INPUTS / "gauss.field", "5")
    assert code == 0
    assert out.splitlines() == ["place 5:0 e=1 f=1", "place 5:1 e=1 f=1"]


def test_equiv_degree7_pair():
    code, out = run_cli("equiv", INPUTS / "deg7a.field", INPUTS / "deg7b.field")
    assert code == 0
    assert "verdict = CERTIFIED_EQUIVALENT" in out


def test_equiv_distinct_quadratics(tmp_path):
    other = tmp_path / "sqrtm2.field"
    other.write_text("poly = 2, 0, 1\n")
    code, out = run_cli("equiv", INPUTS / "gauss.field", other)
    assert code == 1
    assert "verdict = CERTIFIED_DISTINCT" in out


def test_equiv_sweep_bound_flag():
    code, out = run_cli(
        "equiv", INPUTS / "oct3.field", INPUTS / "oct48.field", "--bound", "50"
    )
    assert code == 0
    assert "verdict = EQUIVALENT_UP_TO_BOUND" in out
    assert "bound = 50" in out


def test_equiv_self():
    code, out = run_cli("equiv", INPUTS / "gauss.field", INPUTS / "gauss.field")
    assert code == 0


def test_check_example_pair():
    code, out = run_cli(
        "check",
        INPUTS / "oct3_sl3.triple",
        INPUTS / "oct48_sl3.triple",
        "--bound",
        "100",
    )
    assert code == 0
    assert "outcome = COMMENSURABLE" in out
    assert "cond.p_algebras = pass" in out


def test_check_degree_mismatch(tmp_path):
    a = tmp_path / "a.triple"
    a.write_text("poly = 0, 1\ngroup = SL 3\n")
    b = tmp_path / "b.triple"
    b.write_text("poly = 1, 0, 1\ngroup = SL 3\n")
    code, out = run_cli("check", a, b)
    assert code == 1
    assert "outcome = NOT_COMMENSURABLE" in out
    assert "cond.field_degree = fail" in out


def test_check_unknown_when_low_rank(tmp_path):
    a = tmp_path / "a.triple"
    a.write_text("poly = 0, 1\ngroup = SL 2\n")
    code, out = run_cli("check", a, a)
    assert code == 3
    assert "outcome = UNKNOWN" in out
    assert "cond.higher_rank = fail" in out


def test_check_csp_unknown_caveat(tmp_path):
    a = tmp_path / "a.triple"
    a.write_text("poly = 0, 1\ngroup = SL 3\ncsp = unknown\n")
    b = tmp_path / "b.triple"
    b.write_text("poly = 0, 1\ngroup = SL 4\ncsp = unknown\n")
    code, out = run_cli("check", a, b)
    assert code == 3
    assert "csp_caveat" in out


def test_bad_s_ordinal_rejected(tmp_path):
    a = tmp_path / "a.triple"
    a.write_text("poly = 1, 0, 1\ngroup = SL 3\nS = 5:2\n")
    code, out = run_cli("check", a, a)
    assert code == 2
    assert out.startswith("ERROR: PlaceError")


def test_l2_reports():
    code, out = run_cli("l2", INPUTS / "deg7a_spin32.triple")
    assert code == 0
    assert out.splitlines() == ["l2 = concentrated", "degree = 25", "euler_sign = -1"]
    code, out = run_cli("l2", INPUTS / "quad5_spin61.triple")
    assert out.splitlines() == ["l2 = concentrated", "degree = 6", "euler_sign = +1"]
    code, out = run_cli("l2", INPUTS / "quad5_spin52.triple")
    assert out.splitlines() == ["l2 = concentrated", "degree = 10", "euler_sign = +1"]
    code, out = run_cli("l2", INPUTS / "oct3_sl3.triple")
    assert out.splitlines() == ["l2 = all_zero", "euler_sign = 0"]


def test_gassmann_fano():
    code, out = run_cli("gassmann", INPUTS / "fano.group")
    assert code == 0
    assert "group_order = 168" in out
    assert "gassmann = true" in out
    assert "cycle_types_agree = true" in out


def test_gassmann_negative(tmp_path):
    f = tmp_path / "klein.group"
    f.write_text(
        "degree = 4\n"
        "group = (1 2)(3 4) (1 3)(2 4)\n"
        "U = (1 2)(3 4)\n"
        "V = (1 3)(2 4)\n"
    )
    code, out = run_cli("gassmann", f)
    assert code == 1
    assert "gassmann = false" in out
    assert "witness = " in out


def test_out_flag(tmp_path):
    target = tmp_path / "report.txt"
    code, out = run_cli("field", INPUTS / "gauss.field", "--out", target)
    assert code == 0
    assert out == ""
    assert "disc = -4" in target.read_text()


def test_determinism_across_runs():
    commands = [
        ("field", INPUTS / "oct97.field"),
        ("decompose", INPUTS / "oct1552.field", "2"),
        ("equiv", INPUTS / "oct3.field", INPUTS / "oct48.field", "--bound", "60"),
        ("l2", INPUTS / "deg7a_spin32.triple"),
        ("gassmann", INPUTS / "fano.group"),
    ]
    for cmd in commands:
        first = run_cli(*cmd)
        second = run_cli(*cmd)
        assert first == second

import pytest

from macpresym.calibrate import calibrate, check_conventions, run_suites
from macpresym.conventions import (Conventions, LedgerError, default_conventions,
                                   default_ledger_path, format_ledger, load_ledger, parse_ledger)


def test_round_trip():
    conv = Conventions("left-first", "literal", "t^-(i-1)", "descents")
    assert parse_ledger(format_ledger(conv, [("x", "1/2")])) == conv


def test_tampering_is_detected():
    text = format_ledger(Conventions())
    with pytest.raises(LedgerError):
        parse_ledger(text.replace("standard", "literal"))
    with pytest.raises(LedgerError):
        parse_ledger(text.split("\n", 1)[1])
    with pytest.raises(ValueError):
        Conventions(tdelta="t^2")


def test_missing_ledger(tmp_path):
    with pytest.raises(LedgerError):
        load_ledger(tmp_path / "absent")


def test_l_statistics():
    eta = (0, 2, 1)
    conv = Conventions()
    assert conv.replace(l_statistic="ascents").l_of(eta) == 2
    assert conv.replace(l_statistic="descents").l_of(eta) == 1
    assert conv.replace(l_statistic="ascents+n").l_of(eta) == 2 + 1
    assert Conventions(tdelta="t^(i-1)").tdelta_exponents(3) == [0, 1, 2]


def test_shipped_ledger_is_the_calibrated_one():
    conv, text = calibrate()
    assert text == default_ledger_path().read_text(encoding="utf-8")
    assert conv == default_conventions()
    assert conv == Conventions("right-first", "standard", "t^(i-1)", "ascents+n")


def test_suites_single_out_one_combination():
    winners, evidence = run_suites()
    assert len(winners) == 1
    ev = dict(evidence)
    assert ev["operator_order.left-first"][0] > 0
    assert ev["leg_length.literal"] == (7, 146)
    passing = [k for k, (bad, _) in ev.items() if k.startswith("evaluation") and bad == 0]
    assert passing == ["evaluation.t^(i-1).ascents+n"]


def test_check_conventions_on_a_wrong_choice():
    res = dict(check_conventions(Conventions("right-first", "standard", "t^(n-i)", "ascents")))
    assert res["leg_length"][0] == 0 and res["evaluation"][0] > 0

import json
from fractions import Fraction

import pytest

import macmahon as mm


def test_sigma_series():
    entries = mm.family(1, [1], kind="A", kmax=1, order="31")
    sigma = [sum(d for d in range(1, m + 1) if m % d == 0) for m in range(1, 31)]
    got = [Fraction(entries[1].coeff(str(m))) for m in range(1, 31)]
    assert got == sigma


def test_appendix_row():
    entries = mm.family(3, [1, 2], kmax=2, order="16")
    row = [int(Fraction(entries[2].coeff(str(m)))) for m in range(3, 16)]
    assert row == [1, 2, 6, 12, 20, 30, 48, 66, 90, 124, 154, 204, 240]


def test_oracle_matches_family():
    entries = mm.family(5, [2, 3], kind="B", kmax=2, order="16")
    for k in (1, 2):
        for m in range(1, 16):
            assert mm.oracle(5, [2, 3], "B", k, m) == entries[k].coeff(str(m))


def test_series_json_roundtrip():
    s = mm.theta("1/2", scale=1, is_signed=True, order="5")
    assert mm.Series.from_json(s.to_json()) == s
    assert s.coeff("1/8", "1/2") == "1"
    assert s.coeff("9/8", "3/2") == "-1"


def test_verify_reports():
    for report in (
        mm.verify_jtp("1/6", order="12"),
        mm.verify_heat("1/4", scale=2, order="15"),
        mm.verify_eta_cubed(order="20"),
        mm.verify_thm1_odd(order="12"),
        mm.verify_thm2(3, [1, 2], order="12"),
        mm.verify_thm3(2, [1], order="12"),
        mm.two_path_check(3, [1, 2], kind="A", w=1, order="12"),
    ):
        assert json.loads(report)["status"] == "PASS"


def test_reconstruct():
    d = json.loads(mm.reconstruct(3, [1, 2], kind="A", kmax=2, order="15"))
    assert d["recon"] == "PASS"
    assert len(d["parts"]) == 3


def test_validation_errors():
    with pytest.raises(ValueError):
        mm.family(5, [1], kmax=1, order="10")
    with pytest.raises(ValueError):
        mm.oracle(3, [1, 2], "C", 1, 1)

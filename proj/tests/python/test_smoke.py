import pytest

import mexlab


def test_sigma_values():
    assert mexlab.sigma_mex("overlined", 4)[3] == 12
    assert mexlab.sigma_mex("all", 4)[3:] == [18, 28]
    assert mexlab.sigma_mex("nonoverlined", 3) == [1, 3, 6, 13]
    assert mexlab.overpartition_counts(5) == [1, 2, 4, 8, 14, 24]


def test_big_coefficients_are_python_ints():
    values = mexlab.sigma_mex("overlined", 2500)
    assert isinstance(values[-1], int)
    assert values[-1] > 2**200


def test_series_matches_oracle():
    series = mexlab.sigma_mex("all", 12)
    assert [mexlab.sigma_mex_oracle(n, "all") for n in range(13)] == series


def test_counts():
    assert mexlab.mex_counts("overlined", 1, 3)[3] == 5
    assert mexlab.mex_counts("all", 3, 3)[3] == 4


def test_enumeration():
    ops = mexlab.enumerate_overpartitions(3)
    assert [str(p) for p in ops] == ["3", "3~", "2+1", "2~+1", "2+1~", "2~+1~", "1+1+1", "1~+1+1"]
    assert [p.mex("overlined") for p in ops] == [1, 1, 1, 1, 2, 3, 1, 2]
    assert ops[5].groups[1].overlined
    assert ops[2].underlying == "2+1"
    assert len(mexlab.overpartitions_from_multiset([5, 3, 3, 3, 2, 2])) == 8


def test_errors():
    with pytest.raises(ValueError):
        mexlab.sigma_mex("bogus", 3)
    with pytest.raises(mexlab.OracleLimitError):
        mexlab.enumerate_overpartitions(50)
    with pytest.raises(ValueError):
        mexlab.overpartitions_from_multiset([])


def test_verify_single_check():
    reports = mexlab.verify(only="euler", identity_order=500)
    assert len(reports) == 1
    assert reports[0]["check_name"] == "euler"
    assert reports[0]["status"] == "PASS"


def test_cli_in_process():
    code, out, _ = mexlab.run_cli(["table", "--variant", "all", "--max-n", "0"])
    assert code == 0
    assert out == "n,value\n0,1\n"
    code, _, _ = mexlab.run_cli(["table", "--variant", "nope"])
    assert code == 2

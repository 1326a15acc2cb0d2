import json

import pytest

from skewtab import cli
from skewtab.exact import IntegralityError
from skewtab.sequences import involutions


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--json"])
    return code, json.loads(out), out


def test_skew_all_methods_agree(capsys):
    code, record, raw = run_json(capsys, ["skew", "--outer", "2,2,1", "--inner", "1"])
    assert code == 0
    assert record["agree"] is True
    assert record["results"]["count"] == "5"
    assert record["results"]["by_method"] == {"brute": "5", "det": "5", "char": "5"}


def test_skew_single_method(capsys):
    code, record, _ = run_json(
        capsys, ["skew", "--outer", "3", "--inner", "3", "--method", "det"]
    )
    assert code == 0
    assert record["results"]["count"] == "1"
    assert list(record["results"]["by_method"]) == ["det"]


def test_skew_invalid_shape_exit_3(capsys):
    code, out, err = run(capsys, ["skew", "--outer", "2,1", "--inner", "2,2"])
    assert code == 3
    assert "invalid skew shape" in err


def test_skew_parse_error_exit_2(capsys):
    code, out, err = run(capsys, ["skew", "--outer", "1,2", "--inner", ""])
    assert code == 2


def test_contain_all_methods(capsys):
    code, record, _ = run_json(capsys, ["contain", "--n", "4", "--alpha", "2,1"])
    assert code == 0
    assert record["agree"] is True
    assert record["results"]["N"] == "3"
    assert record["results"]["P"] == "3/10"


def test_contain_small_n(capsys):
    code, record, _ = run_json(capsys, ["contain", "--n", "2", "--alpha", "3"])
    assert code == 0
    assert record["results"]["N"] == "0"
    assert record["results"]["P"] == "0"


def test_contain_text_output(capsys):
    code, out, err = run(capsys, ["contain", "--n", "3", "--alpha", "1"])
    assert code == 0
    assert "N(3; 1)" in out
    assert "agree     = True" in out


def test_table_matches(capsys):
    code, record, _ = run_json(capsys, ["table", "--max-k", "3", "--n-max", "8"])
    assert code == 0
    assert record["agree"] is True
    rows = record["results"]["rows"]
    single = [r for r in rows if r["alpha"] == "1"]
    assert [r["expansion"] for r in single][1:] == ["1", "2", "4", "10", "26", "76", "232", "764"]
    assert all(r["match"] for r in rows if r["match"] is not None)


def test_table_zero_rows_below_weight(capsys):
    code, record, _ = run_json(capsys, ["table", "--max-k", "5", "--n-max", "3"])
    assert code == 0
    for row in record["results"]["rows"]:
        if row["n"] < sum(int(p) for p in row["alpha"].split(",")):
            assert row["expansion"] == "0"


def test_asym_tn(capsys):
    code, record, _ = run_json(capsys, ["asym", "tn", "--n", "50", "--order", "2"])
    assert code == 0
    assert record["results"]["exact"] == "27886995605342342839104615869259776"
    assert abs(record["results"]["rel_err"]) < 1e-4


def test_asym_shift(capsys):
    code, record, _ = run_json(capsys, ["asym", "shift", "--n", "100", "--m", "3"])
    assert code == 0
    assert abs(record["results"]["rel_err"]) < 0.005


def test_asym_prob(capsys):
    code, record, _ = run_json(capsys, ["asym", "prob", "--n", "30", "--alpha", "2,1"])
    assert code == 0
    assert record["results"]["exact"].count("/") == 1


def test_asym_vk(capsys):
    code, record, _ = run_json(
        capsys,
        ["asym", "vk", "--alpha", "2", "--a", "1/2,1/2", "--b", "", "--m", "100"],
    )
    assert code == 0
    assert record["results"]["estimate_ratio"] == "3/4"
    assert record["results"]["exact_ratio"] == "297/398"


def test_asym_mass(capsys):
    code, record, _ = run_json(capsys, ["asym", "mass", "--n", "16", "--eps", "1/2"])
    assert code == 0
    num, den = record["results"]["mass"].split("/")
    assert 0 <= int(num) <= int(den)


def test_json_round_trips_bit_identically(capsys):
    for argv in [
        ["skew", "--outer", "2,2,1", "--inner", "1"],
        ["contain", "--n", "6", "--alpha", "2,2"],
        ["table", "--max-k", "2", "--n-max", "5"],
        ["asym", "tn", "--n", "20"],
        ["asym", "mass", "--n", "16", "--eps", "1/2"],
    ]:
        code, record, raw = run_json(capsys, argv)
        assert code == 0
        assert cli.render_json(record) + "\n" == raw


def test_big_integers_are_strings(capsys):
    code, record, _ = run_json(
        capsys, ["contain", "--n", "40", "--alpha", "1", "--method", "expansion"]
    )
    assert code == 0
    assert isinstance(record["results"]["N"], str)
    assert record["results"]["N"] == str(involutions(40))


def test_integrality_violation_exit_4(capsys, monkeypatch):
    def broken(n, alpha, method):
        raise IntegralityError("forced failure")

    monkeypatch.setattr(cli.containment, "count_containing", broken)
    code, out, err = run(capsys, ["contain", "--n", "4", "--alpha", "2,1"])
    assert code == 4
    assert "integrality" in err


def test_argparse_rejects_unknown_method(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["contain", "--n", "4", "--alpha", "2,1", "--method", "guess"])
    assert exc.value.code == 2

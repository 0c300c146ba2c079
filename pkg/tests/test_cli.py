import csv
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from dedesum import cli
from dedesum.characters import DirichletCharacter, evaluate
from dedesum.cyclotomic import CyclotomicNumber
from dedesum.dedekind import dedekind_sum


def call(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, _ = call(capsys, *argv, "--json")
    return code, json.loads(out)


def test_sum_plain(capsys):
    code, out, _ = call(capsys, "sum", "2", "13")
    assert code == 0 and out.strip() == "4/13"


@pytest.mark.parametrize("oracle", ["sawtooth", "cotangent"])
def test_sum_with_oracle(capsys, oracle):
    code, env = call_json(capsys, "sum", "3", "7", "--oracle", oracle)
    assert code == 0
    assert env["result"]["value"] == "-1/14"
    assert env["result"][oracle]["agree"] is True


def test_sum_oracle_disagreement_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "dedekind_sum_sawtooth", lambda c, d: Fraction(0))
    code, out, _ = call(capsys, "sum", "1", "5", "--oracle", "sawtooth")
    assert code == 2 and "DISAGREE" in out


@pytest.mark.parametrize("argv", [
    ["sum", "2", "4"],
    ["sum", "1", "0"],
    ["sum", "x", "5"],
    ["classnum", "12"],
    ["classnum", "5"],
    ["chars", "0"],
    ["relclassnum", "--cyclotomic", "6"],
    ["relclassnum"],
    ["relclassnum", "--modulus", "5"],
    ["relclassnum", "--modulus", "5", "--char", "1,1"],
    ["sum", "1", "5", "--bogus"],
    ["verify", "nosuchsuite"],
    [],
])
def test_bad_input_exits_1(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 1
    assert err.strip()


def test_unknown_flag_prints_usage(capsys):
    code, _, err = call(capsys, "classnum", "23", "--frobnicate")
    assert code == 1 and "usage:" in err


def test_classnum_all_oracles(capsys):
    code, env = call_json(capsys, "classnum", "23", "--oracle", "all")
    res = env["result"]
    assert code == 0
    assert res["h"] == 3 and res["oracles_agree"] is True
    assert res["forms_oracle"] == 3 and abs(res["analytic_oracle"] - 3) < 1e-6
    assert Fraction(res["exact_sum"]) == 9


def test_classnum_text(capsys):
    code, out, _ = call(capsys, "classnum", "23", "--oracle", "all")
    assert code == 0 and out.startswith("h(-23) = 3") and "oracles_agree=true" in out


def test_relclassnum_cyclotomic_5(capsys):
    code, out, _ = call(capsys, "relclassnum", "--cyclotomic", "5")
    assert code == 0 and out.splitlines()[0] == "h_minus=1"


def test_relclassnum_modulus_char(capsys):
    code, env = call_json(capsys, "relclassnum", "--modulus", "13", "--char", "3")
    res = env["result"]
    assert code == 0 and res["h_minus"] == 1 and res["float_agrees"] is True


def test_relclassnum_quadratic_and_hasse(capsys):
    code, env = call_json(capsys, "relclassnum", "--quadratic", "47")
    assert code == 0 and env["result"]["h_minus"] == 5
    code, env = call_json(capsys, "relclassnum", "--cyclotomic", "12", "--hasse-q", "2")
    assert code == 0 and env["result"]["h_minus"] == 1
    assert env["result"]["hasse_unit_index_source"] == "user-supplied"


def test_relclassnum_undetermined_unit_index_exits_1(capsys):
    code, _, err = call(capsys, "relclassnum", "--modulus", "15", "--char", "1,0", "--char", "0,2")
    assert code == 1 and err.strip()


def test_chars_table(capsys):
    code, env = call_json(capsys, "chars", "5")
    res = env["result"]
    assert code == 0 and res["unit_group"] == [[2, 4]]
    assert len(res["characters"]) == 4
    quartic = [c for c in res["characters"] if c["exponents"] == [1]][0]
    assert quartic["values"] == ["1", "zeta_4^1", "zeta_4^3", "zeta_4^2"]
    assert quartic["parity"] == "odd" and quartic["conductor"] == 5 and quartic["primitive"]


def test_chars_odd_only(capsys):
    code, env = call_json(capsys, "chars", "13", "--odd-only")
    rows = env["result"]["characters"]
    assert code == 0 and len(rows) == 6 and all(r["parity"] == "odd" for r in rows)
    code, out, _ = call(capsys, "chars", "9", "--odd-only")
    assert code == 0 and "conductor=3" in out


def test_json_round_trip(capsys):
    _, env = call_json(capsys, "sum", "5", "13")
    assert Fraction(env["result"]["value"]) == dedekind_sum(5, 13)
    _, env = call_json(capsys, "relclassnum", "--cyclotomic", "23")
    res = env["result"]
    assert res["h_minus"] == 3
    # pair contributions are real algebraic; only their product is rational
    product = CyclotomicNumber.rational(1)
    for c in res["contributions"]:
        value = CyclotomicNumber.parse(c["value"])
        assert str(value) == c["value"]
        product = product * value
    assert str(product.to_rational()) == res["exact_product"]
    _, env = call_json(capsys, "chars", "7")
    for row in env["result"]["characters"]:
        chi = DirichletCharacter(7, tuple(row["exponents"]))
        for n, v in enumerate(row["values"], start=1):
            assert CyclotomicNumber.parse(v) == evaluate(chi, n)


@pytest.mark.parametrize("argv", [
    ["sum", "1234567", "7654321"],
    ["classnum", "987", "--oracle", "all"],
    ["relclassnum", "--cyclotomic", "31"],
    ["chars", "24"],
    ["verify", "vanishing", "--max-f", "30"],
])
def test_json_is_deterministic(capsys, argv):
    _, first, _ = call(capsys, *argv, "--json")
    _, second, _ = call(capsys, *argv, "--json")
    assert first == second
    env = json.loads(first)
    assert env["command"] == argv[0] and "version" in env and "inputs" in env
    assert list(env) == sorted(env)


def test_sweep_csv(capsys, tmp_path):
    one, four = tmp_path / "one.csv", tmp_path / "four.csv"
    code, out, _ = call(capsys, "sweep", "--max-d", "400", "--csv", str(one))
    assert code == 0 and "0 disagreements" in out
    code, _, _ = call(capsys, "sweep", "--max-d", "400", "--jobs", "4", "--csv", str(four))
    assert code == 0
    assert one.read_bytes() == four.read_bytes()
    rows = list(csv.reader(one.open()))
    assert rows[0] == ["D", "h", "exact_sum", "forms_oracle", "analytic_oracle", "agree"]
    body = rows[1:]
    assert [int(r[0]) for r in body] == sorted(int(r[0]) for r in body)
    assert body[0][:2] == ["3", "1"] and all(r[5] == "true" for r in body)
    d23 = [r for r in body if r[0] == "23"][0]
    assert d23[1] == "3" and d23[3] == "3"


def test_sweep_json_rows(capsys):
    code, env = call_json(capsys, "sweep", "--max-d", "50", "--rows")
    res = env["result"]
    assert code == 0 and res["disagreements"] == []
    assert res["count"] == len(res["rows"])
    assert [r["D"] for r in res["rows"]][:4] == [3, 4, 7, 8]


@pytest.mark.parametrize("argv", [
    ["verify", "reciprocity", "--max-d", "200", "--samples", "500"],
    ["verify", "vanishing", "--max-f", "40"],
    ["verify", "parity", "--max-p", "500"],
    ["verify", "oracle", "--max-d", "60"],
    ["verify", "lvalue", "--max-f", "40"],
])
def test_verify_suites_pass(capsys, argv):
    code, env = call_json(capsys, *argv)
    assert code == 0
    (suite,) = env["result"]["suites"]
    assert suite["violations"] == 0 and suite["checked"] > 0


def test_verify_reports_counterexample(capsys, monkeypatch):
    import dedesum.verify as verify

    monkeypatch.setattr(verify, "dedekind_sum", lambda c, d: Fraction(0))
    code, out, _ = call(capsys, "verify", "reciprocity", "--max-d", "10", "--samples", "5")
    assert code == 2 and "first counterexample" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dedesum", "sum", "1", "13"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "11/13"

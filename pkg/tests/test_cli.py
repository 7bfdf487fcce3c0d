import csv
import io
import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from spinhurwitz import cli
from spinhurwitz.series import rational_from_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def values(record):
    return [rational_from_json(r["value"]) for r in record["results"]]


def test_spin3_all(capsys):
    code, out, _ = run(capsys, "spin3", "-g", "2", "--parity", "+", "--k", "0", "--method", "all")
    record = json.loads(out)
    assert code == 0
    assert record["agreement"] is True
    assert {r["method"] for r in record["results"]} == {"recursion", "closed", "transfer"}
    assert set(values(record)) == {27}


def test_spin3_eop(capsys):
    code, out, _ = run(capsys, "spin3", "-g", "1", "--parity=-", "--k", "1", "--method", "eop")
    assert code == 0
    assert values(json.loads(out)) == [-3]


def test_spin3_genus0_odd(capsys):
    code, _, err = run(capsys, "spin3", "-g", "0", "--parity", "-", "--k", "0")
    assert code == cli.EXIT_DOMAIN
    assert "genus-0" in err


@pytest.mark.parametrize("argv", [
    ["spin3", "-g", "2", "--parity", "+", "--method", "eop"],
    ["spin3", "-g", "1", "--parity", "+", "--method", "transfer"],
])
def test_spin3_method_mismatch(capsys, argv):
    assert run(capsys, *argv)[0] == cli.EXIT_DOMAIN


def test_hurwitz_both(capsys):
    code, out, _ = run(capsys, "hurwitz", "-d", "3", "-g", "0",
                       "--profile", "3", "--profile", "3", "--profile", "3", "--method", "both")
    record = json.loads(out)
    assert code == 0 and record["agreement"] is True
    assert values(record) == [Fraction(1, 3)] * 2
    assert record["query"] == {"d": 3, "h": 0, "profiles": ["3", "3", "3"]}


def test_hurwitz_burnside_genus1(capsys):
    code, out, _ = run(capsys, "hurwitz", "-d", "3", "-g", "1", "--method", "burnside")
    assert code == 0 and values(json.loads(out)) == [3]


def test_hurwitz_trivial_profile_syntax(capsys):
    code, out, _ = run(capsys, "hurwitz", "-d", "3", "--profile", "1^3", "--profile", "3",
                       "--profile", "3", "--profile", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows == [["method", "numerator", "denominator"], ["burnside", "1", "3"], ["monodromy", "1", "3"]]


def test_hurwitz_odd_chi_is_domain_error(capsys):
    code, _, err = run(capsys, "hurwitz", "-d", "2", "-g", "0", "--profile", "2")
    assert code == cli.EXIT_DOMAIN
    assert "odd Euler characteristic" in err


def test_hurwitz_budget(capsys):
    code, _, err = run(capsys, "hurwitz", "-d", "4", "-g", "1", "--profile", "2,2",
                       "--method", "monodromy", "--budget", "100")
    assert code == cli.EXIT_BUDGET
    assert "13824" in err


def test_hurwitz_out_of_range(capsys):
    code, _, _ = run(capsys, "hurwitz", "-d", "9", "-g", "0", "--method", "burnside")
    assert code == cli.EXIT_DOMAIN


def test_hurwitz_bad_profile(capsys):
    assert run(capsys, "hurwitz", "-d", "3", "--profile", "2,2")[0] == cli.EXIT_DOMAIN
    assert run(capsys, "hurwitz", "-d", "3", "--profile", "x")[0] == cli.EXIT_DOMAIN


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["spin3"])
    assert info.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        cli.main(["nope"])
    assert info.value.code == cli.EXIT_USAGE
    assert run(capsys, "spin3", "-g", "1", "--parity", "?")[0] == cli.EXIT_DOMAIN


def parse_table(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_table_genus1(capsys):
    code, out, _ = run(capsys, "table", "--h-max", "1", "--k-max", "2")
    assert code == 0
    assert out.splitlines()[0] == "h,parity,k,numerator,denominator"
    odd = [Fraction(int(r["numerator"]), int(r["denominator"]))
           for r in parse_table(out) if r["h"] == "1" and r["parity"] == "-"]
    assert odd == [0, -3, 3]


def test_table_single_cell(capsys):
    code, out, _ = run(capsys, "table", "--h-max", "0", "--k-max", "0")
    assert out.splitlines() == ["h,parity,k,numerator,denominator", "0,+,0,1,6"]


def test_table_genus2_even(capsys):
    _, out, _ = run(capsys, "table", "--h-max", "2", "--k-max", "1")
    rows = [(r["numerator"], r["denominator"]) for r in parse_table(out)
            if r["h"] == "2" and r["parity"] == "+"]
    assert rows == [("27", "1"), ("-27", "1")]


def test_table_json(capsys):
    _, out, _ = run(capsys, "table", "--h-max", "1", "--k-max", "0", "--format", "json")
    rows = json.loads(out)
    assert rows[0] == {"h": 0, "parity": "+", "k": 0, "value": {"numerator": "1", "denominator": "6"}}
    assert len(rows) == 3


def test_table_deterministic_across_workers(capsys):
    _, serial, _ = run(capsys, "table", "--h-max", "4", "--k-max", "6")
    _, again, _ = run(capsys, "table", "--h-max", "4", "--k-max", "6")
    _, parallel, _ = run(capsys, "table", "--h-max", "4", "--k-max", "6", "--workers", "3")
    assert serial == again == parallel


def test_table_disagreement_aborts(capsys, monkeypatch):
    from spinhurwitz import spin
    monkeypatch.setitem(spin.METHODS, "closed", lambda h, p, k: Fraction(0))
    code, out, err = run(capsys, "table", "--h-max", "1", "--k-max", "1")
    assert code == cli.EXIT_DISAGREE
    assert out == ""
    assert "disagreement" in err


def test_spin3_disagreement_exit_code(capsys, monkeypatch):
    from spinhurwitz import spin
    monkeypatch.setitem(spin.METHODS, "closed", lambda h, p, k: Fraction(0))
    code, out, _ = run(capsys, "spin3", "-g", "2", "--parity", "+")
    assert code == cli.EXIT_DISAGREE
    assert json.loads(out)["agreement"] is False


def test_series_commands(capsys):
    _, out, _ = run(capsys, "series", "--direction", "disconnected", "1", "1/2", "4/3")
    assert [rational_from_json(v) for v in json.loads(out)] == [1, 1, 2]
    _, out, _ = run(capsys, "series", "--direction", "connected", "1", "1", "2")
    assert [rational_from_json(v) for v in json.loads(out)] == [1, Fraction(1, 2), Fraction(4, 3)]
    _, out, _ = run(capsys, "series", "--direction", "disconnected")
    assert json.loads(out) == []
    assert run(capsys, "series", "--direction", "connected", "1/x")[0] == cli.EXIT_DOMAIN


def test_series_round_trip_random():
    rng = random.Random(5)
    for _ in range(100):
        coeffs = [str(Fraction(rng.randint(-30, 30), rng.randint(1, 9))) for _ in range(rng.randint(0, 8))]
        there = cli.series_transform("disconnected", coeffs)
        back = cli.series_transform("connected", [str(v) for v in there])
        assert back == [Fraction(c) for c in coeffs]


@pytest.mark.parametrize("suite", ["spin", "identities"])
def test_check_suites(capsys, suite):
    code, out, _ = run(capsys, "check", "--suite", suite)
    report = json.loads(out)
    assert code == 0 and report["passed"] is True
    assert all(c["name"].startswith(suite + ".") for c in report["checks"])


def test_check_all(capsys):
    code, out, _ = run(capsys, "check", "--suite", "all")
    report = json.loads(out)
    assert code == 0
    assert {c["name"].split(".")[0] for c in report["checks"]} == {"spin", "oracle", "identities"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spinhurwitz", "spin3", "-g", "1", "--parity", "+", "--k", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert set(values(json.loads(proc.stdout))) == {5}

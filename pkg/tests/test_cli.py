import csv
import io
import json
import subprocess
import sys

import pytest

from qdivide.cli import main
from qdivide.cyclotomic import ExponentVector
from qdivide.integer_theorems import DivisibilityReport
from qdivide.qpoly import QPoly
from qdivide.reports import ScanReport


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_polynomial(self, capsys):
        code, out, _ = run(capsys, "compute", "1", "5", "5", "2")
        assert (code, out.strip()) == (0, "1 + q^2")

    def test_not_polynomial(self, capsys):
        code, _, err = run(capsys, "compute", "1", "6", "12", "3")
        assert code == 1 and "e_3 = -1" in err

    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "compute", "1", "1", "0", "0")
        assert (code, out.strip()) == (0, "1")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "compute", "2", "6", "6", "2", "--json")
        assert code == 0
        assert QPoly.from_json(out) == QPoly([1, 1, 1, 1, 1])

    def test_json_not_polynomial(self, capsys):
        code, out, _ = run(capsys, "compute", "1", "6", "12", "3", "--json")
        assert code == 1
        assert json.loads(out)["negative_exponents"] == {"3": -1}

    @pytest.mark.parametrize(
        "argv",
        [("compute", "1", "0", "5", "2"), ("compute", "1", "x", "5", "2"),
         ("compute", "-1", "2", "5", "2"), ("compute", "1", "2")],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == 2


class TestFactor:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "factor", "1", "5", "5", "2", "--json")
        assert code == 0
        assert json.loads(out)["exponents"] == {"4": 1}
        assert ExponentVector.from_json(out)[4] == 1

    def test_negative_entry(self, capsys):
        code, out, _ = run(capsys, "factor", "1", "4", "4", "2", "--json")
        assert code == 0
        assert min(json.loads(out)["exponents"].values()) < 0

    def test_b_equals_a(self, capsys):
        _, out1, _ = run(capsys, "factor", "3", "3", "9", "4", "--json")
        _, out2, _ = run(capsys, "factor", "1", "1", "9", "4", "--json")
        assert json.loads(out1)["exponents"] == json.loads(out2)["exponents"]

    def test_zero_function(self, capsys):
        code, out, _ = run(capsys, "factor", "0", "3", "4", "1")
        assert code == 0 and "= 0" in out


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "1", "5", "12", "7", "--json")
    assert code == 0
    assert json.loads(out) == {"params": {"b": 1, "a": 5, "n": 7, "m": 2}, "u": 1, "v": 1}
    code, _, err = run(capsys, "reduce", "1", "5", "3", "1")
    assert code == 1 and "n < a" in err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "1", "4", "4", "2", "--json")
    data = json.loads(out)
    assert code == 1
    assert data["integer_poly"] is False and data["gcd_characterization"] is False
    assert data["exponents"]["exponents"]["2"] == -1
    code, _, _ = run(capsys, "check", "1", "5", "5", "2")
    assert code == 0


class TestScan:
    def test_thm4(self, capsys):
        code, out, _ = run(capsys, "scan", "thm4-gcd", "--a-max", "4", "--nmult-max", "2", "--json")
        rep = ScanReport.from_json(out)
        assert code == 0 and rep.ok and rep.total_cases > 0

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "scan", "andrews", "--n-max", "0")
        assert code == 0 and "0 cases" in out

    def test_failure_exit(self, capsys):
        code, out, _ = run(capsys, "scan", "eq4-family", "--n-max", "1")
        assert code == 1 and "e_13 = -1" in out

    def test_unknown_selector(self, capsys):
        code, _, _ = run(capsys, "scan", "nope")
        assert code == 2

    def test_inapplicable_flag(self, capsys):
        code, _, err = run(capsys, "scan", "andrews", "--limit", "3")
        assert code == 2 and "--limit" in err

    def test_negative_range(self, capsys):
        code, _, _ = run(capsys, "scan", "andrews", "--n-max", "-2")
        assert code == 2

    def test_thm9_csv(self, capsys):
        code, out, _ = run(capsys, "scan", "thm9", "--n-max", "3", "--N-max", "4", "--m-max", "1", "--csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows[0] == ["n", "N", "M", "m", "hypothesis_holds", "lhs", "n_divides_lhs"]
        assert len(rows) == 1 + (1 + 2 + 3) * 5 * 2

    def test_failures_csv(self, capsys):
        code, out, _ = run(capsys, "scan", "eq4-family", "--n-max", "2", "--csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 1 and len(rows) == 3
        assert json.loads(rows[1][1])["a"] == 65

    def test_jobs_flag(self, capsys):
        code, out, _ = run(capsys, "scan", "sun", "--a-max", "3", "--b-max", "3", "--n-max", "3",
                           "--jobs", "2", "--json")
        assert code == 0 and json.loads(out)["total_cases"] == 27


class TestGould:
    def test_divisible(self, capsys):
        code, out, _ = run(capsys, "gould", "3", "1", "3", "0", "--json")
        data = json.loads(out)
        assert code == 0
        assert (data["lhs"], data["root_sum"], data["hypothesis_holds"], data["n2_verdict"]) == (
            "3", "9", True, True)

    def test_vacuous(self, capsys):
        code, out, _ = run(capsys, "gould", "2", "0", "2", "0", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["hypothesis_holds"] is False and data["n2_verdict"] == "vacuous"

    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "gould", "0", "0", "1", "0", "--json")
        data = json.loads(out)
        assert (data["lhs"], data["root_sum"], data["n2_verdict"]) == ("1", "1", True)

    def test_M_not_below_n(self, capsys):
        code, _, _ = run(capsys, "gould", "3", "3", "3", "0")
        assert code == 2

    def test_large_exponent_skips_numeric(self, capsys):
        code, out, _ = run(capsys, "gould", "300", "0", "2", "0")
        assert code == 0 and "skipped" in out


def test_binom_div(capsys):
    code, out, _ = run(capsys, "binom-div", "4", "1", "--json")
    reps = [DivisibilityReport.from_json(r) for r in json.loads(out)]
    assert code == 0
    assert [r.identity_tag for r in reps] == ["thm8a", "thm8b"]
    assert reps[0].companions[0].identity_tag == "thm8a-proof-variant"
    code, _, _ = run(capsys, "binom-div", "2", "1")
    assert code == 2
    code, _, _ = run(capsys, "binom-div", "4", "0", "--part", "b")
    assert code == 2


def test_sun(capsys):
    code, out, _ = run(capsys, "sun", "2", "1", "2", "--json")
    rep = DivisibilityReport.from_json(out)
    assert code == 0 and rep.divisor == 3 and rep.operands == (15,)


def test_deterministic(capsys):
    _, first, _ = run(capsys, "compute", "1", "29", "60", "6", "--json")
    _, second, _ = run(capsys, "compute", "1", "29", "60", "6", "--json")
    assert first == second


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "qdivide", "compute", "1", "5", "5", "2"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout.strip() == "1 + q^2"

import json

import pytest

from qdivide.afunc import AParams
from qdivide.reports import ScanReport
from qdivide.scan import SELECTORS, division_oracle, resolve_jobs, run_scan, thm9_rows


def _strip_timing(rep):
    d = rep.to_json()
    d.pop("elapsed_ms")
    return d


def test_selector_names():
    assert set(SELECTORS) == {
        "andrews", "thm2-shift", "thm4-gcd", "thm7-unify", "thm8a", "thm8b",
        "thm9", "sun", "gk-eq2", "gk-eq3", "eq4-family", "gould-numeric",
    }


def test_empty_grid():
    rep = run_scan("andrews", n_max=0)
    assert rep.total_cases == 0 and rep.ok


def test_unknown_selector_and_option():
    with pytest.raises(ValueError):
        run_scan("nope")
    with pytest.raises(ValueError):
        run_scan("andrews", limit=3)
    with pytest.raises(ValueError):
        run_scan("andrews", n_max=-1)


def test_division_oracle():
    assert division_oracle(AParams(1, 5, 5, 2))
    assert not division_oracle(AParams(1, 4, 4, 2))
    assert division_oracle(AParams(0, 4, 4, 2))


@pytest.mark.parametrize(
    "name,opts",
    [
        ("thm4-gcd", {"a_max": 5, "nmult_max": 3}),
        ("thm8a", {"a_max": 8, "n_max": 10}),
        ("eq4-family", {"n_max": 2}),
        ("thm2-shift", {"samples": 60}),
    ],
)
def test_parallel_matches_serial(name, opts):
    serial = run_scan(name, jobs=1, **opts)
    parallel = run_scan(name, jobs=3, **opts)
    assert _strip_timing(serial) == _strip_timing(parallel)


def test_env_parallelism(monkeypatch):
    monkeypatch.setenv("QDIVIDE_THREADS", "4")
    assert resolve_jobs() == 4
    assert resolve_jobs(2) == 2
    monkeypatch.delenv("QDIVIDE_THREADS")
    assert resolve_jobs() == 1
    with pytest.raises(ValueError):
        resolve_jobs(0)


def test_thm8a_reports_variant_as_notes():
    rep = run_scan("thm8a", a_max=4, n_max=3)
    assert rep.ok
    assert rep.notes == ["{'a': 4, 'n': 3}: thm8a-proof-variant: 10 does not divide gcd"]


def test_eq4_printed_family_fails_corrected_passes():
    rep = run_scan("eq4-family", n_max=3)
    assert [p["family_n"] for p, _ in rep.failures] == [1, 2]
    assert run_scan("eq4-family", n_max=3, corrected=True).ok


def test_thm9_notes_degenerate_instances():
    rep = run_scan("thm9", n_max=4, N_max=2, m_max=1)
    assert rep.ok
    assert any("degenerate M > N" in note for note in rep.notes)


def test_gk_selectors():
    assert run_scan("gk-eq2", limit=4, expand=True).total_cases == 16
    assert run_scan("gk-eq3", limit=3).total_cases == 12
    assert run_scan("gk-eq3", limit=0).total_cases == 0


def test_thm9_rows():
    rows = thm9_rows(n_max=2, N_max=2, m_max=0)
    assert len(rows) == 3 * 3
    row = next(r for r in rows if (r["n"], r["N"], r["M"]) == (2, 2, 0))
    assert row == {"n": 2, "N": 2, "M": 0, "m": 0, "hypothesis_holds": False,
                   "lhs": 2, "n_divides_lhs": True}


def test_report_json_round_trip():
    rep = run_scan("eq4-family", n_max=2)
    back = ScanReport.from_json(json.dumps(rep.to_json()))
    assert back == rep


def test_failures_sorted_canonically():
    rep = ScanReport("x", failures=[({"a": 2}, "z"), ({"a": 1}, "y")])
    assert [p for p, _ in rep.canonicalize().failures] == [{"a": 1}, {"a": 2}]

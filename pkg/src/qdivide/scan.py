"""Grid sweeps that check each theorem over a parameter range.

Every selector turns an options dict into a list of picklable cases and
checks one case at a time, so a grid can be split across worker processes.
The merged report is canonically sorted and therefore independent of how
the grid was partitioned.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable

from . import afunc
from .afunc import AParams
from .errors import NotDivisible
from .gould import (
    GouldInstance,
    gould_lhs,
    root_unity_sum_exact,
    root_unity_sum_numeric,
    root_unity_sum_rounded,
    theorem9_hypothesis,
)
from .integer_theorems import binom_div_a, binom_div_b, sun_congruence
from .qpoly import gaussian_binomial, one_minus_qk, poly_exact_div, poly_mul
from .reports import ScanReport

__all__ = ["SELECTORS", "run_scan", "resolve_jobs", "division_oracle", "thm9_rows"]

THREADS_ENV = "QDIVIDE_THREADS"

# a case result: (params, detail, is_failure); is_failure False marks a note
Finding = tuple[dict, str, bool]


def division_oracle(p: AParams) -> bool:
    """Polynomiality decided by long division, without cyclotomic exponents."""
    if afunc.is_zero_function(p):
        return True
    num = poly_mul(one_minus_qk(p.b), gaussian_binomial(p.n, p.m))
    try:
        poly_exact_div(num, one_minus_qk(p.a))
    except NotDivisible:
        return False
    return True


# --- case generators and per-case checks ---------------------------------


def _andrews_cases(o):
    return [(n, m) for n in range(1, o["n_max"] + 1) for m in range(0, n + 1)]


def _andrews_check(case, o) -> list[Finding]:
    n, m = case
    got, want = afunc.andrews_predicate(n, m), afunc.is_nonneg_poly(AParams(1, n, n, m))
    if got != want:
        return [({"n": n, "m": m}, f"gcd test {got} but A(1,{n};{n},{m}) in N0[q] is {want}", True)]
    return []


def _shift_cases(o):
    rng = random.Random(o["seed"])
    cases = []
    for _ in range(o["samples"]):
        a = rng.randint(1, o["a_max"])
        n = rng.randint(0, o["n_max"])
        m = rng.randint(0, n)
        b = rng.randint(1, o["b_max"])
        cases.append((b, a, n, m))
    return cases


def _shift_check(case, o) -> list[Finding]:
    p = AParams(*case)
    s = o["shift"]
    shifts = [
        (k, l)
        for k in range(-s, s + 1)
        for l in range(-s, s + 1)
        if 0 <= p.m + k * p.a <= p.n + l * p.a
    ]
    if afunc.shift_equivalence_check(p, shifts):
        return []
    base = afunc.is_integer_poly(p)
    odd = [kl for kl in shifts if afunc.is_integer_poly(p.shifted(*kl)) != base]
    return [(p.to_json(), f"polynomiality changes under shifts {odd}", True)]


def _thm4_cases(o):
    return [
        (b, a, a * t, m)
        for a in range(1, o["a_max"] + 1)
        for t in range(1, o["nmult_max"] + 1)
        for m in range(0, a * t + 1)
        for b in range(1, 2 * a + 1)
    ]


def _thm4_check(case, o) -> list[Finding]:
    p = AParams(*case)
    g = afunc.gcd_characterization(p)
    e = afunc.is_integer_poly(p)
    d = division_oracle(p)
    if g == e == d:
        return []
    return [(p.to_json(), f"gcd={g} exponents={e} division={d}", True)]


def _thm7_cases(o):
    return [
        (a, r, m)
        for a in range(1, o["a_max"] + 1)
        for r in range(0, min(a, o["r_max"] + 1))
        for m in range(r, a + r + 1)
    ]


def _thm7_check(case, o) -> list[Finding]:
    a, r, m = case
    if not afunc.unify_hypothesis(a, r, m):
        return []
    p = AParams(1, a, a + r, m)
    if not afunc.is_nonneg_poly(p):
        return [(p.to_json(), "hypothesis holds but A is not in N0[q]", True)]
    if o.get("expand") and not afunc.expand(p).is_nonneg():
        return [(p.to_json(), "hypothesis holds but expansion has a negative coefficient", True)]
    return []


def _thm8a_cases(o):
    return [(a, n) for a in range(3, o["a_max"] + 1) for n in range(0, o["n_max"] + 1)]


def _thm8a_check(case, o) -> list[Finding]:
    a, n = case
    rep = binom_div_a(a, n)
    out = []
    if not rep.holds:
        out.append(({"a": a, "n": n}, f"{rep.divisor} does not divide {rep.gcd_value}", True))
    for comp in rep.companions:
        if not comp.holds:
            out.append(
                ({"a": a, "n": n}, f"{comp.identity_tag}: {comp.divisor} does not divide gcd", False)
            )
    return out


def _thm8b_cases(o):
    return [(a, n) for a in range(3, o["a_max"] + 1) for n in range(1, o["n_max"] + 1)]


def _thm8b_check(case, o) -> list[Finding]:
    a, n = case
    rep = binom_div_b(a, n)
    if rep.holds:
        return []
    return [({"a": a, "n": n}, f"{rep.divisor} does not divide {rep.gcd_value}", True)]


def _sun_cases(o):
    return [
        (a, b, n)
        for a in range(1, o["a_max"] + 1)
        for b in range(1, o["b_max"] + 1)
        for n in range(1, o["n_max"] + 1)
    ]


def _sun_check(case, o) -> list[Finding]:
    rep = sun_congruence(*case)
    if rep.holds:
        return []
    a, b, n = case
    return [({"a": a, "b": b, "n": n}, f"{rep.divisor} does not divide C({a*n+b*n},{a*n})", True)]


def _gould_cases(o):
    return [
        (N, M, n, m)
        for n in range(1, o["n_max"] + 1)
        for N in range(0, o["N_max"] + 1)
        for M in range(0, n)
        for m in range(0, o["m_max"] + 1)
    ]


def _gould_numeric_check(case, o) -> list[Finding]:
    g = GouldInstance(*case)
    exact = root_unity_sum_exact(g)
    num = root_unity_sum_numeric(g)
    scale = max(1, abs(exact))
    params = {"N": g.N, "M": g.M, "n": g.n, "m": g.m}
    out = []
    if abs(num - exact) >= 1e-6 * scale:
        out.append((params, f"numeric {num} vs exact {exact}", True))
    if abs(num.imag) >= 1e-6 * scale:
        out.append((params, f"imaginary part {num.imag}", True))
    # doubles cannot hold the integer past 2**53, so round a high-precision value
    rounded = root_unity_sum_rounded(g, dps=o["dps"])
    if rounded != exact:
        out.append((params, f"rounded numeric sum {rounded} differs from exact {exact}", True))
    if rounded % g.n:
        out.append((params, f"rounded numeric sum {rounded} not divisible by n", True))
    return out


def _thm9_check(case, o) -> list[Finding]:
    g = GouldInstance(*case)
    params = {"N": g.N, "M": g.M, "n": g.n, "m": g.m}
    if not theorem9_hypothesis(g):
        if g.M > g.N and gould_lhs(g) % g.n:
            # A(1,n;N,M) = 0 here; reported so the exclusion stays visible
            return [(params, "degenerate M > N: n does not divide lhs", False)]
        return []
    out = []
    if root_unity_sum_exact(g) % (g.n * g.n):
        out.append((params, "n^2 does not divide the root sum", True))
    top = g.top
    for j in range(0, (top - g.M) // g.n + 1):
        if not afunc.is_integer_poly(AParams(1, g.n, top, g.M + j * g.n)):
            out.append((params, f"A(1,{g.n};{top},{g.M + j * g.n}) not in Z[q]", True))
    return out


def _eq4_cases(o):
    return [(k, i) for k in range(1, o["n_max"] + 1) for i in range(6)]


def _eq4_check(case, o) -> list[Finding]:
    k, i = case
    label, p = afunc.eq4_instances(k, corrected=o.get("corrected", False))[i]
    params = {"family_n": k, **p.to_json()}
    v = afunc.certificate(p)
    if v is not None and not v.is_nonneg():
        neg = ", ".join(f"e_{d} = {e}" for d, e in v.negative().items())
        return [(params, f"{label} at n={k}: {neg}", True)]
    if o.get("expand") and not afunc.expand(p).is_nonneg():
        return [(params, f"{label} at n={k}: negative coefficient", True)]
    return []


def _gk_runner(which):
    def run(o) -> ScanReport:
        rep = afunc.guo_kratt_family_checks(o["limit"], o.get("expand", False), which=(which,))
        rep.identity_tag = "gk-" + which
        return rep

    return run


@dataclass(frozen=True)
class Selector:
    name: str
    defaults: dict
    cases: Callable[[dict], list] | None = None
    check: Callable[[Any, dict], list[Finding]] | None = None
    direct: Callable[[dict], ScanReport] | None = None


SELECTORS: dict[str, Selector] = {
    s.name: s
    for s in (
        Selector("andrews", {"n_max": 30}, _andrews_cases, _andrews_check),
        Selector(
            "thm2-shift",
            {"samples": 500, "a_max": 10, "n_max": 30, "b_max": 20, "seed": 0, "shift": 2},
            _shift_cases,
            _shift_check,
        ),
        Selector("thm4-gcd", {"a_max": 10, "nmult_max": 5}, _thm4_cases, _thm4_check),
        Selector("thm7-unify", {"a_max": 25, "r_max": 5, "expand": False}, _thm7_cases, _thm7_check),
        Selector("thm8a", {"a_max": 12, "n_max": 25}, _thm8a_cases, _thm8a_check),
        Selector("thm8b", {"a_max": 12, "n_max": 25}, _thm8b_cases, _thm8b_check),
        Selector(
            "thm9", {"n_max": 12, "N_max": 36, "m_max": 4}, _gould_cases, _thm9_check
        ),
        Selector("sun", {"a_max": 12, "b_max": 12, "n_max": 12}, _sun_cases, _sun_check),
        Selector("gk-eq2", {"limit": 10, "expand": False}, direct=_gk_runner("eq2")),
        Selector("gk-eq3", {"limit": 12, "expand": False}, direct=_gk_runner("eq3")),
        Selector(
            "eq4-family",
            {"n_max": 3, "expand": False, "corrected": False},
            _eq4_cases,
            _eq4_check,
        ),
        Selector(
            "gould-numeric",
            {"n_max": 12, "N_max": 30, "m_max": 3, "dps": 60},
            _gould_cases,
            _gould_numeric_check,
        ),
    )
}


def resolve_jobs(jobs: int | None = None) -> int:
    """Explicit ``jobs`` wins, then $QDIVIDE_THREADS, then 1."""
    if jobs is None:
        env = os.environ.get(THREADS_ENV)
        jobs = int(env) if env else 1
    if jobs < 1:
        raise ValueError("parallelism must be >= 1")
    return jobs


def _run_chunk(name: str, opts: dict, cases: list) -> list[Finding]:
    check = SELECTORS[name].check
    out: list[Finding] = []
    for case in cases:
        out.extend(check(case, opts))
    return out


def run_scan(name: str, jobs: int | None = None, **options) -> ScanReport:
    """Run selector ``name``; unknown option names raise ValueError."""
    try:
        sel = SELECTORS[name]
    except KeyError:
        raise ValueError(f"unknown scan selector {name!r}") from None
    unknown = set(options) - set(sel.defaults)
    if unknown:
        raise ValueError(f"options {sorted(unknown)} do not apply to {name}")
    opts = {**sel.defaults, **{k: v for k, v in options.items() if v is not None}}
    for k, v in opts.items():
        if isinstance(v, int) and not isinstance(v, bool) and v < 0 and k != "seed":
            raise ValueError(f"{k} must be nonnegative")
    jobs = resolve_jobs(jobs)

    t0 = time.perf_counter()
    if sel.direct is not None:
        if opts.get("limit", 1) < 1:
            return ScanReport(name, total_cases=0)
        return sel.direct(opts)

    cases = sel.cases(opts)
    if jobs == 1 or len(cases) < 2:
        findings = _run_chunk(name, opts, cases)
    else:
        size = max(1, -(-len(cases) // (jobs * 4)))
        chunks = [cases[i : i + size] for i in range(0, len(cases), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_run_chunk, [name] * len(chunks), [opts] * len(chunks), chunks)
            findings = [f for part in parts for f in part]

    report = ScanReport(name, total_cases=len(cases))
    notes = []
    for params, detail, is_failure in findings:
        if is_failure:
            report.failures.append((params, detail))
        else:
            notes.append((params, detail))
    notes.sort(key=lambda x: (sorted(x[0].items()), x[1]))
    report.notes = [f"{p}: {d}" for p, d in notes]
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report.canonicalize()


def thm9_rows(n_max: int = 12, N_max: int = 36, m_max: int = 4) -> list[dict]:
    """Per-instance rows for CSV export of the n^2 divisibility grid."""
    rows = []
    for N, M, n, m in _gould_cases({"n_max": n_max, "N_max": N_max, "m_max": m_max}):
        g = GouldInstance(N, M, n, m)
        lhs = gould_lhs(g)
        rows.append(
            {
                "n": n,
                "N": N,
                "M": M,
                "m": m,
                "hypothesis_holds": theorem9_hypothesis(g),
                "lhs": lhs,
                "n_divides_lhs": lhs % n == 0,
            }
        )
    return rows

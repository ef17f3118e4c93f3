"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary and when this file is run as a script. Every tolerance is
zero: a single violation fails the criterion.
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction

import pytest

from qcc import enumerate as enum_mod
from qcc import qnc as qnc_mod
from qcc.bounds import (
    omega_table,
    rate_params,
    sandwich,
    scaling_violations,
    size_fraction,
    subadditivity_violations,
    verify_bounds,
)
from qcc.cache import Cache
from qcc.constructions import RationalRate, greedy_remove_independent, join_construction, plan_join
from qcc.enumerate import catalog
from qcc.graph import decode_graph6
from qcc.interval import ValueInterval
from qcc.qnc import q_general, q_small, qnc_bruteforce, qnc_table
from qcc.ramsey import inverse_ramsey, inverse_ramsey_bruteforce
from qcc.records import Kind
from qcc.solvers import chromatic_number, clique_number, independence_number

RESULTS: dict[int, tuple[bool, str]] = {}

RATES = [RationalRate.parse(r) for r in ("1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "1/1")]


def record(criterion: int, ok: bool, detail: str) -> None:
    RESULTS[criterion] = (ok, detail)
    print(format_line(criterion))
    assert ok, detail


def format_line(criterion: int) -> str:
    ok, detail = RESULTS[criterion]
    return f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"


def clear_caches() -> None:
    enum_mod._catalog.cache_clear()
    qnc_mod._table.cache_clear()


def test_criterion_1_ground_truth_table():
    clear_caches()
    start = time.perf_counter()
    tables = {n: qnc_table(n) for n in range(1, 9)}
    elapsed = time.perf_counter() - start
    rows = sum(len(t) for t in tables.values())
    bad = [(n, c) for n, t in tables.items() for c in (1, n)
           if t[c].value != ValueInterval.exact(1 if c == 1 else n)]
    for t in tables.values():
        for rec in t.values():
            rec.certify()
    ok = not bad and rows == 36 and elapsed < 120
    record(1, ok, f"{rows} rows for n<=8 in {elapsed:.1f}s (limit 120s), diagonal/first-column violations: {bad}")


@pytest.mark.slow
def test_criterion_2_small_k_formula():
    clear_caches()
    start = time.perf_counter()
    rows = []
    for n in range(5, 10):
        for k in range(1, (n - 3) // 2 + 1):
            brute, _ = qnc_bruteforce(n, n - k)
            formula = ValueInterval.exact(n - 2 * k) + q_small(k).value
            rows.append((n, k, brute, formula))
    elapsed = time.perf_counter() - start
    pairs = [(n, k) for n, k, _, _ in rows]
    expected_pairs = [(5, 1), (6, 1), (7, 1), (7, 2), (8, 1), (8, 2), (9, 1), (9, 2), (9, 3)]
    mismatches = [(n, k, b, str(f)) for n, k, b, f in rows if f != ValueInterval.exact(b)]
    spots = {(n, k): b for n, k, b, _ in rows}
    spot_ok = spots[(5, 1)] == 4 and spots[(7, 2)] == 4 and spots[(9, 3)] == 5
    ok = pairs == expected_pairs and not mismatches and spot_ok and elapsed < 900
    record(2, ok, f"{len(rows)} pairs, mismatches {mismatches}, Q(5,4)={spots[(5, 1)]} "
                  f"Q(7,5)={spots[(7, 2)]} Q(9,6)={spots[(9, 3)]}, n<=9 sweep {elapsed:.1f}s (limit 900s)")


def test_criterion_3_sandwich():
    failures = []
    disagree = []
    for r in RATES:
        for n in range(1, 9):
            rep = sandwich(r, n)
            if rep.omega_nk != ValueInterval.exact(rep.omega_nk_brute):
                disagree.append((str(r), n))
            if not (rep.lower.hi <= rep.exact <= rep.omega_nk.lo) or not rep.passed:
                failures.append((str(r), n, rep.lower.lo, rep.exact, rep.omega_nk.lo))
    ok = not failures and not disagree
    record(3, ok, f"{len(RATES) * 8} (r,n) rows, bound violations {failures}, table/brute disagreements {disagree}")


def test_criterion_4_scaling_and_subadditivity():
    full = omega_table(9)
    omegas = {key: v for key, v in full.items() if v.is_exact}
    exact_entries = len(omegas)
    scaling = scaling_violations(RATES, omegas)
    sub = subadditivity_violations(omegas)
    checked = sum(1 for r in RATES for (n, k) in omegas if r.value * n >= k)
    ok = not scaling and not sub and exact_entries == len(full)
    record(4, ok, f"{exact_entries}/{len(full)} entries exact, {checked} scaling cases, "
                  f"violations: scaling {scaling}, subadditivity {sub}")


def test_criterion_5_join_bound_and_construction():
    violations = []
    rows = 0
    for r in RATES:
        if r.is_reciprocal:
            continue
        for n in range(1, 9):
            p = rate_params(r, n)
            if p.m <= 0:
                continue
            q = q_general(p.l, p.k).value + q_general(p.m, p.k + 1).value
            pair = inverse_ramsey(p.k * p.l, p.k) + inverse_ramsey((p.k + 1) * p.m, p.k + 1)
            if not (q.is_exact and pair.is_exact):
                continue
            rows += 1
            exact, _ = qnc_bruteforce(n, p.c)
            if not exact <= q.lo <= pair.lo:
                violations.append((str(r), n, exact, q.lo, pair.lo))
    built = []
    for text, n in (("2/5", 20), ("3/10", 20)):
        plan = plan_join(RationalRate.parse(text), n)
        res = join_construction(plan)
        g = res.graph
        omega, chi = clique_number(g), chromatic_number(g)
        hit = res.achieves_plan and plan.bound == ValueInterval.exact(omega) and chi == plan.c and g.n == n
        built.append((text, n, omega, chi, hit))
    ok = rows > 0 and not violations and all(b[-1] for b in built)
    record(5, ok, f"{rows} grid rows with m>0, violations {violations}; constructions (r,n,omega,chi,ok) {built}")


def test_criterion_6_maximum_removal():
    graphs = [g for n in range(1, 9) for g in catalog(n)]
    chis = [chromatic_number(g) for g in graphs]
    checked = 0
    violations = []
    for r in RATES:
        k = r.k
        c_r = size_fraction(r)
        for g, chi in zip(graphs, chis):
            if chi != r.ceil_times(g.n):
                continue
            checked += 1
            h, _ = greedy_remove_independent(g, k, mode="maximum")
            if independence_number(h) > k or h.n < c_r * g.n:
                violations.append((str(r), g.to_graph6(), h.n))
    ok = checked > 0 and not violations
    record(6, ok, f"{checked} (r, graph) cases checked, violations {violations[:5]}")


def test_criterion_7_constants():
    reciprocal = [k for k in range(1, 11) if size_fraction(RationalRate(1, k)) != Fraction(1, k * k)]
    rng = random.Random(2024)
    samples = 0
    nonpositive = []
    for k in range(1, 7):
        lo, hi = Fraction(1, k + 1), Fraction(1, k)
        count = 1000 // 6 + (1 if k <= 1000 % 6 else 0)
        for _ in range(count):
            den = rng.randint(1, 10**6)
            r = lo + (hi - lo) * Fraction(rng.randint(1, den), den)
            rate = RationalRate.from_fraction(r)
            assert rate.k == k
            samples += 1
            if size_fraction(rate) <= 0:
                nonpositive.append(str(rate))
    ok = not reciprocal and not nonpositive and samples == 1000
    record(7, ok, f"c_r=r^2 fails at k={reciprocal}; {samples} samples, non-positive c_r: {nonpositive}")


def test_criterion_8_infrastructure(tmp_path):
    graphs = [g for n in range(0, 9) for g in catalog(n)]
    roundtrip_bad = [g.to_graph6() for g in graphs if decode_graph6(g.to_graph6()) != g]

    rates = [RationalRate(1, 2), RationalRate(2, 5)]
    serial = json.dumps(verify_bounds(rates, 8, threads=1).to_json(), sort_keys=True)
    parallel = json.dumps(verify_bounds(rates, 8, threads=2).to_json(), sort_keys=True)
    identical = serial == parallel

    cache = Cache(tmp_path)
    _, rec = inverse_ramsey_bruteforce(5, 2)
    cache.put(rec)
    roundtrip_ok = Cache(tmp_path).get(Kind.OMEGA_NK, (5, 2)) == rec
    path = tmp_path / "omega_nk.jsonl"
    tampered = path.read_text().replace(rec.witness_g6, "D~{")
    path.write_text(tampered)
    rejected = Cache(tmp_path).get(Kind.OMEGA_NK, (5, 2)) is None

    ok = not roundtrip_bad and identical and roundtrip_ok and rejected
    record(8, ok, f"graph6 round-trip on {len(graphs)} graphs (failures {len(roundtrip_bad)}), "
                  f"serial/parallel identical={identical}, cache round-trip={roundtrip_ok}, "
                  f"tampered witness rejected={rejected}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))

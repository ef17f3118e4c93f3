"""Rate constants, the two-sided bound on Q(n, ceil(rn)) and a verification sweep.

Every constant is an exact :class:`~fractions.Fraction`. Where Ramsey values
are only known as intervals, checks use the certain side of each bound: a
lower bound contributes its smallest possible value and an upper bound its
largest, so an unknown Ramsey number can never produce a false pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .constructions import RationalRate, join_construction, plan_join, simple_upper_witness
from .enumerate import DEFAULT_LIMIT
from .interval import ValueInterval
from .qnc import q_general, q_small, qnc_bruteforce
from .ramsey import WitnessUnavailable, inverse_ramsey, inverse_ramsey_bruteforce


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class RateParams:
    r: RationalRate
    n: int
    k: int
    c: int
    c_r: Fraction
    d_r: Fraction
    m: int
    l: int

    @property
    def join_applicable(self) -> bool:
        return not self.r.is_reciprocal and self.m > 0


def size_fraction(r: RationalRate) -> Fraction:
    """((k+1)/k) r - 1/k with k = floor(1/r): guaranteed share of vertices left
    after removing a largest family of disjoint independent (k+1)-sets."""
    k = r.k
    return Fraction(k + 1, k) * r.value - Fraction(1, k)


def rate_params(r: RationalRate, n: int) -> RateParams:
    if n < 1:
        raise ValueError("n must be positive")
    k = r.k
    c = r.ceil_times(n)
    c_r = size_fraction(r)
    assert c_r > 0, f"c_r must be positive for r={r}"
    d_r = Fraction(1, ceil_fraction(1 / c_r))
    assert 0 < d_r <= 1
    m = n - k * c
    l = (k + 1) * c - n
    assert l >= 1
    return RateParams(r, n, k, c, c_r, d_r, m, l)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class BoundReport:
    params: RateParams
    omega_nk: ValueInterval
    lower: ValueInterval
    upper_ramsey: ValueInterval
    upper_join: ValueInterval | None = None
    upper_pair: ValueInterval | None = None
    exact: int | None = None
    omega_nk_brute: int | None = None
    witnesses: dict[str, str] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def lower_asserted(self) -> int:
        """Integer lower bound actually claimed: ceil(d_r * omega(n,k).lo)."""
        return self.lower.lo

    def row(self) -> dict:
        p = self.params

        def iv(x):
            return "" if x is None else (str(x.lo) if x.is_exact else f"[{x.lo};{'inf' if x.hi is None else x.hi}]")

        return {
            "r": str(p.r),
            "n": p.n,
            "k": p.k,
            "c": p.c,
            "c_r": str(p.c_r),
            "d_r": str(p.d_r),
            "l": p.l,
            "m": p.m,
            "omega_nk": iv(self.omega_nk),
            "omega_nk_brute": "" if self.omega_nk_brute is None else self.omega_nk_brute,
            "lower": iv(self.lower),
            "exact": "" if self.exact is None else self.exact,
            "upper_ramsey": iv(self.upper_ramsey),
            "upper_join": iv(self.upper_join),
            "upper_pair": iv(self.upper_pair),
            "status": "pass" if self.passed else "FAIL",
        }

    def to_json(self) -> dict:
        out = self.row()
        out["checks"] = [c.to_json() for c in self.checks]
        out["witnesses"] = dict(sorted(self.witnesses.items()))
        return out


def _lower_bound(d_r: Fraction, omega: ValueInterval) -> ValueInterval:
    hi = None if omega.hi is None else ceil_fraction(d_r * omega.hi)
    return ValueInterval(ceil_fraction(d_r * omega.lo), hi)


def sandwich(r: RationalRate, n: int, *, limit: int = DEFAULT_LIMIT, exact: bool = True,
             witnesses: bool = False, threads: int = 1, table=None, **witness_kw) -> BoundReport:
    """All applicable bounds on Q(n, ceil(rn)), checked against brute force when n <= limit."""
    p = rate_params(r, n)
    omega = inverse_ramsey(n, p.k, table)
    rep = BoundReport(p, omega, _lower_bound(p.d_r, omega), omega)
    if p.join_applicable:
        rep.upper_join = q_general(p.l, p.k, table).value + q_general(p.m, p.k + 1, table).value
        rep.upper_pair = inverse_ramsey(p.k * p.l, p.k, table) + inverse_ramsey((p.k + 1) * p.m, p.k + 1, table)
    if exact and n <= limit:
        rep.exact, rec = qnc_bruteforce(n, p.c, limit=limit, threads=threads)
        rep.witnesses["exact"] = rec.witness_g6
        rep.omega_nk_brute, _ = inverse_ramsey_bruteforce(n, p.k, limit=limit)
    if witnesses:
        try:
            g, w = simple_upper_witness(r, n, table=table, **witness_kw)
            rep.witnesses["upper_ramsey"] = g.to_graph6()
            rep.checks.append(Check("ramsey_witness", w <= omega.hi, f"constructed omega={w} <= {omega.hi}"))
        except WitnessUnavailable as exc:
            rep.checks.append(Check("ramsey_witness", True, f"skipped: {exc}"))
        if p.join_applicable:
            try:
                res = join_construction(plan_join(r, n, table), table=table, **witness_kw)
                rep.witnesses["upper_join"] = res.graph.to_graph6()
                ok = res.chi == p.c and res.omega <= sum(x["omega"] for x in res.pieces)
                rep.checks.append(Check("join_witness", ok, f"chi={res.chi}, omega={res.omega}"))
            except WitnessUnavailable as exc:
                rep.checks.append(Check("join_witness", True, f"skipped: {exc}"))
    _run_checks(rep)
    return rep


def _run_checks(rep: BoundReport) -> None:
    checks = rep.checks
    if rep.exact is not None:
        q = rep.exact
        checks.append(Check("lower", rep.lower.lo <= q, f"ceil(d_r*omega)={rep.lower.lo} <= Q={q}"))
        checks.append(Check("upper_ramsey", rep.upper_ramsey.hi is None or q <= rep.upper_ramsey.hi,
                            f"Q={q} <= omega(n,k)={rep.upper_ramsey}"))
        if rep.upper_join is not None:
            checks.append(Check("upper_join", q <= rep.upper_join.hi, f"Q={q} <= {rep.upper_join}"))
    if rep.omega_nk_brute is not None:
        checks.append(Check("omega_table_vs_brute",
                            rep.omega_nk.is_exact and rep.omega_nk.lo == rep.omega_nk_brute,
                            f"table {rep.omega_nk} vs brute force {rep.omega_nk_brute}"))
    if rep.upper_join is not None and rep.upper_pair is not None:
        checks.append(Check("join_le_pair",
                            rep.upper_join.hi <= rep.upper_pair.hi and rep.upper_join.lo <= rep.upper_pair.lo,
                            f"{rep.upper_join} <= {rep.upper_pair}"))
    checks.append(Check("lower_le_upper", rep.lower.lo <= rep.upper_ramsey.hi,
                        f"{rep.lower.lo} <= {rep.upper_ramsey.hi}"))


# -- sweeps ---------------------------------------------------------------


@dataclass
class FormulaRow:
    n: int
    k: int
    brute: int
    formula: ValueInterval
    partition: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.formula.is_exact and self.formula.lo == self.brute

    def row(self) -> dict:
        return {"n": self.n, "k": self.k, "c": self.n - self.k, "brute": self.brute,
                "formula": str(self.formula.lo) if self.formula.is_exact else str(self.formula),
                "partition": "+".join(map(str, self.partition)),
                "status": "pass" if self.passed else "FAIL"}


def formula_sweep(n_max: int, *, limit: int = DEFAULT_LIMIT, threads: int = 1, table=None) -> list[FormulaRow]:
    """Brute-force Q(n, n-k) against n - 2k + q_small(k) for all n <= n_max with n >= 2k+3."""
    rows = []
    for n in range(1, n_max + 1):
        for k in range(1, (n - 3) // 2 + 1):
            brute, _ = qnc_bruteforce(n, n - k, limit=limit, threads=threads)
            qs = q_small(k, table)
            rows.append(FormulaRow(n, k, brute, qs.value.shift(n - 2 * k), qs.partition))
    return rows


def omega_table(n_max: int, k_max: int | None = None, table=None) -> dict[tuple[int, int], ValueInterval]:
    k_max = n_max if k_max is None else k_max
    return {(n, k): inverse_ramsey(n, k, table) for n in range(1, n_max + 1) for k in range(1, k_max + 1)}


def scaling_violations(rates: Iterable[RationalRate], omegas: dict[tuple[int, int], ValueInterval]) -> list[tuple]:
    """Cases with r*n >= k where omega(ceil(rn), k) * ceil(1/r) < omega(n, k).

    Uses exact table entries only.
    """
    bad = []
    for r in rates:
        inv = ceil_fraction(1 / r.value)
        for (n, k), w in omegas.items():
            if r.value * n < k:
                continue
            small = omegas.get((r.ceil_times(n), k))
            if small is None or not (small.is_exact and w.is_exact):
                continue
            if inv * small.lo < w.lo:
                bad.append((str(r), n, k, small.lo, w.lo))
    return bad


def subadditivity_violations(omegas: dict[tuple[int, int], ValueInterval]) -> list[tuple]:
    bad = []
    for (n, k), w in omegas.items():
        if not w.is_exact:
            continue
        for a in range(1, n):
            x, y = omegas.get((a, k)), omegas.get((n - a, k))
            if x is None or y is None or not (x.is_exact and y.is_exact):
                continue
            if w.lo > x.lo + y.lo:
                bad.append((a, n - a, k))
    return bad


@dataclass
class Verification:
    bounds: list[BoundReport]
    formula: list[FormulaRow]
    scaling: list[tuple]
    subadditive: list[tuple]

    @property
    def failures(self) -> int:
        return (sum(not b.passed for b in self.bounds) + sum(not f.passed for f in self.formula)
                + len(self.scaling) + len(self.subadditive))

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> dict:
        return {
            "bound_rows": len(self.bounds),
            "bound_failures": sum(not b.passed for b in self.bounds),
            "formula_rows": len(self.formula),
            "formula_failures": sum(not f.passed for f in self.formula),
            "scaling_violations": len(self.scaling),
            "subadditivity_violations": len(self.subadditive),
            "passed": self.passed,
        }

    def to_json(self) -> dict:
        return {
            "summary": self.summary(),
            "bounds": [b.to_json() for b in self.bounds],
            "formula": [f.row() for f in self.formula],
            "scaling_violations": [list(x) for x in self.scaling],
            "subadditivity_violations": [list(x) for x in self.subadditive],
        }


def verify_bounds(rates: Iterable[RationalRate], n_max: int, *, limit: int = DEFAULT_LIMIT,
                    threads: int = 1, witnesses: bool = False, table=None, **witness_kw) -> Verification:
    """Check every bound for each rate and each n <= n_max against exact values.

    Rows are ordered by (r, n), so the result does not depend on ``threads``.
    """
    if n_max > limit:
        raise ValueError(f"n_max={n_max} exceeds the enumeration limit {limit}")
    rates = sorted(set(rates), key=lambda r: r.value)
    bounds = [sandwich(r, n, limit=limit, threads=threads, witnesses=witnesses, table=table, **witness_kw)
              for r in rates for n in range(1, n_max + 1)]
    formula = formula_sweep(n_max, limit=limit, threads=threads, table=table)
    omegas = omega_table(n_max, table=table)
    return Verification(bounds, formula, scaling_violations(rates, omegas), subadditivity_violations(omegas))


def size_fraction_at_reciprocal(k: int) -> Fraction:
    return size_fraction(RationalRate(1, k))


def size_fraction_curve(k_max: int, points_per_k: int = 50) -> list[tuple[Fraction, int, Fraction]]:
    """(r, k, c_r) for rationals r spread over each interval (1/(k+1), 1/k]."""
    out = []
    for k in range(1, k_max + 1):
        lo, hi = Fraction(1, k + 1), Fraction(1, k)
        for i in range(1, points_per_k + 1):
            r = lo + (hi - lo) * Fraction(i, points_per_k)
            out.append((r, k, size_fraction(RationalRate.from_fraction(r))))
    return out

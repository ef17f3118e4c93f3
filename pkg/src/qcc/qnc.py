"""Q(n, c), the least clique number of an n-vertex graph with chromatic number c.

Exact values come from scanning the isomorph-free catalog. The closed forms
cover the range c = n - k with n >= 2k + 3 (via ``q_small``) and the
partition minimum ``q_general`` used by the join construction.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .enumerate import DEFAULT_LIMIT, catalog
from .graph import CapacityError, Graph
from .interval import ValueInterval
from .ramsey import inverse_ramsey
from .records import Kind, Method, WitnessRecord
from .solvers import chromatic_number, clique_number, independence_number


class DomainError(ValueError):
    """Arguments outside the range where a formula is asserted."""


# -- brute force ----------------------------------------------------------


def _scan(graphs, n):
    """Per chromatic number, the (omega, graph6) minimum over ``graphs``."""
    best: dict[int, tuple[int, str]] = {}
    for g in graphs:
        omega = clique_number(g)
        alpha = independence_number(g)
        lo = max(omega, -(-n // alpha)) if alpha else omega
        hi = n - alpha + 1
        if not any(c not in best or best[c][0] > omega for c in range(lo, hi + 1)):
            continue
        chi = chromatic_number(g)
        cur = best.get(chi)
        key = (omega, g.to_graph6())
        if cur is None or key < cur:
            best[chi] = key
    return best


def _merge(parts):
    out: dict[int, tuple[int, str]] = {}
    for part in parts:
        for c, key in part.items():
            if c not in out or key < out[c]:
                out[c] = key
    return out


def _scan_job(args):
    g6s, n = args
    return _scan([Graph.from_graph6(s) for s in g6s], n)


@lru_cache(maxsize=None)
def _table(n: int, limit: int, threads: int) -> dict[int, tuple[int, str]]:
    graphs = catalog(n, limit=limit, threads=threads)
    if threads <= 1 or len(graphs) < 1000:
        return _scan(graphs, n)
    size = math.ceil(len(graphs) / (threads * 4))
    jobs = [([g.to_graph6() for g in graphs[i:i + size]], n) for i in range(0, len(graphs), size)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return _merge(pool.map(_scan_job, jobs))


def qnc_table(n: int, *, limit: int = DEFAULT_LIMIT, threads: int = 1) -> dict[int, WitnessRecord]:
    """Exact Q(n, c) for every 1 <= c <= n, keyed by c.

    Each record's witness is the minimiser with the smallest canonical
    graph6 string, so serial and parallel runs agree.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise CapacityError(f"n={n} exceeds the enumeration limit {limit}")
    best = _table(n, limit, max(1, threads))
    out = {}
    for c in range(1, n + 1):
        assert c in best, f"no graph on {n} vertices has chromatic number {c}"
        omega, g6 = best[c]
        out[c] = WitnessRecord(Kind.QNC, (n, c), ValueInterval.exact(omega), g6, Method.BRUTE_FORCE)
    return out


def qnc_bruteforce(n: int, c: int, *, limit: int = DEFAULT_LIMIT, threads: int = 1) -> tuple[int, WitnessRecord]:
    if not 1 <= c <= n:
        raise ValueError("need 1 <= c <= n")
    rec = qnc_table(n, limit=limit, threads=threads)[c]
    return rec.value.value, rec


# -- partitions -----------------------------------------------------------


def partitions(total: int, max_parts: int | None = None, largest: int | None = None) -> Iterator[list[int]]:
    """Partitions of ``total`` as non-increasing lists, lexicographically decreasing.

    ``[3], [2, 1], [1, 1, 1]`` for ``total = 3``.
    """
    if largest is None:
        largest = total
    if total == 0:
        yield []
        return
    if max_parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(total - first, rest_parts, first):
            yield [first] + rest


@dataclass(frozen=True)
class PartitionResult:
    value: ValueInterval
    partition: tuple[int, ...]
    terms: tuple[ValueInterval, ...]


def _minimise(total: int, term: Callable[[int], ValueInterval], max_parts: int | None) -> PartitionResult:
    """Minimise the sum of ``term(part)`` over partitions of ``total``.

    The value is the component-wise minimum over all partitions; the reported
    partition is the first (in lexicographically decreasing order) whose sum
    has the smallest upper end, then the smallest lower end.
    """
    if total < 1:
        raise ValueError("need a positive total")
    terms = {p: term(p) for p in range(1, total + 1)}

    # Best sums for (remaining, largest allowed part, parts left).
    @lru_cache(maxsize=None)
    def best(rem, largest, parts_left):
        if rem == 0:
            return (0, 0, ())
        if parts_left == 0:
            return None
        out = None
        for p in range(min(rem, largest), 0, -1):
            sub = best(rem - p, p, parts_left - 1)
            if sub is None:
                continue
            t = terms[p]
            cand = (t.hi + sub[0], t.lo + sub[1], (p,) + sub[2])
            if out is None or cand[:2] < out[:2]:
                out = cand
        return out

    @lru_cache(maxsize=None)
    def least_lo(rem, largest, parts_left):
        if rem == 0:
            return 0
        if parts_left == 0:
            return None
        vals = []
        for p in range(min(rem, largest), 0, -1):
            sub = least_lo(rem - p, p, parts_left - 1)
            if sub is not None:
                vals.append(terms[p].lo + sub)
        return min(vals) if vals else None

    cap = total if max_parts is None else max_parts
    hi, _, parts = best(total, total, cap)
    lo = least_lo(total, total, cap)
    return PartitionResult(ValueInterval(lo, hi), parts, tuple(terms[p] for p in parts))


def q_small(k: int, table=None) -> PartitionResult:
    """min over k = k_1 + ... + k_s (s <= 3) of sum(omega(2 k_i + 1, 2) - 1)."""
    if k < 1:
        raise ValueError("k must be positive")
    return _minimise(k, lambda p: inverse_ramsey(2 * p + 1, 2, table).shift(-1), 3)


def qnc_formula(n: int, k: int, table=None) -> ValueInterval:
    """Q(n, n - k) = n - 2k + q_small(k), asserted only for n >= 2k + 3."""
    if k < 1:
        raise DomainError("k must be positive")
    if n < 2 * k + 3:
        raise DomainError(f"formula needs n >= 2k + 3, got n={n}, k={k}")
    return q_small(k, table).value.shift(n - 2 * k)


def q_general(beta: int, alpha: int, table=None) -> PartitionResult:
    """min over beta = beta_1 + ... of sum(omega(alpha * beta_i, alpha))."""
    if beta < 1 or alpha < 1:
        raise ValueError("need beta >= 1 and alpha >= 1")
    return _minimise(beta, lambda p: inverse_ramsey(alpha * p, alpha, table), None)


def q_general_bruteforce(beta: int, alpha: int, table=None) -> PartitionResult:
    """Same minimum by listing every partition; reference for :func:`q_general`."""
    best = None
    los = []
    for parts in partitions(beta):
        terms = [inverse_ramsey(alpha * p, alpha, table) for p in parts]
        hi = sum(t.hi for t in terms)
        lo = sum(t.lo for t in terms)
        los.append(lo)
        if best is None or (hi, lo) < best[0]:
            best = ((hi, lo), tuple(parts), tuple(terms))
    return PartitionResult(ValueInterval(min(los), best[0][0]), best[1], best[2])

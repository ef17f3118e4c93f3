"""Classical Ramsey numbers, inverse Ramsey numbers and Ramsey witness graphs.

The inverse Ramsey number ``omega(n, k)`` is the least clique number of an
``n``-vertex graph with independence number at most ``k``. A graph on ``n``
vertices with ``omega <= t`` and ``alpha <= k`` exists iff ``n < R(t+1, k+1)``,
so ``omega(n, k) = min{t : n < R(t+1, k+1)}``. With ``R`` only known as an
interval ``[Rlo, Rhi]``:

* ``omega(n, k) <= t`` is certain once ``n < Rlo(t+1, k+1)`` (upper end);
* ``omega(n, k) > t`` is certain once ``n >= Rhi(t+1, k+1)`` (lower end).
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .enumerate import DEFAULT_LIMIT, catalog
from .graph import CapacityError, Graph, circulant, complete, cycle, empty, paley
from .interval import ValueInterval
from .records import Kind, Method, WitnessRecord
from .solvers import clique_number, independence_number

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RamseyEntry:
    value: ValueInterval
    source: str


class RamseyTable:
    """Known values and bounds of R(s, t), stored canonically with s <= t."""

    def __init__(self, entries: dict[tuple[int, int], RamseyEntry]):
        self.entries = dict(entries)

    @classmethod
    def parse(cls, text: str) -> RamseyTable:
        entries = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(None, 4)
            if len(parts) < 5:
                raise ValueError(f"line {lineno}: expected 's t lo hi source'")
            s, t, lo = int(parts[0]), int(parts[1]), int(parts[2])
            hi = None if parts[3] in ("inf", "-") else int(parts[3])
            s, t = min(s, t), max(s, t)
            entries[(s, t)] = RamseyEntry(ValueInterval(lo, hi), parts[4])
        return cls(entries)

    @classmethod
    def bundled(cls) -> RamseyTable:
        return cls.parse(resources.files("qcc.data").joinpath("ramsey_table.txt").read_text())

    def lookup(self, s: int, t: int) -> RamseyEntry:
        if s < 1 or t < 1:
            raise ValueError("Ramsey arguments must be positive")
        s, t = min(s, t), max(s, t)
        if s == 1:
            return RamseyEntry(ValueInterval.exact(1), "trivial: R(1,t) = 1")
        if s == 2:
            return RamseyEntry(ValueInterval.exact(t), "trivial: R(2,t) = t")
        entry = self.entries.get((s, t))
        if entry is not None:
            return entry
        return RamseyEntry(self._fallback(s, t), "trivial")

    def _fallback(self, s: int, t: int) -> ValueInterval:
        # (t-1) disjoint copies of K_{s-1} avoid K_s and independent t-sets.
        lo = max(s, t, (s - 1) * (t - 1) + 1)
        for (a, b), e in self.entries.items():
            if a <= s and b <= t:
                lo = max(lo, e.value.lo)
        return ValueInterval(lo, None)

    def check_consistency(self) -> None:
        """Monotone in each argument on the listed entries."""
        for (s, t), e in self.entries.items():
            for (a, b), f in self.entries.items():
                if a <= s and b <= t and (a, b) != (s, t):
                    if f.value.lo > (e.value.hi if e.value.hi is not None else f.value.lo):
                        raise ValueError(f"R({a},{b}) lower bound exceeds R({s},{t}) upper bound")


@lru_cache(maxsize=1)
def default_table() -> RamseyTable:
    return RamseyTable.bundled()


def ramsey_number(s: int, t: int, table: RamseyTable | None = None) -> ValueInterval:
    return (table or default_table()).lookup(s, t).value


def ramsey_source(s: int, t: int, table: RamseyTable | None = None) -> str:
    return (table or default_table()).lookup(s, t).source


def inverse_ramsey(n: int, k: int, table: RamseyTable | None = None) -> ValueInterval:
    """Interval for omega(n, k) derived from the Ramsey table."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n == 0:
        return ValueInterval.exact(0)
    table = table or default_table()
    lo = hi = None
    for t in range(1, n + 1):
        r = table.lookup(t + 1, k + 1).value
        if lo is None and (r.hi is None or n < r.hi):
            lo = t
        if hi is None and n < r.lo:
            hi = t
        if lo is not None and hi is not None:
            break
    return ValueInterval(lo, hi)


def inverse_ramsey_bruteforce(n: int, k: int, limit: int = DEFAULT_LIMIT) -> tuple[int, WitnessRecord]:
    """Exact omega(n, k) by scanning every graph on n vertices with alpha <= k.

    The witness is the minimiser with the smallest canonical graph6 string.
    """
    if n > limit:
        raise CapacityError(f"n={n} exceeds the enumeration limit {limit}")
    if n == 0:
        g = empty(0)
        return 0, WitnessRecord(Kind.OMEGA_NK, (0, k), ValueInterval.exact(0), g.to_graph6(), Method.BRUTE_FORCE)
    best_omega = n + 1
    best = None
    # Catalog order is canonical graph6 order, so the first minimiser wins ties.
    for omega_cap in range(1, n + 1):
        graphs = catalog(n, max_alpha=k, max_omega=omega_cap, limit=limit)
        if graphs:
            best = graphs[0]
            best_omega = clique_number(best)
            break
    assert best is not None and best_omega <= n
    rec = WitnessRecord(Kind.OMEGA_NK, (n, k), ValueInterval.exact(best_omega), best.to_graph6(), Method.BRUTE_FORCE)
    return best_omega, rec


# -- witnesses ------------------------------------------------------------


class WitnessImpossible(ValueError):
    """No graph can meet the request (provable from the Ramsey table)."""


class WitnessUnavailable(RuntimeError):
    """The search gave up without finding a witness."""


def seed_graphs() -> list[Graph]:
    """Classical Ramsey-extremal graphs and other small structured seeds."""
    seeds = [paley(5), paley(13), paley(17)]
    seeds += [cycle(m) for m in range(5, 16)]
    # Cyclic Ramsey colourings: triangle-free circulants for R(3,t).
    seeds += [
        circulant(8, [1, 4]),
        circulant(13, [1, 5]),
    ]
    seeds += [g.complement() for g in list(seeds)]
    return seeds


def _clique_union(n: int, k: int) -> Graph:
    """k disjoint near-equal cliques: alpha <= k, omega = ceil(n / k)."""
    g = empty(0)
    for i in range(k):
        size = n // k + (1 if i < n % k else 0)
        g = g.disjoint_union(complete(size))
    return g


def _certified(g: Graph, n: int, k: int, target: int) -> bool:
    return g.n == n and independence_number(g) <= k and clique_number(g) <= target


def _from_seeds(n: int, k: int, target: int) -> Graph | None:
    candidates = []
    if n <= k:
        candidates.append(empty(n))
    if k >= 1:
        candidates.append(_clique_union(n, min(k, n) if n else 1))
    for s in seed_graphs():
        if s.n >= n:
            candidates.append(s.induced(range(n)))
    for g in candidates:
        if _certified(g, n, k, target):
            return g
    return None


def _count_cliques(adj, cand: int, size: int) -> int:
    if size == 0:
        return 1
    if size == 1:
        return cand.bit_count()
    total = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        nxt = cand & adj[v]
        if nxt.bit_count() >= size - 1:
            total += _count_cliques(adj, nxt, size - 1)
    return total


def tabu_search(n: int, k: int, target: int, *, seed: int = 0, tenure: int = 8,
                restart_factor: int = 10, time_limit: float = 30.0) -> Graph | None:
    """Edge-flip tabu search for a graph with alpha <= k and omega <= target.

    Energy is the number of independent (k+1)-sets plus the number of
    (target+1)-cliques. Restarts from a fresh random graph after
    ``restart_factor * n**2`` flips without a new best energy.
    """
    rng = random.Random(seed)
    full = (1 << n) - 1
    clique_size = target + 1
    indep_size = k + 1
    pairs = [(u, v) for v in range(n) for u in range(v)]
    deadline = time.monotonic() + time_limit

    while time.monotonic() < deadline:
        adj = [0] * n
        for u, v in pairs:
            if rng.random() < 0.5:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        co = [(~adj[v] & full) & ~(1 << v) for v in range(n)]
        energy = _count_cliques(adj, full, clique_size) + _count_cliques(co, full, indep_size)
        best = energy
        stale = 0
        tabu: dict[tuple[int, int], int] = {}
        step = 0
        while energy and stale < restart_factor * n * n:
            if step % 64 == 0 and time.monotonic() >= deadline:
                return None
            step += 1
            moves = []
            best_delta = None
            for u, v in pairs:
                both = ~((1 << u) | (1 << v))
                if adj[u] >> v & 1:
                    delta = (_count_cliques(co, co[u] & co[v] & both, indep_size - 2)
                             - _count_cliques(adj, adj[u] & adj[v], clique_size - 2))
                else:
                    delta = (_count_cliques(adj, adj[u] & adj[v], clique_size - 2)
                             - _count_cliques(co, co[u] & co[v] & both, indep_size - 2))
                if tabu.get((u, v), 0) > step and energy + delta >= best:
                    continue
                if best_delta is None or delta < best_delta:
                    best_delta, moves = delta, [(u, v)]
                elif delta == best_delta:
                    moves.append((u, v))
            if not moves:
                tabu.clear()
                continue
            u, v = moves[rng.randrange(len(moves))]
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            co[u] ^= 1 << v
            co[v] ^= 1 << u
            energy += best_delta
            tabu[(u, v)] = step + tenure
            if energy < best:
                best = energy
                stale = 0
            else:
                stale += 1
        if energy == 0:
            return Graph(n, adj, check=False)
    return None


def ramsey_witness(n: int, k: int, target_omega: int, *, cache=None, limit: int = DEFAULT_LIMIT,
                   seed: int = 0, time_limit: float = 30.0, table: RamseyTable | None = None) -> WitnessRecord:
    """A certified graph on n vertices with alpha <= k and omega <= target_omega.

    Tries the cache, seeded constructions, brute force (n <= limit), then
    tabu search. Raises :class:`WitnessImpossible` when the Ramsey table
    rules the request out, :class:`WitnessUnavailable` on search failure.
    """
    bound = inverse_ramsey(n, k, table)
    if target_omega < bound.lo:
        raise WitnessImpossible(f"omega({n},{k}) >= {bound.lo} > {target_omega}")
    params = (n, k, target_omega)

    def record(g: Graph, method: Method) -> WitnessRecord:
        from .canon import canonical_form

        g = canonical_form(g)
        rec = WitnessRecord(Kind.RAMSEY_WITNESS, params, ValueInterval.exact(clique_number(g)), g.to_graph6(), method)
        rec.certify()
        return rec

    if cache is not None:
        hit = cache.get(Kind.RAMSEY_WITNESS, params)
        if hit is not None:
            return hit
    g = _from_seeds(n, k, target_omega)
    method = Method.CONSTRUCTION
    if g is None and n <= limit:
        found = catalog(n, max_alpha=k, max_omega=target_omega, limit=limit)
        if found:
            g, method = found[0], Method.BRUTE_FORCE
        else:
            raise WitnessImpossible(f"no graph on {n} vertices has alpha <= {k} and omega <= {target_omega}")
    if g is None:
        g = tabu_search(n, k, target_omega, seed=seed, time_limit=time_limit)
        method = Method.LOCAL_SEARCH
    if g is None:
        raise WitnessUnavailable(f"no witness for n={n}, alpha<={k}, omega<={target_omega} within {time_limit}s")
    rec = record(g, method)
    if cache is not None:
        cache.put(rec)
    return rec


def omega_witness(n: int, k: int, **kwargs) -> WitnessRecord:
    """Witness achieving omega(n, k) exactly when the table value is exact."""
    bound = inverse_ramsey(n, k, kwargs.get("table"))
    rec = ramsey_witness(n, k, bound.hi, **kwargs)
    return rec


def omega_is_monotone(values: dict[tuple[int, int], int]) -> list[tuple[int, int]]:
    """Pairs (n, k) where the table breaks monotonicity (non-decreasing in n, non-increasing in k)."""
    bad = []
    for (n, k), w in values.items():
        if (n + 1, k) in values and values[(n + 1, k)] < w:
            bad.append((n, k))
        if (n, k + 1) in values and values[(n, k + 1)] > w:
            bad.append((n, k))
    return bad


__all__ = [
    "RamseyTable", "RamseyEntry", "default_table", "ramsey_number", "ramsey_source",
    "inverse_ramsey", "inverse_ramsey_bruteforce", "ramsey_witness", "omega_witness",
    "tabu_search", "seed_graphs", "WitnessImpossible", "WitnessUnavailable",
]

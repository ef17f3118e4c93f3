"""Executable constructions: edge dropping, the join of Ramsey pieces, and
removal of disjoint independent sets."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .canon import canonical_form
from .graph import CapacityError, Graph, bits, empty
from .qnc import DomainError, PartitionResult, q_general
from .ramsey import WitnessImpossible, WitnessUnavailable, inverse_ramsey, ramsey_witness
from .records import CertificationError
from .solvers import (
    chromatic_number,
    clique_number,
    independence_number,
    is_colourable,
    max_independent_set,
)


@dataclass(frozen=True)
class RationalRate:
    """An exact rate ``p/q`` with ``0 < p/q <= 1``, stored in lowest terms."""

    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0 or self.q <= 0 or self.p > self.q:
            raise ValueError(f"rate {self.p}/{self.q} is not in (0, 1]")
        d = gcd(self.p, self.q)
        if d != 1:
            object.__setattr__(self, "p", self.p // d)
            object.__setattr__(self, "q", self.q // d)

    @classmethod
    def parse(cls, text: str) -> RationalRate:
        m = re.fullmatch(r"\s*(\d+)\s*/\s*(\d+)\s*", text)
        if not m:
            if re.fullmatch(r"\s*\d*\.\d*\s*", text):
                raise ValueError(
                    f"rate {text!r} must be an exact fraction P/Q: a decimal rate makes "
                    "ceil(r*n) and floor(1/r) depend on floating-point rounding"
                )
            raise ValueError(f"rate {text!r} is not of the form P/Q")
        return cls(int(m.group(1)), int(m.group(2)))

    @classmethod
    def from_fraction(cls, r: Fraction) -> RationalRate:
        return cls(r.numerator, r.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def k(self) -> int:
        """floor(1/r)."""
        return self.q // self.p

    @property
    def is_reciprocal(self) -> bool:
        return self.q % self.p == 0

    def ceil_times(self, n: int) -> int:
        """ceil(r * n)."""
        return -(-self.p * n // self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


# -- edge dropping --------------------------------------------------------


def drop_edges_to_chromatic(g: Graph, target: int) -> Graph:
    """Spanning subgraph of ``g`` with chromatic number exactly ``target``.

    Deletes edges in lexicographic order and stops as soon as the chromatic
    number reaches ``target``. One deletion lowers it by at most one, so
    the first prefix whose removal makes ``g`` ``target``-colourable lands
    exactly on ``target``; that prefix is located by bisection.
    """
    if g.n == 0 and target == 0:
        return g
    if target < 1:
        raise DomainError("target must be positive")
    if is_colourable(g, target):
        if is_colourable(g, target - 1):
            raise DomainError(f"chi(g) < {target}")
        return g
    edges = g.edges()
    lo, hi = 0, len(edges)  # g - edges[:hi] is target-colourable, g - edges[:lo] is not
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if is_colourable(g.remove_edges(edges[:mid]), target):
            hi = mid
        else:
            lo = mid
    return g.remove_edges(edges[:hi])


# -- simple upper witness -------------------------------------------------


def simple_upper_witness(r: RationalRate, n: int, **witness_kw) -> tuple[Graph, int]:
    """Graph on n vertices with chi = ceil(rn) and omega <= omega(n, floor(1/r)).

    A Ramsey witness with alpha <= k has chi >= ceil(n/k) >= ceil(rn); edges
    are then dropped until chi = ceil(rn).
    """
    k = r.k
    target = r.ceil_times(n)
    bound = inverse_ramsey(n, k, witness_kw.get("table"))
    rec = ramsey_witness(n, k, bound.hi, **witness_kw)
    g = drop_edges_to_chromatic(rec.witness(), target)
    omega = clique_number(g)
    if chromatic_number(g) != target or omega > bound.hi:
        raise CertificationError(f"simple witness for r={r}, n={n} failed certification")
    return g, omega


# -- join construction ----------------------------------------------------


class BelowThreshold(DomainError):
    """The join construction needs m = n - k*ceil(rn) > 0."""


@dataclass(frozen=True)
class PieceSpec:
    size: int
    alpha_bound: int
    omega_target: int
    side: str  # "L" or "M"


@dataclass(frozen=True)
class JoinPlan:
    r: RationalRate
    n: int
    k: int
    c: int
    l: int
    m: int
    l_result: PartitionResult
    m_result: PartitionResult
    pieces: tuple[PieceSpec, ...]

    @property
    def l_parts(self) -> tuple[int, ...]:
        return self.l_result.partition

    @property
    def m_parts(self) -> tuple[int, ...]:
        return self.m_result.partition

    @property
    def bound(self):
        return self.l_result.value + self.m_result.value


def plan_join(r: RationalRate, n: int, table=None) -> JoinPlan:
    if r.is_reciprocal:
        raise DomainError(f"r={r} is a reciprocal of an integer")
    k = r.k
    c = r.ceil_times(n)
    m = n - k * c
    l = (k + 1) * c - n
    if m <= 0:
        raise BelowThreshold(f"m = n - k*ceil(rn) = {m} <= 0 for r={r}, n={n}")
    lres = q_general(l, k, table)
    mres = q_general(m, k + 1, table)
    pieces = [PieceSpec(k * p, k, inverse_ramsey(k * p, k, table).hi, "L") for p in lres.partition]
    pieces += [PieceSpec((k + 1) * p, k + 1, inverse_ramsey((k + 1) * p, k + 1, table).hi, "M") for p in mres.partition]
    assert sum(s.size for s in pieces) == n
    return JoinPlan(r, n, k, c, l, m, lres, mres, tuple(pieces))


@dataclass
class JoinResult:
    plan: JoinPlan
    graph: Graph
    omega: int
    chi: int
    omega_before_drop: int
    chi_before_drop: int
    pieces: list[dict] = field(default_factory=list)

    @property
    def achieves_plan(self) -> bool:
        """Every piece hit its inverse-Ramsey target, so the q bound is witnessed."""
        return all(p["omega"] == p["omega_target"] for p in self.pieces)

    def to_json(self) -> dict:
        plan = self.plan
        return {
            "r": str(plan.r),
            "n": plan.n,
            "k": plan.k,
            "c": plan.c,
            "l": plan.l,
            "m": plan.m,
            "l_parts": list(plan.l_parts),
            "m_parts": list(plan.m_parts),
            "q_bound": plan.bound.to_json(),
            "pieces": self.pieces,
            "omega_before_drop": self.omega_before_drop,
            "chi_before_drop": self.chi_before_drop,
            "omega": self.omega,
            "chi": self.chi,
            "achieves_plan": self.achieves_plan,
            "graph6": self.graph.to_graph6(),
        }


def join_construction(plan: JoinPlan, **witness_kw) -> JoinResult:
    """Join Ramsey pieces L_1..L_a, M_1..M_b and drop edges to chi = ceil(rn)."""
    graphs = []
    certs = []
    missing = []
    for spec in plan.pieces:
        try:
            rec = ramsey_witness(spec.size, spec.alpha_bound, spec.omega_target, **witness_kw)
        except (WitnessUnavailable, WitnessImpossible) as exc:
            missing.append((spec.size, spec.alpha_bound, spec.omega_target, str(exc)))
            continue
        piece = rec.witness()
        alpha = independence_number(piece)
        omega = clique_number(piece)
        chi = chromatic_number(piece)
        divisor = spec.alpha_bound
        if alpha > divisor or chi * divisor < piece.n:
            raise CertificationError(f"piece {spec} failed certification")
        graphs.append(piece)
        certs.append({
            "side": spec.side,
            "size": spec.size,
            "alpha_bound": spec.alpha_bound,
            "omega_target": spec.omega_target,
            "alpha": alpha,
            "omega": omega,
            "chi": chi,
            "graph6": piece.to_graph6(),
        })
    if missing:
        raise WitnessUnavailable(f"missing piece witnesses (size, alpha bound, omega target): {missing}")
    g = empty(0)
    for piece in graphs:
        g = g.join(piece)
    omega_join = clique_number(g)
    chi_join = chromatic_number(g)
    if omega_join != sum(p["omega"] for p in certs) or chi_join != sum(p["chi"] for p in certs):
        raise CertificationError("join additivity failed")
    if chi_join < plan.c:
        raise CertificationError(f"join has chi={chi_join} < ceil(rn)={plan.c}")
    final = drop_edges_to_chromatic(g, plan.c)
    omega = clique_number(final)
    chi = chromatic_number(final)
    if chi != plan.c or final.n != plan.n:
        raise CertificationError("edge dropping missed the target chromatic number")
    return JoinResult(plan, final, omega, chi, omega_join, chi_join, certs)


# -- independent set removal ----------------------------------------------


def _independent_sets(g: Graph, size: int) -> list[int]:
    """All independent vertex sets of the given size, as masks."""
    full = g.vertex_mask
    co = [(~row & full) & ~(1 << v) for v, row in enumerate(g.adj)]
    out = []

    def grow(cand, chosen, need):
        if need == 0:
            out.append(chosen)
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if (cand & co[v]).bit_count() >= need - 1:
                grow(cand & co[v], chosen | low, need - 1)

    grow(full, 0, size)
    return out


def max_independent_packing(g: Graph, size: int) -> list[int]:
    """A largest family of pairwise disjoint independent ``size``-sets (masks)."""
    sets = _independent_sets(g, size)
    by_vertex: dict[int, list[int]] = {}
    for s in sets:
        by_vertex.setdefault((s & -s).bit_length() - 1, []).append(s)
    best: list[list[int]] = [[]]

    def search(avail, chosen):
        if len(chosen) + avail.bit_count() // size <= len(best[0]):
            return
        # lowest available vertex that starts some set inside avail
        rest = avail
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            options = [s for s in by_vertex.get(v, ()) if s & avail == s]
            if options:
                break
            avail &= ~low
        else:
            if len(chosen) > len(best[0]):
                best[0] = chosen[:]
            return
        for s in options:
            chosen.append(s)
            search(avail & ~s, chosen)
            chosen.pop()
        search(avail & ~(1 << v), chosen)

    search(g.vertex_mask, [])
    return best[0]


def greedy_remove_independent(g: Graph, k: int, mode: str = "greedy", limit: int = 9) -> tuple[Graph, int]:
    """Remove disjoint independent (k+1)-sets until alpha <= k.

    ``greedy`` repeatedly removes k+1 vertices of a maximum independent set;
    the result is maximal but not necessarily largest. ``maximum`` removes a
    largest possible family (exact, n <= ``limit``), which is the variant the
    bound |H| >= c_r n applies to.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if mode == "greedy":
        h, t = g, 0
        while True:
            ind = max_independent_set(h)
            if len(ind) <= k:
                return h, t
            h = h.remove_vertices(ind[: k + 1])
            t += 1
    if mode == "maximum":
        if g.n > limit:
            raise CapacityError(f"maximum packing is limited to n <= {limit}")
        packing = max_independent_packing(g, k + 1)
        removed = 0
        for s in packing:
            removed |= s
        h = g.remove_vertices(bits(removed))
        if independence_number(h) > k:
            raise CertificationError("packing is not maximal")
        return h, len(packing)
    raise ValueError(f"unknown mode {mode!r}")


def export_graph6(g: Graph, canonical: bool = True) -> str:
    return (canonical_form(g) if canonical else g).to_graph6()

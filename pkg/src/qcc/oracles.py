"""Slow, independent reference implementations used to cross-check the solvers.

Nothing here shares code with :mod:`qcc.solvers` or :mod:`qcc.canon`.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph


def clique_number_brute(g: Graph) -> int:
    """Maximum clique by scanning every vertex subset (n <= ~12)."""
    n = g.n
    edges = {(u, v) for u in range(n) for v in range(n) if g.has_edge(u, v)}
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            if all((a, b) in edges for a, b in combinations(combo, 2)):
                return size
    return 0


def independence_number_brute(g: Graph) -> int:
    n = g.n
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            if not any(g.has_edge(a, b) for a, b in combinations(combo, 2)):
                return size
    return 0


def chromatic_number_inclusion_exclusion(g: Graph) -> int:
    """Chromatic number by inclusion-exclusion over independent-set counts.

    ``g`` is k-colourable iff sum over S of (-1)^(n-|S|) * i(S)^k > 0, where
    i(S) counts the independent subsets (including the empty set) of S.
    """
    n = g.n
    if n == 0:
        return 0
    size = 1 << n
    nbr = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and g.has_edge(u, v):
                nbr[u] |= 1 << v
    count = [0] * size
    count[0] = 1
    for s in range(1, size):
        v = (s & -s).bit_length() - 1
        without = s & ~(1 << v)
        count[s] = count[without] + count[without & ~nbr[v]]
    signs = [1 if (n - bin(s).count("1")) % 2 == 0 else -1 for s in range(size)]
    powers = [1] * size
    for k in range(1, n + 1):
        total = 0
        for s in range(size):
            powers[s] *= count[s]
            total += signs[s] * powers[s]
        if total > 0:
            return k
    raise AssertionError("unreachable: n colours always suffice")


def is_isomorphic_brute(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    eg = g.edges()
    for perm in permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in eg):
            return True
    return False


def automorphism_orbits_brute(g: Graph) -> list[int]:
    """Orbit id (smallest member) of each vertex under the full automorphism group."""
    n = g.n
    eg = g.edges()
    orbit = list(range(n))
    for perm in permutations(range(n)):
        if all(g.has_edge(perm[u], perm[v]) for u, v in eg):
            for v in range(n):
                orbit[v] = min(orbit[v], perm[v])
    # perm and its inverse both appear, so min over images is the orbit minimum
    return orbit


def all_graphs_naive(n: int) -> list[Graph]:
    """One representative per isomorphism class, by deduplicating all labelled graphs.

    Only sensible for n <= 5 (2^10 labelled graphs, 120 permutations each).
    """
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(pairs)}
    seen: set[int] = set()
    reps = []
    for code in range(1 << len(pairs)):
        if code in seen:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        for perm in perms:
            img = 0
            for u, v in edges:
                a, b = perm[u], perm[v]
                img |= 1 << index[(a, b) if a < b else (b, a)]
            seen.add(img)
        reps.append(Graph.from_edges(n, edges))
    return reps

"""Isomorph-free generation of simple graphs by canonical augmentation.

A graph on ``n`` vertices is grown from a graph on ``n - 1`` vertices by
adding a new last vertex joined to a set ``S``. Two rules make every
isomorphism class appear exactly once:

* parent side: only one ``S`` per orbit of the parent's automorphism group
  acting on vertex subsets;
* child side: the child is kept only if the new vertex lies in the
  automorphism orbit of the child's canonical deletion vertex. That vertex
  is chosen among the vertices minimising (degree, sum of neighbour degrees),
  taking the one with the latest canonical position.

Both hereditary filters (maximum independence number, maximum clique number)
are applied at every level, since deleting a vertex never increases either.
"""

from __future__ import annotations

import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .canon import canonical_labelling
from .graph import CapacityError, Graph, bits
from .solvers import has_clique, has_independent_set

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 9
HARD_LIMIT = 10

# Number of isomorphism classes of graphs on n vertices (OEIS A000088).
KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168}


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    max_alpha: int | None = None
    max_omega: int | None = None
    chi: int | None = None
    limit: int = DEFAULT_LIMIT

    def check(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.limit > HARD_LIMIT:
            raise CapacityError(f"enumeration limit {self.limit} exceeds the hard cap {HARD_LIMIT}")
        if self.n > self.limit:
            raise CapacityError(f"n={self.n} exceeds the enumeration limit {self.limit}")
        if self.n == HARD_LIMIT:
            warnings.warn("enumerating n=10 touches 12,005,168 classes and takes hours", stacklevel=3)


def _subset_orbit_reps(n: int, generators, allowed) -> Iterator[int]:
    """One representative (the first in increasing order) per subset orbit."""
    size = 1 << n
    if not generators:
        for s in range(size):
            if allowed(s):
                yield s
        return
    images = []
    for gen in generators:
        images.append([1 << gen[v] for v in range(n)])
    seen = bytearray(size)
    for s in range(size):
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        while stack:
            x = stack.pop()
            for img in images:
                y = 0
                for v in bits(x):
                    y |= img[v]
                if not seen[y]:
                    seen[y] = 1
                    stack.append(y)
        if allowed(s):
            yield s


def _deletion_class(rows, n):
    """Vertices minimising (degree, neighbour degree sum) as a bitmask."""
    deg = [r.bit_count() for r in rows]
    best = None
    mask = 0
    for v in range(n):
        key = (deg[v], sum(deg[u] for u in bits(rows[v])))
        if best is None or key < best:
            best, mask = key, 1 << v
        elif key == best:
            mask |= 1 << v
    return mask


def children(parent: Graph, generators, max_alpha=None, max_omega=None):
    """Accepted children of ``parent`` as ``(canonical graph, generators)`` pairs."""
    m = parent.n
    n = m + 1
    prow = parent.adj
    pdeg = [r.bit_count() for r in prow]
    new = m
    newbit = 1 << new

    def allowed(s):
        k = s.bit_count()
        for v in range(m):
            if pdeg[v] + (s >> v & 1) < k:
                return False
        return True

    out = []
    for s in _subset_orbit_reps(m, generators, allowed):
        rows = [r | (newbit if s >> v & 1 else 0) for v, r in enumerate(prow)]
        rows.append(s)
        cls = _deletion_class(rows, n)
        if not cls & newbit:
            continue
        child = Graph(n, rows, check=False)
        if max_alpha is not None and has_independent_set(child, max_alpha + 1):
            continue
        if max_omega is not None and has_clique(child, max_omega + 1):
            continue
        lab = canonical_labelling(child)
        if cls != newbit:
            pos = lab.position
            w = max(bits(cls), key=lambda v: pos[v])
            if lab.orbits[w] != lab.orbits[new]:
                continue
        out.append((lab.graph(), lab.canonical_generators()))
    return out


def _expand_subtree(args):
    root, gens, target, max_alpha, max_omega = args
    level = [(root, gens)]
    for _ in range(target - root.n):
        nxt = []
        for g, gg in level:
            nxt.extend(children(g, gg, max_alpha, max_omega))
        level = nxt
    return [g for g, _ in level]


def _seed(max_alpha, max_omega):
    one = Graph(1, [0], check=False)
    if max_alpha is not None and max_alpha < 1:
        return []
    if max_omega is not None and max_omega < 1:
        return []
    return [(one, ())]


@lru_cache(maxsize=None)
def _catalog(n: int, max_alpha, max_omega, threads: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, (), check=False),)
    level = _seed(max_alpha, max_omega)
    # Grow serially to a split level, then farm out whole subtrees.
    split = n if threads <= 1 else max(1, n - 3)
    for _ in range(1, split):
        nxt = []
        for g, gens in level:
            nxt.extend(children(g, gens, max_alpha, max_omega))
        level = nxt
    if split < n:
        jobs = [(g, gens, n, max_alpha, max_omega) for g, gens in level]
        graphs = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_expand_subtree, jobs, chunksize=8):
                graphs.extend(part)
    else:
        graphs = [g for g, _ in level]
    graphs.sort(key=Graph.to_graph6)
    log.debug("catalog n=%d alpha<=%s omega<=%s: %d classes", n, max_alpha, max_omega, len(graphs))
    return tuple(graphs)


def catalog(n: int, max_alpha: int | None = None, max_omega: int | None = None, *,
            limit: int = DEFAULT_LIMIT, threads: int = 1) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism, canonically labelled.

    Sorted by canonical graph6 string. Results are memoised per process; the
    output does not depend on ``threads``.
    """
    EnumerationSpec(n, max_alpha, max_omega, None, limit).check()
    if max_alpha is not None and max_alpha >= n:
        max_alpha = None
    if max_omega is not None and max_omega >= n:
        max_omega = None
    return _catalog(n, max_alpha, max_omega, max(1, threads))


def enumerate_graphs(spec: EnumerationSpec, threads: int = 1) -> Iterator[Graph]:
    """Stream the graphs selected by ``spec`` in canonical graph6 order."""
    from .solvers import chromatic_number

    spec.check()
    for g in catalog(spec.n, spec.max_alpha, spec.max_omega, limit=spec.limit, threads=threads):
        if spec.chi is not None and chromatic_number(g) != spec.chi:
            continue
        yield g


def count_graphs(n: int, **kwargs) -> int:
    return len(catalog(n, **kwargs))


def iter_catalogs(ns: Iterable[int], **kwargs) -> Iterator[tuple[int, tuple[Graph, ...]]]:
    for n in ns:
        yield n, catalog(n, **kwargs)

"""Immutable simple graphs on at most 64 vertices with bitset adjacency.

Row ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
All operations return new graphs; instances are hashable and safe to share
between threads and processes.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Raised when a graph or enumeration would exceed a size limit."""


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None, *, check: bool = True):
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(adj) if adj is not None else (0,) * n
        if len(rows) != n:
            raise ValueError("adjacency row count does not match n")
        if check:
            full = (1 << n) - 1
            for v, row in enumerate(rows):
                if row & ~full:
                    raise ValueError(f"row {v} references a vertex >= n")
                if row >> v & 1:
                    raise ValueError(f"self-loop at vertex {v}")
                for u in bits(row):
                    if not rows[u] >> v & 1:
                        raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    @classmethod
    def from_graph6(cls, text: str | bytes) -> Graph:
        return decode_graph6(text)

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()}, g6={self.to_graph6()!r})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # -- algebra ----------------------------------------------------------

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, [(~row & full) & ~(1 << v) for v, row in enumerate(self.adj)], check=False)

    def disjoint_union(self, other: Graph) -> Graph:
        n = self.n + other.n
        if n > MAX_VERTICES:
            raise CapacityError(f"union has {n} vertices, limit is {MAX_VERTICES}")
        shift = self.n
        rows = list(self.adj) + [row << shift for row in other.adj]
        return Graph(n, rows, check=False)

    def join(self, other: Graph) -> Graph:
        n = self.n + other.n
        if n > MAX_VERTICES:
            raise CapacityError(f"join has {n} vertices, limit is {MAX_VERTICES}")
        shift = self.n
        left = self.vertex_mask
        right = other.vertex_mask << shift
        rows = [row | right for row in self.adj]
        rows += [(row << shift) | left for row in other.adj]
        return Graph(n, rows, check=False)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled 0.. in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(keep), rows, check=False)

    def remove_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def remove_edge(self, u: int, v: int) -> Graph:
        if u == v or not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) is not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows, check=False)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.adj)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise ValueError(f"edge ({u}, {v}) is not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, rows, check=False)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows, check=False)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, rows, check=False)

    def to_graph6(self) -> str:
        return encode_graph6(self)


def _rebuild(n: int, adj: tuple[int, ...]) -> Graph:
    return Graph(n, adj, check=False)


# -- graph6 ---------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    n = g.n
    out = [_encode_size(n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(x < 0 or x > 63 for x in data):
        raise ValueError(f"invalid graph6 character in {s!r}")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        raise CapacityError("graph6 sizes above 258047 are not supported")
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 string encodes {n} vertices, limit is {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows, check=False)


# -- named graphs ---------------------------------------------------------


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)], check=False)


def empty(n: int) -> Graph:
    return Graph(n, check=False)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def circulant(n: int, connections: Iterable[int]) -> Graph:
    """Cayley graph of Z_n with symmetric connection set ``±connections``."""
    steps = {d % n for d in connections} | {(-d) % n for d in connections}
    steps.discard(0)
    return Graph.from_edges(n, {(min(i, (i + d) % n), max(i, (i + d) % n)) for i in range(n) for d in steps})


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def paley(p: int) -> Graph:
    """Paley graph on the prime field of order ``p`` (``p`` prime, ``p % 4 == 1``)."""
    if not _is_prime(p) or p % 4 != 1:
        raise ValueError("Paley graphs need a prime p with p % 4 == 1")
    residues = {(x * x) % p for x in range(1, p)}
    return circulant(p, residues)


def complete_multipartite(*sizes: int) -> Graph:
    g = empty(0)
    for s in sizes:
        g = g.join(empty(s))
    return g


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Vertex pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ..."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def subsets(mask: int, size: int) -> Iterator[int]:
    """All ``size``-element submasks of ``mask`` as bitmasks."""
    for combo in combinations(list(bits(mask)), size):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m

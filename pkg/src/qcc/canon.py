"""Canonical labelling and automorphism generators for small graphs.

Partition refinement to an equitable ordered partition, then a depth-first
search over individualisations. Leaves are compared by the relabelled
adjacency rows; the largest leaf is canonical. Automorphisms found at equal
leaves prune the search in two ways: children in the same orbit of the
pointwise stabiliser of the current path are skipped, and an automorphism
that maps an earlier subtree onto the current one sends the search straight
back to the node where the two paths diverge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


def refine(adj, cells: list[int], splitters: list[int]) -> list[int]:
    """Refine ``cells`` (ordered list of vertex masks) to an equitable partition.

    Cells split by the number of neighbours in a splitter cell; the pieces are
    ordered by that count, which keeps the procedure label-independent.
    """
    queue = list(splitters)
    pending = set(queue)
    head = 0
    n_cells = len(cells)
    total = sum(c.bit_count() for c in cells)
    while head < len(queue) and n_cells < total:
        w = queue[head]
        head += 1
        if w not in pending:
            continue
        pending.discard(w)
        new = []
        for x in cells:
            if x & (x - 1) == 0:
                new.append(x)
                continue
            groups: dict[int, int] = {}
            for v in bits(x):
                c = (adj[v] & w).bit_count()
                groups[c] = groups.get(c, 0) | (1 << v)
            if len(groups) == 1:
                new.append(x)
                continue
            pieces = [groups[c] for c in sorted(groups)]
            new.extend(pieces)
            pending.discard(x)
            for p in pieces:
                queue.append(p)
                pending.add(p)
        cells = new
        n_cells = len(cells)
    return cells


@dataclass(frozen=True)
class Labelling:
    """Result of :func:`canonical_labelling`.

    ``lab[i]`` is the original vertex placed at canonical position ``i``;
    ``rows`` are the adjacency rows of the canonical graph; ``generators``
    generate the automorphism group; ``orbits[v]`` is the smallest vertex in
    the orbit of ``v``.
    """

    lab: tuple[int, ...]
    rows: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.lab)
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos

    def graph(self) -> Graph:
        return Graph(len(self.rows), self.rows, check=False)

    def canonical_generators(self) -> tuple[tuple[int, ...], ...]:
        """The automorphism generators expressed on the canonical graph."""
        pos = self.position
        lab = self.lab
        return tuple(tuple(pos[gen[lab[i]]] for i in range(len(lab))) for gen in self.generators)


def orbits_of(n: int, generators) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def _relabelled_rows(adj, lab):
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    rows = []
    for v in lab:
        new = 0
        for u in bits(adj[v]):
            new |= 1 << pos[u]
        rows.append(new)
    return tuple(rows)


def canonical_labelling(g: Graph, colours: list[int] | None = None) -> Labelling:
    """Canonical labelling of ``g``.

    ``colours`` optionally gives an initial vertex colouring (small ints);
    the labelling is then canonical for coloured graphs with colour classes
    kept in increasing colour order.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return Labelling((), (), (), ())
    if colours is None:
        cells = [(1 << n) - 1]
    else:
        by: dict[int, int] = {}
        for v, c in enumerate(colours):
            by[c] = by.get(c, 0) | (1 << v)
        cells = [by[c] for c in sorted(by)]
    cells = refine(adj, cells, list(cells))

    gens: list[tuple[int, ...]] = []
    state = {"first": None, "best": None}

    def record(src_lab, dst_lab):
        perm = [0] * n
        for a, b in zip(src_lab, dst_lab):
            perm[a] = b
        perm = tuple(perm)
        if any(perm[v] != v for v in range(n)):
            gens.append(perm)

    def common(p, q):
        i = 0
        for a, b in zip(p, q):
            if a != b:
                break
            i += 1
        return i

    def search(cells, path):
        if len(cells) == n:
            lab = [c.bit_length() - 1 for c in cells]
            key = _relabelled_rows(adj, lab)
            first = state["first"]
            if first is None:
                state["first"] = state["best"] = (key, lab, path)
                return None
            if key == first[0]:
                record(first[1], lab)
                return common(first[2], path)
            best = state["best"]
            if key == best[0]:
                record(best[1], lab)
                return common(best[2], path)
            if key > best[0]:
                state["best"] = (key, lab, path)
            return None

        depth = len(path)
        idx = -1
        size = n + 1
        for i, c in enumerate(cells):
            s = c.bit_count()
            if 1 < s < size:
                idx, size = i, s
                if s == 2:
                    break
        cell = cells[idx]
        tried: list[int] = []
        for w in bits(cell):
            if tried and gens:
                fixing = [p for p in gens if all(p[v] == v for v in path)]
                if fixing:
                    orb = orbits_of(n, fixing)
                    ow = orb[w]
                    if any(orb[t] == ow for t in tried):
                        continue
            tried.append(w)
            bit = 1 << w
            child = cells[:idx] + [bit, cell & ~bit] + cells[idx + 1:]
            child = refine(adj, child, [bit])
            back = search(child, path + [w])
            if back is not None and back < depth:
                return back
        return None

    search(cells, [])
    key, lab, _ = state["best"]
    return Labelling(tuple(lab), key, tuple(gens), tuple(orbits_of(n, gens)))


def canonical_form(g: Graph) -> Graph:
    return canonical_labelling(g).graph()


def canonical_graph6(g: Graph) -> str:
    return canonical_labelling(g).graph().to_graph6()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonical_labelling(g).rows == canonical_labelling(h).rows


def automorphism_orbits(g: Graph) -> list[int]:
    return list(canonical_labelling(g).orbits)

"""Exact clique, independence and chromatic number solvers.

Both solvers work on the raw bitset rows of a :class:`~qcc.graph.Graph`.
The clique search is a branch and bound with a greedy colouring bound over
bitset candidate sets; the colouring search is DSATUR branch and bound seeded
with a maximum clique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


@dataclass(frozen=True)
class Invariants:
    omega: int
    alpha: int
    chi: int


# -- clique ---------------------------------------------------------------


def _colour_sort(adj, cand):
    """Greedy colouring of ``cand``; returns vertices and their colour numbers."""
    order = []
    colours = []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            rest &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def max_clique_in(adj, cand: int, floor: int = 0) -> tuple[int, int]:
    """Largest clique inside the vertex mask ``cand``.

    Returns ``(size, mask)``. With ``floor > 0`` the search only looks for
    cliques strictly larger than ``floor`` and returns ``(floor, 0)`` if
    there are none.
    """
    best = [floor, 0]

    def expand(cand, size, clique):
        order, colours = _colour_sort(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colours[i] <= best[0]:
                return
            v = order[i]
            bit = 1 << v
            nxt = cand & adj[v]
            if nxt:
                expand(nxt, size + 1, clique | bit)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = clique | bit
            cand &= ~bit

    if cand:
        expand(cand, 0, 0)
    return best[0], best[1]


def clique_number(g: Graph) -> int:
    return max_clique_in(g.adj, g.vertex_mask)[0]


def max_clique(g: Graph) -> list[int]:
    """One maximum clique of ``g`` as a sorted vertex list."""
    return list(bits(max_clique_in(g.adj, g.vertex_mask)[1]))


def has_clique(g: Graph, size: int) -> bool:
    if size <= 0:
        return True
    return max_clique_in(g.adj, g.vertex_mask, floor=size - 1)[0] >= size


def _complement_rows(g: Graph):
    full = g.vertex_mask
    return [(~row & full) & ~(1 << v) for v, row in enumerate(g.adj)]


def independence_number(g: Graph) -> int:
    return max_clique_in(_complement_rows(g), g.vertex_mask)[0]


def max_independent_set(g: Graph) -> list[int]:
    return list(bits(max_clique_in(_complement_rows(g), g.vertex_mask)[1]))


def has_independent_set(g: Graph, size: int) -> bool:
    if size <= 0:
        return True
    return max_clique_in(_complement_rows(g), g.vertex_mask, floor=size - 1)[0] >= size


# -- colouring ------------------------------------------------------------


def _dsatur(adj, n, limit, lower, clique_mask):
    """Search for a proper colouring with fewer than ``limit`` colours.

    Stops as soon as a colouring with ``lower`` colours is found. Returns
    the best colouring found (list of colours) or ``None``.
    """
    colour = [-1] * n
    classes: list[int] = []
    # Clique vertices get fixed distinct colours (symmetry breaking).
    for c, v in enumerate(bits(clique_mask)):
        colour[v] = c
        classes.append(1 << v)
    uncoloured = ((1 << n) - 1) & ~clique_mask
    best = [limit, None]

    def search(uncoloured, used):
        if not uncoloured:
            best[0] = used
            best[1] = colour[:]
            return used <= lower
        # DSATUR choice: max saturation, then max degree into uncoloured.
        pick = -1
        pick_sat = -1
        pick_deg = -1
        pick_forbid = 0
        for v in bits(uncoloured):
            nb = adj[v]
            forbid = 0
            sat = 0
            for c in range(used):
                if nb & classes[c]:
                    forbid |= 1 << c
                    sat += 1
            if sat > pick_sat or (sat == pick_sat and (nb & uncoloured).bit_count() > pick_deg):
                pick, pick_sat, pick_forbid = v, sat, forbid
                pick_deg = (nb & uncoloured).bit_count()
        if pick_sat == used and used + 1 >= best[0]:
            return False
        v = pick
        bit = 1 << v
        rest = uncoloured & ~bit
        for c in range(used):
            if pick_forbid >> c & 1:
                continue
            colour[v] = c
            classes[c] |= bit
            done = search(rest, used)
            classes[c] &= ~bit
            if done:
                return True
            if used >= best[0]:
                colour[v] = -1
                return False
        if used + 1 < best[0]:
            colour[v] = used
            classes.append(bit)
            done = search(rest, used + 1)
            classes.pop()
            if done:
                return True
        colour[v] = -1
        return False

    search(uncoloured, len(classes))
    return best[1]


def _greedy_dsatur(adj, n):
    colour = [-1] * n
    uncoloured = (1 << n) - 1
    used = 0
    classes: list[int] = []
    while uncoloured:
        pick, key, forbid_pick = -1, None, 0
        for v in bits(uncoloured):
            forbid = 0
            for c in range(used):
                if adj[v] & classes[c]:
                    forbid |= 1 << c
            k = (forbid.bit_count(), (adj[v] & uncoloured).bit_count())
            if key is None or k > key:
                pick, key, forbid_pick = v, k, forbid
        c = 0
        while forbid_pick >> c & 1:
            c += 1
        if c == used:
            classes.append(0)
            used += 1
        classes[c] |= 1 << pick
        colour[pick] = c
        uncoloured &= ~(1 << pick)
    return colour, used


def optimal_colouring(g: Graph) -> list[int]:
    """A proper colouring of ``g`` with exactly ``chi(g)`` colours."""
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    omega, cmask = max_clique_in(adj, g.vertex_mask)
    greedy, used = _greedy_dsatur(adj, n)
    if used == omega:
        return greedy
    found = _dsatur(adj, n, used, omega, cmask)
    return found if found is not None else greedy


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return len(set(optimal_colouring(g)))


def colouring_with(g: Graph, k: int) -> list[int] | None:
    """A proper colouring using at most ``k`` colours, or ``None``."""
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    adj = g.adj
    greedy, used = _greedy_dsatur(adj, n)
    if used <= k:
        return greedy
    omega, cmask = max_clique_in(adj, g.vertex_mask, floor=k)
    if cmask:
        return None
    _, cmask = max_clique_in(adj, g.vertex_mask)
    return _dsatur(adj, n, k + 1, k, cmask)


def is_colourable(g: Graph, k: int) -> bool:
    return colouring_with(g, k) is not None


def is_proper_colouring(g: Graph, colouring) -> bool:
    if len(colouring) != g.n:
        return False
    return all(colouring[u] != colouring[v] for u, v in g.edges())


def invariants(g: Graph) -> Invariants:
    return Invariants(clique_number(g), independence_number(g), chromatic_number(g))

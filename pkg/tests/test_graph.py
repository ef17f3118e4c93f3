from __future__ import annotations

import pickle
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcc.graph import (
    CapacityError,
    Graph,
    complete,
    complete_multipartite,
    cycle,
    decode_graph6,
    empty,
    encode_graph6,
    paley,
    path,
    petersen,
)


def random_graph(n, p, rng):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def test_k5_graph6():
    assert complete(5).to_graph6() == "D~{"
    assert decode_graph6("D~{") == complete(5)


def test_graph6_known_strings():
    assert empty(0).to_graph6() == "?"
    assert empty(1).to_graph6() == "@"
    assert decode_graph6(">>graph6<<D~{") == complete(5)
    # Petersen graph in the common labelling
    assert petersen().edge_count() == 15 and set(petersen().degrees()) == {3}


def test_graph6_long_size_form():
    g = cycle(63)
    text = g.to_graph6()
    assert text[0] == "~"
    assert decode_graph6(text) == g


def test_graph6_rejects_garbage():
    with pytest.raises(ValueError):
        decode_graph6("D~")
    with pytest.raises(ValueError):
        decode_graph6("D\x01{")


@given(graphs(max_n=20))
@settings(max_examples=200, deadline=None)
def test_graph6_roundtrip_random(g):
    assert decode_graph6(encode_graph6(g)) == g


def test_join_k2_k3():
    assert complete(2).join(complete(3)) == complete(5)


def test_union_and_join_shapes():
    u = cycle(5).disjoint_union(cycle(5))
    j = cycle(5).join(cycle(5))
    assert u.n == j.n == 10
    assert u.edge_count() == 10
    assert j.edge_count() == 10 + 25


def test_capacity():
    with pytest.raises(CapacityError):
        complete(40).join(complete(30))
    with pytest.raises(CapacityError):
        Graph(65)


def test_remove_edge_requires_edge():
    with pytest.raises(ValueError):
        path(3).remove_edge(0, 2)
    assert path(3).remove_edge(0, 1).edge_count() == 1


def test_induced_and_complement():
    g = petersen()
    assert g.complement().complement() == g
    assert g.induced([0, 1, 2, 3, 4]) == cycle(5)
    assert complete(4).induced([]) == empty(0)


def test_relabel_preserves_edges():
    rng = random.Random(3)
    g = random_graph(9, 0.5, rng)
    perm = list(range(9))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert h.edge_count() == g.edge_count()
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_immutable_and_picklable():
    g = cycle(5)
    with pytest.raises(AttributeError):
        g.n = 3
    assert pickle.loads(pickle.dumps(g)) == g
    assert hash(g) == hash(cycle(5))


def test_constructions():
    assert paley(13).degrees() == [6] * 13
    assert complete_multipartite(2, 3).edge_count() == 6
    with pytest.raises(ValueError):
        paley(7)

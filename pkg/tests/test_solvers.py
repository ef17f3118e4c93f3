from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from qcc.graph import Graph, complete, cycle, empty, petersen
from qcc.oracles import (
    chromatic_number_inclusion_exclusion,
    clique_number_brute,
    independence_number_brute,
)
from qcc.solvers import (
    chromatic_number,
    clique_number,
    colouring_with,
    independence_number,
    is_proper_colouring,
    max_clique,
    max_independent_set,
    optimal_colouring,
)

from test_graph import graphs, random_graph


@pytest.mark.parametrize("g, omega, alpha, chi", [
    (complete(5), 5, 1, 5),
    (cycle(5), 2, 2, 3),
    (petersen(), 2, 4, 3),
    (empty(7), 1, 7, 1),
    (complete(5).remove_edge(0, 1), 4, 2, 4),
    (empty(0), 0, 0, 0),
])
def test_small_examples(g, omega, alpha, chi):
    assert clique_number(g) == omega
    assert independence_number(g) == alpha
    assert chromatic_number(g) == chi


def test_petersen_against_oracles():
    g = petersen()
    assert clique_number_brute(g) == 2
    assert chromatic_number_inclusion_exclusion(g) == 3


def test_union_and_join_of_c5():
    u = cycle(5).disjoint_union(cycle(5))
    j = cycle(5).join(cycle(5))
    assert (clique_number(u), chromatic_number(u)) == (2, 3)
    assert (clique_number(j), chromatic_number(j)) == (4, 6)


def test_witness_variants():
    g = petersen()
    clique = max_clique(g)
    assert len(clique) == 2 and g.has_edge(*clique)
    ind = max_independent_set(g)
    assert len(ind) == 4
    assert not any(g.has_edge(u, v) for u in ind for v in ind if u < v)
    col = optimal_colouring(g)
    assert is_proper_colouring(g, col) and len(set(col)) == 3
    assert colouring_with(g, 2) is None


@given(graphs(max_n=11))
@settings(max_examples=150, deadline=None)
def test_solvers_match_oracles(g):
    assert clique_number(g) == clique_number_brute(g)
    assert independence_number(g) == independence_number_brute(g)
    assert chromatic_number(g) == chromatic_number_inclusion_exclusion(g)


def test_chromatic_against_inclusion_exclusion_up_to_16():
    rng = random.Random(11)
    for n in (12, 14, 16):
        for p in (0.3, 0.5, 0.7):
            g = random_graph(n, p, rng)
            assert chromatic_number(g) == chromatic_number_inclusion_exclusion(g)


def test_catalog_invariants(small_catalog):
    for g in small_catalog:
        w, a, x = clique_number(g), independence_number(g), chromatic_number(g)
        assert w <= x <= g.n
        assert x * a >= g.n
        assert a == clique_number(g.complement())


def test_join_identities_random_pairs():
    rng = random.Random(5)
    for _ in range(60):
        n1 = rng.randint(1, 8)
        n2 = rng.randint(1, 14 - n1)
        g1 = random_graph(n1, rng.random(), rng)
        g2 = random_graph(n2, rng.random(), rng)
        j = g1.join(g2)
        assert clique_number(j) == clique_number(g1) + clique_number(g2)
        assert chromatic_number(j) == chromatic_number(g1) + chromatic_number(g2)
        assert independence_number(j) == max(independence_number(g1), independence_number(g2))


def test_single_edge_removal_changes_chi_by_at_most_one(small_catalog):
    for g in small_catalog:
        if g.n > 7:
            continue
        chi = chromatic_number(g)
        for u, v in g.edges():
            assert chromatic_number(g.remove_edge(u, v)) in (chi, chi - 1)

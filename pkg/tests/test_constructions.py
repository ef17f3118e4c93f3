from __future__ import annotations

import pytest

from qcc.canon import is_isomorphic
from qcc.constructions import (
    BelowThreshold,
    RationalRate,
    drop_edges_to_chromatic,
    greedy_remove_independent,
    join_construction,
    plan_join,
    simple_upper_witness,
)
from qcc.graph import complete, cycle, empty
from qcc.interval import ValueInterval
from qcc.qnc import DomainError
from qcc.ramsey import inverse_ramsey
from qcc.solvers import chromatic_number, clique_number, independence_number


def test_rate_parsing():
    assert RationalRate.parse("4/10") == RationalRate(2, 5)
    assert RationalRate.parse("1/1").k == 1
    assert RationalRate(2, 5).ceil_times(20) == 8
    assert RationalRate(3, 10).k == 3
    with pytest.raises(ValueError, match="exact fraction"):
        RationalRate.parse("0.4")
    with pytest.raises(ValueError):
        RationalRate.parse("3/2")
    with pytest.raises(ValueError):
        RationalRate.parse("0/3")


def test_drop_edges_examples():
    assert drop_edges_to_chromatic(complete(5), 5) == complete(5)
    g = drop_edges_to_chromatic(complete(5), 3)
    assert g.n == 5 and chromatic_number(g) == 3 and clique_number(g) == 3
    h = drop_edges_to_chromatic(cycle(5), 2)
    assert chromatic_number(h) == 2
    assert set(h.edges()) <= set(cycle(5).edges())
    with pytest.raises(DomainError):
        drop_edges_to_chromatic(cycle(5), 4)


def test_drop_edges_matches_sequential_scan(small_catalog):
    def sequential(g, target):
        for u, v in g.edges():
            if chromatic_number(g) == target:
                break
            g = g.remove_edge(u, v)
        return g

    for g in small_catalog[::7]:
        chi = chromatic_number(g)
        for target in range(1, chi + 1):
            got = drop_edges_to_chromatic(g, target)
            assert chromatic_number(got) == target
            assert got == sequential(g, target)


@pytest.mark.parametrize("r, n", [("1/2", 5), ("1/1", 4), ("2/5", 10), ("1/3", 9), ("3/5", 8)])
def test_simple_upper_witness(r, n):
    rate = RationalRate.parse(r)
    g, omega = simple_upper_witness(rate, n)
    assert g.n == n
    assert chromatic_number(g) == rate.ceil_times(n)
    assert omega == clique_number(g) <= inverse_ramsey(n, rate.k).hi


def test_simple_upper_witness_shapes():
    g, _ = simple_upper_witness(RationalRate(1, 2), 5)
    assert is_isomorphic(g, cycle(5))
    g, _ = simple_upper_witness(RationalRate(1, 1), 4)
    assert g == complete(4)


def test_plan_join_arithmetic():
    p = plan_join(RationalRate(2, 5), 20)
    assert (p.k, p.c, p.l, p.m) == (2, 8, 4, 4)
    p = plan_join(RationalRate(3, 10), 20)
    assert (p.k, p.c, p.l, p.m) == (3, 6, 4, 2)
    with pytest.raises(DomainError, match="reciprocal"):
        plan_join(RationalRate(1, 3), 30)
    with pytest.raises(BelowThreshold):
        plan_join(RationalRate(2, 5), 4)


@pytest.mark.parametrize("r, n, omega, chi", [("2/5", 20, 6, 8), ("3/10", 20, 5, 6)])
def test_join_construction(r, n, omega, chi):
    res = join_construction(plan_join(RationalRate.parse(r), n))
    assert res.graph.n == n
    assert res.achieves_plan
    assert res.plan.bound == ValueInterval.exact(omega)
    assert clique_number(res.graph) == res.omega == omega
    assert chromatic_number(res.graph) == res.chi == chi
    assert res.omega_before_drop == sum(p["omega"] for p in res.pieces)


def test_join_degenerate_plan():
    # n = 5, r = 3/5: k = 1, c = 3, l = 1, m = 2.
    res = join_construction(plan_join(RationalRate(3, 5), 5))
    assert res.chi == 3 and res.graph.n == 5


@pytest.mark.parametrize("mode", ["greedy", "maximum"])
def test_greedy_remove_examples(mode):
    h, t = greedy_remove_independent(complete(5), 1, mode=mode)
    assert (h, t) == (complete(5), 0)
    h, t = greedy_remove_independent(cycle(5), 1, mode=mode)
    assert (h.n, t) == (1, 2)
    h, t = greedy_remove_independent(empty(6), 2, mode=mode)
    assert h.n <= 2 and t == 2


def test_removal_leaves_small_alpha(small_catalog):
    for g in small_catalog[::11]:
        for k in (1, 2, 3):
            for mode in ("greedy", "maximum"):
                h, t = greedy_remove_independent(g, k, mode=mode)
                assert independence_number(h) <= k
                assert h.n == g.n - t * (k + 1)


def test_maximum_beats_greedy(small_catalog):
    for g in small_catalog[::5]:
        _, t_greedy = greedy_remove_independent(g, 1)
        _, t_max = greedy_remove_independent(g, 1, mode="maximum")
        assert t_max >= t_greedy


import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_valid_pairs, is_pair, safe_at
from unfriendly.graph import (
    FiniteGraph,
    complete_bipartite_graph,
    complete_graph,
    disjoint_union,
    generate,
    path_graph,
)
from unfriendly.layered import (
    BipartitePair,
    DegreeClassMap,
    check_component_bound,
    is_bipartite_pair,
    layered_run,
    layered_solve,
    maximal_bipartite_pair,
)
from unfriendly.solvers import solve_local

K23 = complete_bipartite_graph(2, 3)  # left {0, 1}, right {2, 3, 4}


def test_pair_k23():
    pair = maximal_bipartite_pair(K23, DegreeClassMap.from_high(K23, {0, 1}))
    assert pair == BipartitePair(frozenset({0, 1}), frozenset({2, 3, 4}))


def test_pair_path_prunes_everything():
    g = path_graph(3)  # a=0, b=1, x=2
    pair = maximal_bipartite_pair(g, DegreeClassMap.from_high(g, {0}))
    assert pair == BipartitePair(frozenset(), frozenset())


def test_pair_edgeless():
    g = FiniteGraph(4, ((),) * 4)
    classes = DegreeClassMap.from_high(g, {1, 3})
    pair = maximal_bipartite_pair(g, classes)
    assert pair.F0 == classes.M and pair.F1 == classes.N


def test_bad_class_map():
    with pytest.raises(ValueError):
        maximal_bipartite_pair(K23, DegreeClassMap(frozenset({0}), frozenset({2, 3, 4})))
    with pytest.raises(ValueError):
        DegreeClassMap.from_high(K23, {9})


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 7), st.floats(0, 1), st.integers(0, 10**6))
def test_pair_is_union_of_all_valid_pairs(n, p, seed):
    g = generate("gnp", seed=seed, n=n, p=p)
    rng = random.Random(seed)
    high = {v for v in range(n) if rng.random() < 0.5}
    classes = DegreeClassMap.from_high(g, high)
    pair = maximal_bipartite_pair(g, classes)
    assert is_pair(g, set(classes.M), set(classes.N), set(pair.F0), set(pair.F1))
    assert is_bipartite_pair(g, classes, pair.F0, pair.F1)
    u0, u1 = set(), set()
    for F0, F1 in all_valid_pairs(g, set(classes.M), set(classes.N)):
        u0 |= F0
        u1 |= F1
    assert (u0, u1) == (set(pair.F0), set(pair.F1))


def test_component_bound_examples():
    rep = check_component_bound(K23, DegreeClassMap.from_high(K23, {0, 1}), 6)
    assert [r.vertices for r in rep.rows] == [(2,), (3,), (4,)]
    assert all(r.neighborhood_size == 2 and r.within_bound for r in rep.rows) and rep.ok

    g = complete_graph(3)
    rep = check_component_bound(g, DegreeClassMap.from_high(g, {0, 1, 2}), 1)
    assert rep.rows == () and rep.ok

    star = complete_bipartite_graph(1, 5)
    rep = check_component_bound(star, DegreeClassMap.from_high(star, {0}), 2)
    assert len(rep.rows) == 5
    assert all(r.size == 1 and r.neighborhood_size == 1 for r in rep.rows) and rep.ok


def test_component_bound_layers():
    g = path_graph(5)
    rep = check_component_bound(g, DegreeClassMap.from_high(g, {4}), 4)
    (row,) = rep.rows
    assert row.vertices == (0, 1, 2, 3)
    assert row.layer_sizes == (1, 1, 1, 1)
    assert row.neighborhood_size == 5 and not row.within_bound and not rep.ok


@pytest.mark.parametrize("m,n", [(3, 2), (5, 3), (4, 4), (6, 1)])
def test_layered_aligned_complete_bipartite(m, n):
    g = complete_bipartite_graph(m, n)
    rep, state = layered_solve(g, DegreeClassMap.from_high(g, range(m)), return_state=True)
    assert rep.verified
    assert state.schedule == []  # the pair already covers the graph
    assert rep.coloring == {**dict.fromkeys(range(m), 0), **dict.fromkeys(range(m, m + n), 1)}


def test_layered_edgeless():
    g = FiniteGraph(5, ((),) * 5)
    # every vertex has the maximum degree 0, so all are high and land in F0
    rep = layered_solve(g, DegreeClassMap.by_degree(g, 0))
    assert rep.coloring == dict.fromkeys(range(5), 0) and rep.verified
    # with a split class map the low side is F1 and takes color 1
    rep = layered_solve(g, DegreeClassMap.from_high(g, {0, 2}))
    assert rep.coloring == {0: 0, 1: 1, 2: 0, 3: 1, 4: 1} and rep.verified


def test_layered_triangles_reduce_to_base():
    g = disjoint_union(*[complete_graph(3)] * 4)
    rep, state = layered_solve(g, DegreeClassMap.from_high(g, ()), return_state=True)
    assert rep.verified
    assert [e.action for e in state.log] == ["sweep"] * 4


def test_layered_custom_base():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    calls = []

    def base(h):
        calls.append(h.n)
        return solve_local(h, dict.fromkeys(range(h.n), 0))

    assert layered_solve(g, DegreeClassMap.from_high(g, ()), base=base).verified
    assert calls == [3, 3]


def test_layered_bad_args():
    with pytest.raises(ValueError):
        layered_solve(K23, DegreeClassMap.from_high(K23, {0}), repetitions=0)
    with pytest.raises(ValueError):
        layered_solve(K23, DegreeClassMap.from_high(K23, {0}), base="magic")


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 16), st.floats(0.1, 0.9), st.integers(0, 10**6), st.integers(1, 4))
def test_layered_invariants(n, p, seed, reps):
    g = generate("gnp", seed=seed, n=n, p=p)
    degs = sorted(g.degree(v) for v in range(n))
    classes = DegreeClassMap.by_degree(g, degs[n // 2])
    rep, state = layered_solve(g, classes, reps, return_state=True)
    assert set(rep.coloring) == set(range(n))
    for v in state.stage2:
        assert safe_at(g, state.stage2, v)
    assert state.stage2.items() <= rep.coloring.items()
    n_comps = sum(1 for e in state.log if e.action in ("component", "sweep"))
    assert len(state.log) <= reps * len(classes.M) + n_comps
    assert state.colored_high == set(classes.M) - set(state.closed_domain)

import itertools

import pytest

from unfriendly.exceptions import ParseError, PreconditionError
from unfriendly.filter import (
    Both,
    Dom,
    Requirement,
    audit,
    diagonal_schedule,
    extend_to_meet,
    extends,
    meets,
    read_schedule,
    run_chain,
    schedule_position,
    steps_to_cover,
)
from unfriendly.graph import LazyGraph, lazy_complete_bipartite, lazy_random, lazy_ray

KINF = lazy_complete_bipartite()  # a_i = 2i, b_i = 2i + 1; a_0 sees b_0, b_1, ... = 1, 3, 5, ...


def test_meets_examples():
    assert meets({0: 0}, Dom(0), KINF)
    assert not meets({}, Both(7, 0), KINF)
    assert meets({3: 0, 5: 1}, Both(0, 0), KINF)
    assert not meets({3: 0, 5: 1}, Both(0, 1), KINF)  # b_1 sits at position 1, not past it
    assert not meets({1: 0, 3: 0}, Both(0, 0), KINF)


def test_extend_examples():
    assert extend_to_meet({}, Dom(0), KINF) == {0: 0}
    assert extend_to_meet({}, Both(0, 0), KINF) == {3: 0, 5: 1}
    c = {3: 0, 5: 1}
    assert extend_to_meet(c, Both(0, 0), KINF) == c
    # b_2 already supplies 1; only the missing 0 goes to the first free slot past 0
    assert extend_to_meet({5: 1}, Both(0, 0), KINF) == {5: 1, 3: 0}
    # colors 0 then 1, skipping colored neighbors
    assert extend_to_meet({3: 1}, Both(0, 0), KINF) == {3: 1, 5: 0}


def test_extend_refuses_finite_degree():
    with pytest.raises(PreconditionError):
        extend_to_meet({}, Both(0, 0), lazy_ray())


def test_requirement_validation():
    with pytest.raises(ValueError):
        Requirement("maybe", 0)
    with pytest.raises(ValueError):
        Both(0, -1)


def test_poset_order():
    assert extends({1: 0, 2: 1}, {1: 0})
    assert not extends({1: 0}, {1: 0, 2: 1})
    assert not extends({1: 1}, {1: 0})
    assert extends({}, {})


def test_schedule_prefix_and_positions():
    sched = list(itertools.islice(diagonal_schedule(KINF), 9))
    assert sched == [Dom(0), Both(0, 0), Both(0, 1), Dom(1), Both(1, 0), Both(0, 2), Both(1, 1), Dom(2), Both(2, 0)]
    full = list(itertools.islice(diagonal_schedule(KINF), 400))
    for i in range(8):
        for n in range(8):
            assert full[schedule_position(i, n)] == Both(i, n)
        assert full[schedule_position(i, 0) - 1] == Dom(i)


def test_chain_first_step_and_empty():
    assert run_chain(KINF, steps=0).coloring == {}
    assert run_chain(KINF, steps=1).coloring == {0: 0}


def test_chain_meets_every_processed_requirement_kinf():
    steps = steps_to_cover(1, 5)
    state = run_chain(KINF, steps=steps)
    for n in range(6):
        assert meets(state.coloring, Both(0, n), KINF)


@pytest.mark.parametrize("g", [KINF, lazy_random(0.5, 3)])
def test_chain_invariants(g):
    state = run_chain(g, steps=steps_to_cover(10, 5))
    assigned = [u for s in state.log for u, _ in s.assigned]
    assert len(assigned) == len(set(assigned))  # single assignment
    prev = {}
    for k in range(1, state.k + 1):
        cur = state.coloring_at(k)
        assert extends(cur, prev)
        assert meets(cur, state.log[k - 1].requirement, g)
        prev = cur
    assert prev == state.coloring


def test_requirement_persistence():
    state = run_chain(KINF, steps=60)
    reqs = [Dom(v) for v in range(6)] + [Both(v, n) for v in range(6) for n in range(4)]
    met_before = set()
    for k in range(state.k + 1):
        c = state.coloring_at(k)
        met = {r for r in reqs if meets(c, r, KINF)}
        assert met_before <= met
        met_before = met


def test_audit_monotone_and_fresh():
    fresh = audit(run_chain(KINF, steps=0), KINF, 5, 2)
    assert fresh.met() == set() and fresh.fraction_met == 0.0
    a = audit(run_chain(KINF, steps=20), KINF, 10, 5)
    b = audit(run_chain(KINF, steps=80), KINF, 10, 5)
    assert a.met() <= b.met()


def test_audit_dom_after_dom_steps():
    sched = [Dom(v) for v in range(10)]
    state = run_chain(KINF, sched, steps=10)
    rep = audit(state, KINF, 10, 0)
    assert all(r.dom for r in rep.rows)
    assert state.coloring == dict.fromkeys(range(10), 0)


def test_custom_schedule_runs_out():
    state = run_chain(KINF, [Dom(4)], steps=5)
    assert state.k == 1


def test_read_schedule():
    reqs = read_schedule(["dom 3", "# note", "", "both 2 5  # trailing"])
    assert reqs == [Dom(3), Both(2, 5)]
    with pytest.raises(ParseError):
        read_schedule(["both 1"])
    with pytest.raises(ParseError):
        read_schedule(["dom x"])


def test_log_lines_format():
    state = run_chain(KINF, steps=2)
    assert state.log_lines() == ["1 dom 0 - 0 0", "2 both 0 0 3 0", "2 both 0 0 5 1"]


def test_determinism():
    g1, g2 = lazy_random(0.3, 9), lazy_random(0.3, 9)
    assert run_chain(g1, steps=100).log_lines() == run_chain(g2, steps=100).log_lines()


def test_finite_vertex_set_schedule():
    from unfriendly.graph import complete_graph

    g = LazyGraph.from_finite(complete_graph(2))
    sched = list(itertools.islice(diagonal_schedule(g), 6))
    assert sched[:5] == [Dom(0), Both(0, 0), Both(0, 1), Dom(1), Both(1, 0)]

import itertools
import random

import pytest

from ccreconfig import (
    Graph,
    InvalidInstanceError,
    NotACographError,
    Rule,
    bfs_distances,
    cc_multiset,
    complete_graph,
    cs1_distance_one_component,
    cs_distance_one_component,
    cycle_graph,
    decompose_cograph,
    is_cograph,
    path_graph,
    reachability_partition,
    solve_cograph_cs,
    verify_sequence,
)
from ccreconfig.oracle import enumerate_states

from helpers import all_graphs, has_induced_p4, random_graph

TWO_TRIANGLES = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
# two disjoint edges joined to everything across, plus a fifth vertex
# attached to all of them
PINNED = Graph(5, [(0, 1), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def test_decompose_shapes():
    assert decompose_cograph(path_graph(4)) is None
    root = decompose_cograph(path_graph(3))
    assert root.kind == "join"
    assert root.vertices == (0, 1, 2)
    kinds = {child.vertices: child.kind for child in root.children}
    assert kinds == {(0, 2): "union", (1,): "leaf"}
    k4 = decompose_cograph(complete_graph(4))
    assert k4.kind == "join"
    assert all(c.kind == "leaf" for c in k4.children)


def test_is_cograph_examples():
    assert is_cograph(complete_graph(5))
    assert is_cograph(cycle_graph(4))
    assert is_cograph(Graph(3, []))
    assert not is_cograph(path_graph(4))
    assert not is_cograph(cycle_graph(5))
    assert not is_cograph(path_graph(6))


def test_is_cograph_matches_induced_path_search():
    for g in all_graphs(4):
        assert is_cograph(g) == (not has_induced_p4(g))
    rng = random.Random(7)
    for _ in range(300):
        g = random_graph(rng, rng.randint(5, 7), rng.choice([0.2, 0.5, 0.8]))
        assert is_cograph(g) == (not has_induced_p4(g))


def test_one_component_cs_distances():
    assert cs_distance_one_component(complete_graph(4), [0, 1], [2, 3]) == 1
    assert cs_distance_one_component(complete_graph(4), [0, 1], [0, 1]) == 0
    assert cs_distance_one_component(PINNED, [0, 1], [2, 3]) == 2


def test_one_component_cs1_distances():
    assert cs1_distance_one_component(complete_graph(4), [0, 1], [2, 3]) == 2
    assert cs1_distance_one_component(PINNED, [0, 1], [2, 3]) == 3
    assert cs1_distance_one_component(PINNED, [0, 1], [1, 4]) == 1
    assert cs1_distance_one_component(PINNED, [2, 3], [2, 3]) == 0


def test_one_component_rejects():
    with pytest.raises(NotACographError):
        cs_distance_one_component(path_graph(4), [0, 1], [2, 3])
    with pytest.raises(InvalidInstanceError):
        cs_distance_one_component(complete_graph(4), [0, 1], [2])
    with pytest.raises(InvalidInstanceError):
        cs_distance_one_component(Graph(4, [(0, 1), (2, 3)]), [0, 1], [2, 3])
    with pytest.raises(InvalidInstanceError):
        cs1_distance_one_component(PINNED, [0, 2], [2, 3])


def test_solver_rejects_non_cograph():
    with pytest.raises(NotACographError):
        solve_cograph_cs(path_graph(4), [0], [3])
    with pytest.raises(InvalidInstanceError):
        solve_cograph_cs(complete_graph(3), [0], [1], variant=Rule.TJ)


def test_solver_same_triangle():
    res = solve_cograph_cs(TWO_TRIANGLES, [0, 1], [1, 2])
    assert res.reachable
    assert res.distance == 1
    assert verify_sequence(TWO_TRIANGLES, res.states, rule=Rule.CS)


def test_solver_parts_cannot_trade():
    res = solve_cograph_cs(TWO_TRIANGLES, [0, 1], [3, 4])
    assert not res.reachable
    assert res.reason == "multiset-mismatch"


def test_solver_co_component_confinement():
    g = Graph(
        8,
        [(0, 1), (2, 3), (4, 5), (6, 7)]
        + [(u, w) for u in (0, 1, 2, 3) for w in (4, 5, 6, 7)],
    )
    res = solve_cograph_cs(g, [0, 2], [4, 6])
    assert not res.reachable
    assert res.reason == "co-component-mismatch"
    res = solve_cograph_cs(g, [0, 2], [1, 3])
    assert res.reachable
    assert verify_sequence(g, res.states, rule=Rule.CS)


def test_solver_trivial():
    res = solve_cograph_cs(TWO_TRIANGLES, [0, 4], [0, 4], variant=Rule.CS1)
    assert res.reachable
    assert res.states == ((0, 4),)
    assert res.distance == 0


def _cograph_pool(seed, count):
    pool = [g for g in all_graphs(4) if is_cograph(g)]
    rng = random.Random(seed)
    while len(pool) < count:
        g = random_graph(rng, rng.randint(5, 7), rng.choice([0.3, 0.5, 0.7]))
        if is_cograph(g):
            pool.append(g)
    return pool


@pytest.mark.parametrize("variant", [Rule.CS, Rule.CS1])
def test_solver_matches_oracle(variant):
    for g in _cograph_pool(11, 50):
        by_multiset = {}
        for size in range(g.n + 1):
            for sub in itertools.combinations(range(g.n), size):
                by_multiset.setdefault(cc_multiset(g, sub), []).append(sub)
        for multiset, subs in by_multiset.items():
            if len(subs) < 2:
                continue
            space = enumerate_states(g, multiset)
            labels = reachability_partition(space, variant)
            for a, b in itertools.islice(itertools.combinations(subs, 2), 50):
                ia = space.index[sum(1 << v for v in a)]
                ib = space.index[sum(1 << v for v in b)]
                res = solve_cograph_cs(g, a, b, variant=variant)
                assert res.reachable == (labels[ia] == labels[ib]), (g.edges, a, b)
                if res.reachable:
                    assert res.states[0] == a and res.states[-1] == b
                    assert verify_sequence(g, res.states, multiset, rule=variant)
                    if variant is Rule.CS1:
                        assert res.distance == bfs_distances(space, ia, variant)[ib]


def test_one_component_distance_is_exact():
    for g in _cograph_pool(13, 30):
        if g.n < 2 or len(cc_multiset(g, range(g.n))) != 1:
            continue
        for s in (1, 2, 3):
            sets = [
                sub
                for sub in itertools.combinations(range(g.n), s)
                if len(cc_multiset(g, sub)) == 1
            ]
            if len(sets) < 2:
                continue
            space = enumerate_states(g, (s,))
            for x in sets[:12]:
                ix = space.index[sum(1 << v for v in x)]
                d_cs = bfs_distances(space, ix, Rule.CS)
                d_cs1 = bfs_distances(space, ix, Rule.CS1)
                for y in sets[:12]:
                    if x >= y:
                        continue
                    iy = space.index[sum(1 << v for v in y)]
                    assert cs_distance_one_component(g, x, y) == d_cs[iy]
                    assert cs1_distance_one_component(g, x, y) == d_cs1[iy]
                    assert d_cs[iy] in (1, 2)


def test_solver_deterministic():
    res1 = solve_cograph_cs(PINNED, [0, 1], [2, 3], variant=Rule.CS1)
    res2 = solve_cograph_cs(PINNED, [0, 1], [2, 3], variant=Rule.CS1)
    assert res1.states == res2.states


import pytest

from clawmwss import (
    ClawWitnessError,
    NodeSet,
    NotStableError,
    brute_is_clawfree,
    build_graph,
    classify,
    find_claw,
    is_local,
)
from clawmwss.gen import SplitMix64

from helpers import complete, cycle, random_clawfree, random_graph, star


def test_find_claw_on_star():
    claw = find_claw(star(3))
    assert claw is not None
    assert claw.center == 0
    assert claw.leaves == (1, 2, 3)


def test_find_claw_none_on_cycle_and_clique():
    assert find_claw(cycle(7)) is None
    assert find_claw(complete(6)) is None


def test_find_claw_is_deterministic():
    g = star(5)
    assert find_claw(g) == find_claw(g)


def test_find_claw_agrees_with_brute_force():
    rng = SplitMix64(303)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 20), rng.randint(5, 60))
        ours = find_claw(g)
        brute = brute_is_clawfree(g)
        assert (ours is None) == (brute is None)
        for claw in (ours, brute):
            if claw is None:
                continue
            x, y, z = claw.leaves
            nb = g.neighbor_set(claw.center)
            assert {x, y, z} <= nb
            assert y not in g.neighbor_set(x)
            assert z not in g.neighbor_set(x)
            assert z not in g.neighbor_set(y)


def test_classify_c7_triple():
    cls = classify(cycle(7), (0, 2, 4))
    assert cls.anchors == (0, 2, 4)
    assert list(cls.exclusive_to(0)) == [6]
    assert list(cls.exclusive_to(2)) == []
    assert list(cls.exclusive_to(4)) == [5]
    assert list(cls.shared_by(0, 2)) == [1]
    assert list(cls.shared_by(2, 4)) == [3]
    assert list(cls.shared_by(0, 4)) == []
    assert list(cls.detached) == []


def test_classify_pair():
    cls = classify(cycle(7), (0, 2))
    assert list(cls.exclusive_to(0)) == [6]
    assert list(cls.exclusive_to(2)) == [3]
    assert list(cls.shared_by(0, 2)) == [1]
    assert list(cls.detached) == [4, 5]


def test_classify_rejects_non_stable_anchors():
    with pytest.raises(NotStableError) as excinfo:
        classify(complete(4), (0, 1))
    assert excinfo.value.edge == (0, 1)


def test_classify_reports_claw_for_universal_node():
    # Node 3 is adjacent to all three stable anchors: a claw centered there.
    g = build_graph(4, [(0, 3), (1, 3), (2, 3)])
    with pytest.raises(ClawWitnessError) as excinfo:
        classify(g, (0, 1, 2))
    assert excinfo.value.center == 3
    assert excinfo.value.leaves == (0, 1, 2)


def test_classify_requires_size_2_or_3():
    with pytest.raises(ValueError):
        classify(cycle(7), (0,))


def test_classification_partitions_remaining_nodes():
    rng = SplitMix64(1000)
    for _ in range(1000):
        g, _, _ = random_clawfree(rng, 30)
        assert find_claw(g) is None
        pair_or_triple = _some_stable_anchors(g, rng)
        if pair_or_triple is None:
            continue
        cls = classify(g, pair_or_triple)
        seen = {}
        for name, nodes in _named_sets(cls):
            for v in nodes:
                assert v not in seen, f"{v} in both {seen.get(v)} and {name}"
                seen[v] = name
        anchors = set(cls.anchors)
        assert set(seen) == set(range(g.n)) - anchors
        # Membership is exactly determined by anchor adjacency.
        for v, name in seen.items():
            hits = tuple(a for a in cls.anchors if v in g.neighbor_set(a))
            if not hits:
                assert name == "detached"
            elif len(hits) == 1:
                assert name == f"exclusive:{hits[0]}"
            else:
                assert name == f"shared:{hits}"
        # Exclusive and shared sets are local and obey the degree bound
        # maxdeg <= 2 * sqrt(2m), squared to stay in integers.
        if g.m:
            maxdeg = max(g.degree(v) for v in range(g.n))
            assert maxdeg * maxdeg <= 8 * g.m
            for name, nodes in _named_sets(cls):
                if name != "detached":
                    assert len(nodes) <= maxdeg


def _some_stable_anchors(g, rng):
    """A stable pair or triple found by direct scan, or None."""
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if v in g.neighbor_set(u):
                continue
            for w in range(v + 1, n):
                if w not in g.neighbor_set(u) and w not in g.neighbor_set(v):
                    return (u, v, w) if rng.below(2) else (u, v)
            return (u, v)
    return None


def _named_sets(cls):
    for v, nodes in cls.exclusive.items():
        yield f"exclusive:{v}", nodes
    for pair, nodes in cls.shared.items():
        yield f"shared:{pair}", nodes
    yield "detached", cls.detached


def test_is_local_examples():
    c7 = cycle(7)
    cls = classify(c7, (0, 2, 4))
    assert is_local(c7, cls.exclusive_to(0)) == 0
    assert is_local(c7, [0, 3]) is None
    assert is_local(c7, []) == 0
    assert is_local(build_graph(0, []), []) is None
    assert is_local(c7, NodeSet([6, 1])) == 0

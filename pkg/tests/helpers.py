"""Shared graph builders for the test suite."""

from __future__ import annotations

import itertools

from clawmwss import Graph, build_graph, generate
from clawmwss.gen import GenSpec, SplitMix64, sample_spec


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, list(itertools.combinations(range(n), 2)))


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(rng: SplitMix64, n: int, percent: int) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.below(100) < percent
    ]
    return build_graph(n, edges)


def random_clawfree(rng: SplitMix64, max_n: int, negative_weights: bool = False):
    """A certified claw-free instance of mixed kind: (graph, weights, spec)."""
    spec = sample_spec(rng, max_n, negative_weights)
    g, weights, _ = generate(spec)
    return g, weights, spec


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())

"""Unweighted machinery: build a stable set of size min(alpha(G), 4).

The constructions assume a claw-free input graph; they run in O(m) adjacency
queries.  Precondition re-verification (cliques, nullity, disjointness) is
debug-only: it is skipped under ``python -O`` so release runs trust callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterable

from .errors import ClawWitnessError, PreconditionError
from .graph import (
    Graph,
    NodeSet,
    as_node_set,
    ensure_clique,
    ensure_disjoint,
    ensure_null,
    is_clique_or_witness,
    stable_in,
)
from .structure import classify, find_claw


@dataclass(frozen=True)
class StableSetReport:
    """A stable set whose size equals min(alpha(G), 4)."""

    nodes: tuple[int, ...]

    @property
    def alpha_at_least_4(self) -> bool:
        return len(self.nodes) >= 4

    @property
    def exact_alpha(self) -> int | None:
        """alpha(G) when it is at most 3, else None."""
        return len(self.nodes) if len(self.nodes) < 4 else None


def clique_neighbor_counts(
    g: Graph, clique: NodeSet, probes: Iterable[int]
) -> dict[int, int]:
    """For each probe node, how many clique members it is adjacent to."""
    counts = {}
    for u in probes:
        c = 0
        for z in clique:
            if g.adjacent(u, z):
                c += 1
        counts[u] = c
    return counts


def stable_pair(g: Graph) -> tuple[int, int] | None:
    """A non-adjacent node pair, or None when the graph is complete.

    Picks the first node whose degree is below n-1 and its first
    non-neighbor; that non-neighbor always has the larger id.
    """
    n = g.n
    for v in range(n):
        if g.degree(v) < n - 1:
            for u in range(n):
                if u != v and not g.adjacent(v, u):
                    return (v, u)
    return None


def three_sets_stable(
    g: Graph,
    x_set: "NodeSet | Iterable[int]",
    y_set: "NodeSet | Iterable[int]",
    z_set: "NodeSet | Iterable[int]",
) -> tuple[int, int, int] | None:
    """Stable triple with one node from each of X, Y and the clique Z.

    X, Y, Z must be disjoint local sets with Z a clique, inside a claw-free
    graph.  A non-adjacent pair (x, y) extends into Z exactly when the
    number of clique members their neighborhoods cover leaves a gap; the
    first such pair in scan order wins and the gap node with smallest
    position in Z completes it.  Returns None when no triple exists.
    """
    xs = as_node_set(x_set)
    ys = as_node_set(y_set)
    zs = as_node_set(z_set)
    if __debug__:
        ensure_disjoint([(xs, "X"), (ys, "Y"), (zs, "Z")])
        ensure_clique(g, zs, "Z")
    if not xs or not ys or not zs:
        return None
    hits = clique_neighbor_counts(g, zs, chain(xs, ys))
    p = len(zs)
    for x in xs:
        hx = hits[x]
        for y in ys:
            if g.adjacent(x, y):
                continue
            if hx + hits[y] < p:
                for z in zs:
                    if not g.adjacent(z, x) and not g.adjacent(z, y):
                        return (x, y, z)
                raise AssertionError("uncovered clique node must exist")
    return None


def four_sets_stable(
    g: Graph,
    x_set: "NodeSet | Iterable[int]",
    y_set: "NodeSet | Iterable[int]",
    z_set: "NodeSet | Iterable[int]",
    w_set: "NodeSet | Iterable[int]",
) -> tuple[int, int, int, int] | None:
    """Stable 4-set with one node from each of X, Y, Z, W.

    Additional preconditions over the triple case: X null to Y, W null to
    the clique Z, W non-empty.  For each candidate w the sets X, Y shrink
    to w's non-neighbors, and minimizing clique coverage within the
    restricted sets decides extendability.
    """
    xs = as_node_set(x_set)
    ys = as_node_set(y_set)
    zs = as_node_set(z_set)
    ws = as_node_set(w_set)
    if __debug__:
        ensure_disjoint([(xs, "X"), (ys, "Y"), (zs, "Z"), (ws, "W")])
        ensure_clique(g, zs, "Z")
        ensure_null(g, ws, zs, "W and Z")
        ensure_null(g, xs, ys, "X and Y")
        if not ws:
            raise PreconditionError("W must be non-empty")
    if not xs or not ys or not zs or not ws:
        return None
    hits = clique_neighbor_counts(g, zs, chain(xs, ys))
    p = len(zs)
    for w in ws:
        x_free = [x for x in xs if not g.adjacent(x, w)]
        if not x_free:
            continue
        y_free = [y for y in ys if not g.adjacent(y, w)]
        if not y_free:
            continue
        xbar = min(x_free, key=hits.__getitem__)
        ybar = min(y_free, key=hits.__getitem__)
        if hits[xbar] + hits[ybar] < p:
            for z in zs:
                if not g.adjacent(z, xbar) and not g.adjacent(z, ybar):
                    return (xbar, ybar, z, w)
            raise AssertionError("uncovered clique node must exist")
    return None


def extend_to_three(g: Graph, pair: tuple[int, int]) -> tuple[int, int, int] | None:
    """Grow a stable pair to a stable triple, or None when alpha(G) = 2.

    Check order is fixed for determinism: a detached node joins the pair
    directly; a non-adjacent pair inside either exclusive set replaces its
    anchor; otherwise a triple must take one node from each classification
    set and the three-set search decides.
    """
    cls = classify(g, pair)
    s, t = cls.anchors
    if cls.detached:
        return tuple(sorted((s, t, cls.detached[0])))
    f_s = cls.exclusive_to(s)
    f_t = cls.exclusive_to(t)
    witness = is_clique_or_witness(g, f_s)
    if witness is not None:
        return tuple(sorted((witness[0], witness[1], t)))
    witness = is_clique_or_witness(g, f_t)
    if witness is not None:
        return tuple(sorted((witness[0], witness[1], s)))
    triple = three_sets_stable(g, cls.shared_by(s, t), f_s, f_t)
    if triple is not None:
        return tuple(sorted(triple))
    return None


def extend_to_four(
    g: Graph, anchors: "NodeSet | Iterable[int]"
) -> tuple[int, int, int, int] | None:
    """Grow a stable triple to a stable 4-set, or None when alpha(G) = 3.

    After the detached-node and exclusive-set clique checks, a 4-set (if any)
    alternates with the anchors along a path that contains either two anchors
    (5 nodes) or all three (7 nodes); both shapes reduce to the set searches.
    """
    cls = classify(g, anchors)
    s, t, u = cls.anchors
    if cls.detached:
        return tuple(sorted((s, t, u, cls.detached[0])))
    for v in (s, t, u):
        witness = is_clique_or_witness(g, cls.exclusive_to(v))
        if witness is not None:
            rest = [a for a in (s, t, u) if a != v]
            return tuple(sorted((witness[0], witness[1], *rest)))
    # Path with two anchors a, b: (x, a, y, b, z).
    for a, b in ((s, t), (s, u), (t, u)):
        triple = three_sets_stable(
            g, cls.exclusive_to(a), cls.shared_by(a, b), cls.exclusive_to(b)
        )
        if triple is not None:
            c = next(x for x in (s, t, u) if x != a and x != b)
            return tuple(sorted((*triple, c)))
    # Path with all three anchors, b in the middle: (x, a, w, b, y, c, z).
    for b in (s, t, u):
        a, c = (x for x in (s, t, u) if x != b)
        if not cls.shared_by(a, b):
            continue
        quad = four_sets_stable(
            g,
            cls.exclusive_to(a),
            cls.shared_by(b, c),
            cls.exclusive_to(c),
            cls.shared_by(a, b),
        )
        if quad is not None:
            return tuple(sorted(quad))
    return None


def stable_set_min_alpha4(g: Graph, validate: bool = False) -> StableSetReport:
    """Stable set of size min(alpha(G), 4) for a claw-free graph.

    With ``validate`` the graph is first checked for claw-freeness
    (ClawWitnessError on failure); otherwise claw-freeness is assumed and
    only incidentally detected.
    """
    if validate:
        claw = find_claw(g)
        if claw is not None:
            raise ClawWitnessError(claw.center, claw.leaves)
    if g.n == 0:
        return StableSetReport(())
    pair = stable_pair(g)
    if pair is None:
        return StableSetReport((0,))
    triple = extend_to_three(g, pair)
    if triple is None:
        report = StableSetReport(tuple(sorted(pair)))
    else:
        quad = extend_to_four(g, triple)
        report = StableSetReport(triple if quad is None else quad)
    assert stable_in(g, report.nodes), "internal error: result not stable"
    return report

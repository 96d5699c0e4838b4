"""Weighted machinery: maximum-weight stable set when alpha(G) <= 3.

The core subroutine finds the best stable triple across two probe sets and a
clique: with the clique ordered by non-increasing weight, prefix neighbor
counts make "heaviest compatible clique node" a binary search over a
monotone predicate (claw-freeness is what makes the predicate monotone).
The top-level solver enumerates the handful of shapes a size-3 stable set
can take relative to a maximum stable triple and returns the best candidate
overall.

All ties break lexicographically on node tuples so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations, permutations
from typing import Iterable, Sequence

from .cardinality import stable_set_min_alpha4
from .errors import ClawWitnessError, NotStableError
from .graph import (
    Graph,
    NodeSet,
    as_node_set,
    check_weights,
    ensure_clique,
    ensure_disjoint,
    induced_subgraph,
    is_clique_or_witness,
    is_null_to,
    stable_in,
    total_weight,
)
from .structure import Classification, classify, find_claw


@dataclass(frozen=True)
class AlphaAtLeast4:
    """Outcome: the graph has a stable set of size 4, search stopped."""

    witness: tuple[int, int, int, int]


@dataclass(frozen=True)
class Optimal:
    """Outcome: a maximum-weight stable set with its total weight."""

    nodes: tuple[int, ...]
    weight: int
    dropped_negative: int = 0


SolveOutcome = AlphaAtLeast4 | Optimal

# Candidates are (weight, sorted node tuple); higher weight wins, ties go to
# the lexicographically smaller tuple.
_Candidate = tuple[int, tuple[int, ...]]


def _better(cand: _Candidate, best: _Candidate | None) -> bool:
    if best is None:
        return True
    return cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1])


class OrderedCliquePrefix:
    """A clique ordered by non-increasing weight plus prefix neighbor counts.

    ``order`` lists the clique as z_1..z_p with w(z_1) >= ... >= w(z_p),
    ties broken by ascending id.  For every probe u, ``counts[u][i]`` is the
    number of neighbors of u among the first i clique nodes (counts[u][0] is
    0).  Building the table costs |probes| * p adjacency queries.
    """

    __slots__ = ("order", "counts")

    def __init__(self, order: tuple[int, ...], counts: dict[int, list[int]]):
        self.order = order
        self.counts = counts

    @classmethod
    def build(
        cls,
        g: Graph,
        weights: Sequence[int],
        clique: NodeSet,
        probes: Iterable[int],
    ) -> "OrderedCliquePrefix":
        order = tuple(sorted(clique, key=lambda z: (-weights[z], z)))
        counts: dict[int, list[int]] = {}
        for u in probes:
            row = [0] * (len(order) + 1)
            c = 0
            for i, z in enumerate(order, start=1):
                if g.adjacent(u, z):
                    c += 1
                row[i] = c
            counts[u] = row
        return cls(order, counts)


def weighted_three_sets(
    g: Graph,
    weights: Sequence[int],
    x_set: "NodeSet | Iterable[int]",
    y_set: "NodeSet | Iterable[int]",
    z_set: "NodeSet | Iterable[int]",
) -> tuple[tuple[int, int, int], int] | None:
    """Maximum-weight stable triple (x, y, z) over X x Y x the clique Z.

    For each non-adjacent probe pair the heaviest compatible clique node
    sits at the first prefix where the pair's neighbor counts leave a gap;
    that index is found by binary search.  Returns the best triple with its
    weight, or None when no stable triple exists.
    """
    xs = as_node_set(x_set)
    ys = as_node_set(y_set)
    zs = as_node_set(z_set)
    if __debug__:
        ensure_disjoint([(xs, "X"), (ys, "Y"), (zs, "Z")])
        ensure_clique(g, zs, "Z")
    if not xs or not ys or not zs:
        return None
    prefix = OrderedCliquePrefix.build(g, weights, zs, chain(xs, ys))
    order = prefix.order
    p = len(order)
    best: tuple[int, tuple[int, int, int]] | None = None
    for x in xs:
        row_x = prefix.counts[x]
        wx = weights[x]
        for y in ys:
            if g.adjacent(x, y):
                continue
            row_y = prefix.counts[y]
            if row_x[p] + row_y[p] >= p:
                continue
            lo, hi = 1, p
            while lo < hi:
                mid = (lo + hi) // 2
                if row_x[mid] + row_y[mid] < mid:
                    hi = mid
                else:
                    lo = mid + 1
            z = order[lo - 1]
            cand = (wx + weights[y] + weights[z], (x, y, z))
            if best is None or cand[0] > best[0] or (
                cand[0] == best[0] and cand[1] < best[1]
            ):
                best = cand
    if best is None:
        return None
    return best[1], best[0]


def mwss_small(
    g: Graph, weights: Sequence[int], pool: "NodeSet | Iterable[int]"
) -> tuple[tuple[int, ...], int] | None:
    """Best stable set of size 1 or 2 inside the pool, by exhaustive scan.

    None when the pool is empty.  O(|pool|^2) adjacency queries; affordable
    because node counts are O(sqrt(m)) whenever alpha <= 3.
    """
    nodes = sorted(as_node_set(pool))
    if not nodes:
        return None
    best: _Candidate | None = None
    for v in nodes:
        cand = (weights[v], (v,))
        if _better(cand, best):
            best = cand
    for i, a in enumerate(nodes):
        wa = weights[a]
        for b in nodes[i + 1 :]:
            if not g.adjacent(a, b):
                cand = (wa + weights[b], (a, b))
                if _better(cand, best):
                    best = cand
    assert best is not None
    return best[1], best[0]


def mwss_intersecting(
    g: Graph, weights: Sequence[int], anchors: "NodeSet | Iterable[int]"
) -> tuple[tuple[int, ...], int] | None:
    """Best stable set meeting the stable triple T.

    For each anchor v the remaining members must be non-neighbors of v, so
    v plus the best small stable set among them covers every stable set
    containing v (other anchors stay in the pool: sets with two or three
    anchors surface in several iterations, which is harmless).
    """
    t = tuple(sorted(as_node_set(anchors)))
    for a, b in combinations(t, 2):
        if g.adjacent(a, b):
            raise NotStableError(a, b)
    best: _Candidate | None = None
    for v in t:
        pool = [x for x in range(g.n) if x != v and not g.adjacent(v, x)]
        cand = (weights[v], (v,))
        if _better(cand, best):
            best = cand
        sub = mwss_small(g, weights, pool)
        if sub is not None:
            nodes, w = sub
            cand = (weights[v] + w, tuple(sorted((v,) + nodes)))
            if _better(cand, best):
                best = cand
    if best is None:
        return None
    return best[1], best[0]


def mwss_type_path6(
    g: Graph, weights: Sequence[int], cls: Classification
) -> tuple[tuple[int, ...], int] | None:
    """Best stable triple alternating with the anchors along a 6-node path.

    The path (a, x, b, y, c, z) forces x into the (a,b)-shared set, y into
    the (b,c)-shared set and z into the exclusive set of c; all six anchor
    orders are tried.
    """
    best: _Candidate | None = None
    for a, b, c in permutations(cls.anchors):
        found = weighted_three_sets(
            g, weights, cls.shared_by(a, b), cls.shared_by(b, c), cls.exclusive_to(c)
        )
        if found is not None:
            nodes, w = found
            cand = (w, tuple(sorted(nodes)))
            if _better(cand, best):
                best = cand
    if best is None:
        return None
    return best[1], best[0]


def mwss_type_cycle6(
    g: Graph, weights: Sequence[int], cls: Classification
) -> tuple[tuple[int, ...], int] | None:
    """Best stable triple alternating with the anchors along a 6-cycle.

    The triple takes one node from each shared set.  When the (t,u)-shared
    set is a clique one search suffices; otherwise a non-adjacent pair in it
    splits the (s,u)-shared set into two cliques by claw-freeness, and one
    search per clique covers all completions.  A split failure certifies a
    claw in the input.
    """
    s, t, u = cls.anchors
    x_side = cls.shared_by(s, t)
    y_mid = cls.shared_by(t, u)
    z_side = cls.shared_by(s, u)

    witness = is_clique_or_witness(g, y_mid)
    if witness is None:
        found = weighted_three_sets(g, weights, x_side, z_side, y_mid)
        if found is None:
            return None
        nodes, w = found
        return tuple(sorted(nodes)), w

    v, v_prime = witness
    half1: list[int] = []
    half2: list[int] = []
    for q in z_side:
        hit1 = g.adjacent(q, v)
        hit2 = g.adjacent(q, v_prime)
        if hit1 and hit2:
            raise ClawWitnessError(q, (s, v, v_prime))
        if not hit1 and not hit2:
            raise ClawWitnessError(u, (q, v, v_prime))
        (half1 if hit1 else half2).append(q)
    if __debug__:
        bad = is_clique_or_witness(g, half1)
        if bad is not None:
            raise ClawWitnessError(u, (bad[0], bad[1], v_prime))
        bad = is_clique_or_witness(g, half2)
        if bad is not None:
            raise ClawWitnessError(u, (bad[0], bad[1], v))

    best: _Candidate | None = None
    for half in (half1, half2):
        found = weighted_three_sets(g, weights, x_side, y_mid, half)
        if found is not None:
            nodes, w = found
            cand = (w, tuple(sorted(nodes)))
            if _better(cand, best):
                best = cand
    if best is None:
        return None
    return best[1], best[0]


def mwss_type_iii(
    g: Graph, weights: Sequence[int], cls: Classification
) -> tuple[tuple[int, ...], int] | None:
    """Best stable triple whose anchor alternation includes a 2-node path.

    The lone anchor a contributes a node from its exclusive set; the other
    two anchors b, c sit on either two short paths, one 4-node path, or a
    4-cycle.  The first two shapes reduce to the triple search; in the
    4-cycle shape the exclusive set of a has no edges to the (b,c)-shared
    set, so the heaviest node and the heaviest non-adjacent pair combine
    freely.
    """
    best: _Candidate | None = None

    def consider(found: tuple[tuple[int, ...], int] | None) -> None:
        nonlocal best
        if found is not None:
            nodes, w = found
            cand = (w, tuple(sorted(nodes)))
            if _better(cand, best):
                best = cand

    for a in cls.anchors:
        b, c = (x for x in cls.anchors if x != a)
        f_a = cls.exclusive_to(a)
        shared_bc = cls.shared_by(b, c)
        consider(
            weighted_three_sets(g, weights, cls.exclusive_to(b), cls.exclusive_to(c), f_a)
        )
        consider(weighted_three_sets(g, weights, shared_bc, cls.exclusive_to(c), f_a))
        consider(weighted_three_sets(g, weights, shared_bc, cls.exclusive_to(b), f_a))
        if f_a and len(shared_bc) >= 2:
            if __debug__:
                crossing = is_null_to(g, f_a, shared_bc)
                if crossing is not None:
                    raise ClawWitnessError(crossing[1], (crossing[0], b, c))
            z = min(f_a, key=lambda node: (-weights[node], node))
            pair_best: _Candidate | None = None
            members = sorted(shared_bc)
            for i, pa in enumerate(members):
                for pb in members[i + 1 :]:
                    if not g.adjacent(pa, pb):
                        cand = (weights[pa] + weights[pb], (pa, pb))
                        if _better(cand, pair_best):
                            pair_best = cand
            if pair_best is not None:
                consider((pair_best[1] + (z,), pair_best[0] + weights[z]))
    if best is None:
        return None
    return best[1], best[0]


def mwss_alpha3(
    g: Graph, weights: Sequence[int], validate: bool = False
) -> SolveOutcome:
    """Solve the maximum-weight stable set problem when alpha(G) <= 3.

    Negative-weight nodes are dropped up front (they never help), the
    cardinality phase either certifies alpha >= 4 with a witness or pins
    alpha, and the weighted phase takes the best candidate over: stable sets
    meeting a maximum stable triple, the three disjoint-triple shapes, all
    small stable sets, and the empty set.  Weights are reported against the
    original graph; node ids in the outcome are original ids.
    """
    check_weights(g, weights)
    if validate:
        claw = find_claw(g)
        if claw is not None:
            raise ClawWitnessError(claw.center, claw.leaves)

    keep = [v for v in range(g.n) if weights[v] >= 0]
    dropped = g.n - len(keep)
    sub, _ = induced_subgraph(g, keep)
    sub = sub.with_counter(g.counter)
    sub_weights = [weights[v] for v in keep]

    report = stable_set_min_alpha4(sub)
    if report.alpha_at_least_4:
        witness = tuple(sorted(keep[x] for x in report.nodes))
        return AlphaAtLeast4(witness)

    best: _Candidate = (0, ())
    if report.exact_alpha is not None and report.exact_alpha >= 1:
        found = mwss_small(sub, sub_weights, range(sub.n))
        if found is not None and _better((found[1], found[0]), best):
            best = (found[1], found[0])
    if report.exact_alpha == 3:
        anchors = report.nodes
        cls = classify(sub, anchors)
        assert not cls.detached, "alpha = 3 leaves no detached nodes"
        for found in (
            mwss_intersecting(sub, sub_weights, anchors),
            mwss_type_path6(sub, sub_weights, cls),
            mwss_type_cycle6(sub, sub_weights, cls),
            mwss_type_iii(sub, sub_weights, cls),
        ):
            if found is not None and _better((found[1], found[0]), best):
                best = (found[1], found[0])

    nodes = tuple(sorted(keep[x] for x in best[1]))
    assert stable_in(g, nodes), "internal error: result not stable"
    assert total_weight(weights, nodes) == best[0], "internal error: weight mismatch"
    return Optimal(nodes=nodes, weight=best[0], dropped_negative=dropped)

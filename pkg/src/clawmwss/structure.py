"""Claw detection and the anchor classification used by both solvers.

Given a stable set T of size 2 or 3 (the "anchors"), every remaining node is
adjacent to none, exactly one, or exactly two of them; a node adjacent to all
three anchors would be the center of a claw.  The resulting partition is the
structural input of the stable-set constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ClawWitnessError, NotStableError
from .graph import Graph, NodeSet, as_node_set


@dataclass(frozen=True)
class Claw:
    """An induced claw: center adjacent to three pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, int, int]


@dataclass(frozen=True)
class Classification:
    """Partition of the nodes outside the anchor set T.

    exclusive[v]  nodes adjacent to anchor v and to no other anchor
    shared[(u,v)] nodes adjacent to exactly the anchor pair u, v (u < v)
    detached      nodes adjacent to no anchor
    """

    anchors: tuple[int, ...]
    exclusive: dict[int, NodeSet]
    shared: dict[tuple[int, int], NodeSet]
    detached: NodeSet

    def exclusive_to(self, v: int) -> NodeSet:
        return self.exclusive[v]

    def shared_by(self, u: int, v: int) -> NodeSet:
        return self.shared[(u, v) if u < v else (v, u)]

    def all_sets(self) -> list[NodeSet]:
        return list(self.exclusive.values()) + list(self.shared.values()) + [self.detached]


def classify(g: Graph, anchors: "NodeSet | Iterable[int]") -> Classification:
    """Classify V minus T by adjacency to each anchor of the stable set T.

    One pass over the nodes, at most |T| adjacency queries each.  Raises
    NotStableError if T is not stable, and for |T| = 3 raises
    ClawWitnessError if some node is adjacent to all three anchors (that node
    is the center of a claw whose leaves are T).
    """
    t = tuple(sorted(as_node_set(anchors)))
    if len(t) not in (2, 3):
        raise ValueError(f"anchor set must have size 2 or 3, got {len(t)}")
    for a, b in combinations(t, 2):
        if g.adjacent(a, b):
            raise NotStableError(a, b)

    exclusive: dict[int, list[int]] = {v: [] for v in t}
    shared: dict[tuple[int, int], list[int]] = {
        pair: [] for pair in combinations(t, 2)
    }
    detached: list[int] = []
    t_members = set(t)
    for x in range(g.n):
        if x in t_members:
            continue
        hits = tuple(a for a in t if g.adjacent(x, a))
        if len(hits) == 0:
            detached.append(x)
        elif len(hits) == 1:
            exclusive[hits[0]].append(x)
        elif len(hits) == 2:
            shared[hits].append(x)
        else:
            raise ClawWitnessError(x, t)

    return Classification(
        anchors=t,
        exclusive={v: NodeSet(nodes) for v, nodes in exclusive.items()},
        shared={pair: NodeSet(nodes) for pair, nodes in shared.items()},
        detached=NodeSet(detached),
    )


def find_claw(g: Graph) -> Claw | None:
    """Find an induced claw, or None if the graph is claw-free.

    Scans each center's neighborhood for an independent triple: every
    non-adjacent neighbor pair is extended greedily by a third neighbor.
    Worst case O(sum deg^3) queries; this is a validation routine, not part
    of the solve path.
    """
    for center in range(g.n):
        nbrs = g.neighbors(center)
        if len(nbrs) < 3:
            continue
        for i, x in enumerate(nbrs):
            for j in range(i + 1, len(nbrs)):
                y = nbrs[j]
                if g.adjacent(x, y):
                    continue
                for z in nbrs:
                    if z == x or z == y:
                        continue
                    if not g.adjacent(x, z) and not g.adjacent(y, z):
                        return Claw(center, tuple(sorted((x, y, z))))
    return None


def is_local(g: Graph, nodes: "NodeSet | Iterable[int]") -> int | None:
    """Smallest node u whose closed neighborhood contains all given nodes,
    or None if no such node exists.  Test-support routine, O(n * |X|)."""
    ns = as_node_set(nodes)
    for u in range(g.n):
        if all(x == u or g.adjacent(u, x) for x in ns):
            return u
    return None

"""Immutable simple undirected graph with a counted adjacency oracle.

The solvers in this package are analysed by the number of adjacency queries
they make, so every pairwise adjacency decision on a solve path must go
through :meth:`Graph.adjacent`, which bumps a per-context counter.  Direct
structure access (neighbor lists, degrees) is free and intentionally not
counted; it is only used where the algorithm genuinely reads stored data
rather than asking "is u adjacent to v?".
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError

NodeWeights = Sequence[int]

# Instance files reject weights above this so that any 3-node sum fits
# comfortably in signed 64-bit arithmetic.
WEIGHT_LIMIT = 1 << 61


class QueryCounter:
    """Monotone tally of adjacency-oracle calls for one solve context."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def __repr__(self) -> str:
        return f"QueryCounter({self.count})"


class NodeSet:
    """Ordered collection of distinct node ids with O(1) membership."""

    __slots__ = ("_order", "_members")

    def __init__(self, nodes: Iterable[int] = ()):
        order = tuple(nodes)
        members = frozenset(order)
        if len(members) != len(order):
            raise ValueError("duplicate node ids in NodeSet")
        self._order = order
        self._members = members

    def __contains__(self, v: object) -> bool:
        return v in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self._order)

    def __len__(self) -> int:
        return len(self._order)

    def __getitem__(self, i: int) -> int:
        return self._order[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NodeSet):
            return self._members == other._members
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"NodeSet({list(self._order)!r})"

    @property
    def members(self) -> frozenset[int]:
        return self._members

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self._order))


def as_node_set(nodes: "NodeSet | Iterable[int]") -> NodeSet:
    if isinstance(nodes, NodeSet):
        return nodes
    return NodeSet(nodes)


class Graph:
    """Immutable simple graph on nodes 0..n-1.

    Adjacency lists are sorted ascending; membership sets give the adjacency
    oracle constant expected time per query.  The query counter belongs to a
    solve context: concurrent solves over the same structure should each use
    their own view obtained via :meth:`with_counter`.
    """

    __slots__ = ("n", "m", "_adj", "_memb", "counter")

    def __init__(
        self,
        n: int,
        adj: list[tuple[int, ...]],
        memb: list[frozenset[int]],
        m: int,
        counter: QueryCounter | None = None,
    ):
        self.n = n
        self.m = m
        self._adj = adj
        self._memb = memb
        self.counter = counter if counter is not None else QueryCounter()

    def adjacent(self, u: int, v: int) -> bool:
        """Counted adjacency oracle: true iff {u, v} is an edge."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"node id out of range: ({u}, {v})")
        self.counter.count += 1
        return v in self._memb[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbor list of v (structure access, not counted)."""
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._memb[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically ascending."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def with_counter(self, counter: QueryCounter | None = None) -> "Graph":
        """Shallow view sharing structure but owning a fresh query counter."""
        return Graph(self.n, self._adj, self._memb, self.m, counter or QueryCounter())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list.

    Duplicate edges (in either orientation) are collapsed; self-loops and
    out-of-range ids are rejected.
    """
    if n < 0:
        raise ValueError(f"negative node count: {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if v not in nbrs[u]:
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
    adj = [tuple(sorted(s)) for s in nbrs]
    memb = [frozenset(s) for s in nbrs]
    return Graph(n, adj, memb, m)


def is_clique_or_witness(
    g: Graph, nodes: "NodeSet | Iterable[int]"
) -> tuple[int, int] | None:
    """Return None if the given nodes are pairwise adjacent, else one
    non-adjacent pair (the first in scan order).

    Costs O(k^2) adjacency queries for k nodes.  Empty and singleton sets
    are cliques vacuously.
    """
    ns = as_node_set(nodes)
    order = list(ns)
    for i, u in enumerate(order):
        for v in order[i + 1 :]:
            if not g.adjacent(u, v):
                return (u, v)
    return None


def is_null_to(
    g: Graph, a: "NodeSet | Iterable[int]", b: "NodeSet | Iterable[int]"
) -> tuple[int, int] | None:
    """Return None if no edge crosses between disjoint sets a and b, else one
    crossing edge (u, v) with u in a, v in b."""
    sa = as_node_set(a)
    sb = as_node_set(b)
    if sa.members & sb.members:
        raise PreconditionError("is_null_to requires disjoint sets")
    for u in sa:
        for v in sb:
            if g.adjacent(u, v):
                return (u, v)
    return None


def induced_subgraph(
    g: Graph, keep: "NodeSet | Iterable[int]"
) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``, plus the old-id -> new-id map.

    New ids are assigned in ascending order of old id, so the map is
    monotone increasing.
    """
    kept = sorted(as_node_set(keep))
    idmap = {old: new for new, old in enumerate(kept)}
    edges = []
    for old in kept:
        u = idmap[old]
        for w in g.neighbors(old):
            if w in idmap and old < w:
                edges.append((u, idmap[w]))
    return build_graph(len(kept), edges), idmap


def total_weight(weights: NodeWeights, nodes: Iterable[int]) -> int:
    return sum(weights[v] for v in nodes)


def check_weights(g: Graph, weights: NodeWeights) -> None:
    if len(weights) != g.n:
        raise ValueError(
            f"weight vector length {len(weights)} does not match node count {g.n}"
        )


def stable_in(g: Graph, nodes: Iterable[int]) -> bool:
    """Pairwise non-adjacency via the membership structure (uncounted)."""
    seen: list[int] = []
    for u in nodes:
        for v in seen:
            if v == u or v in g.neighbor_set(u):
                return False
        seen.append(u)
    return True


def ensure_disjoint(named_sets: Sequence[tuple[NodeSet, str]]) -> None:
    for i, (a, na) in enumerate(named_sets):
        for b, nb in named_sets[i + 1 :]:
            if a.members & b.members:
                raise PreconditionError(f"{na} and {nb} must be disjoint")


def ensure_clique(g: Graph, nodes: NodeSet, name: str) -> None:
    if is_clique_or_witness(g, nodes) is not None:
        raise PreconditionError(f"{name} must be a clique")


def ensure_null(g: Graph, a: NodeSet, b: NodeSet, names: str) -> None:
    if is_null_to(g, a, b) is not None:
        raise PreconditionError(f"{names} must have no crossing edges")

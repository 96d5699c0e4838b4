"""Brute-force oracles: independent ground truth for the solvers.

These deliberately avoid the counted adjacency oracle and the solver code
paths; they work on plain adjacency bitmasks so that agreement between
solver and oracle is meaningful evidence.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph
from .structure import Claw


def adjacency_masks(g: Graph) -> list[int]:
    """Per-node neighbor bitmask (bit v set iff v is a neighbor)."""
    masks = []
    for u in range(g.n):
        bits = 0
        for v in g.neighbors(u):
            bits |= 1 << v
        masks.append(bits)
    return masks


def is_stable_set(g: Graph, nodes: Sequence[int]) -> bool:
    """Direct pairwise stability check via neighbor sets (uncounted)."""
    nodes = list(nodes)
    for i, u in enumerate(nodes):
        nb = g.neighbor_set(u)
        for v in nodes[i + 1 :]:
            if v in nb or v == u:
                return False
    return True


def brute_alpha_min4(g: Graph) -> int:
    """min(alpha(G), 4) by exhaustive subset scan; practical for n <= 80."""
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return min(n, 4)
    adj = adjacency_masks(g)
    all_above = [( (1 << n) - 1 ) & ~((1 << (v + 1)) - 1) for v in range(n)]
    best = 1
    for x in range(n):
        ax = adj[x]
        for y in range(x + 1, n):
            if (ax >> y) & 1:
                continue
            if best < 2:
                best = 2
            candidates = all_above[y] & ~ax & ~adj[y]
            if not candidates:
                continue
            best = 3
            rest = candidates
            while rest:
                z = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if candidates & all_above[z] & ~adj[z]:
                    return 4
    return best


def brute_is_clawfree(g: Graph) -> Claw | None:
    """Exhaustive claw scan over all centers and neighbor triples."""
    adj = adjacency_masks(g)
    for center in range(g.n):
        nbrs = g.neighbors(center)
        k = len(nbrs)
        for i in range(k):
            x = nbrs[i]
            ax = adj[x]
            for j in range(i + 1, k):
                y = nbrs[j]
                if (ax >> y) & 1:
                    continue
                ay = adj[y]
                for t in range(j + 1, k):
                    z = nbrs[t]
                    if not ((ax >> z) & 1) and not ((ay >> z) & 1):
                        return Claw(center, (x, y, z))
    return None


def _better(cand: tuple[int, tuple[int, ...]], best: tuple[int, tuple[int, ...]]) -> bool:
    return cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1])


def brute_mwss(g: Graph, weights: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Exact maximum-weight stable set, admitting the empty set (weight 0).

    When alpha(G) <= 3 only subsets of size <= 3 need scanning; otherwise the
    graph must be small (n <= 24) and all stable sets are enumerated
    recursively.  Ties go to the lexicographically smallest node tuple.
    """
    n = g.n
    alpha = brute_alpha_min4(g)
    if alpha >= 4 and n > 24:
        raise ValueError("brute_mwss needs alpha <= 3 or n <= 24")

    if alpha >= 4:
        return _brute_mwss_enumerate(g, weights)

    adj = adjacency_masks(g)
    best: tuple[int, tuple[int, ...]] = (0, ())
    for v in range(n):
        cand = (weights[v], (v,))
        if _better(cand, best):
            best = cand
    # Heaviest completion first: nodes by descending weight, ties ascending id.
    by_weight = sorted(range(n), key=lambda v: (-weights[v], v))
    for x in range(n):
        ax = adj[x]
        wx = weights[x]
        for y in range(x + 1, n):
            if (ax >> y) & 1:
                continue
            pair_w = wx + weights[y]
            cand = (pair_w, (x, y))
            if _better(cand, best):
                best = cand
            blocked = ax | adj[y] | ((1 << (y + 1)) - 1)
            for z in by_weight:
                if not ((blocked >> z) & 1):
                    cand = (pair_w + weights[z], (x, y, z))
                    if _better(cand, best):
                        best = cand
                    break
    return best[1], best[0]


def _brute_mwss_enumerate(g: Graph, weights: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Second, independent route: enumerate every stable set recursively."""
    n = g.n
    adj = adjacency_masks(g)
    full = (1 << n) - 1
    best: tuple[int, tuple[int, ...]] = (0, ())

    def extend(chosen: tuple[int, ...], weight: int, allowed: int) -> None:
        nonlocal best
        cand = (weight, chosen)
        if _better(cand, best):
            best = cand
        rest = allowed
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            above = full & ~((1 << (v + 1)) - 1)
            extend(chosen + (v,), weight + weights[v], allowed & above & ~adj[v])

    extend((), 0, full)
    return best[1], best[0]


def brute_mwss_full(g: Graph, weights: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Unrestricted enumeration regardless of alpha; for cross-checks on
    small graphs only."""
    if g.n > 24:
        raise ValueError("brute_mwss_full limited to n <= 24")
    return _brute_mwss_enumerate(g, weights)

"""Restricted bipartite subgraph and minimum vertex cover via maximum matching.

For a two-price instance, the only constraints that can bind a solution which
prices every non-skipped node at its own valuation are edges from a high-value
node to a low-value node with slack below the price gap.  Those edges form a
bipartite subgraph; by the Konig-Egervary theorem its minimum vertex cover has
the size of a maximum matching and is computed from one by alternating
reachability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import Instance, ValidationError, _require


@dataclass(frozen=True)
class BipartiteRestriction:
    """Binding edges of a two-price instance.

    ``left`` holds the value-p2 nodes, ``right`` the value-p1 nodes; every
    edge in ``edges`` is stored as ``(left_node, right_node)``.  ``alpha_star``
    is the largest reverse slack alpha(right, left) over the kept edges
    (0 when there are none); it feeds the guaranteed-ratio formula.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    alpha_star: int


@dataclass(frozen=True)
class Matching:
    """Disjoint left-right pairs from a restriction's edge set."""

    pairs: tuple[tuple[int, int], ...]


def restricted_subgraph(inst: Instance) -> BipartiteRestriction:
    """Keep only edges (u, v) with val(u)=p2, val(v)=p1 and alpha(u, v) < p2-p1."""
    if len(inst.prices) != 2:
        raise ValidationError(
            f"restriction needs exactly two prices, got {len(inst.prices)}")
    p1, p2 = inst.prices
    for v in inst.nodes:
        _require(inst.val[v] in (p1, p2),
                 f"node {v} has valuation {inst.val[v]} outside the price set")
    gap = p2 - p1
    left = tuple(v for v in inst.nodes if inst.val[v] == p2)
    right = tuple(v for v in inst.nodes if inst.val[v] == p1)
    kept = []
    for u, v in inst.edges:
        if inst.val[u] == p2 and inst.val[v] == p1 and inst.alpha[(u, v)] < gap:
            kept.append((u, v))
        elif inst.val[v] == p2 and inst.val[u] == p1 and inst.alpha[(v, u)] < gap:
            kept.append((v, u))
    kept.sort()
    alpha_star = max((inst.alpha[(r, l)] for l, r in kept), default=0)
    return BipartiteRestriction(left, right, tuple(kept), alpha_star)


def max_matching(bg: BipartiteRestriction) -> Matching:
    """Maximum-cardinality matching by augmenting paths.

    Deterministic: left nodes are processed in ascending id with adjacency
    sorted ascending.
    """
    adj: dict[int, list[int]] = {l: [] for l in bg.left}
    for l, r in bg.edges:
        adj[l].append(r)
    for l in adj:
        adj[l].sort()
    match_of_right: dict[int, int] = {}
    match_of_left: dict[int, int] = {}

    def augment(l: int, seen: set[int]) -> bool:
        for r in adj[l]:
            if r in seen:
                continue
            seen.add(r)
            if r not in match_of_right or augment(match_of_right[r], seen):
                match_of_right[r] = l
                match_of_left[l] = r
                return True
        return False

    for l in sorted(bg.left):
        if l not in match_of_left:
            augment(l, set())
    pairs = tuple(sorted(match_of_left.items()))
    return Matching(pairs)


def min_vertex_cover(bg: BipartiteRestriction, m: Matching) -> frozenset[int]:
    """Minimum vertex cover from a maximum matching (Konig-Egervary).

    Alternating reachability from the unmatched left nodes: follow non-matching
    edges left-to-right and matching edges right-to-left; the cover is the
    unreached left side plus the reached right side.  Raises if ``m`` is not
    maximum (an augmenting path exists) or is not a matching of the
    restriction's edges.
    """
    edge_set = set(bg.edges)
    seen_nodes: set[int] = set()
    for l, r in m.pairs:
        _require((l, r) in edge_set, f"pair ({l}, {r}) is not a restriction edge")
        _require(l not in seen_nodes and r not in seen_nodes,
                 f"node reused by matching pair ({l}, {r})")
        seen_nodes.add(l)
        seen_nodes.add(r)
    match_of_left = dict(m.pairs)
    match_of_right = {r: l for l, r in m.pairs}
    adj: dict[int, list[int]] = {l: [] for l in bg.left}
    for l, r in bg.edges:
        adj[l].append(r)

    reach_left = {l for l in bg.left if l not in match_of_left}
    reach_right: set[int] = set()
    frontier = sorted(reach_left)
    while frontier:
        nxt = []
        for l in frontier:
            for r in adj[l]:
                if match_of_left.get(l) == r or r in reach_right:
                    continue
                reach_right.add(r)
                if r not in match_of_right:
                    raise ValidationError(
                        "matching is not maximum: an augmenting path exists")
                l2 = match_of_right[r]
                if l2 not in reach_left:
                    reach_left.add(l2)
                    nxt.append(l2)
        frontier = nxt

    cover = frozenset(l for l in bg.left if l not in reach_left) | frozenset(reach_right)
    assert len(cover) == len(m.pairs)
    return cover

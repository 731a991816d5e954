"""Executable instance transformers between cut problems and pricing.

Four constructions, each paired with enough certificate data to verify the
useful direction at test scale:

* multi-demand to unit-demand: every node becomes a zero-slack clique of
  copies, preserving the optimum exactly;
* terminal edge cuts to terminal node cuts: subdivide edges, blow vertices up
  into degree-sized bundles (a linear reduction with both constants 1);
* terminal node cuts to pricing: three huge terminal bundles whose valuations
  are staggered so that crossing a revenue threshold forces a small separator;
* the approximation-preserving variant with zero slacks and a constant price
  range, whose solution mapping canonicalizes a price vector until every
  bundle sits in its own component.

Node cuts here always mean sets of non-terminal vertices whose deletion
pairwise disconnects the three terminals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil

from .instance import (
    Instance, PriceVector, PricingError, SizeLimitError, ValidationError,
    ParseError, _require, is_feasible, revenue,
)

DEFAULT_EXPANSION_CAP = 100_000
DEFAULT_PRICE_CAP = 1_000_000


@dataclass(frozen=True)
class TerminalGraph:
    """Simple undirected graph with three pairwise non-adjacent terminals.

    ``q`` bounds the node-cut size for decision-flavored uses and may be
    omitted for pure optimization calls.
    """

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    terminals: tuple[int, int, int]
    q: int | None = None

    def __post_init__(self):
        _require(self.nodes == tuple(sorted(set(self.nodes))),
                 "node ids must be sorted and distinct")
        nodeset = set(self.nodes)
        seen = set()
        for e in self.edges:
            u, v = e
            _require(u in nodeset and v in nodeset, f"edge {e} references an unknown node")
            _require(u < v, f"edge {e} must be stored as (min, max)")
            _require(e not in seen, f"duplicate edge {e}")
            seen.add(e)
        _require(len(self.terminals) == 3 and len(set(self.terminals)) == 3,
                 "exactly three distinct terminals are required")
        for t in self.terminals:
            _require(t in nodeset, f"terminal {t} is not a node")
        for a, b in combinations(sorted(self.terminals), 2):
            _require((a, b) not in seen, f"terminals {a} and {b} are adjacent")
        if self.q is not None:
            _require(0 <= self.q <= len(self.nodes) - 3,
                     f"q must satisfy 0 <= q <= n - 3, got {self.q}")

    @classmethod
    def build(cls, nodes, edges, terminals, q=None) -> "TerminalGraph":
        canon = tuple(sorted({(min(u, v), max(u, v)) for u, v in edges}))
        return cls(tuple(sorted(set(nodes))), canon, tuple(terminals), q)


@dataclass(frozen=True)
class ReductionOutput:
    """A constructed pricing instance plus its verification certificate."""

    instance: Instance
    threshold: int | None
    bundle_map: dict[int, tuple[int, ...]]
    params: dict


@dataclass(frozen=True)
class NodeCutReduction:
    """Edge-cut to node-cut construction with its solution-mapping data."""

    source: TerminalGraph
    target: TerminalGraph
    bundle_map: dict[int, tuple[int, ...]]
    subdivision_map: dict[int, tuple[int, int]]


# --- small graph helpers -------------------------------------------------------

def _adjacency(nodes, edges) -> dict[int, list[int]]:
    adj = {v: [] for v in nodes}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _component_labels(nodes, adj, removed) -> dict[int, int]:
    """Connected-component label per surviving node (removed nodes absent)."""
    labels: dict[int, int] = {}
    current = 0
    for start in nodes:
        if start in removed or start in labels:
            continue
        stack = [start]
        labels[start] = current
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in removed or y in labels:
                    continue
                labels[y] = current
                stack.append(y)
        current += 1
    return labels


def separates_terminals(tg: TerminalGraph, removed) -> bool:
    """True iff deleting ``removed`` leaves the terminals pairwise disconnected."""
    removed = set(removed)
    _require(not removed & set(tg.terminals), "a terminal cannot be deleted")
    adj = _adjacency(tg.nodes, tg.edges)
    labels = _component_labels(tg.nodes, adj, removed)
    t1, t2, t3 = tg.terminals
    return len({labels[t1], labels[t2], labels[t3]}) == 3


def edge_cut_separates(tg: TerminalGraph, cut_edges) -> bool:
    """True iff deleting the given edges pairwise disconnects the terminals."""
    cut = {(min(u, v), max(u, v)) for u, v in cut_edges}
    surviving = [e for e in tg.edges if e not in cut]
    adj = _adjacency(tg.nodes, surviving)
    labels = _component_labels(tg.nodes, adj, set())
    t1, t2, t3 = tg.terminals
    return len({labels[t1], labels[t2], labels[t3]}) == 3


def min_terminal_node_cut(tg: TerminalGraph, limit: int = 12) -> frozenset[int]:
    """Smallest separating non-terminal set by exhaustive search (test oracle)."""
    if len(tg.nodes) > limit:
        raise SizeLimitError(
            f"graph has {len(tg.nodes)} nodes, exceeding the exhaustive-search limit {limit}")
    others = sorted(set(tg.nodes) - set(tg.terminals))
    for size in range(len(others) + 1):
        for combo in combinations(others, size):
            if separates_terminals(tg, combo):
                return frozenset(combo)
    raise PricingError("unreachable: deleting all non-terminals separates "
                       "pairwise non-adjacent terminals")


# --- multi-demand to unit-demand ----------------------------------------------

def multi_demand_reduce(inst: Instance, size_cap: int = DEFAULT_EXPANSION_CAP) -> ReductionOutput:
    """Expand each node into a zero-slack clique of demand-many unit copies.

    Copies inherit the node's valuation; every original edge becomes the
    complete bipartite connection between the two cliques carrying the
    original directed slacks.  Zero slack inside a clique forces all priced
    copies to one common price, which is why optima transfer exactly.
    """
    total = sum(inst.demand[v] for v in inst.nodes)
    if total > size_cap:
        raise SizeLimitError(
            f"expanded instance would have {total} nodes, exceeding the cap {size_cap}")
    bundle_map: dict[int, tuple[int, ...]] = {}
    nid = 0
    for v in inst.nodes:
        bundle_map[v] = tuple(range(nid, nid + inst.demand[v]))
        nid += inst.demand[v]
    val = {}
    edges = []
    for v in inst.nodes:
        for c in bundle_map[v]:
            val[c] = inst.val[v]
        for a, b in combinations(bundle_map[v], 2):
            edges.append((a, b, 0, 0))
    for u, v in inst.edges:
        auv, avu = inst.alpha[(u, v)], inst.alpha[(v, u)]
        for cu in bundle_map[u]:
            for cv in bundle_map[v]:
                edges.append((cu, cv, auv, avu))
    reduced = Instance.build(inst.prices, val, edges)
    params = {"source_nodes": inst.n, "total_copies": total}
    return ReductionOutput(reduced, None, bundle_map, params)


def lift_solution(original: Instance, reduced: ReductionOutput,
                  pv_prime: PriceVector) -> PriceVector:
    """Collapse a feasible vector of the expanded instance back to the source.

    Each original node takes the maximum non-null price among its copies (null
    if every copy was skipped).  Never loses revenue: zero slack inside a
    clique means all priced copies already share that price.
    """
    if not is_feasible(reduced.instance, pv_prime):
        raise ValidationError("price vector is infeasible for the expanded instance")
    assignment: dict[int, int | None] = {}
    for v in original.nodes:
        copies = reduced.bundle_map.get(v)
        _require(copies is not None, f"bundle map does not cover node {v}")
        priced = [pv_prime.assignment[c] for c in copies
                  if pv_prime.assignment[c] is not None]
        assignment[v] = max(priced) if priced else None
    pv = PriceVector(assignment)
    if not is_feasible(original, pv):
        raise PricingError("lifted vector is infeasible; expansion data is inconsistent")
    if revenue(original, pv) < revenue(reduced.instance, pv_prime):
        raise PricingError("lifted vector lost revenue; expansion data is inconsistent")
    return pv


# --- terminal node cuts to pricing ----------------------------------------------

def _icbrt(x: int) -> int:
    c = round(x ** (1 / 3))
    while c ** 3 > x:
        c -= 1
    while (c + 1) ** 3 <= x:
        c += 1
    return c


def _ipow_floor(base: int, exponent: Fraction) -> int:
    """floor(base ** exponent) for a rational exponent, exactly."""
    if exponent <= 0:
        return 1 if exponent == 0 else 0
    num, den = exponent.numerator, exponent.denominator
    power = base ** num
    lo = int(round(power ** (1 / den)))
    while lo ** den > power:
        lo -= 1
    while (lo + 1) ** den <= power:
        lo += 1
    return lo


def tnc_to_pricing(tg: TerminalGraph, alpha_value: int | None = None,
                   scale_epsilon: Fraction | None = None,
                   size_cap: int = DEFAULT_EXPANSION_CAP,
                   price_cap: int = DEFAULT_PRICE_CAP) -> ReductionOutput:
    """Pricing instance whose revenue threshold encodes a size-q separator.

    Each terminal becomes a bundle of n^3 vertices copying its adjacency.
    With k = n^3 + n^2 prices, non-terminals are valued k and the i-th bundle
    n^3 + (i-1)n^2/2; every slack is ``alpha_value`` (default, and maximum
    allowed, floor(k^(1/3)/3)).  A graph with an odd node count is padded
    with one isolated non-terminal so the bundle valuations stay integral.
    The threshold equals (n-3-q)n^3 plus the bundles priced at value.

    ``scale_epsilon`` switches to the variant tolerating slacks up to
    k^(1-epsilon): bundle size, prices, and valuations are multiplied by
    n^(ceil(4/epsilon)+1).  Scaled outputs are construct-only.
    """
    _require(tg.q is not None, "a node-cut budget q is required")
    q = tg.q
    nodes = list(tg.nodes)
    edges = list(tg.edges)
    padded_node = None
    if len(nodes) % 2 == 1:
        padded_node = max(nodes) + 1
        nodes.append(padded_node)
    n = len(nodes)

    mult = 1
    if scale_epsilon is not None:
        _require(scale_epsilon > 0, "scale epsilon must be positive")
        mult = n ** (ceil(Fraction(4) / scale_epsilon) + 1)
    bundle_size = mult * n ** 3
    k = mult * (n ** 3 + n ** 2)
    half_sq = n * n // 2  # n is even
    bundle_vals = [mult * (n ** 3 + (i - 1) * half_sq) for i in (1, 2, 3)]

    if k > price_cap:
        raise SizeLimitError(f"price range {k} exceeds the cap {price_cap}")
    total_nodes = n - 3 + 3 * bundle_size
    if total_nodes > size_cap:
        raise SizeLimitError(
            f"constructed instance would have {total_nodes} nodes, exceeding the cap {size_cap}")

    if scale_epsilon is None:
        alpha_bound = _icbrt(k) // 3
    else:
        alpha_bound = _ipow_floor(k, 1 - scale_epsilon)
    if alpha_value is None:
        alpha_value = alpha_bound
    _require(0 <= alpha_value <= alpha_bound,
             f"alpha must lie in [0, {alpha_bound}], got {alpha_value}")

    terminals = tg.terminals
    others = sorted(set(nodes) - set(terminals))
    bundle_map: dict[int, tuple[int, ...]] = {}
    nid = 0
    for x in others:
        bundle_map[x] = (nid,)
        nid += 1
    for t in terminals:
        bundle_map[t] = tuple(range(nid, nid + bundle_size))
        nid += bundle_size

    val = {}
    for x in others:
        val[bundle_map[x][0]] = k
    for i, t in enumerate(terminals, start=1):
        for c in bundle_map[t]:
            val[c] = bundle_vals[i - 1]

    tset = set(terminals)
    new_edges = []
    for u, v in edges:
        if u in tset and v in tset:  # excluded by the terminal invariant
            raise AssertionError("adjacent terminals")
        for cu in bundle_map[u]:
            for cv in bundle_map[v]:
                new_edges.append((cu, cv, alpha_value, alpha_value))

    instance = Instance.build(tuple(range(1, k + 1)), val, new_edges)
    threshold = (n - 3 - q) * bundle_size + bundle_size * sum(bundle_vals)
    params = {
        "n": n, "k": k, "q": q, "bundle_size": bundle_size,
        "bundle_vals": tuple(bundle_vals), "alpha": alpha_value,
        "padded_node": padded_node, "terminals": terminals,
        "scale_epsilon": scale_epsilon, "scale_multiplier": mult,
    }
    return ReductionOutput(instance, threshold, bundle_map, params)


def separator_to_prices(tg: TerminalGraph, cut, red: ReductionOutput) -> PriceVector:
    """Price vector earning at least the threshold from a separating node set.

    Cut vertices are skipped; every surviving vertex in the component of
    terminal i is priced at that bundle's valuation, everything else at the
    top price.  Prices are constant inside components and constraints across
    the cut are void, so feasibility holds for any slack choice.
    """
    cut = set(cut)
    terminals = red.params["terminals"]
    _require(not cut & set(terminals), "the cut may not contain terminals")
    _require(cut <= set(tg.nodes), "the cut references unknown nodes")
    _require(len(cut) <= red.params["q"],
             f"cut size {len(cut)} exceeds the budget q = {red.params['q']}")

    nodes = list(tg.nodes)
    padded = red.params["padded_node"]
    if padded is not None:
        nodes.append(padded)
    adj = _adjacency(nodes, tg.edges)
    labels = _component_labels(nodes, adj, cut)
    tlabels = [labels[t] for t in terminals]
    if len(set(tlabels)) != 3:
        raise ValidationError("the given set does not separate the terminals")

    k = red.params["k"]
    bundle_vals = red.params["bundle_vals"]
    assignment: dict[int, int | None] = {}
    for i, t in enumerate(terminals):
        for c in red.bundle_map[t]:
            assignment[c] = bundle_vals[i]
    for x in nodes:
        if x in set(terminals):
            continue
        image = red.bundle_map[x][0]
        if x in cut:
            assignment[image] = None
        elif labels[x] in tlabels:
            assignment[image] = bundle_vals[tlabels.index(labels[x])]
        else:
            assignment[image] = k
    return PriceVector(assignment)


# --- terminal edge cuts to terminal node cuts ------------------------------------

def tc_to_tnc(tg: TerminalGraph) -> NodeCutReduction:
    """Subdivide every edge and blow every vertex up into a degree-sized bundle.

    Each edge (u, w) gains a middle vertex; each original vertex v becomes
    deg(v)+1 copies adjacent to the middle vertices of its incident edges.
    The new terminals are the lowest-id copy in each terminal's bundle.  Edge
    cuts of the source and node cuts of the target translate both ways
    without growing.
    """
    deg = {v: 0 for v in tg.nodes}
    for u, w in tg.edges:
        deg[u] += 1
        deg[w] += 1
    bundle_map: dict[int, tuple[int, ...]] = {}
    nid = 0
    for v in sorted(tg.nodes):
        bundle_map[v] = tuple(range(nid, nid + deg[v] + 1))
        nid += deg[v] + 1
    subdivision_map: dict[int, tuple[int, int]] = {}
    h_edges = []
    for e in sorted(tg.edges):
        mid = nid
        nid += 1
        subdivision_map[mid] = e
        for endpoint in e:
            for c in bundle_map[endpoint]:
                h_edges.append((c, mid))
    new_terminals = tuple(bundle_map[t][0] for t in tg.terminals)
    target = TerminalGraph.build(range(nid), h_edges, new_terminals, tg.q)
    return NodeCutReduction(tg, target, bundle_map, subdivision_map)


def tnc_solution_transform(red: NodeCutReduction, y) -> frozenset[tuple[int, int]]:
    """Turn a separating node cut of the target into an edge cut of the source.

    First every fully contained bundle is swapped for its (at most deg-many)
    middle-vertex neighbors, then leftover stray bundle vertices are dropped;
    both loops preserve separation and never grow the cut.  What remains are
    middle vertices only, i.e. an edge set, verified to be no larger than the
    input and to separate the source terminals.
    """
    y = set(y)
    h = red.target
    _require(y <= set(h.nodes), "cut references unknown target nodes")
    _require(not y & set(h.terminals), "cut may not contain a terminal")
    if not separates_terminals(h, y):
        raise ValidationError("the given set does not separate the target terminals")

    adj = _adjacency(h.nodes, h.edges)
    current = set(y)
    # swap whole bundles for their middle-vertex neighborhoods
    changed = True
    while changed:
        changed = False
        for v in sorted(red.bundle_map):
            bundle = red.bundle_map[v]
            if all(c in current for c in bundle):
                current.difference_update(bundle)
                current.update(adj[bundle[0]])
                changed = True
    # drop stray bundle vertices; only middle vertices disconnect anything now
    bundle_vertices = {c for b in red.bundle_map.values() for c in b}
    current -= bundle_vertices

    cut_edges = frozenset(red.subdivision_map[c] for c in current)
    if len(cut_edges) > len(y):
        raise PricingError("transformed cut grew; construction data is inconsistent")
    if not edge_cut_separates(red.source, cut_edges):
        raise PricingError("transformed cut fails to separate the source terminals")
    return cut_edges


# --- approximation-preserving construction ---------------------------------------

def apx_construct(tg: TerminalGraph, r, size_cap: int = DEFAULT_EXPANSION_CAP) -> ReductionOutput:
    """Zero-slack pricing instance whose near-optima encode small separators.

    For target factor r > 1: epsilon = min(1/2, r - 1) and t = ceil(42/epsilon)
    fix the price range 1..t; each terminal becomes a bundle of 4tn vertices
    valued t+i-3 while non-terminals are valued t.  All slacks are zero.  A
    c(r) = 1 - 1/(20 t^2) fraction of the optimum forces, after
    canonicalization, a separator within factor r.
    """
    r = Fraction(r)
    _require(r > 1, f"approximation target must exceed 1, got {r}")
    eps = min(Fraction(1, 2), r - 1)
    t = ceil(Fraction(42) / eps)
    n = len(tg.nodes)
    bundle_size = 4 * t * n
    total = n - 3 + 3 * bundle_size
    if total > size_cap:
        raise SizeLimitError(
            f"constructed instance would have {total} nodes, exceeding the cap {size_cap}")

    terminals = tg.terminals
    others = sorted(set(tg.nodes) - set(terminals))
    bundle_map: dict[int, tuple[int, ...]] = {}
    nid = 0
    for x in others:
        bundle_map[x] = (nid,)
        nid += 1
    for term in terminals:
        bundle_map[term] = tuple(range(nid, nid + bundle_size))
        nid += bundle_size

    val = {bundle_map[x][0]: t for x in others}
    for i, term in enumerate(terminals, start=1):
        for c in bundle_map[term]:
            val[c] = t + i - 3
    new_edges = []
    for u, v in tg.edges:
        for cu in bundle_map[u]:
            for cv in bundle_map[v]:
                new_edges.append((cu, cv, 0, 0))

    instance = Instance.build(tuple(range(1, t + 1)), val, new_edges)
    params = {
        "epsilon": eps, "t": t, "c_r": 1 - Fraction(1, 20 * t * t),
        "bundle_size": bundle_size, "n": n, "terminals": terminals,
        "bundle_vals": tuple(t + i - 3 for i in (1, 2, 3)),
    }
    return ReductionOutput(instance, None, bundle_map, params)


def apx_separator_vector(tg: TerminalGraph, cut, red: ReductionOutput) -> PriceVector:
    """Canonical feasible vector induced by a separating node set.

    Mirrors ``separator_to_prices`` for the zero-slack construction: cut
    vertices are skipped, each surviving vertex takes the bundle valuation of
    the terminal sharing its component (the top price when there is none).
    Already canonical, so extraction returns exactly ``cut``.
    """
    cut = set(cut)
    terminals = red.params["terminals"]
    _require(not cut & set(terminals), "the cut may not contain terminals")
    _require(cut <= set(tg.nodes), "the cut references unknown nodes")
    adj = _adjacency(tg.nodes, tg.edges)
    labels = _component_labels(tg.nodes, adj, cut)
    tlabels = [labels[t] for t in terminals]
    if len(set(tlabels)) != 3:
        raise ValidationError("the given set does not separate the terminals")
    t = red.params["t"]
    bundle_vals = red.params["bundle_vals"]
    assignment: dict[int, int | None] = {}
    for i, term in enumerate(terminals):
        for c in red.bundle_map[term]:
            assignment[c] = bundle_vals[i]
    for x in tg.nodes:
        if x in set(terminals):
            continue
        image = red.bundle_map[x][0]
        if x in cut:
            assignment[image] = None
        elif labels[x] in tlabels:
            assignment[image] = bundle_vals[tlabels.index(labels[x])]
        else:
            assignment[image] = t
    return PriceVector(assignment)


def apx_extract(red: ReductionOutput, pv: PriceVector) -> frozenset[int]:
    """Canonicalize a feasible vector and read off the encoded separator.

    Pass 1 reprices any fully skipped bundle at its own valuation and skips
    its neighbors.  Pass 2 repeats while two bundles share a component of the
    graph minus skipped vertices, taking offending index pairs (i, j)
    ascending: if every vertex of bundle i is skipped or priced above the
    bundle's valuation, bundle i is repriced at value and its neighbors
    skipped, otherwise bundle j is.  Each pass isolates a bundle, so the loop
    ends within the iteration cap.  Returns the non-terminal source vertices
    whose images end up skipped, after verifying they leave every bundle in
    its own residual component.
    """
    inst = red.instance
    if not is_feasible(inst, pv):
        raise ValidationError("price vector is infeasible for the constructed instance")
    terminals = red.params["terminals"]
    bundles = [red.bundle_map[t] for t in terminals]
    bundle_vals = red.params["bundle_vals"]
    adj = _adjacency(inst.nodes, inst.edges)
    assignment = dict(pv.assignment)

    def reprice(i: int) -> None:
        for c in bundles[i]:
            assignment[c] = bundle_vals[i]
        neighbors = set(adj[bundles[i][0]]) - set(bundles[i])
        for x in neighbors:
            assignment[x] = None

    cap = len(inst.nodes)
    for _ in range(cap):
        fully_skipped = [i for i in range(3)
                         if all(assignment[c] is None for c in bundles[i])]
        if not fully_skipped:
            break
        reprice(fully_skipped[0])
    else:
        raise PricingError("canonicalization failed to terminate")

    def offending_pairs():
        removed = {x for x, p in assignment.items() if p is None}
        labels = _component_labels(inst.nodes, adj, removed)
        comp_sets = [{labels[c] for c in bundles[i] if c not in removed}
                     for i in range(3)]
        return [(i, j) for i in range(3) for j in range(i + 1, 3)
                if comp_sets[i] & comp_sets[j]]

    for _ in range(cap):
        pairs = offending_pairs()
        if not pairs:
            break
        i, j = pairs[0]
        low_limit = bundle_vals[i]
        if all(assignment[c] is None or assignment[c] > low_limit
               for c in bundles[i]):
            reprice(i)
        else:
            reprice(j)
    else:
        raise PricingError("canonicalization failed to terminate")

    if offending_pairs():
        raise PricingError("canonical vector leaves two bundles connected")
    terminal_set = set(terminals)
    separator = frozenset(
        x for x in red.bundle_map
        if x not in terminal_set and assignment[red.bundle_map[x][0]] is None)
    return separator


# --- terminal-graph file format and sidecar ---------------------------------------
#
# Terminal graph (JSON): { "nodes": [int, ...],
#                          "edges": [ {"u": int, "v": int}, ... ],
#                          "terminals": [a, b, c], "q": int (optional) }

def parse_terminal_graph(text: str) -> TerminalGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    _require(isinstance(doc, dict), "terminal-graph document must be an object", ParseError)
    for key in ("nodes", "edges", "terminals"):
        _require(key in doc, f"terminal-graph document is missing {key!r}", ParseError)
    try:
        return TerminalGraph.build(doc["nodes"],
                                   [(e["u"], e["v"]) for e in doc["edges"]],
                                   doc["terminals"], doc.get("q"))
    except (ValidationError, KeyError, TypeError) as e:
        raise ParseError(f"malformed terminal graph: {e}") from e


def serialize_terminal_graph(tg: TerminalGraph) -> str:
    doc = {"nodes": list(tg.nodes),
           "edges": [{"u": u, "v": v} for u, v in tg.edges],
           "terminals": list(tg.terminals)}
    if tg.q is not None:
        doc["q"] = tg.q
    return json.dumps(doc, indent=2)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (tuple, list)):
        return [_jsonable(e) for e in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def serialize_sidecar(red: ReductionOutput) -> str:
    """Certificate sidecar: threshold, construction constants, bundle map."""
    doc = {
        "threshold": red.threshold,
        "params": _jsonable(red.params),
        "bundle_map": {str(k): list(red.bundle_map[k]) for k in sorted(red.bundle_map)},
    }
    return json.dumps(doc, indent=2)

"""Problem model: graph pricing under neighbor price-difference caps.

An instance is a simple undirected graph whose nodes carry a positive integer
valuation and a demand (number of copies wanted, default 1), together with a
finite strictly increasing set of admissible integer prices.  Each edge carries
two directed slacks: a price assignment must keep ``p_u - p_v <= alpha(u, v)``
for both orientations of every edge whose endpoints are both priced.  A node
may instead be skipped (assigned ``None``, printed as the null price), which
earns nothing and silences every constraint on its incident edges.

A priced node earns ``demand(v) * p`` when ``p <= val(v)`` and nothing when
priced above its valuation.  All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional


class PricingError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(PricingError, ValueError):
    """Malformed instance, price set, or price vector."""


class ParseError(ValidationError):
    """Malformed instance or price-vector document."""


class EmptyInstanceError(ValidationError):
    """Normalization removed every node."""


class SizeLimitError(PricingError):
    """Input exceeds a configured size guard (exhaustive search, expansions)."""


def _require(cond: bool, msg: str, exc=ValidationError) -> None:
    if not cond:
        raise exc(msg)


def validate_prices(prices: Iterable[int]) -> tuple[int, ...]:
    """Check a price set: nonempty positive integers, strictly increasing."""
    ps = tuple(prices)
    _require(len(ps) > 0, "price set must be nonempty")
    for p in ps:
        _require(isinstance(p, int) and not isinstance(p, bool) and p > 0,
                 f"prices must be positive integers, got {p!r}")
    for a, b in zip(ps, ps[1:]):
        _require(a < b, f"prices must be strictly increasing, got {a} before {b}")
    return ps


@dataclass(frozen=True)
class Instance:
    """Immutable pricing instance.

    ``edges`` holds each undirected edge once as ``(u, v)`` with ``u < v``;
    ``alpha`` holds both orientations of every edge.  Node ids are arbitrary
    distinct nonnegative integers (freshly built instances use ``0..n-1``;
    normalization may leave gaps).
    """

    prices: tuple[int, ...]
    nodes: tuple[int, ...]
    val: dict[int, int]
    demand: dict[int, int]
    edges: tuple[tuple[int, int], ...]
    alpha: dict[tuple[int, int], int]

    def __post_init__(self):
        validate_prices(self.prices)
        _require(self.nodes == tuple(sorted(set(self.nodes))),
                 "node ids must be sorted and distinct")
        for v in self.nodes:
            _require(isinstance(v, int) and v >= 0, f"node id must be a nonnegative int, got {v!r}")
        nodeset = set(self.nodes)
        _require(set(self.val) == nodeset, "val must be defined exactly on the node set")
        _require(set(self.demand) == nodeset, "demand must be defined exactly on the node set")
        for v in self.nodes:
            _require(self.val[v] > 0, f"val({v}) must be positive")
            _require(self.demand[v] >= 1, f"demand({v}) must be at least 1")
        seen = set()
        for e in self.edges:
            u, v = e
            _require(u in nodeset and v in nodeset, f"edge {e} references an unknown node")
            _require(u < v, f"edge {e} must be stored as (min, max)")
            _require(e not in seen, f"duplicate edge {e}")
            seen.add(e)
        expected_keys = {(u, v) for u, v in self.edges} | {(v, u) for u, v in self.edges}
        _require(set(self.alpha) == expected_keys,
                 "alpha must be defined for both orientations of every edge and nothing else")
        for k, a in self.alpha.items():
            _require(isinstance(a, int) and a >= 0, f"alpha{k} must be a nonnegative integer")

    @classmethod
    def build(cls, prices, val, edges=(), demand=None) -> "Instance":
        """Construct from a val map and ``(u, v, alpha_uv, alpha_vu)`` tuples."""
        val = dict(val)
        nodes = tuple(sorted(val))
        demand = {v: 1 for v in nodes} if demand is None else dict(demand)
        edge_list = []
        alpha = {}
        for u, v, auv, avu in edges:
            edge_list.append((min(u, v), max(u, v)))
            alpha[(u, v)] = auv
            alpha[(v, u)] = avu
        return cls(prices=validate_prices(prices), nodes=nodes, val=val,
                   demand=demand, edges=tuple(sorted(edge_list)), alpha=alpha)

    @property
    def n(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class PriceVector:
    """Total assignment of every node to a price or ``None`` (no offer)."""

    assignment: dict[int, Optional[int]]


@dataclass(frozen=True)
class Solution:
    """A price vector with its total revenue and the producing algorithm's tag."""

    pv: PriceVector
    revenue: int
    tag: str


def adjacency(inst: Instance) -> dict[int, list[int]]:
    """Neighbor lists, sorted ascending."""
    adj: dict[int, list[int]] = {v: [] for v in inst.nodes}
    for u, v in inst.edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    return adj


def _check_vector(inst: Instance, pv: PriceVector) -> None:
    prices = set(inst.prices)
    for v in inst.nodes:
        _require(v in pv.assignment, f"price vector is missing node {v}")
        p = pv.assignment[v]
        _require(p is None or p in prices,
                 f"price {p!r} assigned to node {v} is neither null nor in the price set")
    _require(set(pv.assignment) == set(inst.nodes),
             "price vector assigns nodes that are not in the instance")


def find_violation(inst: Instance, pv: PriceVector):
    """First violated directed edge constraint, or ``None`` if feasible.

    Edges are scanned in sorted order, orientation (u, v) before (v, u);
    the result is ``(u, v, p_u, p_v, alpha_uv)`` with ``p_u - p_v > alpha_uv``.
    """
    _check_vector(inst, pv)
    a = pv.assignment
    for u, v in inst.edges:
        pu, pw = a[u], a[v]
        if pu is None or pw is None:
            continue
        if pu - pw > inst.alpha[(u, v)]:
            return (u, v, pu, pw, inst.alpha[(u, v)])
        if pw - pu > inst.alpha[(v, u)]:
            return (v, u, pw, pu, inst.alpha[(v, u)])
    return None


def is_feasible(inst: Instance, pv: PriceVector) -> bool:
    """True iff every edge with two priced endpoints satisfies both slack caps."""
    return find_violation(inst, pv) is None


def revenue(inst: Instance, pv: PriceVector) -> int:
    """Total revenue: ``demand(v) * p_v`` for nodes priced at most their value.

    Does not re-check feasibility; callers own that obligation.
    """
    _check_vector(inst, pv)
    total = 0
    for v in inst.nodes:
        p = pv.assignment[v]
        if p is not None and p <= inst.val[v]:
            total += inst.demand[v] * p
    return total


def max_bound(inst: Instance) -> int:
    """Sum of demand-weighted valuations; trivial upper bound on any revenue."""
    return sum(inst.demand[v] * inst.val[v] for v in inst.nodes)


def normalize(inst: Instance) -> Instance:
    """Snap valuations into the price set and drop nodes that can never pay.

    Valuations become the largest price not exceeding them (in particular,
    anything above the top price becomes the top price).  Nodes valued below
    the minimum price are removed with their incident edges: the only price
    they could ever take is null.  Removed ids are recoverable as
    ``set(inst.nodes) - set(result.nodes)``.  Idempotent.
    """
    p1 = inst.prices[0]
    kept_val = {}
    for v in inst.nodes:
        if inst.val[v] < p1:
            continue
        i = bisect_right(inst.prices, inst.val[v])
        kept_val[v] = inst.prices[i - 1]
    if not kept_val:
        raise EmptyInstanceError(
            "normalization removed every node (all valuations below the minimum price)")
    kept = set(kept_val)
    edges = tuple(e for e in inst.edges if e[0] in kept and e[1] in kept)
    alpha = {k: a for k, a in inst.alpha.items() if k[0] in kept and k[1] in kept}
    demand = {v: inst.demand[v] for v in kept_val}
    return Instance(prices=inst.prices, nodes=tuple(sorted(kept)),
                    val=kept_val, demand=demand, edges=edges, alpha=alpha)


# --- instance / price-vector file formats -------------------------------------
#
# Instance (JSON, UTF-8):
#   { "prices": [p1, p2, ...],
#     "nodes":  [ {"id": int, "val": int, "demand": int (optional, default 1)}, ... ],
#     "edges":  [ {"u": int, "v": int, "alpha_uv": int, "alpha_vu": int}, ... ] }
# Price vector (JSON): { "assignment": { "<id>": int-or-null, ... } }
#
# Serialization is canonical (sorted nodes and edges, u < v, demand omitted
# when 1) so that serialize(parse(s)) == s for serializer-produced documents.

def _read_int(obj, key, what):
    _require(isinstance(obj, dict), f"{what} must be an object", ParseError)
    _require(key in obj, f"{what} is missing required field {key!r}", ParseError)
    x = obj[key]
    _require(isinstance(x, int) and not isinstance(x, bool),
             f"{what} field {key!r} must be an integer, got {x!r}", ParseError)
    return x


def parse_instance(text: str) -> Instance:
    """Parse the JSON instance format, with descriptive errors."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    _require(isinstance(doc, dict), "instance document must be a JSON object", ParseError)
    for key in ("prices", "nodes"):
        _require(key in doc, f"instance document is missing {key!r}", ParseError)
    raw_prices = doc["prices"]
    _require(isinstance(raw_prices, list), "'prices' must be a list", ParseError)

    val, demand = {}, {}
    _require(isinstance(doc["nodes"], list), "'nodes' must be a list", ParseError)
    for nd in doc["nodes"]:
        i = _read_int(nd, "id", "node")
        _require(i not in val, f"duplicate node id {i}", ParseError)
        val[i] = _read_int(nd, "val", f"node {i}")
        if "demand" in nd:
            demand[i] = _read_int(nd, "demand", f"node {i}")
        else:
            demand[i] = 1

    edges = []
    raw_edges = doc.get("edges", [])
    _require(isinstance(raw_edges, list), "'edges' must be a list", ParseError)
    seen = set()
    for ed in raw_edges:
        u = _read_int(ed, "u", "edge")
        v = _read_int(ed, "v", "edge")
        _require(u != v, f"self-loop on node {u}", ParseError)
        _require(u in val and v in val,
                 f"edge ({u}, {v}) references an unknown node id", ParseError)
        key = (min(u, v), max(u, v))
        _require(key not in seen, f"duplicate edge ({u}, {v})", ParseError)
        seen.add(key)
        auv = _read_int(ed, "alpha_uv", f"edge ({u}, {v})")
        avu = _read_int(ed, "alpha_vu", f"edge ({u}, {v})")
        _require(auv >= 0 and avu >= 0, f"negative alpha on edge ({u}, {v})", ParseError)
        edges.append((u, v, auv, avu))

    try:
        return Instance.build(raw_prices, val, edges, demand)
    except ValidationError as e:
        raise ParseError(str(e)) from e


def serialize_instance(inst: Instance) -> str:
    """Canonical JSON text for an instance (bit-exact round trip)."""
    nodes = []
    for v in inst.nodes:
        nd = {"id": v, "val": inst.val[v]}
        if inst.demand[v] != 1:
            nd["demand"] = inst.demand[v]
        nodes.append(nd)
    edges = [{"u": u, "v": v,
              "alpha_uv": inst.alpha[(u, v)], "alpha_vu": inst.alpha[(v, u)]}
             for u, v in inst.edges]
    doc = {"prices": list(inst.prices), "nodes": nodes, "edges": edges}
    return json.dumps(doc, indent=2)


def parse_price_vector(text: str) -> PriceVector:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    _require(isinstance(doc, dict) and "assignment" in doc,
             "price-vector document must be an object with an 'assignment' field", ParseError)
    _require(isinstance(doc["assignment"], dict), "'assignment' must be an object", ParseError)
    assignment = {}
    for key, p in doc["assignment"].items():
        try:
            v = int(key)
        except ValueError:
            raise ParseError(f"node id {key!r} is not an integer") from None
        _require(p is None or (isinstance(p, int) and not isinstance(p, bool)),
                 f"price for node {v} must be an integer or null, got {p!r}", ParseError)
        assignment[v] = p
    return PriceVector(assignment)


def serialize_price_vector(pv: PriceVector) -> str:
    doc = {"assignment": {str(v): pv.assignment[v] for v in sorted(pv.assignment)}}
    return json.dumps(doc, indent=2)

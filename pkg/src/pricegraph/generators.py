"""Worst-case instance families and seeded random instances.

Random generation uses the Mersenne Twister (``random.Random(seed)``) with a
fixed draw order, so a seed identifies one instance on every platform: node
pairs are visited in lexicographic order, each present edge draws its two
slacks immediately (forward then backward via ``randint``), and valuations
are drawn last for nodes 0..n-1 via ``randrange`` over the price list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial

from .instance import Instance, ValidationError, validate_prices

FAMILIES = ("fig1", "clique_harmonic", "clique_pk", "nd_pinch", "random")


@dataclass(frozen=True)
class GeneratorSpec:
    """A family name with its parameters; ``seed`` only drives ``random``."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None


def gen_fig1(copies: int, chain: bool = False) -> Instance:
    """Disjoint copies of the tight 4-node two-price gadget.

    Each copy has values (2, 2, 1, 1) and two zero-slack edges from the second
    value-2 node to both value-1 nodes; the exhaustive optimum is 5 per copy
    while both the cover and the single-price solutions earn 4.  ``chain``
    adds slack-1 edges (which never bind with prices {1, 2}) inside each copy
    and between consecutive copies for a connected variant.
    """
    if copies < 1:
        raise ValidationError("copies must be at least 1")
    val = {}
    edges = []
    for c in range(copies):
        base = 4 * c
        val[base] = val[base + 1] = 2
        val[base + 2] = val[base + 3] = 1
        edges.append((base + 1, base + 2, 0, 0))
        edges.append((base + 1, base + 3, 0, 0))
        if chain:
            edges.append((base, base + 1, 1, 1))
            if c > 0:
                edges.append((base - 1, base, 1, 1))
    return Instance.build((1, 2), val, edges)


def gen_clique_harmonic(n: int) -> Instance:
    """Clique with valuations n!/1, n!/2, ..., n!/n and slack n! everywhere.

    Every assignment of valuations is feasible, so the optimum equals the sum
    of valuations (n! * H_n) while every single price earns exactly n!.
    """
    if not 2 <= n <= 8:
        raise ValidationError(f"n must be in 2..8, got {n}")
    f = factorial(n)
    val = {i: f // (i + 1) for i in range(n)}
    edges = [(u, v, f, f) for u in range(n) for v in range(u + 1, n)]
    prices = tuple(sorted(set(val.values())))
    return Instance.build(prices, val, edges)


def gen_clique_pk(k: int) -> Instance:
    """Clique on k! nodes over prices 1..k where every single price earns k!.

    Value i appears k!/(i(i+1)) times for i < k and k!/k times for i = k; all
    slacks are k, so pricing everyone at value is feasible and the sum of
    valuations is k! * H_k.
    """
    if not 2 <= k <= 6:
        raise ValidationError(f"k must be in 2..6, got {k}")
    n = factorial(k)
    counts = [n // (i * (i + 1)) for i in range(1, k)] + [n // k]
    assert sum(counts) == n
    val = {}
    nid = 0
    for i, c in enumerate(counts, start=1):
        for _ in range(c):
            val[nid] = i
            nid += 1
    edges = [(u, v, k, k) for u in range(n) for v in range(u + 1, n)]
    return Instance.build(tuple(range(1, k + 1)), val, edges)


def gen_nd_pinch(inst: Instance) -> Instance:
    """Attach one value-1 node to every node with zero slack both ways.

    Any solution without a skipped node must then use one common price, so
    the pinch forces the no-skip optimum down to the single-price optimum.
    Adds 1 to the price set when absent.
    """
    new = max(inst.nodes) + 1 if inst.nodes else 0
    prices = tuple(sorted(set(inst.prices) | {1}))
    val = dict(inst.val)
    val[new] = 1
    demand = dict(inst.demand)
    demand[new] = 1
    edges = [(u, v, inst.alpha[(u, v)], inst.alpha[(v, u)]) for u, v in inst.edges]
    edges += [(u, new, 0, 0) for u in inst.nodes]
    return Instance.build(prices, val, edges, demand)


def gen_random(n: int, prices, edge_prob: float, alpha_max: int,
               seed: int) -> Instance:
    """Erdos-Renyi style instance; deterministic per seed (see module docs)."""
    ps = validate_prices(prices)
    if n < 1:
        raise ValidationError("n must be at least 1")
    if not 0 <= edge_prob <= 1:
        raise ValidationError("edge_prob must lie in [0, 1]")
    if alpha_max < 0:
        raise ValidationError("alpha_max must be nonnegative")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                auv = rng.randint(0, alpha_max)
                avu = rng.randint(0, alpha_max)
                edges.append((u, v, auv, avu))
    val = {v: ps[rng.randrange(len(ps))] for v in range(n)}
    return Instance.build(ps, val, edges)


def generate(spec: GeneratorSpec) -> Instance:
    """Dispatch a GeneratorSpec to its family."""
    if spec.family == "fig1":
        return gen_fig1(**spec.params)
    if spec.family == "clique_harmonic":
        return gen_clique_harmonic(**spec.params)
    if spec.family == "clique_pk":
        return gen_clique_pk(**spec.params)
    if spec.family == "nd_pinch":
        return gen_nd_pinch(**spec.params)
    if spec.family == "random":
        return gen_random(seed=spec.seed, **spec.params)
    raise ValidationError(f"unknown family {spec.family!r}")

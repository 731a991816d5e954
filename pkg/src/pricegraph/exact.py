"""Exact reference solvers and rational bound calculators.

``brute_force_opt`` is the testing oracle: exhaustive search over all price
vectors, guarded by a node limit.  Exact rationals are ``fractions.Fraction``
(always lowest terms, positive denominator); no bound ever passes through
floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .instance import (
    Instance, PriceVector, Solution, SizeLimitError, ValidationError,
    validate_prices,
)

DEFAULT_NODE_LIMIT = 12


def harmonic(r: int) -> Fraction:
    """r-th harmonic number, exact."""
    if r < 1:
        raise ValidationError(f"harmonic number needs r >= 1, got {r}")
    return sum(Fraction(1, i) for i in range(1, r + 1))


def price_sum_pk(prices) -> Fraction:
    """Sum of (p_i - p_{i-1}) / p_i over the price set, with p_0 = 0.

    Generalizes the harmonic number: for prices 1..k this equals H_k.
    """
    ps = validate_prices(prices)
    total = Fraction(0)
    prev = 0
    for p in ps:
        total += Fraction(p - prev, p)
        prev = p
    return total


def single_price_best(inst: Instance) -> Solution:
    """Best solution that offers one common price to every node.

    Only prices occurring as valuations can be optimal, so exactly those are
    tried; ties break toward the smallest price.  Always feasible (alpha >= 0).
    """
    best_p = None
    best_rev = -1
    for p in sorted(set(inst.val.values())):
        rev = p * sum(inst.demand[v] for v in inst.nodes if inst.val[v] >= p)
        if rev > best_rev:
            best_p, best_rev = p, rev
    if best_p is None:
        return Solution(PriceVector({}), 0, "single-price")
    pv = PriceVector({v: best_p for v in inst.nodes})
    return Solution(pv, best_rev, "single-price")


def brute_force_opt(inst: Instance, node_limit: int = DEFAULT_NODE_LIMIT) -> Solution:
    """Optimal solution by exhaustive search over (prices + null)^n.

    Refuses instances with more than ``node_limit`` nodes.  Partial
    assignments violating an edge constraint are pruned, as are branches that
    cannot strictly beat the incumbent.  Nodes are filled in ascending id
    order trying prices ascending and null last, so the returned optimum is
    the lexicographically smallest one (null ordered after all prices).
    """
    n = inst.n
    if n > node_limit:
        raise SizeLimitError(
            f"instance has {n} nodes, exceeding the exhaustive-search limit {node_limit}")
    nodes = inst.nodes
    idx = {v: i for i, v in enumerate(nodes)}
    prices = inst.prices

    # per node: neighbors with smaller index, with both directed slacks
    back = [[] for _ in range(n)]
    for u, v in inst.edges:
        i, j = idx[u], idx[v]
        if i < j:
            back[j].append((i, inst.alpha[(v, u)], inst.alpha[(u, v)]))
        else:
            back[i].append((j, inst.alpha[(u, v)], inst.alpha[(v, u)]))
    # gain[i][c] = revenue of assigning candidate c (price index) to node i
    gain = [[inst.demand[v] * p if p <= inst.val[v] else 0 for p in prices]
            for v in nodes]
    remaining = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        remaining[i] = remaining[i + 1] + inst.demand[nodes[i]] * inst.val[nodes[i]]

    assigned: list[int | None] = [None] * n
    best_rev = -1
    best: list[int | None] = []

    def search(i: int, acc: int) -> None:
        nonlocal best_rev, best
        if i == n:
            if acc > best_rev:
                best_rev = acc
                best = assigned.copy()
            return
        if acc + remaining[i] <= best_rev:
            return
        for c, p in enumerate(prices):
            ok = True
            for j, a_fwd, a_bwd in back[i]:
                q = assigned[j]
                if q is not None and (p - q > a_fwd or q - p > a_bwd):
                    ok = False
                    break
            if ok:
                assigned[i] = p
                search(i + 1, acc + gain[i][c])
        assigned[i] = None
        search(i + 1, acc)

    search(0, 0)
    pv = PriceVector({nodes[i]: best[i] for i in range(n)} if n else {})
    return Solution(pv, max(best_rev, 0), "brute-force")

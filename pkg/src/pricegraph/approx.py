"""Approximation algorithms with provable revenue guarantees.

Two-price instances: skip a minimum vertex cover of the binding bipartite
subgraph, price everyone else at value, and keep that or the best single price,
whichever earns more.  The proven worst-case ratio is

    rho = p2^2 / (2*p2^2 - p1*p2 - (p2 - p1) * min(p1, p2 - p1 - a))

with ``a`` the largest reverse slack over binding edges (0.8 for prices
{1, 2}).  With k prices, clamping valuations at the second-smallest price
reduces to the two-price case; the guarantee becomes 1 / (P_k - x) where
x = P_2 - 1/rho and P_j is the generalized harmonic sum of the price set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipartite import max_matching, min_vertex_cover, restricted_subgraph
from .exact import price_sum_pk, single_price_best
from .instance import (
    Instance, PriceVector, PricingError, Solution, ValidationError,
    is_feasible, revenue, validate_prices,
)


@dataclass(frozen=True)
class RatioReport:
    """Proven worst-case ratio next to the ratio actually achieved on a run."""

    guaranteed: Fraction
    achieved_numerator: int
    achieved_denominator: int


def guaranteed_ratio(prices, alpha_star: int) -> Fraction:
    """Proven worst-case approximation ratio for the given price set.

    ``alpha_star`` is capped at p2 - p1 - 1: binding edges with larger reverse
    slack cannot occur (edges that slack would admit are never binding), so
    larger arguments get the capped ratio.
    """
    ps = validate_prices(prices)
    if len(ps) < 2:
        raise ValidationError("guaranteed ratio needs at least two prices")
    if alpha_star < 0:
        raise ValidationError("alpha_star must be nonnegative")
    p1, p2 = ps[0], ps[1]
    a = min(alpha_star, p2 - p1 - 1)
    m = min(p1, p2 - p1 - a)
    rho2 = Fraction(p2 * p2, 2 * p2 * p2 - p1 * p2 - (p2 - p1) * m)
    if len(ps) == 2:
        return rho2
    x = price_sum_pk(ps[:2]) - 1 / rho2
    return 1 / (price_sum_pk(ps) - x)


def alg_two_prices(inst: Instance) -> Solution:
    """Vertex-cover pricing for a normalized two-price instance.

    Skips a minimum vertex cover S of the binding subgraph and prices every
    remaining node at its valuation, earning MAX - val(S); returns that
    solution or the best single price, whichever earns more (ties go to the
    cover solution).
    """
    bg = restricted_subgraph(inst)
    cover = min_vertex_cover(bg, max_matching(bg))
    p1, p2 = inst.prices
    assignment: dict[int, int | None] = {}
    for v in inst.nodes:
        if v in cover:
            assignment[v] = None
        else:
            assignment[v] = p1 if inst.val[v] == p1 else p2
    pv = PriceVector(assignment)
    if not is_feasible(inst, pv):  # cannot happen: S covers every binding edge
        raise PricingError("cover solution violated an edge constraint")
    r_star = revenue(inst, pv)
    sp = single_price_best(inst)
    if r_star >= sp.revenue:
        return Solution(pv, r_star, "two-price")
    return sp


def alg_general_k(inst: Instance) -> Solution:
    """Reduce a k-price instance to two prices by clamping valuations.

    Builds the auxiliary instance with valuations clamped at the second
    smallest price and the price set cut to the two smallest prices, runs the
    two-price algorithm there, and compares with the best single price on the
    original instance.  The clamped-instance vector is returned unchanged: it
    is feasible for the original instance (identical edge constraints) and
    earns the same revenue (clamping only lowers valuations above the prices
    it uses).  Ties go to the clamped branch.
    """
    if len(inst.prices) < 2:
        raise ValidationError("general-k algorithm needs at least two prices")
    p1, p2 = inst.prices[0], inst.prices[1]
    clamped = Instance(
        prices=(p1, p2),
        nodes=inst.nodes,
        val={v: min(inst.val[v], p2) for v in inst.nodes},
        demand=inst.demand,
        edges=inst.edges,
        alpha=inst.alpha,
    )
    inner = alg_two_prices(clamped)
    rev_original = revenue(inst, inner.pv)
    sp = single_price_best(inst)
    if rev_original >= sp.revenue:
        return Solution(inner.pv, rev_original, "general-k")
    return sp

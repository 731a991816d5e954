"""Walk through the 4-node gadget where the two-price algorithm is tight.

Two nodes value the good at 2, two at 1; the second high-value node is tied
to both low-value nodes by zero-slack edges.  Pricing must therefore either
sacrifice revenue on those edges or skip a node entirely.
"""

from fractions import Fraction

from pricegraph import (
    alg_two_prices, brute_force_opt, gen_fig1, max_matching, min_vertex_cover,
    restricted_subgraph, single_price_best,
)

inst = gen_fig1(1)
print("values:", inst.val)
print("edges: ", {e: inst.alpha[e] for e in inst.edges})

sp = single_price_best(inst)
print(f"\nbest single price earns {sp.revenue} "
      f"(price {sp.pv.assignment[0]} for everyone)")

bg = restricted_subgraph(inst)
print("\nbinding edges (high value -> low value, slack below the gap):", bg.edges)
m = max_matching(bg)
cover = min_vertex_cover(bg, m)
print(f"maximum matching {m.pairs} -> minimum vertex cover {sorted(cover)}")

alg = alg_two_prices(inst)
print(f"\nskipping the cover and pricing everyone else at value earns {alg.revenue}:")
print("  ", alg.pv.assignment)

opt = brute_force_opt(inst)
print(f"\nexhaustive optimum is {opt.revenue}: {opt.pv.assignment}")
print("achieved ratio:", Fraction(alg.revenue, opt.revenue),
      "= the proven worst case for prices {1, 2}")

print("\nadding disjoint copies scales both sides linearly, so the ratio is tight:")
for copies in (2, 3):
    big = gen_fig1(copies)
    print(f"  {copies} copies: algorithm {alg_two_prices(big).revenue}, "
          f"optimum {brute_force_opt(big).revenue}")

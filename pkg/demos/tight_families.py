"""Families on which the best single price loses exactly a harmonic factor.

On a clique with valuations n!/1, ..., n!/n and huge slacks, every price
earns exactly n! while pricing everyone at value earns n! * H_n.  A second
family shows the same gap in terms of the price-set sum P_k even when the
price range is tiny.
"""

from fractions import Fraction

from pricegraph import (
    brute_force_opt, gen_clique_harmonic, gen_clique_pk, gen_nd_pinch,
    harmonic, max_bound, single_price_best,
)

print("clique with harmonic valuations (slack never binds, optimum = MAX):")
for n in range(2, 9):
    inst = gen_clique_harmonic(n)
    sp = single_price_best(inst).revenue
    opt = max_bound(inst)
    print(f"  n={n}: single price {sp:>6}, optimum {opt:>7}, "
          f"ratio {Fraction(sp, opt)} = 1/H_{n}")

print("\nclique over prices 1..k with value multiplicities k!/(i(i+1)):")
for k in range(2, 7):
    inst = gen_clique_pk(k)
    sp = single_price_best(inst).revenue
    opt = max_bound(inst)
    assert Fraction(sp, opt) == 1 / harmonic(k)
    print(f"  k={k}: n={inst.n:>4}, single price {sp:>4}, optimum {opt:>5}, "
          f"ratio 1/H_{k}")

print("\npinching a value-1 hub onto the n=3 clique forces any solution")
print("without skips to one common price, yet skipping just the hub recovers")
print("the original optimum:")
base = gen_clique_harmonic(3)
pinched = gen_nd_pinch(base)
print("  optimum before:", brute_force_opt(base).revenue,
      "| after pinching:", brute_force_opt(pinched).revenue,
      "| best single price:", single_price_best(pinched).revenue)

"""Print the proven worst-case ratios for a few price sets.

Column one is the plain harmonic guarantee of the best single price; column
two applies only to consecutive prices 1..k; the last two columns come from
the vertex-cover route, whose guarantee improves when the binding edges'
reverse slacks are small.
"""

from fractions import Fraction

from pricegraph import guaranteed_ratio, harmonic

PRICE_SETS = [
    (1, 2),
    (1, 2, 3),
    tuple(range(1, 101)),
    (10, 20, 25),
    (3, 6, 10, 11),
]


def show(x):
    return f"{float(x):.3f}"


header = f"{'prices':<14} {'1/H_k':>7} {'clamp':>7} {'cover(worst a)':>15} {'cover(a=0)':>11}"
print(header)
print("-" * len(header))
for ps in PRICE_SETS:
    k = len(ps)
    label = f"{{{ps[0]}..{ps[-1]}}}" if k > 6 else "{" + ",".join(map(str, ps)) + "}"
    hk = 1 / harmonic(k)
    clamp = show(1 / (harmonic(k) - Fraction(1, 4))) if ps == tuple(range(1, k + 1)) else "--"
    worst = guaranteed_ratio(ps, ps[1] - ps[0] - 1)
    zero = guaranteed_ratio(ps, 0)
    print(f"{label:<14} {show(hk):>7} {clamp:>7} {show(worst):>15} {show(zero):>11}")

print("\nsame numbers via the command line: pricegraph table")

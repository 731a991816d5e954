"""Multi-unit demands reduce to unit demands without losing anything.

Each node wanting s copies becomes a zero-slack clique of s unit-demand
copies; zero slack forces all priced copies to one common price, so optima
coincide and any solution of the expansion collapses back losslessly.
"""

from pricegraph import (
    Instance, PriceVector, brute_force_opt, lift_solution, multi_demand_reduce,
    revenue,
)

inst = Instance.build(
    (1, 2, 3),
    {0: 3, 1: 2, 2: 1},
    [(0, 1, 1, 0), (1, 2, 0, 0)],
    demand={0: 2, 1: 3, 2: 1},
)
print("demands:", inst.demand, "values:", inst.val)

red = multi_demand_reduce(inst)
print("expansion:", red.instance.n, "unit-demand copies;",
      "clique per node:", {v: list(c) for v, c in red.bundle_map.items()})

opt = brute_force_opt(inst)
opt_expanded = brute_force_opt(red.instance)
print("\noptimum on the original: ", opt.revenue, opt.pv.assignment)
print("optimum on the expansion:", opt_expanded.revenue)

lifted = lift_solution(inst, red, opt_expanded.pv)
print("lifted back:", lifted.assignment, "revenue", revenue(inst, lifted))

partial = dict(opt_expanded.pv.assignment)
partial[red.bundle_map[1][0]] = None  # skip one copy; the lift restores it
lifted2 = lift_solution(inst, red, PriceVector(partial))
print("\nskipping one copy before lifting:",
      revenue(red.instance, PriceVector(partial)), "->",
      revenue(inst, lifted2), "after the lift")

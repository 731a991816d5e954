from fractions import Fraction
from itertools import product

import pytest

from pricegraph import (
    GeneratorSpec, Instance, PriceVector, ValidationError, adjacency,
    alg_two_prices, brute_force_opt, gen_clique_harmonic, gen_clique_pk,
    gen_fig1, gen_nd_pinch, gen_random, generate, harmonic, is_feasible,
    max_bound, revenue, serialize_instance, single_price_best,
)


def _component_count(inst):
    adj = adjacency(inst)
    seen, comps = set(), 0
    for start in inst.nodes:
        if start in seen:
            continue
        comps += 1
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


# --- fig1 ---------------------------------------------------------------------

def test_fig1_single_copy_structure():
    inst = gen_fig1(1)
    assert inst.n == 4
    assert len(inst.edges) == 2
    assert _component_count(inst) == 2  # the first value-2 node is isolated


def test_fig1_revenue_landmarks():
    inst = gen_fig1(1)
    assert brute_force_opt(inst).revenue == 5
    assert single_price_best(inst).revenue == 4
    assert alg_two_prices(inst).revenue == 4


def test_fig1_copies_scale_linearly():
    for m in (2, 3):
        inst = gen_fig1(m)
        assert inst.n == 4 * m
        assert brute_force_opt(inst).revenue == 5 * m
        assert alg_two_prices(inst).revenue == 4 * m


def test_fig1_chaining_connects_and_keeps_revenues():
    inst = gen_fig1(2, chain=True)
    assert _component_count(inst) == 1
    assert brute_force_opt(inst).revenue == 10
    assert alg_two_prices(inst).revenue == 8


def test_fig1_rejects_zero_copies():
    with pytest.raises(ValidationError):
        gen_fig1(0)


# --- clique families -------------------------------------------------------------

def test_clique_harmonic_3():
    inst = gen_clique_harmonic(3)
    assert sorted(inst.val.values(), reverse=True) == [6, 3, 2]
    assert brute_force_opt(inst).revenue == 11
    assert single_price_best(inst).revenue == 6


def test_clique_harmonic_2_ratio():
    inst = gen_clique_harmonic(2)
    assert sorted(inst.val.values()) == [1, 2]
    ratio = Fraction(single_price_best(inst).revenue, brute_force_opt(inst).revenue)
    assert ratio == Fraction(2, 3) == 1 / harmonic(2)


def test_clique_harmonic_8_top_value():
    inst = gen_clique_harmonic(8)
    assert max(inst.val.values()) == 40320
    assert inst.n == 8


def test_clique_harmonic_range_checked():
    for n in (1, 9):
        with pytest.raises(ValidationError):
            gen_clique_harmonic(n)


def test_clique_pk_3():
    inst = gen_clique_pk(3)
    counts = {i: sum(1 for v in inst.nodes if inst.val[v] == i) for i in (1, 2, 3)}
    assert counts == {1: 3, 2: 1, 3: 2}
    assert max_bound(inst) == 11
    for p in (1, 2, 3):
        rev = revenue(inst, PriceVector({v: p for v in inst.nodes}))
        assert rev == 6


def test_clique_pk_2():
    inst = gen_clique_pk(2)
    assert inst.n == 2
    assert sorted(inst.val.values()) == [1, 2]


def test_clique_pk_range_checked():
    for k in (1, 7):
        with pytest.raises(ValidationError):
            gen_clique_pk(k)


# --- nd pinch --------------------------------------------------------------------

def test_pinch_forces_common_price_without_skips():
    inst = gen_nd_pinch(gen_clique_harmonic(3))
    for combo in product(inst.prices, repeat=inst.n):
        pv = PriceVector(dict(zip(inst.nodes, combo)))
        if is_feasible(inst, pv):
            assert len(set(combo)) == 1


def test_pinch_single_node():
    inst = gen_nd_pinch(Instance.build((1, 2), {0: 2}))
    assert inst.n == 2
    assert inst.alpha == {(0, 1): 0, (1, 0): 0}


def test_pinch_adds_price_one():
    inst = gen_nd_pinch(gen_clique_harmonic(3))
    assert inst.prices[0] == 1


def test_pinch_skipped_recovers_original_optimum():
    base = gen_clique_harmonic(3)
    pinched = gen_nd_pinch(base)
    opt = brute_force_opt(base)
    lifted = PriceVector({**opt.pv.assignment, max(pinched.nodes): None})
    assert is_feasible(pinched, lifted)
    assert revenue(pinched, lifted) == opt.revenue
    assert brute_force_opt(pinched).revenue == opt.revenue


# --- random ----------------------------------------------------------------------

def test_random_zero_probability_is_edgeless():
    assert gen_random(6, (1, 2), 0.0, 3, 1).edges == ()


def test_random_is_deterministic_per_seed():
    a = gen_random(8, (1, 2), 0.5, 2, 42)
    b = gen_random(8, (1, 2), 0.5, 2, 42)
    assert serialize_instance(a) == serialize_instance(b)
    assert gen_random(8, (1, 2), 0.5, 2, 43) != a


def test_random_oracle_is_reproducible():
    inst = gen_random(8, (1, 2), 0.5, 2, 42)
    first = brute_force_opt(inst)
    again = brute_force_opt(gen_random(8, (1, 2), 0.5, 2, 42))
    assert (first.revenue, first.pv) == (again.revenue, again.pv)


def test_random_validates_arguments():
    with pytest.raises(ValidationError):
        gen_random(0, (1, 2), 0.5, 1, 0)
    with pytest.raises(ValidationError):
        gen_random(3, (1, 2), 1.5, 1, 0)
    with pytest.raises(ValidationError):
        gen_random(3, (1, 2), 0.5, -1, 0)


def test_generate_dispatch():
    assert generate(GeneratorSpec("fig1", {"copies": 2})) == gen_fig1(2)
    assert generate(GeneratorSpec("clique_pk", {"k": 2})) == gen_clique_pk(2)
    spec = GeneratorSpec("random",
                         {"n": 5, "prices": (1, 2), "edge_prob": 0.5, "alpha_max": 1},
                         seed=7)
    assert generate(spec) == gen_random(5, (1, 2), 0.5, 1, 7)
    with pytest.raises(ValidationError):
        generate(GeneratorSpec("nope"))

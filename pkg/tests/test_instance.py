import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pricegraph import (
    EmptyInstanceError, Instance, ParseError, PriceVector, ValidationError,
    gen_fig1, is_feasible, max_bound, normalize, parse_instance,
    parse_price_vector, revenue, serialize_instance, serialize_price_vector,
)


@pytest.fixture
def fig1():
    return gen_fig1(1)


# --- hypothesis strategy: small normalized instances ----------------------------

@st.composite
def instances(draw, max_n=7, max_k=4, max_price=12, max_alpha=4):
    k = draw(st.integers(1, max_k))
    prices = tuple(sorted(draw(
        st.sets(st.integers(1, max_price), min_size=k, max_size=k))))
    n = draw(st.integers(1, max_n))
    val = {v: draw(st.sampled_from(prices)) for v in range(n)}
    demand = {v: draw(st.integers(1, 3)) for v in range(n)}
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.append((u, v, draw(st.integers(0, max_alpha)),
                              draw(st.integers(0, max_alpha))))
    return Instance.build(prices, val, edges, demand)


@st.composite
def instances_with_vectors(draw):
    inst = draw(instances())
    choices = list(inst.prices) + [None]
    pv = PriceVector({v: draw(st.sampled_from(choices)) for v in inst.nodes})
    return inst, pv


# --- feasibility -----------------------------------------------------------------

def test_single_node_any_price_feasible():
    inst = Instance.build((1, 2, 3), {0: 2})
    for p in inst.prices:
        assert is_feasible(inst, PriceVector({0: p}))


def test_fig1_cover_vector_feasible(fig1):
    assert is_feasible(fig1, PriceVector({0: 2, 1: None, 2: 1, 3: 1}))


def test_fig1_uniform_two_infeasible(fig1):
    # edge (v2, v3) has zero slack and |2 - 1| > 0
    assert not is_feasible(fig1, PriceVector({0: 2, 1: 2, 2: 1, 3: 1}))


def test_out_of_set_price_rejected(fig1):
    with pytest.raises(ValidationError):
        is_feasible(fig1, PriceVector({0: 3, 1: 1, 2: 1, 3: 1}))


def test_partial_vector_rejected(fig1):
    with pytest.raises(ValidationError):
        is_feasible(fig1, PriceVector({0: 1, 1: 1, 2: 1}))


@given(instances())
def test_constant_vectors_always_feasible(inst):
    for p in inst.prices:
        assert is_feasible(inst, PriceVector({v: p for v in inst.nodes}))


@given(instances_with_vectors(), st.randoms(use_true_random=False))
def test_skipping_nodes_preserves_feasibility(iv, rng):
    inst, pv = iv
    if not is_feasible(inst, pv):
        return
    dropped = {v: (None if rng.random() < 0.4 else p)
               for v, p in pv.assignment.items()}
    assert is_feasible(inst, PriceVector(dropped))


# --- revenue ----------------------------------------------------------------------

def test_all_skipped_revenue_zero(fig1):
    assert revenue(fig1, PriceVector({v: None for v in fig1.nodes})) == 0


def test_fig1_cover_vector_revenue(fig1):
    assert revenue(fig1, PriceVector({0: 2, 1: None, 2: 1, 3: 1})) == 4


def test_demand_scales_revenue():
    inst = Instance.build((1, 2), {0: 2}, demand={0: 3})
    assert revenue(inst, PriceVector({0: 2})) == 6


def test_price_above_value_earns_nothing():
    inst = Instance.build((1, 5), {0: 1})
    assert revenue(inst, PriceVector({0: 5})) == 0


@given(instances_with_vectors())
def test_revenue_within_bounds(iv):
    inst, pv = iv
    rev = revenue(inst, pv)
    assert 0 <= rev <= max_bound(inst)


@given(instances_with_vectors())
def test_raising_a_skipped_node_is_monotone(iv):
    inst, pv = iv
    if not is_feasible(inst, pv):
        return
    base = revenue(inst, pv)
    for v in inst.nodes:
        if pv.assignment[v] is not None:
            continue
        for p in inst.prices:
            if p > inst.val[v]:
                break
            raised = PriceVector({**pv.assignment, v: p})
            if is_feasible(inst, raised):
                assert revenue(inst, raised) >= base


# --- normalize --------------------------------------------------------------------

def test_value_above_top_price_clamped():
    inst = Instance.build((1, 2, 3), {0: 7})
    assert normalize(inst).val[0] == 3


def test_value_between_prices_snaps_down():
    inst = Instance.build((10, 20), {0: 15})
    assert normalize(inst).val[0] == 10


def test_value_below_min_price_removes_node():
    inst = Instance.build((10, 20), {0: 4, 1: 20}, [(0, 1, 1, 1)])
    norm = normalize(inst)
    assert norm.nodes == (1,)
    assert norm.edges == ()
    assert set(inst.nodes) - set(norm.nodes) == {0}


def test_normalize_empty_result_is_an_error():
    inst = Instance.build((10, 20), {0: 4})
    with pytest.raises(EmptyInstanceError):
        normalize(inst)


@given(instances())
def test_normalize_idempotent(inst):
    once = normalize(inst)
    assert normalize(once) == once


def test_normalize_general_raw_values():
    inst = Instance.build((2, 5, 9), {0: 1, 1: 2, 2: 4, 3: 100},
                          [(0, 1, 0, 0), (2, 3, 1, 2)])
    norm = normalize(inst)
    assert norm.val == {1: 2, 2: 2, 3: 9}
    assert norm.edges == ((2, 3),)
    assert norm.alpha == {(2, 3): 1, (3, 2): 2}


# --- max_bound --------------------------------------------------------------------

def test_max_bound_fig1(fig1):
    assert max_bound(fig1) == 6


def test_max_bound_empty():
    inst = Instance(prices=(1,), nodes=(), val={}, demand={}, edges=(), alpha={})
    assert max_bound(inst) == 0


def test_max_bound_weighted_by_demand():
    inst = Instance.build((1, 2), {0: 2, 1: 1}, demand={0: 3, 1: 2})
    assert max_bound(inst) == 8


# --- parse / serialize --------------------------------------------------------------

def test_round_trip_fig1(fig1):
    text = serialize_instance(fig1)
    assert parse_instance(text) == fig1
    assert serialize_instance(parse_instance(text)) == text


def test_unknown_edge_endpoint_rejected():
    doc = {"prices": [1, 2], "nodes": [{"id": 0, "val": 1}],
           "edges": [{"u": 0, "v": 5, "alpha_uv": 0, "alpha_vu": 0}]}
    with pytest.raises(ParseError, match="unknown node"):
        parse_instance(json.dumps(doc))


def test_missing_field_rejected():
    with pytest.raises(ParseError, match="missing"):
        parse_instance(json.dumps({"prices": [1]}))
    with pytest.raises(ParseError, match="missing"):
        parse_instance(json.dumps({"prices": [1], "nodes": [{"id": 0}]}))


def test_negative_alpha_rejected():
    doc = {"prices": [1], "nodes": [{"id": 0, "val": 1}, {"id": 1, "val": 1}],
           "edges": [{"u": 0, "v": 1, "alpha_uv": -1, "alpha_vu": 0}]}
    with pytest.raises(ParseError, match="negative alpha"):
        parse_instance(json.dumps(doc))


def test_non_increasing_prices_rejected():
    doc = {"prices": [2, 2], "nodes": [{"id": 0, "val": 2}], "edges": []}
    with pytest.raises(ParseError, match="strictly increasing"):
        parse_instance(json.dumps(doc))


def test_demand_defaults_to_one():
    doc = {"prices": [1, 2], "nodes": [{"id": 3, "val": 2}], "edges": []}
    inst = parse_instance(json.dumps(doc))
    assert inst.demand == {3: 1}


def test_invalid_json_rejected():
    with pytest.raises(ParseError, match="invalid JSON"):
        parse_instance("{not json")


@given(instances())
@settings(max_examples=50)
def test_round_trip_random(inst):
    assert parse_instance(serialize_instance(inst)) == inst


def test_price_vector_round_trip():
    pv = PriceVector({0: 2, 1: None, 2: 1})
    text = serialize_price_vector(pv)
    assert parse_price_vector(text) == pv
    assert json.loads(text)["assignment"]["1"] is None


def test_price_vector_bad_key_rejected():
    with pytest.raises(ParseError):
        parse_price_vector(json.dumps({"assignment": {"x": 1}}))

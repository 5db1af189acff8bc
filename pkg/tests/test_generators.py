import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expanders.generators import (
    GenSpec,
    GenerationFailed,
    check_locally_sparse,
    default_sparsity_beta,
    gen,
    sparse_violation_frequency,
)
from fixtures import complete_graph, cycle_graph, path_graph
from oracles import brute_densest


def test_complete_bipartite_counts():
    g = gen(GenSpec("complete_bipartite", {"a": 2, "b": 6}))
    assert g.n == 8
    assert g.num_edges == 12
    assert sorted(set(g.deg)) == [2, 6]


def test_random_regular_is_regular_and_deterministic():
    spec = GenSpec("random_regular", {"n": 10, "d": 3}, seed=123)
    g1, g2 = gen(spec), gen(spec)
    assert g1 == g2
    assert g1.num_edges == 15
    assert all(d == 3 for d in g1.deg)


def test_random_regular_seed_changes_graph():
    a = gen(GenSpec("random_regular", {"n": 20, "d": 3}, seed=1))
    b = gen(GenSpec("random_regular", {"n": 20, "d": 3}, seed=2))
    assert a != b


def test_random_regular_rejects_odd_product():
    with pytest.raises(ValueError, match="even"):
        gen(GenSpec("random_regular", {"n": 5, "d": 3}))


def test_random_regular_rejects_degree_too_large():
    with pytest.raises(ValueError, match="less than"):
        gen(GenSpec("random_regular", {"n": 4, "d": 4}))


def test_gnp_edge_count_within_four_sigma():
    n, p = 1000, 3 / 1000
    g = gen(GenSpec("gnp", {"n": n, "p": p}, seed=99))
    total = n * (n - 1) / 2
    mean = total * p
    sigma = math.sqrt(total * p * (1 - p))
    assert abs(g.num_edges - mean) <= 4 * sigma


def test_gnp_determinism_and_extremes():
    spec = GenSpec("gnp", {"n": 64, "p": 0.1}, seed=7)
    assert gen(spec) == gen(spec)
    assert gen(GenSpec("gnp", {"n": 30, "p": 0.0})).num_edges == 0
    assert gen(GenSpec("gnp", {"n": 10, "p": 1.0})).num_edges == 45


def test_gnp_pair_distribution_is_uniformish():
    # every pair must be reachable by the skip sampler
    g = gen(GenSpec("gnp", {"n": 8, "p": 0.9}, seed=3))
    assert g.num_edges >= 20
    assert max(max(e) for e in g.edges) == 7


def test_fixture_kinds():
    assert gen(GenSpec("path", {"n": 5})).num_edges == 4
    assert gen(GenSpec("cycle", {"n": 6})).num_edges == 6
    cu = gen(GenSpec("clique_union", {"size": 4, "count": 3}))
    assert cu.n == 12
    assert cu.num_edges == 18
    assert len(cu.components()) == 3


def test_check_locally_sparse_cycle():
    g = cycle_graph(8)
    rep = check_locally_sparse(g, c2=1.01, beta=0.5)
    assert rep.exhaustive
    assert rep.worst_ratio == Fraction(3, 4)  # an arc of 4 spans 3 edges
    assert rep.is_locally_sparse(1.01)


def test_check_locally_sparse_k4_witness():
    g = complete_graph(4)
    rep = check_locally_sparse(g, c2=1.2, beta=0.8)
    assert rep.worst_ratio == Fraction(1, 1)  # triangle: 3 edges on 3 vertices
    assert len(rep.worst_witness) == 3
    assert rep.is_locally_sparse(1.2)
    assert not rep.is_locally_sparse(0.9)


def test_check_locally_sparse_single_edge():
    g = path_graph(2)
    rep = check_locally_sparse(g, c2=1.5, beta=0.99)
    assert rep.worst_ratio <= Fraction(1, 2)
    assert rep.is_locally_sparse(1.5)


@given(st.integers(5, 11), st.integers(0, 2**32))
@settings(max_examples=25, deadline=None)
def test_exhaustive_sparsity_matches_oracle(n, seed):
    g = gen(GenSpec("gnp", {"n": n, "p": 0.3}, seed=seed))
    beta = 0.5
    rep = check_locally_sparse(g, c2=1.5, beta=beta)
    assert rep.exhaustive
    assert rep.worst_ratio == brute_densest(g, math.floor(beta * n))


def test_sparsity_monotonicity():
    g = gen(GenSpec("gnp", {"n": 14, "p": 0.3}, seed=11))
    base = check_locally_sparse(g, c2=1.4, beta=0.6)
    if base.is_locally_sparse(1.4):
        assert check_locally_sparse(g, c2=1.8, beta=0.4).is_locally_sparse(1.8)


def test_heuristic_mode_is_flagged():
    g = gen(GenSpec("gnp", {"n": 60, "p": 0.08}, seed=4))
    rep = check_locally_sparse(g, c2=1.3, beta=0.4, budget=10_000)
    assert not rep.exhaustive
    assert rep.mode == "heuristic"


def test_violation_frequency_zero_on_empty_graphs():
    spec = GenSpec("gnp", {"n": 30, "p": 0.0}, seed=1)
    rep = sparse_violation_frequency(spec, c2=1.5, beta=0.5, trials=5)
    assert rep.frequency == 0.0


def test_violation_frequency_one_on_forced_clique():
    spec = GenSpec("gnp", {"n": 10, "p": 1.0}, seed=1)
    rep = sparse_violation_frequency(spec, c2=2.0, beta=0.5, trials=3)
    assert rep.frequency == 1.0  # any 5-set spans 10 >= 2*5 edges


def test_violation_frequency_sparse_regime():
    spec = GenSpec("gnp", {"n": 60, "p": 1.5 / 60}, seed=42)
    rep = sparse_violation_frequency(spec, c2=1.3, beta=0.2, trials=20)
    assert 0.0 <= rep.frequency <= 1.0
    assert rep.trials == 20


def test_violation_frequency_touch_variant():
    spec = GenSpec("gnp", {"n": 80, "p": 2.0 / 80}, seed=9)
    rep = sparse_violation_frequency(spec, trials=10, variant="touches", delta=0.3)
    assert 0.0 <= rep.frequency <= 1.0
    assert not rep.exhaustive_all  # witness search is a lower bound


def test_default_beta_formula():
    assert default_sparsity_beta(1.5, 1.3) == pytest.approx(
        (1.3 / 7.5) ** (1.3 / 0.3)
    )


def test_genspec_json_round_trip():
    spec = GenSpec("gnp", {"n": 10, "p": 0.5}, seed=77)
    assert GenSpec.from_json(spec.to_json()) == spec

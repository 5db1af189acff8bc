import math

import numpy as np
import pytest

from expanders.generators import GenSpec, gen
from expanders.graph import VertexSet
from expanders.walks import (
    confinement_bounds,
    conductance_exact,
    lazy_walk,
    spectral_gap,
    stationary_distribution,
    transition_matrix,
    walk_ensemble,
)
from fixtures import complete_graph, cycle_graph, disjoint_union, petersen_graph


def test_transition_matrix_rows():
    p = transition_matrix(complete_graph(4))
    assert np.allclose(p.sum(axis=1), 1.0)
    assert np.allclose(np.diag(p), 0.5)
    assert p[0, 1] == pytest.approx(1 / 6)


def test_stationary_distribution_matches_degrees():
    g = gen(GenSpec("gnp", {"n": 12, "p": 0.4}, seed=3))
    pi = stationary_distribution(g)
    assert pi.sum() == pytest.approx(1.0)
    p = transition_matrix(g)
    assert np.allclose(pi @ p, pi, atol=1e-12)


def test_lazy_walk_trace_validity():
    g = petersen_graph()
    trace = lazy_walk(g, 50, start=0, seed=11)
    assert trace.steps[0] == 0
    assert len(trace.steps) == 51
    for a, b in zip(trace.steps, trace.steps[1:]):
        assert a == b or g.has_edge(a, b)


def test_lazy_walk_zero_steps():
    trace = lazy_walk(complete_graph(3), 0, start=2, seed=0)
    assert trace.steps == (2,)


def test_lazy_walk_k2_stay_frequency():
    trace = lazy_walk(complete_graph(2), 4000, start=0, seed=5)
    stays = sum(1 for a, b in zip(trace.steps, trace.steps[1:]) if a == b)
    assert abs(stays / 4000 - 0.5) < 4 * math.sqrt(0.25 / 4000)


def test_lazy_walk_rejects_isolated_start():
    from expanders.graph import Graph

    g = Graph(3, [(0, 1)])
    with pytest.raises(ValueError, match="isolated"):
        lazy_walk(g, 5, start=2, seed=0)


def test_walk_occupancy_uniform_on_cycle():
    g = cycle_graph(8)
    trace = lazy_walk(g, 100_000, start="stationary", seed=17)
    counts = np.bincount(trace.steps, minlength=8) / len(trace.steps)
    # pi is uniform 1/8; allow 3 sigma with an effective-sample fudge for mixing
    assert np.all(np.abs(counts - 1 / 8) < 0.02)


def test_walk_determinism():
    g = petersen_graph()
    assert lazy_walk(g, 100, seed=9).steps == lazy_walk(g, 100, seed=9).steps
    ens1 = walk_ensemble(g, [0, 1], 20, 500, seed=4)
    ens2 = walk_ensemble(g, [0, 1], 20, 500, seed=4)
    assert ens1 == ens2


def test_spectral_gap_equals_half_mu():
    g = petersen_graph()
    from expanders.spectral import mu1_and_vector

    mu1, _ = mu1_and_vector(g)
    assert spectral_gap(g) == pytest.approx(mu1 / 2)
    # eigenvalue of P directly
    p = transition_matrix(g)
    lam = np.sort(np.linalg.eigvals(p).real)[::-1]
    assert 1 - lam[1] == pytest.approx(spectral_gap(g), abs=1e-9)


def test_conductance_is_half_cheeger():
    g = cycle_graph(8)
    assert conductance_exact(g) == pytest.approx(0.125)


def test_confinement_bounds_zero_steps():
    g = complete_graph(4)
    u = VertexSet.from_iterable(4, [0, 1])
    rep = confinement_bounds(g, u, 0)
    assert rep.confinement_bound == pytest.approx(rep.pi_u)
    ens = walk_ensemble(g, u, 0, 20_000, seed=2)
    sigma = ens.binomial_sigma(rep.pi_u)
    assert abs(ens.confinement_frequency - rep.pi_u) <= 4 * sigma


def test_confinement_bounds_vacuous_when_disconnected():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    rep = confinement_bounds(g, VertexSet.from_iterable(6, [0]), 10)
    assert rep.miss_bound == pytest.approx(1.0)


def test_confinement_bounds_chain():
    for g in [complete_graph(6), cycle_graph(10), petersen_graph()]:
        u = VertexSet.from_iterable(g.n, range(g.n // 3 + 1))
        rep = confinement_bounds(g, u, 25)
        assert rep.chain_ok
        assert 0 <= rep.miss_bound <= 1
        assert 0 <= rep.confinement_bound <= 1


def test_monte_carlo_within_bounds_k4():
    g = complete_graph(4)
    u = VertexSet.from_iterable(4, [0, 1, 2])  # complement of one vertex
    rep = confinement_bounds(g, u, 10)
    ens = walk_ensemble(g, u, 10, 10_000, seed=21)
    assert ens.miss_frequency <= rep.miss_bound + 4 * ens.binomial_sigma(rep.miss_bound)
    assert ens.confinement_frequency <= rep.confinement_bound + 4 * ens.binomial_sigma(
        rep.confinement_bound
    )


def test_confinement_rejects_improper_sets():
    g = complete_graph(4)
    with pytest.raises(ValueError):
        confinement_bounds(g, [], 5)
    with pytest.raises(ValueError):
        confinement_bounds(g, range(4), 5)

import math
from fractions import Fraction

import numpy as np
import pytest

from expanders.generators import GenSpec, gen
from expanders.spectral import (
    CheegerReport,
    ExactLimitExceeded,
    cheeger_exact,
    expansion_lower_bound_regular,
    lambda2,
    mu1_and_vector,
    normalized_laplacian,
    spectrum,
    sweep_cut,
    verify_cheeger,
)
from fixtures import (
    barbell_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
)


def test_k4_adjacency_spectrum():
    s = spectrum(complete_graph(4))
    assert np.allclose(s.adjacency_eigenvalues, [3, -1, -1, -1], atol=1e-9)
    assert s.is_regular and s.d == 3
    assert s.lambda1 == pytest.approx(3.0)


def test_c8_lambda2_is_sqrt2():
    s = spectrum(cycle_graph(8))
    assert s.lambda2 == pytest.approx(math.sqrt(2), abs=1e-9)


def test_k2_mu_values():
    s = spectrum(complete_graph(2))
    assert np.allclose(s.mu_values, [0.0, 2.0], atol=1e-12)


def test_mu_bounds_and_zero():
    for g in [cycle_graph(9), petersen_graph(), barbell_graph(4)]:
        s = spectrum(g)
        assert s.mu_values[0] == pytest.approx(0.0, abs=1e-9)
        assert all(-1e-9 <= m <= 2 + 1e-9 for m in s.mu_values)
        assert s.lambda1 <= g.max_degree + 1e-9


def test_rayleigh_bound_lambda1_at_least_average_degree():
    for seed in range(4):
        g = gen(GenSpec("gnp", {"n": 14, "p": 0.3}, seed=seed))
        if g.num_edges == 0:
            continue
        s = spectrum(g)
        avg = 2 * g.num_edges / g.n
        assert s.lambda1 >= avg - 1e-9
        assert s.adjacency_eigenvalues[-1] <= avg + 1e-9


def test_cheeger_exact_c8():
    rep = cheeger_exact(cycle_graph(8))
    assert rep.h == Fraction(1, 4)
    assert rep.i == Fraction(1, 2)
    assert rep.h_cut.crossing_edges == 2
    assert rep.h_cut.volume_small_side == 8


def test_cheeger_exact_k4():
    rep = cheeger_exact(complete_graph(4))
    assert rep.h == Fraction(2, 3)


def test_cheeger_exact_disconnected_is_zero():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    rep = cheeger_exact(g)
    assert rep.h == 0
    assert rep.h_cut.crossing_edges == 0


def test_cheeger_exact_limits():
    with pytest.raises(ExactLimitExceeded):
        cheeger_exact(cycle_graph(23))
    with pytest.raises(ValueError):
        cheeger_exact(path_graph(3).__class__(3, []))


def test_sweep_cut_barbell_finds_bridge():
    g = barbell_graph(8)
    rep = sweep_cut(g)
    assert rep.crossing_edges == 1
    assert len(rep.cut_set) == 8


def test_sweep_cut_complete_graph_guarantee():
    g = complete_graph(9)
    rep = sweep_cut(g)
    mu1, _ = mu1_and_vector(g)
    assert rep.edge_ratio <= math.sqrt(2 * mu1) + 1e-6


def test_sweep_cut_cycle():
    rep = sweep_cut(cycle_graph(8))
    assert rep.crossing_edges == 2


def test_sweep_cut_rejects_disconnected():
    with pytest.raises(ValueError, match="connected"):
        sweep_cut(disjoint_union(cycle_graph(3), cycle_graph(3)))


def test_expansion_lower_bound_regular_values():
    assert expansion_lower_bound_regular(petersen_graph()) == pytest.approx(1 / 3, abs=1e-9)
    assert expansion_lower_bound_regular(complete_graph(4)) == pytest.approx(2 / 3, abs=1e-9)
    assert expansion_lower_bound_regular(cycle_graph(8)) == pytest.approx(
        (2 - math.sqrt(2)) / 4, abs=1e-9
    )
    with pytest.raises(ValueError):
        expansion_lower_bound_regular(path_graph(4))


def test_verify_cheeger_spot_values():
    v = verify_cheeger(cycle_graph(8))
    assert v.h == pytest.approx(0.25)
    assert v.mu == pytest.approx(1 - math.cos(math.pi / 4), abs=1e-9)
    assert v.holds
    v2 = verify_cheeger(complete_graph(2))
    assert v2.h == pytest.approx(1.0)
    assert v2.mu == pytest.approx(2.0)
    assert v2.holds
    v3 = verify_cheeger(complete_graph(4))
    assert v3.h == pytest.approx(2 / 3)
    assert v3.mu == pytest.approx(4 / 3)
    assert v3.holds


def test_petersen_lambda2():
    assert lambda2(petersen_graph()) == pytest.approx(1.0, abs=1e-9)


def test_large_graph_iterative_mu1_matches_dense():
    g = gen(GenSpec("random_regular", {"n": 1500, "d": 3}, seed=5))
    mu_iter, _ = mu1_and_vector(g)  # n > dense vector limit: iterative route
    lap = normalized_laplacian(g)
    mu_dense = float(np.linalg.eigvalsh(lap)[1])
    assert mu_iter == pytest.approx(mu_dense, abs=1e-6)

"""Backend equivalence and oracle cross-checks for the subset-scan kernels."""

import numpy as np
import pytest

import expanders.kernels as kernels
from expanders.generators import GenSpec, gen
from expanders.graph import Graph
from fixtures import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
)
from oracles import brute_alpha, brute_cheeger, brute_densest, brute_isoperimetric

BACKENDS = kernels.available_backends()

SMALL_GRAPHS = [
    cycle_graph(5),
    cycle_graph(8),
    complete_graph(4),
    complete_graph(6),
    complete_bipartite(2, 6),
    path_graph(7),
    petersen_graph(),
    disjoint_union(complete_graph(3), complete_graph(3)),
    gen(GenSpec("gnp", {"n": 9, "p": 0.35}, seed=5)),
    gen(GenSpec("gnp", {"n": 10, "p": 0.25}, seed=6)),
    gen(GenSpec("random_regular", {"n": 10, "d": 3}, seed=7)),
]


def _half_allowed(n):
    allowed = np.zeros(n + 1, dtype=bool)
    allowed[1 : n // 2 + 1] = True
    return allowed


@pytest.mark.parametrize("backend", sorted(BACKENDS))
@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=lambda g: f"n{g.n}m{g.num_edges}")
def test_vertex_expansion_matches_oracle(backend, g):
    mod = BACKENDS[backend]
    adj = kernels.adjacency_mask_array(g)
    bn, size, mask = mod.scan_vertex_expansion(adj, g.n, _half_allowed(g.n))
    expected, _ = brute_alpha(g, range(1, g.n // 2 + 1))
    from fractions import Fraction

    assert Fraction(bn, size) == expected
    # witness reproduces its ratio
    members = {v for v in range(g.n) if (mask >> v) & 1}
    from oracles import neighborhood

    assert len(neighborhood(g, members)) == bn
    assert len(members) == size


@pytest.mark.parametrize("backend", sorted(BACKENDS))
@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=lambda g: f"n{g.n}m{g.num_edges}")
def test_cheeger_matches_oracle(backend, g):
    if g.num_edges == 0:
        pytest.skip("edgeless")
    mod = BACKENDS[backend]
    adj = kernels.adjacency_mask_array(g)
    deg = kernels.degree_array(g)
    ch, volh, mh, ci, szi, mi = mod.scan_cheeger(adj, g.n, deg)
    from fractions import Fraction

    h = Fraction(ch, volh) if volh else Fraction(0)
    assert h == brute_cheeger(g)
    assert Fraction(ci, szi) == brute_isoperimetric(g)


@pytest.mark.parametrize("backend", sorted(BACKENDS))
@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=lambda g: f"n{g.n}m{g.num_edges}")
def test_max_density_matches_oracle(backend, g):
    mod = BACKENDS[backend]
    adj = kernels.adjacency_mask_array(g)
    cap = max(1, g.n // 2)
    hit = mod.scan_max_density(adj, g.n, 1, cap)
    from fractions import Fraction

    e, size, mask = hit
    assert Fraction(e, size) == brute_densest(g, cap)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled backend unavailable")
@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=lambda g: f"n{g.n}m{g.num_edges}")
def test_backends_bit_identical(g):
    adj = kernels.adjacency_mask_array(g)
    deg = kernels.degree_array(g)
    allowed = _half_allowed(g.n)
    a = BACKENDS["pure"]
    b = BACKENDS["compiled"]
    assert a.scan_vertex_expansion(adj, g.n, allowed) == b.scan_vertex_expansion(
        adj, g.n, allowed
    )
    if g.num_edges:
        assert a.scan_cheeger(adj, g.n, deg) == b.scan_cheeger(adj, g.n, deg)
    assert a.scan_max_density(adj, g.n, 1, g.n - 1) == b.scan_max_density(
        adj, g.n, 1, g.n - 1
    )


def test_empty_admissible_family_returns_none():
    g = complete_graph(3)
    adj = kernels.adjacency_mask_array(g)
    allowed = np.zeros(4, dtype=bool)
    for mod in BACKENDS.values():
        assert mod.scan_vertex_expansion(adj, g.n, allowed) is None
        assert mod.scan_max_density(adj, g.n, 2, 1) is None


def test_cheeger_rejects_edgeless():
    g = Graph(3, [])
    adj = kernels.adjacency_mask_array(g)
    deg = kernels.degree_array(g)
    for mod in BACKENDS.values():
        with pytest.raises(ValueError):
            mod.scan_cheeger(adj, g.n, deg)

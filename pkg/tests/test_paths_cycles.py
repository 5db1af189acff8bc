import itertools
import math
from fractions import Fraction

import pytest

from expanders.certify import certify_alpha_exact
from expanders.generators import GenSpec, gen
from expanders.graph import Graph, boundary
from expanders.paths_cycles import (
    CycleWitness,
    cycle_lengths_family,
    cycle_spectrum_bruteforce,
    dfs,
    long_cycle,
    long_path,
    longest_stack_path,
    path_in_color_class,
    validate_dfs_properties,
)
from expanders.seeding import substream
from fixtures import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)


def test_dfs_path_graph_is_single_tree():
    g = path_graph(5)
    f = dfs(g, validate=True)
    assert f.roots == (0,)
    assert f.tree_edges() == set(g.edges)


def test_dfs_cycle_creates_one_back_edge():
    g = cycle_graph(4)
    f = dfs(g, sigma=(0, 1, 2, 3), validate=True)
    assert f.tree_edges() == {(0, 1), (1, 2), (2, 3)}
    # the non-tree edge (3, 0) joins a descendant with an ancestor
    assert f.is_ancestor(0, 3)


def test_dfs_roots_are_sigma_least_per_component():
    g = disjoint_union(cycle_graph(3), cycle_graph(3))
    f = dfs(g, validate=True)
    assert f.roots == (0, 3)
    sigma = (5, 4, 3, 2, 1, 0)
    f2 = dfs(g, sigma=sigma, validate=True)
    assert f2.roots == (5, 2)


def test_dfs_rejects_bad_sigma():
    with pytest.raises(ValueError, match="permutation"):
        dfs(cycle_graph(4), sigma=(0, 1, 2, 2))


def test_dfs_properties_on_random_graphs():
    for seed in range(12):
        g = gen(GenSpec("gnp", {"n": 24, "p": 0.15}, seed=seed))
        sigma = tuple(substream(seed, 1).permutation(24).tolist())
        f = dfs(g, sigma=sigma)
        assert validate_dfs_properties(g, f) == []


def test_long_path_on_cycle():
    res = long_path(cycle_graph(8), k=4, ell=3)
    assert res.kind == "path"
    assert res.length >= 3


def test_long_path_bipartite():
    res = long_path(complete_bipartite(3, 3), k=3, ell=3)
    assert res.kind == "path"
    assert res.length >= 3


def test_long_path_star_witness_branch():
    res = long_path(star_graph(7), k=4, ell=3)
    assert res.kind == "witness"
    assert res.boundary_size < 3
    # the witness is a genuine counterexample: recompute its boundary
    g = star_graph(7)
    assert len(boundary(g, res.witness).external_neighborhood) == res.boundary_size


def test_long_path_rejects_bad_k():
    with pytest.raises(ValueError):
        long_path(cycle_graph(5), k=5, ell=2)


def test_long_path_expander_guarantee():
    for seed in range(6):
        g = gen(GenSpec("random_regular", {"n": 14, "d": 4}, seed=seed))
        rep = certify_alpha_exact(g)
        alpha = rep.alpha_star
        if alpha == 0:
            continue
        k = g.n // 2
        ell = math.ceil(alpha * g.n / 2)
        res = long_path(g, k=k, ell=ell)
        assert res.kind == "path"
        assert res.length >= alpha * g.n / 2


def test_long_cycle_on_cycle_graph():
    res = long_cycle(cycle_graph(9), k=4, ell=2)
    assert res.kind == "cycle"
    assert res.cycle.length == 9  # the only cycle there is


def test_long_cycle_k4():
    res = long_cycle(complete_graph(4), k=2, ell=2)
    assert res.kind == "cycle"
    assert res.cycle.length >= 3


def test_long_cycle_bipartite_ceiling():
    res = long_cycle(complete_bipartite(2, 6), k=4, ell=2)
    assert res.kind == "cycle"
    assert res.cycle.length == 4  # the longest cycle through a side of two


def test_long_cycle_violation_branch_small_components():
    g = disjoint_union(cycle_graph(4), cycle_graph(4), cycle_graph(4))
    res = long_cycle(g, k=8, ell=3)
    assert res.kind == "violation"
    assert res.boundary_size == 0
    assert 4 <= len(res.witness) <= 8


def test_long_cycle_expander_guarantee():
    for seed in range(6):
        g = gen(GenSpec("random_regular", {"n": 16, "d": 4}, seed=seed))
        rep = certify_alpha_exact(g)
        alpha = rep.alpha_star
        if alpha == 0:
            continue
        res = long_cycle(g, k=g.n // 2, ell=math.ceil(alpha * g.n / 4))
        assert res.kind == "cycle"
        assert res.cycle.length > alpha * g.n / 4


def test_cycle_witness_validation():
    g = cycle_graph(5)
    CycleWitness(tuple(range(5))).validate(g)
    with pytest.raises(ValueError, match="missing"):
        CycleWitness((0, 2, 4)).validate(g)
    with pytest.raises(ValueError, match="at least 3"):
        CycleWitness((0, 1)).validate(g)


def test_cycle_spectrum_k4():
    assert cycle_spectrum_bruteforce(complete_graph(4)) == {3, 4}


def test_cycle_spectrum_c7():
    assert cycle_spectrum_bruteforce(cycle_graph(7)) == {7}


def test_cycle_spectrum_k23():
    assert cycle_spectrum_bruteforce(complete_bipartite(2, 3)) == {4}


def test_cycle_spectrum_petersen():
    assert cycle_spectrum_bruteforce(petersen_graph()) == {5, 6, 8, 9}


def test_cycle_spectrum_matches_oracle_on_random_graphs():
    from oracles import brute_cycle_lengths

    for seed in range(6):
        g = gen(GenSpec("gnp", {"n": 9, "p": 0.35}, seed=seed))
        assert cycle_spectrum_bruteforce(g) == brute_cycle_lengths(g)


def test_longest_stack_path_is_a_path():
    g = petersen_graph()
    p = longest_stack_path(g)
    for a, b in zip(p, p[1:]):
        assert g.has_edge(a, b)
    assert len(set(p)) == len(p)


def test_cycle_family_on_cycle_graph_is_inapplicable_or_tiny():
    res = cycle_lengths_family(cycle_graph(24), eps=0.3)
    if res.status == "ok":
        assert res.count <= 1
    else:
        assert res.reason


def test_cycle_family_petersen_within_spectrum():
    res = cycle_lengths_family(petersen_graph(), eps=0.3)
    if res.status == "ok":
        spectrum = cycle_spectrum_bruteforce(petersen_graph())
        assert set(res.lengths) <= spectrum
        for c in res.cycles:
            c.validate(petersen_graph())


def test_cycle_family_random_regular():
    g = gen(GenSpec("random_regular", {"n": 400, "d": 3}, seed=2))
    res = cycle_lengths_family(g, eps=0.25)
    assert res.status == "ok"
    assert res.count >= 1
    assert len(set(res.lengths)) == len(res.lengths)
    for c in res.cycles:
        c.validate(g)
    assert res.max_consecutive_gap is not None or res.count <= 1


def test_cycle_family_rejects_disconnected():
    with pytest.raises(ValueError, match="connected"):
        cycle_lengths_family(disjoint_union(cycle_graph(3), cycle_graph(3)), eps=0.3)


def test_path_in_color_class_full_cycle():
    g = cycle_graph(20)
    rep = path_in_color_class(g, g.edges, r=1, d=2, n_target=10)
    assert rep.kind == "path"
    assert len(rep.path) - 1 >= 10
    edge_set = set(g.edges)
    for a, b in zip(rep.path, rep.path[1:]):
        assert (min(a, b), max(a, b)) in edge_set


def test_path_in_color_class_matching_fails():
    # a perfect matching admits no 3-edge path; the search must end in the
    # explored-set failure branch, naming the precondition that broke
    g = complete_graph(8)
    matching = [(0, 1), (2, 3), (4, 5), (6, 7)]
    rep = path_in_color_class(g, matching, r=7, d=7, n_target=3, check_hypothesis=False)
    assert rep.kind == "failure"
    assert rep.failed_precondition is not None


def test_path_in_color_class_requires_e0_size():
    g = complete_graph(6)
    with pytest.raises(ValueError, match="below"):
        path_in_color_class(g, [(0, 1)], r=2, d=5, n_target=3)


def test_path_never_leaves_color_class():
    g = gen(GenSpec("gnp", {"n": 60, "p": 0.3}, seed=8))
    rng = substream(99, 0)
    colors = rng.integers(0, 2, size=g.num_edges)
    e0 = [e for e, c in zip(g.edges, colors) if c == 0]
    if len(e0) < g.num_edges / 2:
        e0 = [e for e, c in zip(g.edges, colors) if c == 1]
    rep = path_in_color_class(g, e0, r=2, d=10, n_target=8, check_hypothesis=False)
    if rep.kind == "path":
        e0_set = set(e0)
        for a, b in zip(rep.path, rep.path[1:]):
            assert (min(a, b), max(a, b)) in e0_set

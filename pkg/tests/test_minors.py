import itertools
import math

import pytest

from expanders.generators import GenSpec, gen
from expanders.graph import Graph, VertexSet, boundary, induce
from expanders.minors import (
    CliqueMinorResult,
    HittingSetFailure,
    MinorEmbedding,
    ccl_bruteforce,
    clique_minor,
    connected_hitting_set,
    diameter_or_cut,
    embed_or_separate,
    reduce_degree3,
    validate_minor,
)
from fixtures import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)


def vs(n, items):
    return VertexSet.from_iterable(n, items)


def test_validate_minor_identity_triangle():
    g = cycle_graph(3)
    emb = MinorEmbedding(g, tuple(vs(3, [i]) for i in range(3)))
    assert validate_minor(g, emb).ok


def test_validate_minor_petersen_spokes_k5():
    g = petersen_graph()
    k5 = complete_graph(5)
    emb = MinorEmbedding(k5, tuple(vs(10, [i, i + 5]) for i in range(5)))
    res = validate_minor(g, emb)
    assert res.ok, res.violation


def test_validate_minor_overlap_names_pair():
    g = cycle_graph(4)
    emb = MinorEmbedding(
        path_graph(2), (vs(4, [0, 1]), vs(4, [1, 2]))
    )
    res = validate_minor(g, emb)
    assert not res.ok
    assert "0 and 1 overlap" in res.violation


def test_validate_minor_detects_disconnection_and_missing_edge():
    g = path_graph(4)
    emb = MinorEmbedding(path_graph(2), (vs(4, [0, 3]), vs(4, [1])))
    res = validate_minor(g, emb)
    assert not res.ok and "not connected" in res.violation
    emb2 = MinorEmbedding(path_graph(2), (vs(4, [0]), vs(4, [3])))
    res2 = validate_minor(g, emb2)
    assert not res2.ok and "no edge" in res2.violation


def test_reduce_degree3_low_degree_unchanged():
    for h in [complete_graph(4), cycle_graph(3)]:
        reduced, expansion = reduce_degree3(h)
        assert reduced == h
        assert all(len(e) == 1 for e in expansion)


def test_reduce_degree3_star():
    h = star_graph(5)
    reduced, expansion = reduce_degree3(h)
    assert reduced.n == 8  # center split into a 3-vertex path
    assert reduced.max_degree <= 3
    assert len(expansion[0]) == 3


def test_reduce_degree3_random():
    for seed in range(4):
        h = gen(GenSpec("gnp", {"n": 9, "p": 0.5}, seed=seed))
        reduced, expansion = reduce_degree3(h)
        assert reduced.max_degree <= 3
        check = validate_minor(reduced, MinorEmbedding(h, expansion))
        assert check.ok


def test_diameter_or_cut_complete_graph():
    res = diameter_or_cut(complete_graph(8), alpha=0.3)
    assert res.kind == "diameter"
    assert res.diameter == 1


def test_diameter_or_cut_long_path():
    g = path_graph(64)
    res = diameter_or_cut(g, alpha=1.0)
    assert res.kind == "cut"
    assert len(res.cut) <= 32
    assert res.cut_boundary <= 1.0 * len(res.cut)
    # at alpha = 0.1 the certified bound C0*log2(n) exceeds the path's
    # diameter, so the diameter branch is the correct verdict there
    res2 = diameter_or_cut(g, alpha=0.1)
    assert res2.kind == "diameter"
    assert res2.diameter == 63 <= res2.bound


def test_diameter_or_cut_c8_diameter_branch():
    res = diameter_or_cut(cycle_graph(8), alpha=0.9)
    assert res.kind == "diameter"
    assert res.diameter == 4
    assert res.diameter <= res.bound


def test_diameter_or_cut_disconnected():
    g = disjoint_union(complete_graph(3), complete_graph(5))
    res = diameter_or_cut(g, alpha=0.5)
    assert res.kind == "cut"
    assert res.cut_boundary == 0
    assert len(res.cut) == 3


def test_embed_or_separate_cycle_vs_k4_gives_separator():
    g = cycle_graph(64)
    res = embed_or_separate(g, complete_graph(4), alpha=0.5, allow_oversized=True)
    assert res.kind == "separator"
    sep = res.separator
    assert sep.size <= 0.5 * 64
    for v in sep.a:
        for w in g.adj[v]:
            assert w not in sep.b


def test_embed_or_separate_k16_embeds_k4():
    g = complete_graph(16)
    res = embed_or_separate(g, complete_graph(4), alpha=0.3, allow_oversized=True)
    assert res.kind == "embedding"
    assert validate_minor(g, res.embedding).ok


def test_embed_or_separate_single_vertex_target():
    g = cycle_graph(12)
    res = embed_or_separate(g, Graph(1, []), alpha=0.9, allow_oversized=True)
    assert res.kind == "embedding"
    assert len(res.embedding.branch_sets[0]) >= 1


def test_embed_or_separate_size_precondition():
    with pytest.raises(ValueError, match="size precondition"):
        embed_or_separate(cycle_graph(64), complete_graph(4), alpha=0.5)


def test_connected_hitting_set_single_full_target():
    g = complete_graph(6)
    res = connected_hitting_set(g, [VertexSet.full(6)], beta=0.5, seed=3)
    assert len(res.y) == 1  # pruned to the start vertex
    assert not res.preconditions_ok  # k*s < 2n is flagged


def test_connected_hitting_set_two_half_targets():
    g = complete_graph(50)
    t1 = vs(50, range(25))
    t2 = vs(50, range(25, 50))
    res = connected_hitting_set(g, [t1, t2, t1, t2], beta=0.5, seed=9)
    got = res.y
    assert any(v in t1 for v in got) and any(v in t2 for v in got)
    sub, _ = induce(g, got)
    assert sub.is_connected()


def test_connected_hitting_set_regular_graph():
    g = gen(GenSpec("random_regular", {"n": 300, "d": 3}, seed=5))
    targets = [vs(300, range(i * 15, (i + 1) * 15)) for i in range(20)]
    res = connected_hitting_set(g, targets, beta=0.25, seed=11, walk_length=400)
    for t in targets:
        assert any(v in t for v in res.y)
    sub, _ = induce(g, res.y)
    assert sub.is_connected()


def test_clique_minor_on_complete_graph_with_overrides():
    g = complete_graph(100)
    res = clique_minor(g, alpha=0.5, seed=7, b=10, k=5, beta=0.25,
                       walk_length=20, pad_dummy_targets=False)
    assert res.kind == "minor"
    assert res.embedding.h.num_edges == 10
    assert validate_minor(g, res.embedding).ok
    assert res.c_effective == pytest.approx(0.5)


def test_clique_minor_cycle_fails_with_evidence():
    # desk-sized cycle: the isoperimetric hypothesis is exactly refuted and
    # the loop ends in the evidence branch
    g = cycle_graph(16)
    res = clique_minor(g, alpha=0.5, seed=3, b=3, k=3, beta=0.25,
                       walk_length=8, pad_dummy_targets=False)
    assert res.kind == "failure"
    assert not res.hypothesis_ok
    assert "a_size" in res.evidence or res.notes


def test_clique_minor_random_cubic():
    g = gen(GenSpec("random_regular", {"n": 400, "d": 3}, seed=2))
    res = clique_minor(g, alpha=0.1, seed=17, b=30, k=4, beta=0.04,
                       walk_length=60, pad_dummy_targets=False)
    assert res.kind == "minor", res.notes
    assert res.k >= 3
    assert validate_minor(g, res.embedding).ok
    assert res.c_effective == pytest.approx(4 / math.sqrt(400))


def test_ccl_values():
    assert ccl_bruteforce(cycle_graph(5)) == 3
    assert ccl_bruteforce(complete_graph(6)) == 6
    assert ccl_bruteforce(petersen_graph()) == 5


def test_ccl_refuses_oversized():
    with pytest.raises(ValueError):
        ccl_bruteforce(cycle_graph(11))


def test_embeddings_respect_ccl_bound():
    for seed in range(4):
        g = gen(GenSpec("gnp", {"n": 9, "p": 0.55}, seed=seed))
        limit = ccl_bruteforce(g)
        for k in range(2, limit + 1):
            res = clique_minor(g, alpha=0.2, seed=seed, b=1, k=k,
                               beta=0.5, walk_length=4, pad_dummy_targets=False)
            if res.kind == "minor":
                assert res.k <= limit

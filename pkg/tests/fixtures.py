"""Named fixture graphs shared across the test suite."""

from __future__ import annotations

import itertools

from expanders.graph import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i + 1) for i in range(leaves)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def barbell_graph(clique: int) -> Graph:
    """Two cliques joined by a single bridge edge."""
    edges = list(itertools.combinations(range(clique), 2))
    edges += [(clique + i, clique + j) for i, j in itertools.combinations(range(clique), 2)]
    edges.append((clique - 1, clique))
    return Graph(2 * clique, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
        n += g.n
    return Graph(n, edges)

"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from lrw1.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picked = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph(n, sorted(picked))


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    # a random spanning tree plus extra edges keeps the graph connected
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        edges |= draw(st.sets(st.sampled_from(pairs)))
    return Graph(n, sorted(edges))


def relabelled_edge_set(graph: Graph) -> set[frozenset]:
    """Edges expressed in label space, for comparing induced subgraphs."""
    return {frozenset((graph.labels[u], graph.labels[v])) for u, v in graph.edges}

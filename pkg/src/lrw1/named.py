"""Hand-built graphs used in tests, catalogs and obstruction reports."""

from __future__ import annotations

from .graph import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices, centred at vertex 0."""
    return Graph(n, [(0, i) for i in range(1, n)])


def net_graph() -> Graph:
    """Triangle 0,1,2 with one pendant vertex on each corner."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def octahedron_graph() -> Graph:
    """K6 minus a perfect matching (the complement of three disjoint edges)."""
    skip = {(0, 1), (2, 3), (4, 5)}
    return Graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in skip])


def house_graph() -> Graph:
    """Square 0,1,2,3 with a roof vertex 4 on top of edge 0-1."""
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])


def gem_graph() -> Graph:
    """Path 0-1-2-3 plus a vertex 4 adjacent to the whole path."""
    return Graph(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def domino_graph() -> Graph:
    """Two squares sharing an edge: the 6-cycle 0..5 plus the chord 1-4."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])


def spider_graph(legs: int = 3, leg_length: int = 2) -> Graph:
    """A centre vertex with `legs` disjoint paths of `leg_length` hanging off."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def caterpillar_graph(spine: int, leaves: list[int]) -> Graph:
    """Caterpillar with a path spine and leaves[i] pendant vertices on spine i."""
    if spine < 1 or len(leaves) != spine:
        raise ValueError("need one leaf count per spine vertex")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, k in enumerate(leaves):
        for _ in range(k):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)

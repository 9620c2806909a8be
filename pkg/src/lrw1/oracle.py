"""Brute-force references and corpus generators for the recognition pipeline.

Everything here answers questions by exhaustion: exact linear rank-width by a
memoised search over vertex-ordering prefixes, splits by enumerating
bipartitions, canonical decompositions by top-down refinement plus merging,
vertex-minors by state-space search over local complementations and
deletions.  Guards keep each operation at desk scale.
"""

from __future__ import annotations

import itertools
import os
import random
from importlib import resources
from pathlib import Path

from .dh import pruning_sequence
from .errors import CapExceeded, Disconnected, TooLarge
from .gf2 import rank_of_rows
from .graph import (
    Graph,
    canonical_form,
    connected_components,
    induced_subgraph,
    local_complement,
    parse_graph,
    to_graph6,
)
from .splitdec import (
    Decomposition,
    DecompositionBuilder,
    _classify_adj,
    _cut_rank_generic,
    canonical_decomposition_dh,
    split_tree,
)

_LRW_GUARD = 10
_SPLIT_GUARD = 16
_ORBIT_GUARD = 8


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- exact linear rank-width ---------------------------------------------------


def brute_lrw(graph: Graph) -> int:
    """Exact linear rank-width by minimising over all vertex orderings.

    Implemented as a memoised search over ordering prefixes: the best
    achievable maximum for a prefix set does not depend on the order inside
    the prefix, so the search visits each subset once.  The value equals the
    plain minimum over all n! orderings (cross-checked in tests).
    """
    return _lrw_table(graph)[0]


def brute_lrw_ordering(graph: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact linear rank-width together with one optimal ordering."""
    value, best = _lrw_table(graph)
    order = []
    mask = (1 << graph.n) - 1
    while mask:
        # peeling any v whose remaining-set optimum fits the budget is safe
        take = min(v for v in _bits(mask) if best[mask ^ (1 << v)] <= best[mask])
        order.append(take)
        mask ^= 1 << take
    order.reverse()
    return value, tuple(order)


def _lrw_table(graph: Graph) -> tuple[int, dict[int, int]]:
    if graph.n > _LRW_GUARD:
        raise TooLarge(f"exact linear rank-width guard is {_LRW_GUARD} vertices")
    n = graph.n
    if n == 0:
        return 0, {0: 0}
    masks = graph.adjacency_masks()
    full = (1 << n) - 1
    cut = [0] * (full + 1)
    for mask in range(1, full + 1):
        cut[mask] = rank_of_rows(masks[v] & ~mask for v in _bits(mask))
    best = {0: 0}
    for mask in sorted(range(1, full + 1), key=int.bit_count):
        incoming = min(best[mask ^ (1 << v)] for v in _bits(mask))
        best[mask] = max(cut[mask], incoming)
    return best[full], best


def brute_lrw_by_enumeration(graph: Graph) -> int:
    """Plain minimum over every ordering; only for cross-checking the search."""
    from .gf2 import cutrank_of_ordering

    if graph.n > 7:
        raise TooLarge("factorial enumeration capped at 7 vertices")
    if graph.n == 0:
        return 0
    return min(cutrank_of_ordering(graph, p) for p in itertools.permutations(range(graph.n)))


# -- splits ----------------------------------------------------------------------


def brute_splits(graph: Graph) -> list[tuple[int, ...]]:
    """All splits, reported as the side containing vertex 0, sorted."""
    if graph.n > _SPLIT_GUARD:
        raise TooLarge(f"split enumeration guard is {_SPLIT_GUARD} vertices")
    if graph.n == 0 or len(connected_components(graph)) != 1:
        raise Disconnected("splits are defined for connected graphs")
    n = graph.n
    masks = graph.adjacency_masks()
    full = (1 << n) - 1
    out = []
    for m in range(1 << (n - 1)):
        mask = (m << 1) | 1
        size = mask.bit_count()
        if size < 2 or n - size < 2:
            continue
        if rank_of_rows(masks[v] & ~mask for v in _bits(mask)) == 1:
            out.append(tuple(sorted(_bits(mask))))
    return sorted(out)


def _overlaps(m1: int, m2: int, full: int) -> bool:
    return bool(m1 & m2) and bool(m1 & ~m2 & full) and bool(~m1 & m2 & full) and bool(~m1 & ~m2 & full)


def brute_strong_splits(graph: Graph) -> list[tuple[int, ...]]:
    """Splits that overlap no other split (as bipartitions)."""
    splits = brute_splits(graph)
    full = (1 << graph.n) - 1
    masks = [sum(1 << v for v in s) for s in splits]
    out = []
    for i, m1 in enumerate(masks):
        if all(i == j or not _overlaps(m1, m2, full) for j, m2 in enumerate(masks)):
            out.append(splits[i])
    return out


# -- top-down canonical decomposition ---------------------------------------------


def _block_splits(adj: dict[int, set[int]]) -> list[frozenset[int]]:
    vs = sorted(adj)
    n = len(vs)
    if n < 4:
        return []
    anchor, others = vs[0], vs[1:]
    out = []
    for mask in range(1 << (n - 1)):
        side = {anchor}
        side.update(others[i] for i in range(n - 1) if (mask >> i) & 1)
        rest = set(vs) - side
        if len(side) < 2 or len(rest) < 2:
            continue
        if _cut_rank_generic(adj, side, rest) == 1:
            out.append(frozenset(side))
    return out


def _block_strong_splits(adj: dict[int, set[int]]) -> list[frozenset[int]]:
    splits = _block_splits(adj)
    universe = frozenset(adj)
    strong = []
    for s in splits:
        t = universe - s
        clear = True
        for s2 in splits:
            if s2 == s:
                continue
            t2 = universe - s2
            if (s & s2) and (s & t2) and (t & s2) and (t & t2):
                clear = False
                break
        if clear:
            strong.append(s)
    return strong


def brute_canonical_decomposition(graph: Graph) -> Decomposition:
    """Canonical decomposition by iterated refinement along strong splits.

    Each block is split along a strong split of its block graph (smallest
    canonical side first) until none remains; in a clique or a star every
    split is overlapped by another, so degenerate blocks survive intact.  A
    merge pass guards the canonical adjacency conditions afterwards, though
    strong-split refinement is not expected to violate them.
    """
    if graph.n > _LRW_GUARD:
        raise TooLarge(f"canonical decomposition guard is {_LRW_GUARD} vertices")
    if graph.n == 0 or len(connected_components(graph)) != 1:
        raise Disconnected("decomposition is defined for connected graphs")
    builder = DecompositionBuilder()
    builder.add_block({v: set(graph.adj[v]) for v in range(graph.n)})
    while True:
        refined = False
        for bid in sorted(builder.badj):
            splits = _block_strong_splits(builder.badj[bid])
            if splits:
                side = min(splits, key=lambda s: (len(s), tuple(sorted(s))))
                builder.refine_block(bid, side)
                refined = True
                break
        if not refined:
            break
    while True:
        merged = False
        pairs = sorted(
            {tuple(sorted((m, p))) for m, p in builder.partner.items()},
            key=lambda t: (-t[1], -t[0]),
        )
        for m1, m2 in pairs:
            k1, c1 = _classify_adj(builder.badj[builder.mhome[m1]])
            k2, c2 = _classify_adj(builder.badj[builder.mhome[m2]])
            if (k1 == "clique" and k2 == "clique") or (
                k1 == "star" and k2 == "star" and ((c1 == m1) != (c2 == m2))
            ):
                builder.merge_pair(m1, m2)
                merged = True
                break
        if not merged:
            break
    return builder.freeze(graph)


# -- local complementation orbits and vertex-minors --------------------------------


def local_equivalence_orbit(graph: Graph, cap: int = 10**6) -> frozenset[Graph]:
    """Closure of a graph under local complementation at every vertex."""
    if graph.n > _ORBIT_GUARD:
        raise TooLarge(f"orbit guard is {_ORBIT_GUARD} vertices")
    seen = {graph}
    frontier = [graph]
    while frontier:
        g = frontier.pop()
        for v in range(g.n):
            if g.degree(v) < 2:
                continue  # complementing within 0 or 1 neighbours changes nothing
            h = local_complement(g, v)
            if h not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"orbit exceeded cap {cap}")
                seen.add(h)
                frontier.append(h)
    return frozenset(seen)


def has_vertex_minor(graph: Graph, target: Graph) -> bool:
    """True iff the target appears as a vertex-minor of the graph.

    Interleaved search over local complementations and vertex deletions,
    deduplicated by canonical form so the state space is orbits of graphs
    rather than labelled graphs.
    """
    if graph.n > _ORBIT_GUARD:
        raise TooLarge(f"vertex-minor search guard is {_ORBIT_GUARD} vertices")
    return has_any_vertex_minor(graph, [target])


def has_any_vertex_minor(graph: Graph, targets: list[Graph]) -> bool:
    """True iff some target occurs as a vertex-minor; shares one search."""
    if graph.n > _ORBIT_GUARD:
        raise TooLarge(f"vertex-minor search guard is {_ORBIT_GUARD} vertices")
    by_size: dict[int, set[tuple[int, int]]] = {}
    for t in targets:
        by_size.setdefault(t.n, set()).add(canonical_form(t))
    if not by_size:
        return False
    min_size = min(by_size)

    def hit(g: Graph, key: tuple[int, int]) -> bool:
        return g.n in by_size and key in by_size[g.n]

    start_key = canonical_form(graph)
    if hit(graph, start_key):
        return True
    if graph.n < min_size:
        return False
    seen = {start_key}
    frontier = [graph]
    while frontier:
        g = frontier.pop()
        succs = []
        for v in range(g.n):
            if g.degree(v) >= 2:
                succs.append(local_complement(g, v))
        if g.n > min_size:
            for v in range(g.n):
                succs.append(induced_subgraph(g, [u for u in range(g.n) if u != v]))
        for s in succs:
            key = canonical_form(s)
            if key in seen:
                continue
            if hit(s, key):
                return True
            seen.add(key)
            frontier.append(s)
    return False


def graphs_with_vertex_minor(targets: list[Graph], max_n: int) -> set[tuple[int, int]]:
    """Canonical forms of every graph on <= max_n vertices containing one of
    the targets as a vertex-minor.

    Computed once as the reverse closure of the targets under local
    complementation and single-vertex addition with an arbitrary
    neighbourhood; cheaper than searching from each candidate graph.
    """
    seen: set[tuple[int, int]] = set()
    frontier: list[Graph] = []
    for t in targets:
        key = canonical_form(t)
        if key not in seen:
            seen.add(key)
            frontier.append(t)
    while frontier:
        g = frontier.pop()
        succs = []
        for v in range(g.n):
            if g.degree(v) >= 2:
                succs.append(local_complement(g, v))
        if g.n < max_n:
            edges = list(g.edges)
            for nb_mask in range(1 << g.n):
                extra = [(v, g.n) for v in _bits(nb_mask)]
                succs.append(Graph(g.n + 1, edges + extra))
        for s in succs:
            key = canonical_form(s)
            if key not in seen:
                seen.add(key)
                frontier.append(s)
    return seen


# -- direct distance-hereditary test ------------------------------------------------


def _bfs_distances(adj: list[frozenset[int]], inside: set[int], start: int) -> dict[int, int]:
    dist = {start: 0}
    queue = [start]
    while queue:
        nxt = []
        for u in queue:
            for w in adj[u]:
                if w in inside and w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        queue = nxt
    return dist


def is_dh_by_distances(graph: Graph) -> bool:
    """Definition-level test: every connected induced subgraph preserves
    pairwise distances of the host graph."""
    if graph.n > _ORBIT_GUARD:
        raise TooLarge(f"distance test guard is {_ORBIT_GUARD} vertices")
    n = graph.n
    everything = set(range(n))
    host = [_bfs_distances(graph.adj, everything, v) for v in range(n)]
    for mask in range(1, 1 << n):
        inside = set(_bits(mask))
        if len(inside) < 3:
            continue
        start = min(inside)
        dist = _bfs_distances(graph.adj, inside, start)
        if len(dist) < len(inside):
            continue  # disconnected induced subgraph
        for u in inside:
            du = _bfs_distances(graph.adj, inside, u)
            for w in inside:
                if du[w] != host[u][w]:
                    return False
    return True


# -- corpus generators ---------------------------------------------------------------


def random_dh_graph(n: int, seed: int) -> Graph:
    """Connected distance-hereditary graph grown by seeded pendant/twin moves."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    adj: dict[int, set[int]] = {0: set()}
    for w in range(1, n):
        v = rng.randrange(w)
        ops = ("pendant", "true_twin") if w == 1 else ("pendant", "true_twin", "false_twin")
        op = rng.choice(ops)
        if op == "pendant":
            nb = {v}
        elif op == "true_twin":
            nb = {v} | adj[v]
        else:
            nb = set(adj[v])
        adj[w] = set(nb)
        for u in nb:
            adj[u].add(w)
    edges = [(u, v) for u in adj for v in adj[u] if u < v]
    return Graph(n, edges)


def random_lrw1_graph(n: int, seed: int) -> Graph:
    """Seeded graph of linear rank-width <= 1: a relabelled random caterpillar
    scrambled by a few local complementations (which preserve the width)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    spine = rng.randint(1, n)
    edges = [(i, i + 1) for i in range(spine - 1)]
    for leaf in range(spine, n):
        edges.append((rng.randrange(spine), leaf))
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph(n, [(perm[u], perm[v]) for u, v in edges])
    for _ in range(rng.randint(0, 6)):
        g = local_complement(g, rng.randrange(n))
    return g


def random_branching_dh_graph(n: int, seed: int, max_tries: int = 64) -> Graph:
    """Seeded connected DH graph whose split tree has a node of degree >= 3."""
    for attempt in range(max_tries):
        g = random_dh_graph(n, seed * max_tries + attempt)
        seq = pruning_sequence(g)
        tree = split_tree(canonical_decomposition_dh(g, seq))
        if not tree.is_path():
            return g
    raise RuntimeError(f"no branching DH graph found for n={n}, seed={seed}")


# -- exhaustive small-graph corpus ------------------------------------------------------

_ENUM_CACHE: dict[int, list[Graph]] = {}


def enumerate_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, deterministically ordered.

    Grown by adding one vertex with every possible neighbourhood to each
    (n-1)-vertex graph and deduplicating by canonical form.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n in _ENUM_CACHE:
        return list(_ENUM_CACHE[n])
    if n == 0:
        out = [Graph(0)]
    elif n == 1:
        out = [Graph(1)]
    else:
        seen: dict[tuple[int, int], Graph] = {}
        for g in enumerate_graphs(n - 1):
            base_edges = list(g.edges)
            for mask in range(1 << (n - 1)):
                extra = [(v, n - 1) for v in _bits(mask)]
                h = Graph(n, base_edges + extra)
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
        out = [seen[k] for k in sorted(seen)]
    _ENUM_CACHE[n] = out
    return list(out)


def enumerate_connected_graphs(n: int) -> list[Graph]:
    return [g for g in enumerate_graphs(n) if n <= 1 or len(connected_components(g)) == 1]


# -- fixture files -----------------------------------------------------------------------

_FIXTURES_ENV = "LRW1_FIXTURES"


def fixtures_dir() -> Path:
    """Fixture directory: the LRW1_FIXTURES override or the packaged copy."""
    env = os.environ.get(_FIXTURES_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("lrw1") / "fixtures"))


def fixture_path(n: int) -> Path:
    return fixtures_dir() / f"n{n}.g6"


def load_fixture_file(path: Path | str) -> list[Graph]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(parse_graph(line, "graph6"))
    return out


def load_fixture_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, read from the fixture files."""
    return load_fixture_file(fixture_path(n))


def write_fixture_files(directory: Path | str, max_n: int = 7) -> dict[int, int]:
    """Write one graph6 file per vertex count; returns the graph counts."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    counts = {}
    for n in range(1, max_n + 1):
        graphs = enumerate_graphs(n)
        with open(directory / f"n{n}.g6", "w", encoding="ascii") as fh:
            for g in graphs:
                fh.write(to_graph6(g) + "\n")
        counts[n] = len(graphs)
    return counts

"""Labeled simple graphs and the structural operations built on them.

Vertices are dense ids 0..n-1; input names live in a label table so results
can always be reported in the caller's terms.  Graphs are immutable and every
operation returns a fresh graph.  Equality is exact (same vertex count, same
labels, same edge set), never up to isomorphism: certificates must point at
concrete input vertices.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from .errors import InvalidVertex, NotAnEdge, ParseError, TooLarge


class Graph:
    """Undirected loop-free graph with frozen-set adjacency."""

    __slots__ = ("n", "labels", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise ValueError("label table size must match vertex count")
        self._hash = None

    # -- basic queries ----------------------------------------------------

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def adjacency_masks(self) -> list[int]:
        """Adjacency rows as integers (bit v of row u set iff uv is an edge)."""
        return [sum(1 << v for v in s) for s in self.adj]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.labels, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# -- surgery ---------------------------------------------------------------


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by a vertex subset, reindexed to dense ids.

    Vertices keep their original labels, so two induced subgraphs taken along
    different routes agree exactly when their label/edge structure agrees.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < graph.n:
            raise InvalidVertex(f"vertex {v} not in graph of order {graph.n}")
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u in vs for v in graph.adj[u] if v in pos and u < v]
    return Graph(len(vs), edges, labels=[graph.labels[v] for v in vs])


def local_complement(graph: Graph, x: int) -> Graph:
    """Complement the subgraph induced on the neighbourhood of x."""
    if not 0 <= x < graph.n:
        raise InvalidVertex(f"vertex {x} not in graph of order {graph.n}")
    adj = [set(s) for s in graph.adj]
    nb = sorted(graph.adj[x])
    for i, u in enumerate(nb):
        for w in nb[i + 1:]:
            if w in adj[u]:
                adj[u].discard(w)
                adj[w].discard(u)
            else:
                adj[u].add(w)
                adj[w].add(u)
    edges = [(u, v) for u in range(graph.n) for v in adj[u] if u < v]
    return Graph(graph.n, edges, labels=graph.labels)


def pivot(graph: Graph, x: int, y: int) -> Graph:
    """Pivot on the edge xy: the composition of local complements x, y, x."""
    if not (0 <= x < graph.n and 0 <= y < graph.n):
        raise InvalidVertex(f"pivot endpoints ({x},{y}) out of range")
    if not graph.has_edge(x, y):
        raise NotAnEdge(f"({x},{y}) is not an edge")
    return local_complement(local_complement(local_complement(graph, x), y), x)


def connected_components(graph: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * graph.n
    out = []
    for s in range(graph.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in graph.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(tuple(sorted(comp)))
    return out


# -- isomorphism (small graphs only) ----------------------------------------

_ISO_GUARD = 10


def is_isomorphic_small(a: Graph, b: Graph) -> bool:
    """Backtracking isomorphism test, guarded to at most 10 vertices."""
    if a.n > _ISO_GUARD or b.n > _ISO_GUARD:
        raise TooLarge(f"isomorphism guard is {_ISO_GUARD} vertices")
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(map(len, a.adj)) != sorted(map(len, b.adj)):
        return False
    order = sorted(range(a.n), key=lambda v: -a.degree(v))
    used = [False] * b.n
    image = [-1] * a.n

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(b.n):
            if used[w] or b.degree(w) != a.degree(v):
                continue
            ok = True
            for u in order[:i]:
                if (u in a.adj[v]) != (image[u] in b.adj[w]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if place(i + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return place(0)


def _wl_colors(graph: Graph) -> list[int]:
    colors = [graph.degree(v) for v in range(graph.n)]
    for _ in range(graph.n):
        sigs = [(colors[v], tuple(sorted(colors[u] for u in graph.adj[v]))) for v in range(graph.n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


_CANON_PERM_CAP = 1_000_000


def canonical_form(graph: Graph) -> tuple[int, int]:
    """Canonical key: two graphs get equal keys iff they are isomorphic.

    Vertices are first partitioned by iterated neighbourhood refinement; the
    key is the minimum edge bitstring over all orders compatible with that
    partition.  Meant for small graphs (catalog dedup, enumeration).
    """
    n = graph.n
    if n == 0:
        return (0, 0)
    colors = _wl_colors(graph)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    classes = [by_color[c] for c in sorted(by_color)]
    total = 1
    for c in classes:
        for k in range(2, len(c) + 1):
            total *= k
        if total > _CANON_PERM_CAP:
            raise TooLarge("too many candidate orders for canonical form")
    masks = graph.adjacency_masks()
    best = None
    for combo in itertools.product(*(itertools.permutations(c) for c in classes)):
        perm = tuple(itertools.chain.from_iterable(combo))
        bits = 0
        for j in range(1, n):
            mj = masks[perm[j]]
            for i in range(j):
                bits = (bits << 1) | ((mj >> perm[i]) & 1)
        if best is None or bits < best:
            best = bits
    return (n, best)


# -- parsing and serialization ----------------------------------------------


def parse_graph(text: str | bytes, fmt: str = "edge-list") -> Graph:
    """Parse a graph from edge-list or graph6 text."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not ASCII: {exc}") from None
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "graph6":
        return _parse_graph6(text)
    raise ValueError(f"unknown format {fmt!r}")


def serialize_graph(graph: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        lines = [f"{graph.n} {graph.edge_count()}"]
        lines.extend(f"{u} {v}" for u, v in graph.edges)
        return "\n".join(lines) + "\n"
    if fmt == "graph6":
        return to_graph6(graph)
    raise ValueError(f"unknown format {fmt!r}")


def _parse_edge_list(text: str) -> Graph:
    numbered = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            numbered.append((i, line))
    if not numbered:
        raise ParseError("missing header line 'n m'")
    head_no, head = numbered[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", head_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must contain two integers", head_no) from None
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", head_no)
    body = numbered[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    seen = set()
    for line_no, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", line_no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in edge ({u},{v})", line_no)
        if u == v:
            raise ParseError(f"loop edge at vertex {u}", line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u},{v})", line_no)
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


_G6_HEADER = ">>graph6<<"


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 input")
    if any(ch.isspace() for ch in s):
        raise ParseError("graph6 input must be a single token")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ParseError("invalid graph6 character")
    if data[0] < 63:
        n, idx = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, idx = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        idx = 8
    else:
        raise ParseError("truncated graph6 vertex count")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - idx != need:
        raise ParseError(f"graph6 body has {len(data) - idx} groups, expected {need}")
    edges = []
    k = 0
    for d in data[idx:]:
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (d >> shift) & 1:
                    raise ParseError("nonzero padding bits in graph6 input")
                continue
            if (d >> shift) & 1:
                j = _g6_col(k)
                i = k - j * (j - 1) // 2
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def _g6_col(k: int) -> int:
    # column j of upper-triangle bit k: largest j with j*(j-1)/2 <= k
    j = 1
    while (j + 1) * j // 2 <= k:
        j += 1
    return j


def to_graph6(graph: Graph) -> str:
    n = graph.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if graph.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)

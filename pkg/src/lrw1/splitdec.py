"""Split decompositions of connected graphs.

A decomposition is a system of blocks: small graphs over a mixed vertex set
(original vertices have ids >= 0, markers have ids < 0) where partnered
markers pair blocks up.  Contracting a marker pair joins the solid
neighbourhoods of the two markers and removes them; contracting everything
recovers the original graph.

A decomposition is canonical when every block is a clique (>= 3 vertices), a
star (>= 3 vertices) or prime, no two clique blocks are adjacent, and two
adjacent star blocks point consistently (the marker pair is centre/centre or
leaf/leaf).  Every connected graph has exactly one canonical decomposition up
to marker renaming, which is what makes the incremental construction below
valid: after each insertion a single local repair restores the canonical
conditions, and uniqueness does the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from collections.abc import Iterable

from .dh import PruningSequence, replay_pruning
from .errors import (
    InvalidVertex,
    MalformedDecomposition,
    NotAPath,
    NotASplit,
    NotATreeEdge,
    NotDH,
)
from .gf2 import cutrank_of_cut, rank_of_rows
from .graph import Graph


# -- splits ------------------------------------------------------------------


def is_split(graph: Graph, side: Iterable[int]) -> bool:
    """True iff {side, rest} has both sides of size >= 2 and cut rank 1."""
    side_set = set(side)
    for v in side_set:
        if not 0 <= v < graph.n:
            raise InvalidVertex(f"vertex {v} not in graph of order {graph.n}")
    if len(side_set) < 2 or graph.n - len(side_set) < 2:
        return False
    return cutrank_of_cut(graph, side_set) == 1


def _cut_rank_generic(adj: dict[int, set[int]], side: set[int], rest: set[int]) -> int:
    cols = {v: i for i, v in enumerate(sorted(rest))}
    rows = []
    for u in sorted(side):
        m = 0
        for w in adj[u]:
            p = cols.get(w)
            if p is not None:
                m |= 1 << p
        rows.append(m)
    return rank_of_rows(rows)


def _classify_adj(adj: dict[int, set[int]]) -> tuple[str, int | None]:
    """Kind of a block graph: clique / star (with centre) / prime."""
    size = len(adj)
    if size < 3:
        return "prime", None
    if all(len(nb) == size - 1 for nb in adj.values()):
        return "clique", None
    centre = None
    for v, nb in adj.items():
        if len(nb) == size - 1:
            centre = v
        elif len(nb) != 1:
            return "prime", None
    if centre is None:
        return "prime", None
    return "star", centre


# -- decomposition data ------------------------------------------------------


@dataclass(frozen=True)
class Block:
    id: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # solid edges inside the block
    kind: str  # "clique" | "star" | "prime"
    centre: int | None  # star centre vertex (marker if negative)

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nbs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbs[u].add(v)
            nbs[v].add(u)
        return {v: frozenset(s) for v, s in nbs.items()}

    @property
    def own_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v >= 0)

    @property
    def marker_ids(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v < 0)


@dataclass(frozen=True)
class Marker:
    id: int
    home: int  # block id
    partner: int  # marker id in the neighbouring block


@dataclass(frozen=True)
class Decomposition:
    blocks: tuple[Block, ...]
    markers: tuple[Marker, ...]
    origin: Graph

    @cached_property
    def _block_by_id(self) -> dict[int, Block]:
        return {b.id: b for b in self.blocks}

    @cached_property
    def _marker_by_id(self) -> dict[int, Marker]:
        return {m.id: m for m in self.markers}

    def block(self, bid: int) -> Block:
        return self._block_by_id[bid]

    def partner_of(self, mid: int) -> int:
        return self._marker_by_id[mid].partner

    def home_of(self, mid: int) -> int:
        return self._marker_by_id[mid].home

    @cached_property
    def block_of_real(self) -> dict[int, int]:
        out = {}
        for b in self.blocks:
            for v in b.own_vertices:
                out[v] = b.id
        return out

    @cached_property
    def marker_pairs(self) -> tuple[tuple[int, int], ...]:
        pairs = {tuple(sorted((m.id, m.partner))) for m in self.markers}
        return tuple(sorted(pairs))


# -- builder -----------------------------------------------------------------


class DecompositionBuilder:
    """Mutable block system; freeze() turns it into a Decomposition."""

    def __init__(self):
        self.badj: dict[int, dict[int, set[int]]] = {}
        self.partner: dict[int, int] = {}
        self.mhome: dict[int, int] = {}
        self.vhome: dict[int, int] = {}
        self._next_block = 0
        self._next_marker = -1

    def add_block(self, adj: dict[int, set[int]]) -> int:
        bid = self._next_block
        self._next_block += 1
        self.badj[bid] = {v: set(nb) for v, nb in adj.items()}
        for v in adj:
            if v >= 0:
                self.vhome[v] = bid
            else:
                self.mhome[v] = bid
        return bid

    def fresh_marker(self) -> int:
        m = self._next_marker
        self._next_marker -= 1
        return m

    def pair(self, a: int, b: int) -> None:
        self.partner[a] = b
        self.partner[b] = a

    def markerize(self, bid: int, v: int) -> int:
        """Replace original vertex v inside its block by a fresh marker."""
        adj = self.badj[bid]
        m = self.fresh_marker()
        nb = adj.pop(v)
        adj[m] = nb
        for u in nb:
            u_nb = adj[u]
            u_nb.discard(v)
            u_nb.add(m)
        del self.vhome[v]
        self.mhome[m] = bid
        return m

    def merge_pair(self, h1: int, h2: int) -> int:
        """Contract the marked edge h1-h2, fusing its two blocks into one."""
        b1 = self.mhome.pop(h1)
        b2 = self.mhome.pop(h2)
        del self.partner[h1]
        del self.partner[h2]
        a1 = self.badj.pop(b1)
        a2 = self.badj.pop(b2)
        n1 = a1.pop(h1)
        n2 = a2.pop(h2)
        for u in n1:
            a1[u].discard(h1)
        for u in n2:
            a2[u].discard(h2)
        merged = a1
        merged.update(a2)
        for x in n1:
            for y in n2:
                merged[x].add(y)
                merged[y].add(x)
        return self.add_block(merged)

    def refine_block(self, bid: int, side: Iterable[int]) -> tuple[int, int]:
        """Split one block along a split of its block graph."""
        adj = self.badj[bid]
        side_set = set(side)
        rest = set(adj) - side_set
        if side_set - set(adj):
            raise NotASplit("side is not a subset of the block")
        if len(side_set) < 2 or len(rest) < 2 or _cut_rank_generic(adj, side_set, rest) != 1:
            raise NotASplit(f"{sorted(side_set)} is not a split of block {bid}")
        hx = self.fresh_marker()
        hy = self.fresh_marker()
        ax = {v: adj[v] & side_set for v in side_set}
        fx = {v for v in side_set if adj[v] & rest}
        ax[hx] = set(fx)
        for v in fx:
            ax[v].add(hx)
        ay = {v: adj[v] & rest for v in rest}
        fy = {v for v in rest if adj[v] & side_set}
        ay[hy] = set(fy)
        for v in fy:
            ay[v].add(hy)
        del self.badj[bid]
        b1 = self.add_block(ax)
        b2 = self.add_block(ay)
        self.pair(hx, hy)
        return b1, b2

    def freeze(self, origin: Graph) -> Decomposition:
        blocks = []
        for bid in sorted(self.badj):
            adj = self.badj[bid]
            kind, centre = _classify_adj(adj)
            edges = sorted({(min(u, v), max(u, v)) for u in adj for v in adj[u]})
            blocks.append(Block(bid, tuple(sorted(adj)), tuple(edges), kind, centre))
        markers = []
        for m in sorted(self.mhome, reverse=True):
            if m not in self.partner:
                raise MalformedDecomposition(f"marker {m} has no partner")
            markers.append(Marker(m, self.mhome[m], self.partner[m]))
        for m in markers:
            if self.mhome[m.partner] == m.home:
                raise MalformedDecomposition("partnered markers share a block")
        reals = sorted(self.vhome)
        if reals != list(range(origin.n)):
            raise MalformedDecomposition("blocks do not partition the original vertices")
        return Decomposition(tuple(blocks), tuple(markers), origin)


# -- refinement and recomposition (graph-level API) ---------------------------


def refine(graph: Graph, side: Iterable[int]) -> tuple[Block, Block]:
    """Split a block graph along a split of its vertex set.

    Returns the two sides as blocks carrying fresh partnered markers -1 (on
    the side) and -2 (on the rest); each marker is adjacent to exactly the
    vertices with neighbours across the split.
    """
    side_set = set(side)
    for v in side_set:
        if not 0 <= v < graph.n:
            raise InvalidVertex(f"vertex {v} not in graph of order {graph.n}")
    if not is_split(graph, side_set):
        raise NotASplit(f"{sorted(side_set)} is not a split")
    builder = DecompositionBuilder()
    bid = builder.add_block({v: set(graph.adj[v]) for v in range(graph.n)})
    builder.refine_block(bid, side_set)
    frozen = builder.freeze(graph)
    bx = next(b for b in frozen.blocks if -1 in b.vertices)
    by = next(b for b in frozen.blocks if -2 in b.vertices)
    return bx, by


def contract_blocks(blocks: Iterable[Block], pairs: Iterable[tuple[int, int]]) -> dict[int, frozenset[int]]:
    """Contract marker pairs across blocks; returns the joined adjacency."""
    adj: dict[int, set[int]] = {}
    for blk in blocks:
        for v, nb in blk.adj.items():
            if v in adj:
                raise MalformedDecomposition(f"vertex {v} appears in two blocks")
            adj[v] = set(nb)
    for h1, h2 in pairs:
        if h1 not in adj or h2 not in adj:
            raise MalformedDecomposition(f"marker pair ({h1},{h2}) missing from blocks")
        n1 = adj.pop(h1)
        n2 = adj.pop(h2)
        n1.discard(h2)
        n2.discard(h1)
        for u in n1:
            adj[u].discard(h1)
        for u in n2:
            adj[u].discard(h2)
        for x in n1:
            for y in n2:
                adj[x].add(y)
                adj[y].add(x)
    return {v: frozenset(nb) for v, nb in adj.items()}


def recompose(decomposition: Decomposition) -> Graph:
    """Contract every marked edge and rebuild the original graph."""
    adj = contract_blocks(decomposition.blocks, decomposition.marker_pairs)
    if any(v < 0 for v in adj):
        raise MalformedDecomposition("unpaired marker survived recomposition")
    if set(adj) != set(range(decomposition.origin.n)):
        raise MalformedDecomposition("recomposition changed the vertex set")
    edges = [(u, v) for u in adj for v in adj[u] if u < v]
    return Graph(decomposition.origin.n, edges, labels=decomposition.origin.labels)


# -- canonical decomposition of distance-hereditary graphs --------------------


def _insert_vertex(builder: DecompositionBuilder, kind: str, w: int, v: int) -> None:
    """Re-insert w (a pendant or twin of v) and repair canonicity locally.

    v is replaced inside its block by a marker, and {v, w} becomes a fresh
    block whose shape encodes the move: star centred at v for a pendant,
    triangle for a true twin, star centred at the new marker for a false
    twin.  The only canonical condition that can break is across the one new
    marked edge, where a single contraction repairs it; merged blocks keep
    their kind and centre slot, so no repair can cascade.
    """
    bid = builder.vhome[v]
    h_old = builder.markerize(bid, v)
    h_new = builder.fresh_marker()
    if kind == "pendant":
        new_adj = {v: {w, h_new}, w: {v}, h_new: {v}}
    elif kind == "true_twin":
        new_adj = {v: {w, h_new}, w: {v, h_new}, h_new: {v, w}}
    elif kind == "false_twin":
        new_adj = {v: {h_new}, w: {h_new}, h_new: {v, w}}
    else:
        raise ValueError(f"unknown step kind {kind!r}")
    new_bid = builder.add_block(new_adj)
    builder.pair(h_new, h_old)
    k_new, c_new = _classify_adj(builder.badj[new_bid])
    k_old, c_old = _classify_adj(builder.badj[bid])
    if (k_new == "clique" and k_old == "clique") or (
        k_new == "star" and k_old == "star" and ((c_new == h_new) != (c_old == h_old))
    ):
        builder.merge_pair(h_new, h_old)


def canonical_decomposition_dh(graph: Graph, seq: PruningSequence | None) -> Decomposition:
    """Canonical decomposition of a connected distance-hereditary graph.

    Built by replaying the pruning sequence backwards; each insertion is a
    local block operation followed by at most one merge.  Graphs on up to
    three vertices are a single block by definition (splits need two vertices
    on both sides).
    """
    if seq is None:
        raise NotDH("graph is not distance hereditary")
    replay_pruning(graph, seq)
    builder = DecompositionBuilder()
    builder.add_block({seq.last: set()})
    current: dict[int, set[int]] = {seq.last: set()}
    for step in reversed(seq.steps):
        w, v = step.removed, step.anchor
        if step.kind == "pendant":
            new_nb = {v}
        elif step.kind == "true_twin":
            new_nb = {v} | current[v]
        else:
            new_nb = set(current[v])
        current[w] = set(new_nb)
        for u in new_nb:
            current[u].add(w)
        if len(current) <= 3:
            builder = DecompositionBuilder()
            builder.add_block({x: set(nb) for x, nb in current.items()})
        else:
            _insert_vertex(builder, step.kind, w, v)
    return builder.freeze(graph)


# -- split tree ----------------------------------------------------------------


@dataclass(frozen=True)
class TreeNode:
    id: int  # equals the block id
    kind: str
    centre: int | None
    own_vertices: tuple[int, ...]  # original vertices living in the block


@dataclass(frozen=True)
class SplitTree:
    nodes: tuple[TreeNode, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def _by_id(self) -> dict[int, TreeNode]:
        return {n.id: n for n in self.nodes}

    @cached_property
    def _adj(self) -> dict[int, tuple[int, ...]]:
        nbs: dict[int, list[int]] = {n.id: [] for n in self.nodes}
        for u, v in self.edges:
            nbs[u].append(v)
            nbs[v].append(u)
        return {k: tuple(sorted(v)) for k, v in nbs.items()}

    def node(self, nid: int) -> TreeNode:
        return self._by_id[nid]

    def neighbours(self, nid: int) -> tuple[int, ...]:
        return self._adj[nid]

    def degree(self, nid: int) -> int:
        return len(self._adj[nid])

    def is_path(self) -> bool:
        return all(len(nb) <= 2 for nb in self._adj.values())


def split_tree(decomposition: Decomposition) -> SplitTree:
    """Contract the solid edges: one node per block, one edge per marker pair."""
    nodes = tuple(
        TreeNode(b.id, b.kind, b.centre, b.own_vertices) for b in decomposition.blocks
    )
    edges = tuple(
        sorted(
            tuple(sorted((decomposition.home_of(a), decomposition.home_of(b))))
            for a, b in decomposition.marker_pairs
        )
    )
    if len(edges) != len(nodes) - 1:
        raise MalformedDecomposition("marker pairs do not form a tree")
    if nodes:
        seen = {nodes[0].id}
        stack = [nodes[0].id]
        adj: dict[int, list[int]] = {n.id: [] for n in nodes}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(nodes):
            raise MalformedDecomposition("block adjacency is not connected")
    return SplitTree(nodes, edges)


def side_vertices(tree: SplitTree, u: int, v: int) -> tuple[int, ...]:
    """Original vertices in the subtree on u's side of the tree edge uv."""
    if tuple(sorted((u, v))) not in tree.edges:
        raise NotATreeEdge(f"({u},{v}) is not a tree edge")
    out = []
    seen = {u, v}
    stack = [u]
    while stack:
        x = stack.pop()
        out.extend(tree.node(x).own_vertices)
        for y in tree.neighbours(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return tuple(sorted(out))


# -- canonicity validation -----------------------------------------------------


def _block_has_split(adj: dict[int, frozenset[int]]) -> bool:
    vs = sorted(adj)
    n = len(vs)
    if n < 4:
        return False
    mutable = {v: set(nb) for v, nb in adj.items()}
    anchor, others = vs[0], vs[1:]
    for mask in range(1 << (n - 1)):
        side = {anchor} | {others[i] for i in range(n - 1) if (mask >> i) & 1}
        rest = set(vs) - side
        if len(side) < 2 or len(rest) < 2:
            continue
        if _cut_rank_generic(mutable, side, rest) == 1:
            return True
    return False


_PRIME_CHECK_LIMIT = 16


def validate_canonical(decomposition: Decomposition) -> list[tuple]:
    """Structured violations of the canonical-decomposition conditions.

    Empty iff every block is a clique (>= 3), star (>= 3) or prime, no two
    clique blocks are adjacent, adjacent star blocks are oriented
    consistently, every marked edge is an isthmus of the block system, and
    recomposition returns exactly the original graph.
    """
    issues: list[tuple] = []
    d = decomposition
    by_id = {m.id: m for m in d.markers}
    for m in d.markers:
        p = by_id.get(m.partner)
        if p is None or p.partner != m.id:
            issues.append(("malformed", f"marker {m.id} pairing is not an involution"))
            return issues
        if p.home == m.home:
            issues.append(("malformed", f"markers {m.id},{p.id} share a block"))
            return issues
    try:
        rebuilt = recompose(d)
    except MalformedDecomposition as exc:
        issues.append(("malformed", str(exc)))
        return issues
    if rebuilt != d.origin:
        issues.append(("recompose-mismatch",))
    multi_block = len(d.blocks) > 1
    for blk in d.blocks:
        adj = {v: set(nb) for v, nb in blk.adj.items()}
        kind, centre = _classify_adj(adj)
        if (kind, centre) != (blk.kind, blk.centre):
            issues.append(("kind-mismatch", blk.id))
        if multi_block and len(blk.vertices) < 3:
            issues.append(("undersized-block", blk.id))
        if kind == "prime" and 4 <= len(blk.vertices) <= _PRIME_CHECK_LIMIT:
            if _block_has_split(blk.adj):
                issues.append(("splittable-prime", blk.id))
    for m1, m2 in d.marker_pairs:
        b1 = d.block(d.home_of(m1))
        b2 = d.block(d.home_of(m2))
        if b1.kind == "clique" and b2.kind == "clique":
            issues.append(("adjacent-cliques", b1.id, b2.id))
        if b1.kind == "star" and b2.kind == "star":
            if (b1.centre == m1) != (b2.centre == m2):
                issues.append(("star-orientation", b1.id, b2.id))
    # marked edges must be isthmuses of the block system
    sd_adj: dict[int, set[int]] = {}
    for blk in d.blocks:
        for v, nb in blk.adj.items():
            sd_adj.setdefault(v, set()).update(nb)
    for m1, m2 in d.marker_pairs:
        sd_adj[m1].add(m2)
        sd_adj[m2].add(m1)
    for m1, m2 in d.marker_pairs:
        seen = {m1}
        stack = [m1]
        reached = False
        while stack and not reached:
            x = stack.pop()
            for y in sd_adj[x]:
                if x == m1 and y == m2:
                    continue
                if y == m2:
                    reached = True
                    break
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if reached:
            issues.append(("marked-edge-not-isthmus", m1, m2))
    return issues


# -- comparison and export -----------------------------------------------------


def decompositions_isomorphic(a: Decomposition, b: Decomposition) -> bool:
    """Isomorphism of block systems fixing every original vertex pointwise.

    Original vertices anchor their blocks, so only markers need matching; a
    backtracking search maps markers preserving solid adjacency, marker
    partnering and block membership.
    """
    if a.origin != b.origin:
        return False
    if len(a.blocks) != len(b.blocks) or len(a.markers) != len(b.markers):
        return False
    bmap: dict[int, int] = {}
    for x in range(a.origin.n):
        ba, bb = a.block_of_real[x], b.block_of_real[x]
        if bmap.setdefault(ba, bb) != bb:
            return False
    for ba, bb in bmap.items():
        if a.block(ba).own_vertices != b.block(bb).own_vertices:
            return False
    sadj_a = {blk.id: blk.adj for blk in a.blocks}
    sadj_b = {blk.id: blk.adj for blk in b.blocks}

    def marker_sig(d: Decomposition, sadj, mid: int) -> tuple:
        blk = d.block(d.home_of(mid))
        nb = sadj[blk.id][mid]
        reals = frozenset(x for x in nb if x >= 0)
        return (
            reals,
            sum(1 for x in nb if x < 0),
            blk.kind,
            len(blk.vertices),
            blk.centre == mid,
        )

    ms_a = [m.id for m in a.markers]
    ms_b = [m.id for m in b.markers]
    sigs_b = {m: marker_sig(b, sadj_b, m) for m in ms_b}
    mmap: dict[int, int] = {}
    imap: dict[int, int] = {}

    def consistent(m: int, t: int) -> bool:
        ha, hb = a.home_of(m), b.home_of(t)
        if bmap.get(ha, hb) != hb:
            return False
        pa = a.partner_of(m)
        pb = b.partner_of(t)
        if pa in mmap and mmap[pa] != pb:
            return False
        if pb in imap and imap[pb] != pa:
            return False
        nb_a = sadj_a[ha][m]
        nb_b = sadj_b[hb][t]
        for x in nb_a:
            if x >= 0:
                if x not in nb_b:
                    return False
            elif x in mmap and mmap[x] not in nb_b:
                return False
        for y in nb_b:
            if y >= 0:
                if y not in nb_a:
                    return False
            elif y in imap and imap[y] not in nb_a:
                return False
        return True

    def place(i: int) -> bool:
        if i == len(ms_a):
            return True
        m = ms_a[i]
        sig = marker_sig(a, sadj_a, m)
        for t in ms_b:
            if t in imap or sigs_b[t] != sig or not consistent(m, t):
                continue
            ha = a.home_of(m)
            had_block = ha in bmap
            mmap[m] = t
            imap[t] = m
            if not had_block:
                bmap[ha] = b.home_of(t)
            if place(i + 1):
                return True
            del mmap[m]
            del imap[t]
            if not had_block:
                del bmap[ha]
        return False

    return place(0)


def decomposition_to_dot(decomposition: Decomposition) -> str:
    """DOT rendering of the block system: solid block edges, dashed marked edges."""
    d = decomposition
    lines = ["graph block_system {"]
    for blk in d.blocks:
        for v in blk.vertices:
            if v >= 0:
                lines.append(f'  v{v} [label="{d.origin.labels[v]}"];')
            else:
                lines.append(f"  m{-v} [shape=point];")
    for blk in d.blocks:
        for u, v in blk.edges:
            lines.append(f"  {_dot_name(u)} -- {_dot_name(v)};")
    for m1, m2 in d.marker_pairs:
        lines.append(f"  {_dot_name(m1)} -- {_dot_name(m2)} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_name(v: int) -> str:
    return f"v{v}" if v >= 0 else f"m{-v}"


def split_tree_to_dot(tree: SplitTree) -> str:
    lines = ["graph split_tree {"]
    for node in tree.nodes:
        own = ",".join(str(v) for v in node.own_vertices)
        centre = ""
        if node.kind == "star":
            centre = " centre=" + ("marker" if (node.centre or 0) < 0 else str(node.centre))
        lines.append(f'  n{node.id} [label="{node.kind}{centre}\\n{{{own}}}"];')
    for u, v in tree.edges:
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

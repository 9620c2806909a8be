"""GF(2) matrices on bit-packed integer rows, plus graph cut ranks."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import InvalidVertex, NotAPermutation
from .graph import Graph


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank over GF(2) of integer bit rows, by elimination on a pivot table."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            h = row.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = row
                break
            row ^= p
    return len(pivots)


@dataclass(frozen=True)
class Gf2Matrix:
    """Binary matrix whose rows and columns are indexed by vertex ids."""

    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]
    rows: tuple[int, ...]  # bit i of rows[r] is the entry (r, col_labels[i])

    def __post_init__(self):
        if len(self.rows) != len(self.row_labels):
            raise ValueError("row count must match row labels")
        width = len(self.col_labels)
        for r in self.rows:
            if r < 0 or r >> width:
                raise ValueError("row bits exceed column count")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def entry(self, r: int, c: int) -> int:
        return (self.rows[r] >> c) & 1

    def transpose(self) -> "Gf2Matrix":
        rows = tuple(
            sum(((self.rows[r] >> c) & 1) << r for r in range(len(self.rows)))
            for c in range(len(self.col_labels))
        )
        return Gf2Matrix(self.col_labels, self.row_labels, rows)


def rank(matrix: Gf2Matrix) -> int:
    return rank_of_rows(matrix.rows)


def cut_matrix(graph: Graph, side: Iterable[int]) -> Gf2Matrix:
    """Bipartite adjacency matrix between a vertex set and its complement.

    Rows are the side in ascending id order, columns the complement likewise.
    """
    side_set = set(side)
    for v in side_set:
        if not 0 <= v < graph.n:
            raise InvalidVertex(f"vertex {v} not in graph of order {graph.n}")
    rows_lab = tuple(sorted(side_set))
    cols_lab = tuple(v for v in range(graph.n) if v not in side_set)
    col_pos = {v: i for i, v in enumerate(cols_lab)}
    rows = []
    for u in rows_lab:
        m = 0
        for w in graph.adj[u]:
            p = col_pos.get(w)
            if p is not None:
                m |= 1 << p
        rows.append(m)
    return Gf2Matrix(rows_lab, cols_lab, tuple(rows))


def cutrank_of_cut(graph: Graph, side: Iterable[int]) -> int:
    return rank(cut_matrix(graph, side))


def cutrank_of_ordering(graph: Graph, order: Sequence[int]) -> int:
    """Maximum cut rank over the prefix cuts of a vertex ordering.

    The full-set cut has no columns and contributes 0, so a single vertex has
    cutrank 0 and any graph with an edge has cutrank at least 1.
    """
    order = tuple(order)
    if sorted(order) != list(range(graph.n)):
        raise NotAPermutation("order must be a permutation of the vertex set")
    masks = graph.adjacency_masks()
    best = 0
    prefix_mask = 0
    prefix = []
    for v in order[:-1]:
        prefix_mask |= 1 << v
        prefix.append(v)
        rk = rank_of_rows(masks[u] & ~prefix_mask for u in prefix)
        if rk > best:
            best = rk
    return best

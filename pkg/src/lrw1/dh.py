"""Distance-hereditary recognition by pendant and twin elimination.

A connected graph reduces to a single vertex by repeatedly deleting a pendant
vertex or one of a twin pair exactly when it is distance hereditary, and the
recorded elimination doubles as a replayable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlreadyDH, Disconnected, InvalidSequence
from .graph import Graph, connected_components, induced_subgraph


@dataclass(frozen=True)
class PruningStep:
    removed: int
    kind: str  # "pendant" | "true_twin" | "false_twin"
    anchor: int  # pendant: its neighbour; twins: the surviving twin


@dataclass(frozen=True)
class PruningSequence:
    steps: tuple[PruningStep, ...]
    last: int


def _next_elimination(adj: dict[int, set[int]]) -> PruningStep | None:
    """First removable vertex in ascending id order, smallest partner first."""
    open_buckets: dict[frozenset[int], list[int]] = {}
    closed_buckets: dict[frozenset[int], list[int]] = {}
    for u in adj:
        open_buckets.setdefault(frozenset(adj[u]), []).append(u)
        closed_buckets.setdefault(frozenset(adj[u] | {u}), []).append(u)
    for u in sorted(adj):
        nb = adj[u]
        if len(nb) == 1:
            return PruningStep(u, "pendant", next(iter(nb)))
        true_partner = min((v for v in closed_buckets[frozenset(nb | {u})] if v != u), default=None)
        false_partner = min((v for v in open_buckets[frozenset(nb)] if v != u), default=None)
        if true_partner is not None and (false_partner is None or true_partner < false_partner):
            return PruningStep(u, "true_twin", true_partner)
        if false_partner is not None:
            return PruningStep(u, "false_twin", false_partner)
    return None


def pruning_sequence(graph: Graph) -> PruningSequence | None:
    """Greedy pendant/twin elimination; None when no elimination exists.

    Succeeding is equivalent to the graph being distance hereditary, because
    induced subgraphs of distance-hereditary graphs always keep a pendant or
    twin, and conversely growing back the sequence only ever uses the three
    safe extension moves.
    """
    if graph.n == 0:
        raise Disconnected("empty graph has no pruning sequence")
    if len(connected_components(graph)) != 1:
        raise Disconnected("pruning sequences are defined for connected graphs")
    adj = {v: set(graph.adj[v]) for v in range(graph.n)}
    steps = []
    while len(adj) > 1:
        step = _next_elimination(adj)
        if step is None:
            return None
        for u in adj[step.removed]:
            adj[u].discard(step.removed)
        del adj[step.removed]
        steps.append(step)
    (last,) = adj
    return PruningSequence(tuple(steps), last)


def replay_pruning(graph: Graph, seq: PruningSequence) -> None:
    """Re-verify every step of a pruning sequence against its definition."""
    if graph.n == 0:
        raise InvalidSequence("no sequence can prune an empty graph")
    if len(seq.steps) != graph.n - 1:
        raise InvalidSequence(f"expected {graph.n - 1} steps, got {len(seq.steps)}")
    adj = {v: set(graph.adj[v]) for v in range(graph.n)}
    for i, st in enumerate(seq.steps):
        if st.removed not in adj or st.anchor not in adj or st.removed == st.anchor:
            raise InvalidSequence(f"step {i} references dead or equal vertices")
        nb = adj[st.removed]
        if st.kind == "pendant":
            if nb != {st.anchor}:
                raise InvalidSequence(f"step {i}: {st.removed} is not a pendant on {st.anchor}")
        elif st.kind == "true_twin":
            if st.anchor not in nb or nb - {st.anchor} != adj[st.anchor] - {st.removed}:
                raise InvalidSequence(f"step {i}: {st.removed} is not a true twin of {st.anchor}")
        elif st.kind == "false_twin":
            if st.anchor in nb or nb != adj[st.anchor]:
                raise InvalidSequence(f"step {i}: {st.removed} is not a false twin of {st.anchor}")
        else:
            raise InvalidSequence(f"step {i}: unknown kind {st.kind!r}")
        for u in nb:
            adj[u].discard(st.removed)
        del adj[st.removed]
    if set(adj) != {seq.last}:
        raise InvalidSequence("sequence does not end at the recorded last vertex")


def is_distance_hereditary(graph: Graph) -> bool:
    """True iff every connected component admits a pruning sequence."""
    for comp in connected_components(graph):
        if pruning_sequence(induced_subgraph(graph, comp)) is None:
            return False
    return True


def non_dh_obstruction(graph: Graph) -> tuple[int, ...]:
    """Minimal induced subgraph witnessing non-distance-hereditariness.

    Greedy deletion: drop any vertex (ascending id) whose removal keeps the
    graph non-DH; the fixpoint is one of the classical minimal obstructions
    (house, gem, domino, or a hole).
    """
    if is_distance_hereditary(graph):
        raise AlreadyDH("graph is distance hereditary")
    keep = list(range(graph.n))
    changed = True
    while changed:
        changed = False
        for v in keep:
            trial = [u for u in keep if u != v]
            if not is_distance_hereditary(induced_subgraph(graph, trial)):
                keep = trial
                changed = True
                break
    return tuple(keep)

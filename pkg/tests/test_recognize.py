"""The recognizer, its certificates, the obstruction catalog and the verifier."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrw1 import oracle
from lrw1.dh import pruning_sequence
from lrw1.errors import NotApplicable
from lrw1.gf2 import cutrank_of_ordering
from lrw1.graph import (
    Graph,
    connected_components,
    induced_subgraph,
    is_isomorphic_small,
    local_complement,
)
from lrw1.named import (
    caterpillar_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    domino_graph,
    gem_graph,
    house_graph,
    net_graph,
    octahedron_graph,
    path_graph,
    spider_graph,
)
from lrw1.recognizer import (
    ObstructionCertificate,
    OrderingCertificate,
    dh_obstruction_catalog,
    extract_lrw1_obstruction,
    ordering_from_path_tree,
    recognize,
    verify_certificate,
)
from lrw1.splitdec import canonical_decomposition_dh, split_tree


def _decompose(graph):
    d = canonical_decomposition_dh(graph, pruning_sequence(graph))
    return d, split_tree(d)


# -- accepting side -----------------------------------------------------------------


def test_caterpillar_gets_width_1_ordering():
    g = caterpillar_graph(4, [2, 0, 1, 2])
    cert = recognize(g)
    assert isinstance(cert, OrderingCertificate)
    assert cutrank_of_ordering(g, cert.order) == 1
    assert verify_certificate(g, cert)


def test_tiny_graphs_accepted_unconditionally():
    for g in [Graph(0), Graph(1), Graph(2), Graph(2, [(0, 1)])]:
        cert = recognize(g)
        assert isinstance(cert, OrderingCertificate)
        assert verify_certificate(g, cert)


def test_disconnected_orderings_concatenate_by_component():
    g = disjoint_union(path_graph(3), complete_graph(4))
    cert = recognize(g)
    assert isinstance(cert, OrderingCertificate)
    assert cert.order == (0, 1, 2, 3, 4, 5, 6)
    assert verify_certificate(g, cert)


def test_ordering_from_path_tree_examples():
    d, t = _decompose(path_graph(4))
    assert ordering_from_path_tree(t, d) == (0, 1, 2, 3)
    d, t = _decompose(cycle_graph(4))
    assert ordering_from_path_tree(t, d) == (0, 2, 1, 3)
    d, t = _decompose(complete_graph(5))
    assert ordering_from_path_tree(t, d) == (0, 1, 2, 3, 4)


# -- rejecting side: non-DH stage --------------------------------------------------------


def test_c5_rejected_with_hole():
    cert = recognize(cycle_graph(5))
    assert cert == ObstructionCertificate((0, 1, 2, 3, 4), "hole", hole_length=5)
    assert verify_certificate(cycle_graph(5), cert)


def test_house_gem_domino_families():
    for g, family in [(house_graph(), "house"), (gem_graph(), "gem"), (domino_graph(), "domino")]:
        cert = recognize(g)
        assert isinstance(cert, ObstructionCertificate)
        assert cert.family == family
        assert cert.vertices == tuple(range(g.n))
        assert verify_certificate(g, cert)


def test_long_hole_certificate_verifies_structurally():
    g = cycle_graph(12)
    cert = recognize(g)
    assert cert.family == "hole" and cert.hole_length == 12
    assert verify_certificate(g, cert)


def test_obstruction_inside_bigger_graph():
    base = cycle_graph(6)
    g = Graph(8, list(base.edges) + [(0, 6), (6, 7)])
    cert = recognize(g)
    assert isinstance(cert, ObstructionCertificate)
    assert verify_certificate(g, cert)
    sub = induced_subgraph(g, cert.vertices)
    assert oracle.brute_lrw(sub) == 2


# -- rejecting side: DH stage ----------------------------------------------------------------


def test_net_rejected_whole():
    cert = recognize(net_graph())
    assert isinstance(cert, ObstructionCertificate)
    assert cert.family == "dh_star3"
    assert cert.vertices == (0, 1, 2, 3, 4, 5)
    assert verify_certificate(net_graph(), cert)


def test_octahedron_rejected_whole():
    cert = recognize(octahedron_graph())
    assert cert.family == "dh_star3"
    assert cert.vertices == (0, 1, 2, 3, 4, 5)
    assert verify_certificate(octahedron_graph(), cert)


def test_spider_extraction_takes_everything():
    g = spider_graph(3, 2)
    d, t = _decompose(g)
    hub = next(n.id for n in t.nodes if t.degree(n.id) >= 3)
    assert t.node(hub).kind == "star" and t.node(hub).centre == 0
    vs = extract_lrw1_obstruction(g, t, d, hub)
    assert vs == tuple(range(7))
    assert oracle.brute_lrw(g) == 2


def test_net_with_extra_pendant_extracts_net():
    g = Graph(7, list(net_graph().edges) + [(3, 6)])
    cert = recognize(g)
    assert cert.family == "dh_star3"
    assert len(cert.vertices) == 6
    assert is_isomorphic_small(induced_subgraph(g, cert.vertices), net_graph())


def test_extraction_rejects_low_degree_node():
    g = path_graph(6)
    d, t = _decompose(g)
    with pytest.raises(NotApplicable):
        extract_lrw1_obstruction(g, t, d, t.nodes[0].id)


def test_obstruction_only_when_tree_branches():
    # every DH rejection coincides with a branching split tree
    for seed in range(40):
        g = oracle.random_dh_graph(14, seed)
        cert = recognize(g)
        d, t = _decompose(g)
        assert isinstance(cert, ObstructionCertificate) == (not t.is_path())


def test_internal_path_nodes_carry_vertices():
    for seed in range(40):
        g = oracle.random_lrw1_graph(20, seed)
        cert = recognize(g)
        assert isinstance(cert, OrderingCertificate)
        comp = connected_components(g)
        if len(comp) != 1:
            continue
        d, t = _decompose(g)
        for node in t.nodes:
            if t.degree(node.id) == 2:
                assert node.own_vertices


# -- the catalog ---------------------------------------------------------------------------------


def test_catalog_contains_net_and_octahedron():
    catalog = dh_obstruction_catalog()
    assert any(is_isomorphic_small(m, net_graph()) for m in catalog)
    assert any(is_isomorphic_small(m, octahedron_graph()) for m in catalog)


def test_catalog_is_duplicate_free():
    catalog = dh_obstruction_catalog()
    from lrw1.graph import canonical_form

    assert len({canonical_form(m) for m in catalog}) == len(catalog)


def test_catalog_members_extract_themselves():
    # every member is rejected with the whole graph, whichever hub case fires
    for m in dh_obstruction_catalog():
        d, t = _decompose(m)
        hub = min(n.id for n in t.nodes if t.degree(n.id) >= 3)
        assert extract_lrw1_obstruction(m, t, d, hub) == tuple(range(m.n))


def test_catalog_members_are_genuine_obstructions():
    for m in dh_obstruction_catalog():
        assert oracle.brute_lrw(m) == 2
        d, t = _decompose(m)
        assert sorted(t.degree(n.id) for n in t.nodes) == [1, 1, 1, 3]
        for v in range(m.n):
            rest = induced_subgraph(m, [u for u in range(m.n) if u != v])
            for comp in connected_components(rest):
                assert oracle.brute_lrw(induced_subgraph(rest, comp)) <= 1


# -- the verifier ------------------------------------------------------------------------------


def test_verifier_accepts_constructed_certificates():
    g = caterpillar_graph(3, [1, 2, 1])
    assert verify_certificate(g, recognize(g))


def test_verifier_rejects_bad_ordering():
    c5 = cycle_graph(5)
    for perm in [(0, 1, 2, 3, 4), (2, 0, 3, 1, 4)]:
        out = verify_certificate(c5, OrderingCertificate(perm))
        assert not out and "cut rank" in out.reason


def test_verifier_rejects_non_permutation():
    out = verify_certificate(path_graph(3), OrderingCertificate((0, 1)))
    assert not out


def test_verifier_accepts_c5_obstruction():
    cert = ObstructionCertificate((0, 1, 2, 3, 4), "hole", hole_length=5)
    assert verify_certificate(cycle_graph(5), cert)


def test_verifier_rejects_wrong_family_and_padding():
    c6 = cycle_graph(6)
    assert not verify_certificate(c6, ObstructionCertificate((0, 1, 2, 3, 4, 5), "domino"))
    g = disjoint_union(cycle_graph(5), Graph(1))
    assert not verify_certificate(g, ObstructionCertificate((0, 1, 2, 3, 4, 5), "hole", hole_length=6))


def test_verifier_rejects_non_minimal_set():
    g = Graph(6, list(cycle_graph(5).edges) + [(0, 5)])
    cert = ObstructionCertificate((0, 1, 2, 3, 4, 5), "hole", hole_length=6)
    assert not verify_certificate(g, cert)


# -- invariance properties ------------------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.data())
def test_decision_invariant_under_local_complementation(seed, data):
    import random

    rng = random.Random(seed)
    n = rng.randint(1, 8)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    g = Graph(n, [p for p in pairs if rng.random() < 0.4])
    before = isinstance(recognize(g), OrderingCertificate)
    h = g
    for _ in range(data.draw(st.integers(1, 6))):
        h = local_complement(h, data.draw(st.integers(0, n - 1)))
    after = isinstance(recognize(h), OrderingCertificate)
    assert before == after


def test_accepted_graphs_closed_under_deletion_up_to_7():
    # single-vertex deletions of accepted graphs stay accepted, exhaustively
    for n in range(2, 8):
        for g in oracle.load_fixture_graphs(n):
            if len(connected_components(g)) != 1:
                continue
            if not isinstance(recognize(g), OrderingCertificate):
                continue
            for v in range(g.n):
                rest = induced_subgraph(g, [u for u in range(g.n) if u != v])
                assert isinstance(recognize(rest), OrderingCertificate), (g, v)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.data())
def test_accepted_random_subsets_stay_accepted(seed, data):
    g = oracle.random_lrw1_graph(12, seed)
    subset = data.draw(st.sets(st.integers(0, g.n - 1)))
    sub = induced_subgraph(g, subset)
    assert isinstance(recognize(sub), OrderingCertificate)

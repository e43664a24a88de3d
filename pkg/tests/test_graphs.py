from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spexlab.constructions import parse_recipe
from spexlab.graphs import (
    Graph,
    Graph6Error,
    GraphError,
    UnknownBuilderError,
    bipartition,
    build_atlas,
    canonical_form,
    canonical_labeling,
    circumference,
    complement,
    contains_subgraph,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    graph_stats,
    has_cycle_at_least,
    induced_subgraph,
    is_isomorphic,
    join,
    matching_number,
    to_dot,
)
from spexlab.graphs.atlas import complete, cycle, empty, matching, path, star
from spexlab.oracles import all_graphs

from conftest import random_graph


def K(*p):
    return build_atlas("K", p)


@st.composite
def graphs(draw, max_order=9, min_order=0):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


# -- builders -----------------------------------------------------------------

def test_turan_and_g_nrs():
    t = build_atlas("T", [3, 7])
    assert t.num_edges == 16
    assert sorted(t.degrees()) == [4, 4, 4, 5, 5, 5, 5]
    g = build_atlas("G", [8, 3, 2])
    assert is_isomorphic(g, join(complete(2), empty(6)))
    assert is_isomorphic(build_atlas("T", [2, 4]), cycle(4))


def test_builder_conventions():
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle(4).has_edge(3, 0)
    assert matching(2).edges() == [(0, 1), (2, 3)]
    assert star(4).neighbors(0) == [1, 2, 3]
    assert build_atlas("K", [1, 3]).degree(0) == 3
    assert build_atlas("Fr", [3]).num_edges == 9
    assert build_atlas("KK2I", [2, 7]).num_edges == 1 + 2 * 5 + 1
    assert build_atlas("Kmulti", [2, 2, 2]).num_edges == 12


def test_builder_errors():
    with pytest.raises(UnknownBuilderError):
        build_atlas("Z", [3])
    with pytest.raises(GraphError):
        build_atlas("K", [65])
    with pytest.raises(GraphError):
        build_atlas("K", [-1])
    with pytest.raises(GraphError):
        build_atlas("C", [2])
    with pytest.raises(GraphError):
        build_atlas("T", [3])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (2, 0))


def test_join_examples():
    g = join(complete(2), empty(3))
    assert (g.order, g.num_edges) == (5, 7)
    assert join(empty(0), cycle(4)) == cycle(4)
    assert is_isomorphic(join(empty(2), empty(2)), cycle(4))
    # left operand first
    assert g.neighbors(0) == [1, 2, 3, 4]


def test_union_examples():
    g = disjoint_union(complete(2), empty(4))
    assert (g.order, g.num_edges) == (6, 1)
    assert disjoint_union(path(3), path(3)).num_edges == 4
    assert disjoint_union(empty(0), complete(3)) == complete(3)


def test_induced_examples():
    assert is_isomorphic(induced_subgraph(complete(4), [0, 2, 3]), complete(3))
    assert induced_subgraph(cycle(5), [1, 2]) == complete(2)
    k23 = K(2, 3)
    assert induced_subgraph(k23, [2, 3, 4]) == empty(3)
    with pytest.raises(GraphError):
        induced_subgraph(k23, [0, 9])


def test_contains_examples():
    assert contains_subgraph(K(2, 3), cycle(4))
    assert not contains_subgraph(K(1, 5), matching(2))
    assert contains_subgraph(parse_recipe("join(K:2,union(K:2,I:3))"), cycle(5))
    assert contains_subgraph(complete(3), empty(3))
    assert not contains_subgraph(complete(3), empty(4))


def test_isomorphism_examples():
    assert is_isomorphic(build_atlas("T", [2, 4]), cycle(4))
    assert not is_isomorphic(K(1, 3), path(4))
    assert not is_isomorphic(cycle(6), disjoint_union(complete(3), complete(3)))


def test_stats_examples():
    s = graph_stats(cycle(7))
    assert (s.edges, s.max_degree, s.matching_number, s.circumference, s.bipartition) == (7, 2, 3, 7, None)
    s = graph_stats(path(5))
    assert (s.edges, s.max_degree, s.matching_number, s.circumference) == (4, 2, 2, 0)
    assert sorted(s.bipartition_sizes) == [2, 3]
    s = graph_stats(K(3, 4))
    assert (s.edges, s.max_degree, s.matching_number, s.circumference) == (12, 4, 3, 6)
    assert sorted(s.bipartition_sizes) == [3, 4]


# -- graph6 ------------------------------------------------------------------

def test_graph6_examples():
    assert graph6_encode(complete(3)) == "Bw"
    assert graph6_encode(empty(1)) == "@"
    assert graph6_encode(empty(0)) == "?"
    assert graph6_decode("Bw") == complete(3)


def test_graph6_errors():
    for bad in ["", "B", "Bww", "B\x7f", "~~"]:
        with pytest.raises(Graph6Error):
            graph6_decode(bad)


def test_graph6_large_order_roundtrip():
    g = join(complete(3), empty(60))
    text = graph6_encode(g)
    assert text.startswith("~")
    assert graph6_decode(text) == g


def test_graph6_against_networkx(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 20), rng.random())
        text = graph6_encode(g)
        h = nx.from_graph6_bytes(text.encode())
        assert sorted(tuple(sorted(e)) for e in h.edges()) == g.edges()
        assert nx.to_graph6_bytes(h, header=False).strip().decode() == text


def test_graph6_roundtrip_all_small():
    for n in range(1, 8):
        for g in all_graphs(n):
            assert graph6_decode(graph6_encode(g)) == g


# -- canonical forms ------------------------------------------------------------

def test_canonical_distinct_classes():
    for n in range(1, 8):
        forms = {canonical_form(g) for g in all_graphs(n)}
        assert len(forms) == len(all_graphs(n))


def test_canonical_against_networkx(rng):
    for _ in range(150):
        n = rng.randint(2, 9)
        g, h = random_graph(rng, n), random_graph(rng, n)
        if g.num_edges != h.num_edges:
            continue
        a = nx.Graph(g.edges()); a.add_nodes_from(range(n))
        b = nx.Graph(h.edges()); b.add_nodes_from(range(n))
        assert is_isomorphic(g, h) == nx.is_isomorphic(a, b)


def test_canonical_regular_graphs():
    # highly symmetric inputs stress the refinement
    pet = complement(nx_line_k5())
    for _ in range(5):
        perm = list(range(10))
        random.Random(_).shuffle(perm)
        assert canonical_form(pet.relabel(perm)) == canonical_form(pet)
    res = canonical_labeling(pet)
    assert len(set(res.orbits())) == 1


def nx_line_k5() -> Graph:
    lg = nx.convert_node_labels_to_integers(nx.line_graph(nx.complete_graph(5)))
    return Graph.from_edges(10, lg.edges())


@settings(max_examples=300, deadline=None)
@given(graphs(max_order=11), st.randoms(use_true_random=False))
def test_canonical_relabel_invariance(g, r):
    perm = list(range(g.order))
    r.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(h) == canonical_form(g)
    assert is_isomorphic(g, h)


# -- invariant properties ----------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(graphs(max_order=7), graphs(max_order=7))
def test_join_edge_count(g, h):
    j = join(g, h)
    assert j.order == g.order + h.order
    assert j.num_edges == g.num_edges + h.num_edges + g.order * h.order
    u = disjoint_union(g, h)
    assert u.num_edges == g.num_edges + h.num_edges


def _brute_matching(g: Graph) -> int:
    edges = g.edges()
    for size in range(g.order // 2, 0, -1):
        for combo in itertools.combinations(edges, size):
            if len({x for e in combo for x in e}) == 2 * size:
                return size
    return 0


@settings(max_examples=300, deadline=None)
@given(graphs(max_order=7))
def test_matching_vs_bruteforce(g):
    assert matching_number(g) == _brute_matching(g)


def test_matching_vs_networkx(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 16), rng.random())
        h = nx.Graph(g.edges())
        assert matching_number(g) == len(nx.max_weight_matching(h, maxcardinality=True))


def test_circumference_vs_cycle_embedding():
    cycles = {k: cycle(k) for k in range(3, 9)}
    for n in range(3, 9):
        for g in all_graphs(n):
            c = circumference(g)
            longest = max((k for k in range(3, n + 1) if contains_subgraph(g, cycles[k])), default=0)
            assert c == longest, graph6_encode(g)
            if c:
                assert has_cycle_at_least(g, c) and not has_cycle_at_least(g, c + 1)


def test_has_cycle_through_vertex():
    g = disjoint_union(complete(3), cycle(5))
    assert has_cycle_at_least(g, 5, through=4)
    assert not has_cycle_at_least(g, 4, through=0)
    assert has_cycle_at_least(g, 3, through=0)


@settings(max_examples=200, deadline=None)
@given(graphs(max_order=8))
def test_bipartition_is_proper(g):
    bp = bipartition(g)
    h = nx.Graph(g.edges()); h.add_nodes_from(range(g.order))
    assert (bp is not None) == nx.is_bipartite(h)
    if bp is not None:
        a, b = bp
        assert a | b == g.vertex_mask() and not a & b
        for u, v in g.edges():
            assert (a >> u & 1) != (a >> v & 1)


@settings(max_examples=200, deadline=None)
@given(graphs(max_order=8, min_order=1), st.data())
def test_containment_reflexive_and_monotone(g, data):
    assert contains_subgraph(g, g)
    edges = g.edges()
    keep = data.draw(st.lists(st.sampled_from(edges), unique=True)) if edges else []
    sub = Graph.from_edges(g.order, keep)
    assert contains_subgraph(g, sub)
    non = g.non_edges()
    if non:
        u, v = data.draw(st.sampled_from(non))
        assert contains_subgraph(g.with_edge(u, v), sub)


def test_dot_output():
    text = to_dot(path(3), "P3")
    assert text.startswith("graph P3 {")
    assert "0 -- 1;" in text and "1 -- 2;" in text

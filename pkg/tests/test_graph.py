import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilworth_cographs import generators as gen
from dilworth_cographs.graph import (
    Graph,
    GraphFormatError,
    complement,
    connected_components,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_graph6,
    from_json,
    induced_subgraph,
    join,
    neighborhood,
    to_graph6,
    to_json,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


def test_from_edge_list_path():
    G = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert G.edges() == [(0, 1), (1, 2), (2, 3)]
    assert G == gen.path(4)


def test_from_edge_list_empty_and_duplicates():
    assert from_edge_list(3, []).m == 0
    K2 = from_edge_list(2, [(0, 1), (1, 0)])
    assert K2.edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(ValueError):
        from_edge_list(3, edges)


def test_graph_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop


def test_complement_examples(P4):
    assert complement(gen.complete(3)).m == 0
    # P4 0-1-2-3 complement: 1-3-0-2, a path again
    relabel = {1: 0, 3: 1, 0: 2, 2: 3}
    cp = complement(P4)
    mapped = sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in cp.edges())
    assert mapped == P4.edges()


@given(graphs())
def test_complement_involution(G):
    assert complement(complement(G)) == G


def test_complement_involution_exhaustive_small():
    for n in range(6):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            G = from_edge_list(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
            assert complement(complement(G)) == G


def test_union_and_join_examples():
    K1 = gen.complete(1)
    assert disjoint_union(K1, K1) == empty_graph(2)
    two_k2 = disjoint_union(gen.complete(2), gen.complete(2))
    assert two_k2.edges() == [(0, 1), (2, 3)]
    assert join(empty_graph(2), empty_graph(2)) == gen.complete_multipartite([2, 2])
    assert join(K1, empty_graph(4)) == gen.star(5)


@given(graphs(6), graphs(6))
def test_union_edge_count_and_de_morgan(G, H):
    assert disjoint_union(G, H).m == G.m + H.m
    assert complement(join(G, H)) == disjoint_union(complement(G), complement(H))
    assert complement(disjoint_union(G, H)) == join(complement(G), complement(H))


def test_induced_subgraph_examples():
    assert induced_subgraph(gen.path(5), {0, 1, 2, 3}) == gen.path(4)
    G = gen.cycle(6)
    assert induced_subgraph(G, range(6)) == G
    for S in itertools.combinations(range(5), 3):
        assert induced_subgraph(gen.complete(5), S) == gen.complete(3)
    with pytest.raises(ValueError):
        induced_subgraph(G, [7])


@given(graphs(8), st.data())
def test_induced_subgraph_composes(G, data):
    S = sorted(data.draw(st.sets(st.integers(0, max(G.n - 1, 0)))) & set(range(G.n)))
    T = sorted(data.draw(st.sets(st.integers(0, max(len(S) - 1, 0)))) & set(range(len(S))))
    twice = induced_subgraph(induced_subgraph(G, S), T)
    once = induced_subgraph(G, [S[i] for i in T])
    assert twice == once


def test_neighborhood_examples():
    star = gen.star(4)
    assert neighborhood(star, 0) == (1, 2, 3)
    K4 = gen.complete(4)
    assert all(neighborhood(K4, v, closed=True) == (0, 1, 2, 3) for v in range(4))
    assert neighborhood(empty_graph(3), 1) == ()
    with pytest.raises(ValueError):
        neighborhood(K4, 4)


@given(graphs())
def test_neighborhood_symmetry(G):
    for u in range(G.n):
        for v in neighborhood(G, u):
            assert u in neighborhood(G, v)


def test_components():
    two_k2 = from_edge_list(4, [(0, 1), (2, 3)])
    assert connected_components(two_k2) == [(0, 1), (2, 3)]
    assert connected_components(gen.cycle(5)) == [(0, 1, 2, 3, 4)]
    assert connected_components(empty_graph(3)) == [(0,), (1,), (2,)]
    G = from_edge_list(5, [(0, 3), (1, 4)])
    assert connected_components(G) == [(0, 3), (1, 4), (2,)]


# graph6 -----------------------------------------------------------------


def test_graph6_hand_vectors():
    assert to_graph6(gen.complete(3)) == "Bw"
    assert to_graph6(empty_graph(0)) == "?"
    assert to_graph6(empty_graph(1)) == "@"
    # P4: bits (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=0 (1,3)=0 (2,3)=1 -> 101001 = 41
    assert to_graph6(gen.path(4)) == chr(4 + 63) + chr(41 + 63)
    # P5: 10 bits 1010010001 then 00 padding -> 101001 000100 = 41, 4
    assert to_graph6(gen.path(5)) == chr(5 + 63) + chr(41 + 63) + chr(4 + 63)


def test_graph6_known_strings():
    # strings as produced by standard tools for the same labelled graphs
    assert from_graph6("Bw") == gen.complete(3)
    assert from_graph6(">>graph6<<Bw") == gen.complete(3)
    assert from_graph6("C~") == gen.complete(4)


def test_graph6_round_trip_exhaustive_small():
    count = 0
    for n in range(6):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            G = from_edge_list(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
            assert from_graph6(to_graph6(G)) == G
            count += 1
    assert count == 1 + 1 + 2 + 8 + 64 + 1024


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x7f", "~~~"])
def test_graph6_rejects(bad):
    with pytest.raises(GraphFormatError):
        from_graph6(bad)


def test_graph6_size_limit():
    with pytest.raises(ValueError):
        to_graph6(empty_graph(63))


@given(graphs(20))
@settings(max_examples=200)
def test_graph6_round_trip_random(G):
    assert from_graph6(to_graph6(G)) == G


# JSON ---------------------------------------------------------------------


def test_json_normal_form():
    G = from_edge_list(4, [(3, 2), (1, 0), (2, 1)])
    assert json.loads(to_json(G)) == {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}


def test_json_decoder_accepts_any_order():
    G = from_json('{"n": 3, "edges": [[2, 1], [1, 0], [0, 1]]}')
    assert G == gen.path(3)


@pytest.mark.parametrize("bad", ['{"n": 2}', '{"n": 2, "edges": [[0, 2]]}', "[1,2]", "nope", '{"n": "2", "edges": []}'])
def test_json_rejects(bad):
    with pytest.raises(GraphFormatError):
        from_json(bad)


@given(graphs(70))
@settings(max_examples=50)
def test_json_round_trip(G):
    assert from_json(to_json(G)) == G

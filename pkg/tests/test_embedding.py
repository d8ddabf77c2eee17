import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from liarsdom.embedding import (
    GridEmbedding,
    decompose_steps,
    embed_graph,
    explode_path,
    format_embedding,
    parse_embedding,
    total_segments,
    validate_embedding,
)
from liarsdom.errors import (
    DegreeTooHigh,
    InvalidEmbedding,
    IsolatedVertex,
    MissingEdgePath,
    MissingVertex,
    ParseError,
    RoutingFailed,
)
from liarsdom.generate import random_planar_graph
from liarsdom.geometry import Coord
from liarsdom.graphs import SimpleGraph

C = Coord
K2 = SimpleGraph(2, [(0, 1)])


def small_connected_graphs(max_n, max_deg=3):
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(G) and max(d for _, d in G.degree()) <= max_deg:
            yield G


def rules(violations):
    return {v.rule for v in violations}


def test_validate_simplest_layout():
    emb = GridEmbedding({0: C(0, 0), 1: C(40, 0)}, {(0, 1): (C(0, 0), C(40, 0))})
    assert validate_embedding(K2, emb) == []


def test_validate_vertex_off_grid():
    emb = GridEmbedding({0: C(0, 0), 1: C(41, 0)}, {(0, 1): (C(0, 0), C(41, 0))})
    bad = validate_embedding(K2, emb)
    assert any(v.rule == 2 and v.code == "VertexOffGrid" and v.subject == (1,) for v in bad)


def test_validate_crossing_paths():
    g = SimpleGraph(4, [(0, 1), (2, 3)])
    emb = GridEmbedding(
        {0: C(0, 40), 1: C(80, 40), 2: C(40, 0), 3: C(40, 80)},
        {(0, 1): (C(0, 40), C(80, 40)), (2, 3): (C(40, 0), C(40, 80))},
    )
    bad = validate_embedding(g, emb)
    assert [(v.rule, v.code) for v in bad] == [(4, "EdgesIntersect")]
    assert "(40, 40)" in bad[0].message


def test_validate_other_rules():
    g = SimpleGraph(3, [(0, 1), (1, 2)])
    through = GridEmbedding(
        {0: C(0, 0), 1: C(80, 0), 2: C(40, 0)},
        {(0, 1): (C(0, 0), C(80, 0)), (1, 2): (C(80, 0), C(40, 0))},
    )
    assert 4 in rules(validate_embedding(g, through))
    diagonal = GridEmbedding({0: C(0, 0), 1: C(40, 40)}, {(0, 1): (C(0, 0), C(40, 40))})
    assert rules(validate_embedding(K2, diagonal)) == {3}
    same_spot = GridEmbedding({0: C(0, 0), 1: C(0, 0)}, {(0, 1): (C(0, 0), C(40, 0), C(0, 0))})
    assert 1 in rules(validate_embedding(K2, same_spot))
    wrong_end = GridEmbedding({0: C(0, 0), 1: C(40, 0)}, {(0, 1): (C(0, 0), C(80, 0))})
    assert rules(validate_embedding(K2, wrong_end)) == {3}
    loop = GridEmbedding(
        {0: C(0, 0), 1: C(40, 0)},
        {(0, 1): (C(0, 0), C(0, 40), C(40, 40), C(40, -40), C(0, -40), C(0, 40), C(40, 40), C(40, 0))},
    )
    assert any(v.code == "SelfIntersecting" for v in validate_embedding(K2, loop))


def test_shared_endpoint_is_allowed():
    g = SimpleGraph(3, [(0, 1), (0, 2)])
    emb = GridEmbedding(
        {0: C(0, 0), 1: C(40, 0), 2: C(0, 40)},
        {(0, 1): (C(0, 0), C(40, 0)), (0, 2): (C(0, 0), C(0, 40))},
    )
    assert validate_embedding(g, emb) == []


def test_validate_cover_errors():
    with pytest.raises(MissingVertex):
        validate_embedding(K2, GridEmbedding({0: C(0, 0)}, {}))
    with pytest.raises(MissingEdgePath):
        validate_embedding(K2, GridEmbedding({0: C(0, 0), 1: C(40, 0)}, {}))
    with pytest.raises(InvalidEmbedding):
        validate_embedding(SimpleGraph(2), GridEmbedding({0: C(0, 0), 1: C(40, 0)}, {(0, 1): (C(0, 0), C(40, 0))}))


def test_embed_k2_exact_layout():
    emb = embed_graph(K2)
    assert emb.vertex_pos == {0: C(0, 0), 1: C(40, 0)}
    assert emb.edge_paths == {(0, 1): (C(0, 0), C(40, 0))}


def test_embed_p3_has_two_steps():
    g = SimpleGraph(3, [(0, 1), (1, 2)])
    emb = embed_graph(g)
    assert validate_embedding(g, emb) == []
    assert total_segments(decompose_steps(emb)) == 2


def test_embed_k4_needs_bends():
    g = SimpleGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    emb = embed_graph(g)
    assert validate_embedding(g, emb) == []
    assert any(len(p) > 2 for p in emb.edge_paths.values())


def test_embed_rejects_bad_inputs():
    with pytest.raises(DegreeTooHigh):
        embed_graph(SimpleGraph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]))
    with pytest.raises(IsolatedVertex):
        embed_graph(SimpleGraph(3, [(0, 1)]))


def test_embed_all_small_connected_graphs():
    seen = 0
    for G in small_connected_graphs(6):
        g = SimpleGraph(G.number_of_nodes(), G.edges())
        if nx.check_planarity(G)[0]:
            emb = embed_graph(g)
            assert validate_embedding(g, emb) == [], sorted(g.edges)
            assert embed_graph(g) == emb
            seen += 1
        else:
            with pytest.raises(RoutingFailed):
                embed_graph(g, budget=60)
    assert seen == 47


@pytest.mark.parametrize("seed", range(15))
def test_embed_random_planar_graphs(seed):
    g, _ = random_planar_graph(6 + seed % 7, seed)
    emb = embed_graph(g)
    assert validate_embedding(g, emb) == []


def test_embed_cube_and_disconnected():
    cube = nx.hypercube_graph(3)
    g = SimpleGraph(8, [(sum(b << i for i, b in enumerate(u)), sum(b << i for i, b in enumerate(v))) for u, v in cube.edges()])
    assert validate_embedding(g, embed_graph(g)) == []
    two = SimpleGraph(5, [(0, 1), (2, 3), (3, 4)])
    assert validate_embedding(two, embed_graph(two)) == []


def test_decompose_examples():
    dec = decompose_steps(GridEmbedding({0: C(0, 0), 1: C(40, 0)}, {(0, 1): (C(0, 0), C(40, 0))}))
    (s,) = dec.steps[(0, 1)]
    assert not s.proper and s.node_end == "both"

    dec = decompose_steps(GridEmbedding({0: C(0, 0), 1: C(80, 0)}, {(0, 1): (C(0, 0), C(80, 0))}))
    assert [(s.proper, s.node_end) for s in dec.steps[(0, 1)]] == [(False, "start"), (False, "end")]

    dec = decompose_steps(
        GridEmbedding({0: C(0, 0), 1: C(80, 40)}, {(0, 1): (C(0, 0), C(80, 0), C(80, 40))})
    )
    assert [(s.proper, s.node_end) for s in dec.steps[(0, 1)]] == [(False, "start"), (True, None), (False, "end")]
    assert total_segments(dec) == 3

    with pytest.raises(InvalidEmbedding):
        decompose_steps(GridEmbedding({0: C(0, 0), 1: C(40, 40)}, {(0, 1): (C(0, 0), C(40, 40))}))


def test_total_segments_on_corpus(reduced):
    assert [total_segments(decompose_steps(reduced[k][1])) for k in "ABC"] == [1, 2, 3]


def test_step_accounting_on_generated_embeddings():
    for seed in range(20):
        g, emb = random_planar_graph(8, seed)
        emb2 = embed_graph(g)
        for e in (emb, emb2):
            dec = decompose_steps(e)
            assert 40 * total_segments(dec) == sum(e.path_length(x) for x in e.edge_paths)
            for steps in dec.steps.values():
                assert [a.end for a in steps[:-1]] == [b.start for b in steps[1:]]


paths = st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=2, max_size=6)


@given(st.integers(1, 6), st.data())
def test_embedding_file_round_trip(n, data):
    g, emb = random_planar_graph(n + 1, data.draw(st.integers(0, 10**6)))
    text = format_embedding(emb)
    again = parse_embedding(text)
    assert again == emb
    assert format_embedding(again) == text


def test_embedding_parse_reverses_backwards_edges():
    emb = parse_embedding("v 0 0 0\nv 1 80 0\ne 1 0 80 0 40 0 0 0\n")
    assert emb.edge_paths[(0, 1)] == (C(0, 0), C(40, 0), C(80, 0))
    for bad in ["v 0 0\n", "x 1\n", "v 0 0 0\nv 0 1 1\n", "v 1 0 0\n", "v 0 0 0\ne 0 1 0 0 40 0\n", "v 0 0 0\nv 1 40 0\ne 0 1 0 0\n"]:
        with pytest.raises(ParseError):
            parse_embedding(bad)


def test_explode_path():
    assert explode_path([C(0, 0), C(80, 0), C(80, 40)]) == [C(0, 0), C(40, 0), C(80, 0), C(80, 40)]

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgame import (
    GraphInputError,
    block_decomposition,
    build_graph,
    classify_graph,
)

import corpus


def test_build_k2():
    G = build_graph(2, [(0, 1)])
    assert G.n == 2 and G.m == 1 and G.has_edge(0, 1)


def test_build_p3():
    G = build_graph(3, [(0, 1), (1, 2)])
    assert G.adj == ((1,), (0, 2), (1,))


def test_build_collapses_duplicates():
    G = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_build_rejects_bad_edges(bad):
    with pytest.raises(GraphInputError):
        build_graph(3, bad)


def test_fig_cut_factor_graph_shape():
    G = corpus.fig_cut_factor_graph()
    assert G.n == 9 and G.m == 11
    decomp = block_decomposition(G)
    assert sorted(decomp.cut_vertices) == [3, 4]


def test_blocks_p3_and_k4():
    p3 = corpus.path(3)
    d = block_decomposition(p3)
    assert d.cut_vertices == frozenset({1})
    assert sorted(sorted(b) for b in d.blocks) == [[0, 1], [1, 2]]
    k4 = corpus.complete(4)
    d = block_decomposition(k4)
    assert not d.cut_vertices and len(d.blocks) == 1


def test_blocks_partition_edges_atlas():
    for G in corpus.atlas_connected(7):
        d = block_decomposition(G)
        seen = []
        for block in d.blocks:
            seen.extend(
                (u, v) for u, v in G.edges() if u in block and v in block
            )
        assert sorted(seen) == sorted(G.edges())


def test_cut_vertices_match_networkx():
    rng = random.Random(7)
    graphs = list(corpus.atlas_connected(6)) + [
        corpus.random_graph(rng.randint(2, 9), rng) for _ in range(150)
    ]
    for G in graphs:
        g = nx.Graph()
        g.add_nodes_from(range(G.n))
        g.add_edges_from(G.edges())
        assert block_decomposition(G).cut_vertices == frozenset(
            nx.articulation_points(g)
        )


def test_removing_cut_vertex_disconnects():
    for G in corpus.atlas_connected(6):
        if G.n < 3:
            continue
        before = len(G.components())
        for c in block_decomposition(G).cut_vertices:
            sub, _ = G.induced(v for v in range(G.n) if v != c)
            assert len(sub.components()) > before


def test_classify_c4():
    flags = classify_graph(corpus.cycle(4))
    assert flags.regular_degree == 2
    assert flags.is_bipartite and flags.is_outerplanar and not flags.is_tree


def test_classify_petersen():
    flags = classify_graph(corpus.petersen())
    assert flags.regular_degree == 3
    assert not flags.is_outerplanar


def test_classify_star():
    flags = classify_graph(build_graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert flags.is_tree and flags.is_bipartite and flags.is_block_graph
    assert flags.regular_degree is None


def test_outerplanar_rejects_known_minors():
    assert not classify_graph(corpus.complete(4)).is_outerplanar
    assert not classify_graph(corpus.complete_bipartite(2, 3)).is_outerplanar
    # the second block of the cut-factor figure is exactly K_{2,3}
    assert not classify_graph(corpus.fig_cut_factor_graph()).is_outerplanar


def test_outerplanar_accepts_maximal_instances():
    from domgame.generators import generate_instance

    for seed in range(40):
        inst = generate_instance(
            "outerplanar", {"n": 3 + seed % 8, "p_delete": 0.0}, seed=seed
        )
        assert classify_graph(inst.graph).is_outerplanar


def test_outerplanar_matches_embedding_reference():
    rng = random.Random(11)
    graphs = list(corpus.atlas_connected(7)) + [
        corpus.random_graph(rng.randint(2, 8), rng) for _ in range(120)
    ]
    for G in graphs:
        assert classify_graph(G).is_outerplanar == corpus.outerplanar_by_embedding(G)


def test_block_graph_flag_matches_clique_scan():
    for G in corpus.atlas_connected(6):
        d = block_decomposition(G)
        expected = all(
            all(G.has_edge(u, v) for u in b for v in b if u < v) for b in d.blocks
        )
        assert classify_graph(G).is_block_graph == expected


@settings(deadline=None, max_examples=120)
@given(st.integers(1, 8), st.data())
def test_induced_subgraph_mapping(n, data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    G = corpus.random_graph(n, rng)
    subset = data.draw(
        st.sets(st.integers(0, n - 1), min_size=0, max_size=n)
    )
    sub, mapping = G.induced(subset)
    assert sub.n == len(subset)
    for i in range(sub.n):
        for j in range(i + 1, sub.n):
            assert sub.has_edge(i, j) == G.has_edge(mapping[i], mapping[j])

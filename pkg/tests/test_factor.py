import random

import pytest

from domgame import (
    Cycle,
    Edge,
    FactorCertificate,
    Infeasible,
    NoFactor,
    brute_force_factor,
    build_graph,
    classify_graph,
    find_cut_factor,
    incidence_bipartite,
    max_partial_12_factor,
    perfect_12_factor,
    refactor_components,
    validate_factor,
)

import corpus


def test_incidence_bipartite_k2():
    B = incidence_bipartite(build_graph(2, [(0, 1)]))
    assert B.real == ((1,), (0,))
    assert B.real_edge_count() == 2


def test_incidence_bipartite_c3_is_six_cycle():
    B = incidence_bipartite(corpus.cycle(3))
    assert all(len(r) == 2 for r in B.real)
    assert B.real_edge_count() == 6


def test_incidence_bipartite_p3_hall_violation():
    B = incidence_bipartite(corpus.path(3))
    # only right neighbor of both endpoints' left copies is the center
    assert B.real[0] == (1,) and B.real[2] == (1,)


def test_perfect_factor_c5_is_itself():
    cert = perfect_12_factor(corpus.cycle(5))
    assert isinstance(cert, FactorCertificate)
    assert cert.components == (Cycle((0, 1, 2, 3, 4)),)


def test_perfect_factor_p3_violator():
    got = perfect_12_factor(corpus.path(3))
    assert isinstance(got, NoFactor)
    assert got.hall_violator == frozenset({0, 2})


def test_perfect_factor_petersen():
    cert = perfect_12_factor(corpus.petersen())
    assert isinstance(cert, FactorCertificate)
    validate_factor(corpus.petersen(), cert)


def test_hall_violator_is_genuine():
    rng = random.Random(3)
    graphs = list(corpus.atlas_connected(6)) + [
        corpus.random_graph(rng.randint(1, 9), rng) for _ in range(200)
    ]
    for G in graphs:
        got = perfect_12_factor(G)
        if isinstance(got, NoFactor):
            X = got.hall_violator
            nbhd = {w for x in X for w in G.neighbors(x)}
            assert len(nbhd) < len(X)


def test_max_partial_p3():
    cert = max_partial_12_factor(corpus.path(3))
    assert len(cert.covered) == 2


def test_max_partial_k1():
    cert = max_partial_12_factor(build_graph(1, []))
    assert cert.covered == frozenset()


def test_max_partial_fig_graph_covers_eight():
    cert = max_partial_12_factor(corpus.fig_cut_factor_graph())
    assert len(cert.covered) == 8


def test_max_partial_matches_bruteforce_atlas():
    for G in corpus.atlas_connected(7):
        fast = len(max_partial_12_factor(G).covered)
        slow = len(brute_force_factor(G, "max_partial").covered)
        assert fast == slow


def test_forced_arc_and_uncovered():
    G = corpus.path(3)
    cert = max_partial_12_factor(G, forced_uncovered=(2,), forced_arcs=((1, 0),))
    assert cert.covered == frozenset({0, 1})
    with pytest.raises(Infeasible):
        max_partial_12_factor(G, forced_uncovered=(1,), forced_arcs=((1, 0),))


def test_forced_covered_infeasible_on_star_leaf():
    G = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(Infeasible):
        # covering all three leaves needs three partners but only one hub
        max_partial_12_factor(G, forced_covered=(1, 2, 3))


def test_cut_factor_p3():
    w = find_cut_factor(corpus.path(3))
    assert w.u == 1
    assert {w.v, w.w} == {0, 2}
    assert len(w.factor.covered) == 2


def test_cut_factor_fig_graph_vertex_d():
    G = corpus.fig_cut_factor_graph()
    w = find_cut_factor(G)
    assert w.u == 3
    assert len(w.factor.covered) == 8
    assert w.v not in w.factor.covered
    assert w.w in w.factor.covered
    # v and w really sit in different components of G - u
    assert w.v in w.v_component and w.w in w.w_component
    assert not (w.v_component & w.w_component)


def test_cut_factor_rejects_perfect_factor_input():
    with pytest.raises(ValueError):
        find_cut_factor(corpus.cycle(4))


def test_cut_factor_exists_on_factorless_class_graphs():
    from domgame.generators import generate_instance

    found = 0
    for seed in range(60):
        kind = "block" if seed % 2 else "outerplanar"
        inst = generate_instance(
            kind, {"n": 4 + seed % 6, "p_delete": 0.35}, seed=seed
        )
        G = inst.graph
        if not G.is_connected():
            continue
        if any(G.degree(v) == 0 for v in range(G.n)):
            continue
        if not isinstance(perfect_12_factor(G), NoFactor):
            continue
        assert find_cut_factor(G) is not None
        found += 1
    assert found >= 5


def test_refactor_even_split():
    G = corpus.cycle(4)
    cert = FactorCertificate((Cycle((0, 1, 2, 3)),))
    out = refactor_components(G, cert, "even_split")
    assert out.components == (Edge(0, 1), Edge(2, 3))


def test_refactor_identity_on_edges():
    G = build_graph(2, [(0, 1)])
    cert = FactorCertificate((Edge(0, 1),))
    assert refactor_components(G, cert, "even_split") == cert


def test_refactor_block_k2k3_on_k5():
    G = corpus.complete(5)
    cert = FactorCertificate((Cycle((0, 1, 2, 3, 4)),))
    out = refactor_components(G, cert, "block_k2k3")
    kinds = sorted(type(c).__name__ for c in out.components)
    assert kinds == ["Cycle", "Edge"]
    tri = next(c for c in out.components if isinstance(c, Cycle))
    assert len(tri.order) == 3
    validate_factor(G, out)


def test_refactor_block_mode_requires_block_graph():
    G = corpus.cycle(5)
    cert = FactorCertificate((Cycle((0, 1, 2, 3, 4)),))
    with pytest.raises(ValueError):
        refactor_components(G, cert, "block_k2k3")


def test_regular_graphs_always_have_factor():
    rng = random.Random(17)
    graphs = [corpus.cycle(n) for n in range(3, 13)]
    graphs += [corpus.complete(n) for n in range(2, 9)]
    graphs += [corpus.cube(), corpus.petersen()]
    for G in graphs:
        assert classify_graph(G).regular_degree is not None
        cert = perfect_12_factor(G)
        assert isinstance(cert, FactorCertificate)
        validate_factor(G, cert)

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgame import (
    CertificateError,
    Cycle,
    Edge,
    FactorCertificate,
    PairingDominatingSet,
    TwoUniversal,
    apds_factor_convert,
    brute_force_pds,
    interval_rep,
    intersection_graph,
    nestedness_and_chains,
    normalize_representation,
    pds_dp,
    pds_to_apds,
    unit_interval_decide,
    validate_pds,
)
from domgame.generators import generate_instance
from domgame.intervals import is_proper

import corpus


raw_reps = st.lists(
    st.tuples(st.integers(0, 20), st.integers(0, 12)).map(
        lambda t: (t[0], t[0] + t[1])
    ),
    min_size=0,
    max_size=10,
).map(interval_rep)


def test_normalize_touching_intervals_stay_adjacent():
    rep = interval_rep([(0, 1), (1, 2)])
    norm = normalize_representation(rep)
    assert sorted(x for b in norm.bounds for x in b) == [1, 2, 3, 4]
    assert intersection_graph(norm).has_edge(0, 1)


def test_normalize_distinct_is_order_isomorphic():
    rep = interval_rep([(0, 5), (2, 9), (6, 7)])
    norm = normalize_representation(rep)
    assert norm.bounds == ((Fraction(1), Fraction(3)), (Fraction(2), Fraction(6)), (Fraction(4), Fraction(5)))


@settings(deadline=None, max_examples=500)
@given(raw_reps)
def test_normalize_preserves_intersection_graph(rep):
    norm = normalize_representation(rep)
    assert intersection_graph(norm).adj == intersection_graph(rep).adj


def test_intersection_graph_basic():
    assert intersection_graph(interval_rep([(1, 4), (3, 6)])).has_edge(0, 1)
    assert not intersection_graph(interval_rep([(1, 2), (3, 4)])).has_edge(0, 1)
    assert intersection_graph(interval_rep([(1, 6), (2, 3)])).has_edge(0, 1)


def test_nestedness_proper_rep_is_one():
    k, partition = nestedness_and_chains(normalize_representation(corpus.unit_path_rep(6)))
    assert k == 1
    assert len(partition.chains) == 1


def test_nestedness_fully_nested():
    rep = normalize_representation(interval_rep([(1, 6), (2, 5), (3, 4)]))
    k, partition = nestedness_and_chains(rep)
    assert k == 3
    assert all(len(c) == 1 for c in partition.chains)


@settings(deadline=None, max_examples=300)
@given(raw_reps)
def test_nestedness_matches_bruteforce(rep):
    norm = normalize_representation(rep)
    k, partition = nestedness_and_chains(norm)
    assert k == corpus.longest_nested_chain_bruteforce(norm)
    for chain in partition.chains:
        for a, b in zip(chain, chain[1:]):
            assert norm.lo(a) < norm.lo(b) and norm.hi(a) < norm.hi(b)


def test_nestedness_below_clique_number():
    rng = random.Random(2)
    for seed in range(120):
        inst = generate_instance(
            "interval", {"n": rng.randint(1, 9), "k": rng.randint(1, 3)}, seed=seed
        )
        norm = normalize_representation(inst.rep)
        k, _ = nestedness_and_chains(norm)
        points = sorted(x for b in norm.bounds for x in b)
        omega = max(
            sum(1 for lo, hi in norm.bounds if lo <= p <= hi) for p in points
        )
        assert k <= omega


def test_unit_decide_even_path():
    got = unit_interval_decide(corpus.unit_path_rep(4))
    assert got.outcome_D
    assert got.certificate.components == (Edge(0, 1), Edge(2, 3))


def test_unit_decide_fig_nine_vertex():
    got = unit_interval_decide(corpus.fig_unit_rep())
    assert not got.outcome_D
    for mask in ((1, 3),), ((1, 3), (3, 5), (5, 7)):
        got = unit_interval_decide(corpus.fig_unit_rep(frozenset(mask)))
        assert not got.outcome_D


def test_unit_decide_triangle_certificate():
    # five intervals where v1 ~ v3 allows one triangle plus one edge
    rep = interval_rep([(0, 21), (10, 31), (20, 41), (40, 51), (50, 61)])
    got = unit_interval_decide(rep)
    assert got.outcome_D
    assert Cycle((0, 1, 2)) in got.certificate.components
    assert Edge(3, 4) in got.certificate.components


def test_unit_decide_rejects_nested_reps():
    with pytest.raises(ValueError):
        unit_interval_decide(interval_rep([(0, 10), (2, 3)]))


def test_unit_decide_singleton_component_not_d():
    rep = interval_rep([(0, 1), (5, 6), (6, 7)])
    got = unit_interval_decide(rep)
    assert not got.outcome_D
    assert got.component_sizes == (1, 2)


def test_pds_dp_path4():
    assert pds_dp(corpus.unit_path_rep(4)).pairs == ((0, 1), (2, 3))


def test_pds_dp_fig_nine_vertex_none():
    assert pds_dp(corpus.fig_unit_rep()) is None


def test_pds_dp_empty_rep():
    assert pds_dp(interval_rep([])).pairs == ()


def test_pds_dp_matches_bruteforce_and_adjacent_variant():
    rng = random.Random(23)
    for seed in range(250):
        n = rng.randint(1, 9)
        k = min(rng.randint(1, 3), n)
        inst = generate_instance("interval", {"n": n, "k": k}, seed=seed * 31 + 7)
        got = pds_dp(inst.rep)
        bf = brute_force_pds(inst.graph)
        bfa = brute_force_pds(inst.graph, adjacent_only=True)
        assert (got is not None) == (bf is not None) == (bfa is not None)
        if got is not None:
            validate_pds(inst.graph, got, adjacent=True)


def test_pds_dp_reconstruction_is_minimum_size():
    rng = random.Random(5)
    for seed in range(80):
        n = rng.randint(2, 8)
        inst = generate_instance("interval", {"n": n, "k": min(2, n)}, seed=seed)
        got = pds_dp(inst.rep)
        if got is None:
            continue
        best = _min_apds_size(inst.graph)
        assert len(got.pairs) == best, (seed, len(got.pairs), best)


def _min_apds_size(G):
    import itertools

    edges = list(G.edges())
    for size in range(0, G.n // 2 + 1):
        for combo in itertools.combinations(edges, size):
            used = [x for e in combo for x in e]
            if len(set(used)) != len(used):
                continue
            pds = PairingDominatingSet(tuple(combo))
            try:
                validate_pds(G, pds, adjacent=True)
                return size
            except CertificateError:
                continue
    return None


def test_pds_to_apds_identity_on_adjacent_input():
    rep = corpus.unit_path_rep(4)
    pds = PairingDominatingSet(((0, 1), (2, 3)))
    assert pds_to_apds(rep, pds).pairs == pds.pairs


def test_pds_to_apds_repairs_biased_search_results():
    rng = random.Random(9)
    repaired = 0
    for seed in range(200):
        n = rng.randint(3, 9)
        k = min(rng.randint(1, 3), n)
        inst = generate_instance("interval", {"n": n, "k": k}, seed=seed * 13 + 5)
        pds = corpus.biased_nonadjacent_pds(inst.graph)
        if pds is None or all(pds.adjacent_flags(inst.graph)):
            continue
        out = pds_to_apds(inst.rep, pds)
        validate_pds(inst.graph, out, adjacent=True)
        assert len(out.pairs) <= len(pds.pairs)
        repaired += 1
    assert repaired >= 10


def test_pds_to_apds_rejects_invalid_input():
    rep = corpus.unit_path_rep(4)
    with pytest.raises(CertificateError):
        pds_to_apds(rep, PairingDominatingSet(((0, 1),)))


def test_apds_factor_convert_single_component():
    # two adjacent universal vertices over three leaves
    from domgame import build_graph

    G = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    apds = PairingDominatingSet(((0, 1),))
    cert = apds_factor_convert(G, apds)
    assert cert.components == (TwoUniversal(0, 1, (2, 3, 4)),)


def test_apds_factor_convert_fig_pds_example():
    G = corpus.fig_pds_example_graph()
    # make the PDS adjacent by pairing inside the triangles plus the hub pair
    apds = PairingDominatingSet(((0, 1), (2, 3), (4, 6)))
    cert = apds_factor_convert(G, apds)
    comp_of = {}
    for comp in cert.components:
        for x in comp.vertices():
            comp_of[x] = comp
    assert comp_of[7].vertices() == comp_of[8].vertices()


def test_apds_factor_round_trip():
    G = corpus.complete(3)
    cert = FactorCertificate((Cycle((0, 1, 2)),))
    apds = apds_factor_convert(G, cert)
    back = apds_factor_convert(G, apds)
    assert len(back.components) == len(cert.components)
    with pytest.raises(CertificateError):
        apds_factor_convert(corpus.cycle(5), FactorCertificate((Cycle((0, 1, 2, 3, 4)),)))


def test_proper_detection():
    assert is_proper(normalize_representation(corpus.unit_path_rep(5)))
    assert not is_proper(normalize_representation(interval_rep([(0, 10), (2, 3)])))

"""Shared corpora and independent reference checks for the test suite."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from domgame import (
    Graph,
    PairingDominatingSet,
    build_graph,
    interval_rep,
)


def from_networkx(g: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return build_graph(
        g.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in g.edges()]
    )


@lru_cache(maxsize=None)
def atlas_connected(max_n: int = 7) -> tuple[Graph, ...]:
    """All connected graphs on 1..max_n vertices, one per isomorphism class."""
    out = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(g):
            out.append(from_networkx(g))
    return tuple(out)


def random_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.15, 0.75)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_graphs(count: int, max_n: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng.randint(1, max_n), rng) for _ in range(count)]


# --- named graphs -----------------------------------------------------------

def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)))


def petersen() -> Graph:
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    return build_graph(10, edges)


def cube() -> Graph:
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return build_graph(8, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def fig_cut_factor_graph() -> Graph:
    # vertices a..i as 0..8
    return build_graph(
        9, [(3, 1), (1, 0), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4), (5, 8), (8, 7)]
    )


def fig_two_c4_graph() -> Graph:
    # two 4-cycles joined through a middle vertex of degree 2
    return build_graph(
        9, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 5)]
    )


def fig_pds_example_graph() -> Graph:
    # u1,v1,u2,v2,u3,v3,a,b,c as 0..8; pairs (0,1),(2,3),(4,5) form a PDS
    return build_graph(
        9,
        [
            (0, 1), (1, 4), (4, 0),
            (2, 3), (3, 5), (5, 2),
            (4, 6), (6, 5), (4, 7), (7, 5), (4, 8), (8, 5),
        ],
    )


def spider7() -> Graph:
    return build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def unit_path_rep(n: int):
    return interval_rep([(10 * i, 10 * i + 11) for i in range(n)])


def fig_unit_rep(chords: frozenset = frozenset()):
    """Nine-vertex proper path representation with optional skip chords
    between even path positions (0-based pairs (1,3), (3,5), (5,7))."""
    his = []
    for i in range(9):
        his.append(10 * i + 21 if (i, i + 2) in chords else 10 * i + 11)
    return interval_rep([(10 * i, hi) for i, hi in zip(range(9), his)])


# --- independent reference checks -------------------------------------------

def outerplanar_by_embedding(G: Graph) -> bool:
    """Reference recognizer: every block must admit a Hamiltonian circular
    order made of graph edges with all remaining edges as non-crossing chords."""
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    for block in nx.biconnected_components(g):
        if len(block) <= 2:
            continue
        verts = sorted(block)
        edgeset = {
            (u, v) for u, v in G.edges() if u in block and v in block
        }
        if not _block_embeds_outerplanar(verts, edgeset):
            return False
    return True


def _block_embeds_outerplanar(verts: list[int], edgeset: set[tuple[int, int]]) -> bool:
    n = len(verts)
    first, rest = verts[0], verts[1:]
    for perm in permutations(rest):
        order = (first,) + perm
        pos = {v: i for i, v in enumerate(order)}
        ok = True
        for i in range(n):
            a, b = order[i], order[(i + 1) % n]
            if (min(a, b), max(a, b)) not in edgeset:
                ok = False
                break
        if not ok:
            continue
        chords = []
        for u, v in edgeset:
            i, j = sorted((pos[u], pos[v]))
            if j - i != 1 and not (i == 0 and j == n - 1):
                chords.append((i, j))
        crossing = any(
            (a < c < b < d) or (c < a < d < b)
            for (a, b), (c, d) in combinations(chords, 2)
        )
        if not crossing:
            return True
    return False


def longest_nested_chain_bruteforce(rep) -> int:
    """Reference nestedness: longest path in the strict containment order."""
    n = rep.n
    contains = {
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and rep.lo(i) < rep.lo(j) and rep.hi(j) < rep.hi(i)
    }
    best = {}

    def depth(i: int) -> int:
        if i not in best:
            best[i] = 1 + max(
                (depth(j) for j in range(n) if (i, j) in contains), default=0
            )
        return best[i]

    return max((depth(i) for i in range(n)), default=0)


def biased_nonadjacent_pds(G: Graph):
    """Pairing search that prefers non-adjacent pairs, to exercise the repair."""
    closed = [G.closed_neighborhood(v) for v in range(G.n)]

    def covered(x, pairs):
        return any(x in closed[u] and x in closed[v] for u, v in pairs)

    def search(pairs, used):
        x = next((x for x in range(G.n) if not covered(x, pairs)), None)
        if x is None:
            return tuple(pairs)
        cands = sorted(closed[x])
        options = [
            (u, v)
            for i, u in enumerate(cands)
            if u not in used
            for v in cands[i + 1 :]
            if v not in used
        ]
        options.sort(key=lambda p: G.has_edge(*p))
        for u, v in options:
            pairs.append((u, v))
            used.update((u, v))
            got = search(pairs, used)
            if got is not None:
                return got
            pairs.pop()
            used.difference_update((u, v))
        return None

    got = search([], set())
    return PairingDominatingSet(got) if got is not None else None


def dyck_proper_reps(n: int):
    """All proper representations on n intervals up to endpoint order."""

    def rec(seq, opens, closes):
        if len(seq) == 2 * n:
            yield tuple(seq)
            return
        if opens < n:
            seq.append(0)
            yield from rec(seq, opens + 1, closes)
            seq.pop()
        if closes < opens:
            seq.append(1)
            yield from rec(seq, opens, closes + 1)
            seq.pop()

    for pattern in rec([], 0, 0):
        los, his = [], []
        for position, kind in enumerate(pattern, start=1):
            (los if kind == 0 else his).append(position)
        yield interval_rep(list(zip(los, his)))

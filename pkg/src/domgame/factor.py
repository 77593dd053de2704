"""Perfect and partial [1,2]-factors via matchings on the incidence bipartite graph.

A spanning factor into edges and cycles exists exactly when the bipartite
double cover (left copy u1, right copy v2, edge iff uv in G) has a perfect
matching; the matched functional digraph splits into directed cycles and
2-cycles give Edge components. Partial factors reduce to minimum-auxiliary
perfect matchings after adding a unit-cost slack edge (u1,u2) per vertex.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .certificates import (
    Cycle,
    Edge,
    FactorCertificate,
    PartialFactorCertificate,
    validate_factor,
)
from .graph import Graph, block_decomposition, classify_graph


class Infeasible(ValueError):
    """Forced constraints admit no partial factor."""


@dataclass(frozen=True)
class IncidenceBipartite:
    """Two copies of V with a real edge (u1,v2) per ordered adjacent pair."""

    n: int
    real: tuple[tuple[int, ...], ...]  # right neighbors of each left vertex
    aux: tuple[bool, ...]  # whether the slack edge (u1,u2) is present

    def real_edge_count(self) -> int:
        return sum(len(r) for r in self.real)


def incidence_bipartite(G: Graph, with_aux: bool = False) -> IncidenceBipartite:
    return IncidenceBipartite(
        n=G.n,
        real=tuple(G.adj[u] for u in range(G.n)),
        aux=tuple([with_aux] * G.n),
    )


@dataclass(frozen=True)
class NoFactor:
    """Hall certificate: a vertex set X with |N(X)| < |X| in G."""

    hall_violator: frozenset[int]


def _hopcroft_karp(n: int, adj: Sequence[Sequence[int]]) -> tuple[list[int], list[int], int]:
    """Maximum matching between two n-vertex sides; returns (match_l, match_r, size)."""
    match_l = [-1] * n
    match_r = [-1] * n
    size = 0
    while True:
        dist = [-1] * n
        queue = [u for u in range(n) if match_l[u] == -1]
        for u in queue:
            dist[u] = 0
        found = False
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            break

        def try_augment(u: int) -> bool:
            for v in adj[u]:
                w = match_r[v]
                if w == -1 or (dist[w] == dist[u] + 1 and try_augment(w)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = -1
            return False

        for u in range(n):
            if match_l[u] == -1 and dist[u] == 0 and try_augment(u):
                size += 1
    return match_l, match_r, size


def _hall_violator(
    n: int, adj: Sequence[Sequence[int]], match_l: list[int], match_r: list[int]
) -> frozenset[int]:
    """Left side of the Koenig set reachable from free left vertices by alternating paths."""
    left = {u for u in range(n) if match_l[u] == -1}
    right: set[int] = set()
    stack = list(left)
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in right:
                right.add(v)
                w = match_r[v]
                if w != -1 and w not in left:
                    left.add(w)
                    stack.append(w)
    assert len(right) < len(left)
    return frozenset(left)


def _components_from_digraph(succ: dict[int, int]) -> tuple[Union[Edge, Cycle], ...]:
    """Split the in/out-degree-1 digraph into Edge (2-cycles) and Cycle components."""
    comps: list[Union[Edge, Cycle]] = []
    seen: set[int] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = succ[start]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = succ[v]
        if len(cyc) == 2:
            comps.append(Edge(min(cyc), max(cyc)))
        else:
            comps.append(Cycle(tuple(cyc)))
    return tuple(comps)


def perfect_12_factor(G: Graph) -> Union[FactorCertificate, NoFactor]:
    """Spanning factor into edges and cycles, or a Hall violator if none exists."""
    if G.n == 0:
        return FactorCertificate(())
    B = incidence_bipartite(G)
    match_l, match_r, size = _hopcroft_karp(G.n, B.real)
    if size < G.n:
        return NoFactor(_hall_violator(G.n, B.real, match_l, match_r))
    succ = {u: match_l[u] for u in range(G.n)}
    cert = FactorCertificate(_components_from_digraph(succ))
    validate_factor(G, cert)
    return cert


def _min_cost_perfect_matching(
    n: int,
    targets: Sequence[Sequence[int]],
    costs: Sequence[Sequence[int]],
) -> Optional[list[int]]:
    """Successive shortest augmenting paths with dual potentials (Dijkstra phase
    per left vertex). Costs must be nonnegative. Returns match_l or None when
    some left vertex cannot be matched."""
    INF = float("inf")
    match_l = [-1] * n
    match_r = [-1] * n
    upot = [0] * n
    vpot = [0] * n

    for s in range(n):
        dist: list = [INF] * n
        prev = [-1] * n
        done = [False] * n
        heap: list[tuple[int, int]] = []
        for v, c in zip(targets[s], costs[s]):
            d = c - upot[s] - vpot[v]
            if d < dist[v]:
                dist[v] = d
                prev[v] = s
                heapq.heappush(heap, (d, v))
        sink = -1
        while heap:
            d, v = heapq.heappop(heap)
            if done[v] or d > dist[v]:
                continue
            done[v] = True
            if match_r[v] == -1:
                sink = v
                break
            i = match_r[v]
            for w, c in zip(targets[i], costs[i]):
                if done[w]:
                    continue
                nd = d + c - upot[i] - vpot[w]
                if nd < dist[w]:
                    dist[w] = nd
                    prev[w] = i
                    heapq.heappush(heap, (nd, w))
        if sink == -1:
            return None
        delta = dist[sink]
        upot[s] += delta
        for v in range(n):
            if done[v] and v != sink:
                upot[match_r[v]] += delta - dist[v]
                vpot[v] += dist[v] - delta
        v = sink
        while v != -1:
            i = prev[v]
            nxt = match_l[i]
            match_l[i] = v
            match_r[v] = i
            v = nxt
    return match_l


def max_partial_12_factor(
    G: Graph,
    forced_uncovered: Iterable[int] = (),
    forced_arcs: Iterable[tuple[int, int]] = (),
    forced_covered: Iterable[int] = (),
) -> PartialFactorCertificate:
    """Maximum-coverage edge/cycle packing subject to forcing constraints.

    forced_uncovered vertices stay outside the packing (their real slots are
    deleted), each forced arc (u, w) must appear in the functional digraph
    (u1 is pinned to w2), and forced_covered vertices lose their slack edge.
    Raises Infeasible when the constraints conflict or cannot be met.
    """
    uncovered = set(forced_uncovered)
    covered = set(forced_covered)
    arcs = list(forced_arcs)
    for u, w in arcs:
        if u in uncovered or w in uncovered:
            raise Infeasible(f"forced arc ({u},{w}) touches a forced-uncovered vertex")
        if not G.has_edge(u, w):
            raise Infeasible(f"forced arc ({u},{w}) is not an edge")
    if uncovered & covered:
        raise Infeasible("a vertex is forced both covered and uncovered")
    srcs = [u for u, _ in arcs]
    dsts = [w for _, w in arcs]
    if len(set(srcs)) != len(srcs) or len(set(dsts)) != len(dsts):
        raise Infeasible("conflicting forced arcs")
    arc_out = dict(arcs)
    arc_in = {w: u for u, w in arcs}

    targets: list[list[int]] = []
    costs: list[list[int]] = []
    for u in range(G.n):
        if u in arc_out:
            targets.append([arc_out[u]])
            costs.append([0])
            continue
        tg: list[int] = []
        cs: list[int] = []
        if u not in uncovered:
            for v in G.adj[u]:
                if v in uncovered or v in arc_in:
                    continue
                tg.append(v)
                cs.append(0)
        if u not in covered and u not in arc_in:
            tg.append(u)
            cs.append(1)
        targets.append(tg)
        costs.append(cs)

    match_l = _min_cost_perfect_matching(G.n, targets, costs)
    if match_l is None:
        raise Infeasible("forced constraints admit no packing")
    succ = {u: match_l[u] for u in range(G.n) if match_l[u] != u}
    cert = PartialFactorCertificate(
        covered=frozenset(succ),
        components=_components_from_digraph(succ),
    )
    validate_factor(G, cert)
    return cert


@dataclass(frozen=True)
class CutFactorWitness:
    """A maximum partial factor plus the separating triple (u, v, w)."""

    factor: PartialFactorCertificate
    u: int
    w: int
    v: int
    v_component: frozenset[int]
    w_component: frozenset[int]


def _components_without(G: Graph, u: int) -> list[frozenset[int]]:
    sub, mapping = G.induced(v for v in range(G.n) if v != u)
    return [frozenset(mapping[x] for x in comp) for comp in sub.components()]


def find_cut_factor(G: Graph) -> Optional[CutFactorWitness]:
    """Probe every (cut vertex u, neighbor pair v, w split by u) for a maximum
    partial factor that leaves v uncovered while packing the arc u-w."""
    if not G.is_connected():
        raise ValueError("cut-factor search expects a connected graph")
    if any(G.degree(v) == 0 for v in range(G.n)):
        raise ValueError("cut-factor search expects no isolated vertex")
    base = max_partial_12_factor(G)
    best = len(base.covered)
    if best == G.n:
        raise ValueError("graph has a perfect [1,2]-factor; no cut-factor exists")

    decomp = block_decomposition(G)
    for u in sorted(decomp.cut_vertices):
        comps = _components_without(G, u)
        comp_of: dict[int, int] = {}
        for ci, comp in enumerate(comps):
            for x in comp:
                comp_of[x] = ci
        for v in G.adj[u]:
            for w in G.adj[u]:
                if v == w or comp_of[v] == comp_of[w]:
                    continue
                for arc in ((u, w), (w, u)):
                    try:
                        cert = max_partial_12_factor(G, forced_uncovered=(v,), forced_arcs=(arc,))
                    except Infeasible:
                        continue
                    if len(cert.covered) == best:
                        return CutFactorWitness(
                            factor=cert,
                            u=u,
                            w=w,
                            v=v,
                            v_component=comps[comp_of[v]],
                            w_component=comps[comp_of[w]],
                        )
    return None


def refactor_components(G: Graph, F: FactorCertificate, mode: str) -> FactorCertificate:
    """Rewrite cycle components: 'even_split' turns even cycles into matchings,
    'block_k2k3' additionally turns odd cycles inside clique blocks into
    floor((len-3)/2) edges plus one triangle."""
    validate_factor(G, F)
    if mode not in ("even_split", "block_k2k3"):
        raise ValueError(f"unknown refactor mode {mode!r}")
    if mode == "block_k2k3" and not classify_graph(G).is_block_graph:
        raise ValueError("block_k2k3 refactoring requires a block graph")
    out: list = []
    for comp in F.components:
        if not isinstance(comp, Cycle):
            out.append(comp)
            continue
        order = comp.order
        if len(order) % 2 == 0:
            out.extend(Edge(min(a, b), max(a, b)) for a, b in zip(order[0::2], order[1::2]))
        elif mode == "block_k2k3":
            if len(order) == 3:
                out.append(comp)
            else:
                out.append(Cycle(order[:3]))
                rest = order[3:]
                out.extend(Edge(min(a, b), max(a, b)) for a, b in zip(rest[0::2], rest[1::2]))
        else:
            out.append(comp)
    cert = FactorCertificate(tuple(out))
    validate_factor(G, cert)
    return cert

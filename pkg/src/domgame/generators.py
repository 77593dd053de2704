"""Seeded instance generators for every graph class the deciders handle."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .graph import Graph, build_graph
from .intervals import IntervalRep
from .io import Instance


class GenerationError(ValueError):
    """Requested parameters admit no instance."""


def _random_regular(n: int, r: int, rng: random.Random) -> Graph:
    # pairing model with rejection; r*n must be even
    if r >= n or (n * r) % 2 == 1 or r < 1:
        raise GenerationError(f"no {r}-regular simple graph on {n} vertices")
    for _ in range(5000):
        points = [v for v in range(n) for _ in range(r)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for u, v in zip(points[0::2], points[1::2]):
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return build_graph(n, sorted(edges))
    raise GenerationError(f"pairing model failed for n={n}, r={r}")


def _random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 0:
        raise GenerationError("tree needs at least one vertex")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    import heapq

    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return build_graph(n, edges)


def _random_block(n: int, rng: random.Random) -> Graph:
    # glue random cliques at single attachment vertices
    if n <= 0:
        raise GenerationError("block graph needs at least one vertex")
    edges: list[tuple[int, int]] = []
    built = 1
    while built < n:
        size = min(rng.randint(2, 4), n - built + 1)
        anchor = rng.randrange(built)
        fresh = list(range(built, built + size - 1))
        clique = [anchor] + fresh
        for i, a in enumerate(clique):
            for b in clique[i + 1 :]:
                edges.append((a, b))
        built += size - 1
    return build_graph(n, edges)


def _maximal_outerplanar(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    edges = [(i, (i + 1) % n) for i in range(n)]

    def triangulate(lo: int, hi: int) -> None:
        # chord endpoints along the polygon arc lo..hi
        if hi - lo < 2:
            return
        mid = rng.randint(lo + 1, hi - 1)
        if mid - lo >= 2:
            edges.append((lo, mid))
        if hi - mid >= 2:
            edges.append((mid, hi))
        triangulate(lo, mid)
        triangulate(mid, hi)

    triangulate(0, n - 1)
    return edges


def _random_outerplanar(n: int, p_delete: float, rng: random.Random) -> Graph:
    edges = _maximal_outerplanar(n, rng)
    kept = [e for e in edges if rng.random() >= p_delete]
    return build_graph(n, kept)


def _dyck_intervals(slots: list[int], rng: random.Random) -> list[tuple[int, int]]:
    """Assign sorted endpoint slots to a random proper chain (balanced pattern)."""
    n = len(slots) // 2
    opens = 0
    closes = 0
    pattern = []
    for _ in range(2 * n):
        can_open = opens < n
        can_close = closes < opens
        if can_open and (not can_close or rng.random() < 0.5):
            pattern.append(0)
            opens += 1
        else:
            pattern.append(1)
            closes += 1
    los, his = [], []
    for slot, kind in zip(slots, pattern):
        (los if kind == 0 else his).append(slot)
    return list(zip(los, his))


def _random_interval(n: int, k: int, rng: random.Random) -> IntervalRep:
    """Union of k proper chains; any nested chain takes at most one interval
    per proper chain, so the nestedness of the result is at most k."""
    if k < 1 or n < k:
        raise GenerationError(f"interval family needs 1 <= k <= n, got k={k}, n={n}")
    sizes = [n // k + (1 if i < n % k else 0) for i in range(k)]
    slots = rng.sample(range(1, 8 * n + 1), 2 * n)
    slots.sort()
    assignment = [i for i, size in enumerate(sizes) for _ in range(2 * size)]
    rng.shuffle(assignment)
    per_chain: list[list[int]] = [[] for _ in range(k)]
    for slot, chain in zip(slots, assignment):
        per_chain[chain].append(slot)
    bounds: list[tuple[Fraction, Fraction]] = []
    for chain_slots in per_chain:
        for lo, hi in _dyck_intervals(chain_slots, rng):
            bounds.append((Fraction(lo), Fraction(hi)))
    rng.shuffle(bounds)
    return IntervalRep(tuple(bounds))


def generate_instance(kind: str, params: Optional[dict] = None, seed: int = 0) -> Instance:
    """Deterministic instance generator.

    Kinds: regular (n, r), tree (n), block (n), outerplanar (n, p_delete),
    interval (n, k), proper_interval (n).
    """
    params = dict(params or {})
    rng = random.Random(seed)
    n = int(params.get("n", 8))
    if kind == "regular":
        return Instance(_random_regular(n, int(params.get("r", 3)), rng), None)
    if kind == "tree":
        return Instance(_random_tree(n, rng), None)
    if kind == "block":
        return Instance(_random_block(n, rng), None)
    if kind == "outerplanar":
        return Instance(
            _random_outerplanar(n, float(params.get("p_delete", 0.3)), rng), None
        )
    if kind == "interval":
        rep = _random_interval(n, int(params.get("k", 2)), rng)
        from .intervals import intersection_graph

        return Instance(intersection_graph(rep), rep)
    if kind == "proper_interval":
        rep = _random_interval(n, 1, rng)
        from .intervals import intersection_graph

        return Instance(intersection_graph(rep), rep)
    raise GenerationError(f"unknown instance kind {kind!r}")

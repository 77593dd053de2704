"""Exact ground truth: memoized minimax for the domination game and
exponential certificate searches used to validate the polynomial deciders."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union

from .certificates import (
    Cycle,
    Edge,
    FactorCertificate,
    PairingDominatingSet,
    PartialFactorCertificate,
    pair_covers,
    validate_factor,
)
from .graph import Graph

DOMINATOR = "dominator"
STALLER = "staller"


class BoundExceeded(RuntimeError):
    """Instance exceeds the configured exact-search bound."""


class Outcome(Enum):
    D = "D"
    S = "S"
    N = "N"
    NOT_D_UNRESOLVED = "not-D"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class GamePosition:
    graph: Graph
    dominator: frozenset[int]
    staller: frozenset[int]
    to_move: str

    def __post_init__(self) -> None:
        if self.dominator & self.staller:
            raise ValueError("claimed sets must be disjoint")


class GameSolver:
    """Minimax over claimed-set bitboards, memoized on (D, S, mover)."""

    def __init__(self, G: Graph, max_n: int = 13, memo_cap: int = 4_000_000):
        if G.n > max_n:
            raise BoundExceeded(f"graph has {G.n} vertices, oracle bound is {max_n}")
        self.G = G
        self.n = G.n
        self.full = (1 << G.n) - 1
        self.masks = [(1 << v) | sum(1 << w for w in G.adj[v]) for v in range(G.n)]
        self.memo: dict[tuple[int, int, bool], bool] = {}
        self.memo_cap = memo_cap

    def _dominator_done(self, d: int) -> bool:
        return all(mask & d for mask in self.masks)

    def _staller_done(self, s: int) -> bool:
        return any(mask & ~s == 0 for mask in self.masks)

    def dominator_wins(self, d: int, s: int, dominator_to_move: bool) -> bool:
        if self._staller_done(s):
            return False
        if self._dominator_done(d):
            return True
        key = (d, s, dominator_to_move)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        free = self.full & ~(d | s)
        assert free, "full board must satisfy one terminal condition"
        result = not dominator_to_move
        bits = free
        while bits:
            bit = bits & -bits
            bits ^= bit
            if dominator_to_move:
                if self.dominator_wins(d | bit, s, False):
                    result = True
                    break
            else:
                if not self.dominator_wins(d, s | bit, True):
                    result = False
                    break
        if len(self.memo) >= self.memo_cap:
            raise BoundExceeded("oracle memo table reached its cap; refusing")
        self.memo[key] = result
        return result


def solve_position(pos: GamePosition, max_n: int = 13) -> str:
    """Exact winner of a game position under optimal play."""
    solver = GameSolver(pos.graph, max_n=max_n)
    d = sum(1 << v for v in pos.dominator)
    s = sum(1 << v for v in pos.staller)
    wins = solver.dominator_wins(d, s, pos.to_move == DOMINATOR)
    return DOMINATOR if wins else STALLER


def outcome(G: Graph, max_n: int = 13) -> Outcome:
    """Combine the two first-player solves into the three-valued outcome."""
    try:
        solver = GameSolver(G, max_n=max_n)
    except BoundExceeded:
        return Outcome.UNKNOWN
    dom_first = solver.dominator_wins(0, 0, True)
    stall_first = solver.dominator_wins(0, 0, False)
    if dom_first and stall_first:
        return Outcome.D
    if not dom_first and not stall_first:
        return Outcome.S
    assert dom_first and not stall_first, (
        "second player winning both ways is impossible"
    )
    return Outcome.N


def brute_force_pds(
    G: Graph, adjacent_only: bool = False, max_n: int = 12
) -> Optional[PairingDominatingSet]:
    """Depth-first pairing search branching on the least uncovered vertex."""
    if G.n > max_n:
        raise BoundExceeded(f"graph has {G.n} vertices, pairing search bound is {max_n}")

    closed = [G.closed_neighborhood(v) for v in range(G.n)]

    def covered(x: int, pairs: list[tuple[int, int]]) -> bool:
        return any(x in closed[u] and x in closed[v] for u, v in pairs)

    def search(pairs: list[tuple[int, int]], used: set[int]) -> Optional[tuple]:
        x = next((x for x in range(G.n) if not covered(x, pairs)), None)
        if x is None:
            return tuple(pairs)
        candidates = sorted(closed[x])
        for i, u in enumerate(candidates):
            if u in used:
                continue
            for v in candidates[i + 1 :]:
                if v in used:
                    continue
                if adjacent_only and not G.has_edge(u, v):
                    continue
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


def _cycles_through(G: Graph, v: int, allowed: frozenset[int]) -> Iterator[tuple[int, ...]]:
    """Simple cycles through v inside the allowed set, one orientation each."""
    path = [v]
    on_path = {v}

    def walk() -> Iterator[tuple[int, ...]]:
        u = path[-1]
        for w in G.adj[u]:
            if w == v and len(path) >= 3 and path[1] < path[-1]:
                yield tuple(path)
            elif w in allowed and w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from walk()
                path.pop()
                on_path.discard(w)

    yield from walk()


def brute_force_factor(
    G: Graph, mode: str = "perfect", max_n: int = 10
) -> Union[FactorCertificate, PartialFactorCertificate, None]:
    """Exhaustive edge/cycle packing search over vertex subsets.

    'perfect' returns a spanning packing or None; 'max_partial' returns a
    packing of maximum coverage.
    """
    if G.n > max_n:
        raise BoundExceeded(f"graph has {G.n} vertices, factor search bound is {max_n}")
    if mode not in ("perfect", "max_partial"):
        raise ValueError(f"unknown mode {mode!r}")

    if mode == "perfect":
        memo: dict[frozenset[int], Optional[tuple]] = {}

        def pack(rest: frozenset[int]) -> Optional[tuple]:
            if not rest:
                return ()
            if rest in memo:
                return memo[rest]
            v = min(rest)
            result = None
            for w in G.adj[v]:
                if w in rest:
                    sub = pack(rest - {v, w})
                    if sub is not None:
                        result = (Edge(v, w),) + sub
                        break
            if result is None:
                for cyc in _cycles_through(G, v, rest):
                    sub = pack(rest - set(cyc))
                    if sub is not None:
                        result = (Cycle(cyc),) + sub
                        break
            memo[rest] = result
            return result

        comps = pack(frozenset(range(G.n)))
        if comps is None:
            return None
        cert = FactorCertificate(comps)
        validate_factor(G, cert)
        return cert

    memo2: dict[frozenset[int], tuple[int, tuple]] = {}

    def best(rest: frozenset[int]) -> tuple[int, tuple]:
        if not rest:
            return 0, ()
        if rest in memo2:
            return memo2[rest]
        v = min(rest)
        top = best(rest - {v})
        for w in G.adj[v]:
            if w in rest:
                cov, comps = best(rest - {v, w})
                if cov + 2 > top[0]:
                    top = (cov + 2, (Edge(v, w),) + comps)
        for cyc in _cycles_through(G, v, rest):
            cov, comps = best(rest - set(cyc))
            if cov + len(cyc) > top[0]:
                top = (cov + len(cyc), (Cycle(cyc),) + comps)
        memo2[rest] = top
        return top

    cov, comps = best(frozenset(range(G.n)))
    cert = PartialFactorCertificate(
        covered=frozenset(x for c in comps for x in c.vertices()),
        components=comps,
    )
    validate_factor(G, cert)
    assert len(cert.covered) == cov
    return cert

"""Executable strategies and the adversarial verification harness.

The composed Dominator strategy answers inside the certificate component that
Staller touched: partner of an edge pair, a free universal vertex, or the
cycle successor of Staller's first move followed by a fixed pairing of the
remaining cycle vertices. The Staller strategy claims a cut-factor vertex and
recurses into whichever split component Dominator did not answer in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .certificates import (
    Cycle,
    Edge,
    FactorCertificate,
    PairingDominatingSet,
    TwoUniversal,
    validate_factor,
)
from .factor import NoFactor, find_cut_factor, perfect_12_factor, refactor_components
from .graph import Graph, classify_graph
from .intervals import apds_factor_convert
from .oracle import DOMINATOR, STALLER, GameSolver


class IllegalMove(RuntimeError):
    """A strategy emitted an unavailable vertex; carries the partial transcript."""

    def __init__(self, message: str, transcript: "PlayTranscript"):
        super().__init__(message)
        self.transcript = transcript


@dataclass
class PlayTranscript:
    moves: list[tuple[str, int]]
    winner: Optional[str]
    reason: Optional[str]  # dominating_set | isolated_vertex


@dataclass
class ExhaustiveReport:
    fixed_side: str
    lines: int
    fixed_losses: int
    example_loss: Optional[PlayTranscript]
    wins: dict[str, int] = field(default_factory=dict)

    @property
    def fixed_never_loses(self) -> bool:
        return self.fixed_losses == 0


class DominatorStrategy:
    """Second-player responder composed from a factor or pairing certificate."""

    def __init__(self, G: Graph, components: tuple):
        self.G = G
        self.comp_of: dict[int, int] = {}
        self.kind: list[str] = []
        self.data: list = []
        self.cycle_anchor: dict[int, Optional[int]] = {}
        self.cycle_pairs: dict[int, dict[int, int]] = {}
        self.settled: dict[int, bool] = {}
        self.ours: set[int] = set()
        self.theirs: set[int] = set()
        for ci, comp in enumerate(components):
            for v in comp.vertices():
                self.comp_of[v] = ci
            self.data.append(comp)
            if isinstance(comp, Edge):
                self.kind.append("edge")
            elif isinstance(comp, TwoUniversal):
                self.kind.append("two_universal")
                self.settled[ci] = False
            else:
                self.kind.append("cycle")
                self.cycle_anchor[ci] = None
                self.cycle_pairs[ci] = {}

    def fork(self) -> "DominatorStrategy":
        clone = object.__new__(DominatorStrategy)
        clone.G = self.G
        clone.comp_of = self.comp_of
        clone.kind = self.kind
        clone.data = self.data
        clone.cycle_anchor = dict(self.cycle_anchor)
        clone.cycle_pairs = {ci: dict(p) for ci, p in self.cycle_pairs.items()}
        clone.settled = dict(self.settled)
        clone.ours = set(self.ours)
        clone.theirs = set(self.theirs)
        return clone

    def _free(self, v: int) -> bool:
        return v not in self.ours and v not in self.theirs

    def _anchor_cycle(self, ci: int, anchor: int) -> None:
        order = self.data[ci].order
        idx = {v: i for i, v in enumerate(order)}
        L = len(order)
        a = idx[anchor]
        pairs: dict[int, int] = {}
        for off in range(3, L - 1, 2):
            x = order[(a + off) % L]
            y = order[(a + off + 1) % L]
            pairs[x] = y
            pairs[y] = x
        self.cycle_anchor[ci] = anchor
        self.cycle_pairs[ci] = pairs

    def _component_reply(self, ci: int, move: int) -> Optional[int]:
        kind = self.kind[ci]
        if kind == "edge":
            comp = self.data[ci]
            partner = comp.v if move == comp.u else comp.u
            return partner if self._free(partner) else None
        if kind == "two_universal":
            if self.settled[ci]:
                return None
            comp = self.data[ci]
            pick = next((x for x in (comp.u, comp.v) if self._free(x)), None)
            if pick is not None:
                self.settled[ci] = True
            return pick
        order = self.data[ci].order
        if self.cycle_anchor[ci] is None:
            idx = order.index(move)
            reply = order[(idx + 1) % len(order)]
            self._anchor_cycle(ci, move)
            return reply
        partner = self.cycle_pairs[ci].get(move)
        if partner is not None and self._free(partner):
            return partner
        return None

    def _fallback(self) -> int:
        for ci, kind in enumerate(self.kind):
            if kind == "two_universal" and not self.settled[ci]:
                comp = self.data[ci]
                pick = next((x for x in (comp.u, comp.v) if self._free(x)), None)
                if pick is not None:
                    self.settled[ci] = True
                    return pick
            elif kind == "edge":
                comp = self.data[ci]
                if self._free(comp.u) and self._free(comp.v):
                    return comp.u
            elif kind == "cycle":
                order = self.data[ci].order
                if self.cycle_anchor[ci] is None and all(self._free(x) for x in order):
                    pred = order[-1]
                    self._anchor_cycle(ci, pred)
                    return order[0]
                for x, y in self.cycle_pairs[ci].items():
                    if self._free(x) and self._free(y):
                        return min(x, y)
        return next(v for v in range(self.G.n) if self._free(v))

    def respond(self, staller_move: int) -> int:
        self.theirs.add(staller_move)
        reply = self._component_reply(self.comp_of[staller_move], staller_move)
        if reply is None:
            reply = self._fallback()
        self.ours.add(reply)
        return reply

    def free_move(self) -> int:
        reply = self._fallback()
        self.ours.add(reply)
        return reply


def compose_dominator_strategy(
    G: Graph, cert: Union[FactorCertificate, PairingDominatingSet]
) -> DominatorStrategy:
    """Build the per-component responder table; even cycles are split first."""
    if isinstance(cert, PairingDominatingSet):
        cert = apds_factor_convert(G, cert)
    validate_factor(G, cert)
    cert = refactor_components(G, cert, "even_split")
    return DominatorStrategy(G, cert.components)


class StallerStrategy:
    """First-player strategy for graphs with the cut-factor property."""

    def __init__(self, G: Graph, _check: bool = True):
        self.G = G
        self.cache: dict[frozenset[int], object] = {}
        self.active: Optional[frozenset[int]] = None
        self.branches: Optional[tuple[frozenset[int], frozenset[int]]] = None
        self.done = False
        if not _check:
            return
        comps = G.components()
        if any(len(c) == 1 for c in comps):
            return
        if not isinstance(perfect_12_factor(G), NoFactor):
            raise ValueError("graph has a perfect [1,2]-factor; Staller cannot force a win")
        for comp in comps:
            sub, _ = G.induced(comp)
            flags = classify_graph(sub)
            if not (flags.is_block_graph or flags.is_outerplanar):
                raise ValueError(
                    "cut-factor strategy requires block or outerplanar components"
                )

    def fork(self) -> "StallerStrategy":
        clone = StallerStrategy(self.G, _check=False)
        clone.cache = self.cache
        clone.active = self.active
        clone.branches = self.branches
        clone.done = self.done
        return clone

    def _choose_start(self) -> None:
        comps = self.G.components()
        singles = [c for c in comps if len(c) == 1]
        if singles:
            self.active = frozenset(singles[0])
            return
        for comp in comps:
            sub, _ = self.G.induced(comp)
            if isinstance(perfect_12_factor(sub), NoFactor):
                self.active = frozenset(comp)
                return
        raise RuntimeError("no factorless component available")

    def _witness(self, region: frozenset[int]):
        hit = self.cache.get(region)
        if hit is None:
            sub, mapping = self.G.induced(region)
            w = find_cut_factor(sub)
            if w is None:
                raise RuntimeError("cut-factor property violated on a reached subgraph")
            hit = (
                mapping[w.u],
                frozenset(mapping[x] for x in w.v_component),
                frozenset(mapping[x] for x in w.w_component),
            )
            self.cache[region] = hit
        return hit

    def next_move(self) -> int:
        if self.active is None:
            self._choose_start()
        region = self.active
        if len(region) == 1:
            self.branches = None
            self.done = True
            return next(iter(region))
        u, v_comp, w_comp = self._witness(region)
        self.branches = (v_comp, w_comp)
        return u

    def observe(self, dominator_move: int) -> None:
        if self.branches is None:
            return
        v_comp, w_comp = self.branches
        self.active = w_comp if dominator_move in v_comp else v_comp
        self.branches = None


def staller_cut_factor_strategy(G: Graph) -> StallerStrategy:
    return StallerStrategy(G)


class _Adapter:
    """Uniform move interface over strategies, the oracle, and random play."""

    def __init__(self, side: str, policy, rng: Optional[random.Random], solver):
        self.side = side
        self.policy = policy
        self.rng = rng
        self.solver = solver

    def fork(self) -> "_Adapter":
        policy = self.policy
        if hasattr(policy, "fork"):
            policy = policy.fork()
        rng = None
        if self.rng is not None:
            rng = random.Random()
            rng.setstate(self.rng.getstate())
        return _Adapter(self.side, policy, rng, self.solver)

    def move(self, G: Graph, dom: set[int], stall: set[int], last: Optional[int]) -> int:
        free = [v for v in range(G.n) if v not in dom and v not in stall]
        if isinstance(self.policy, DominatorStrategy):
            return self.policy.respond(last) if last is not None else self.policy.free_move()
        if isinstance(self.policy, StallerStrategy):
            if last is not None:
                self.policy.observe(last)
            if self.policy.done:
                return free[0]
            return self.policy.next_move()
        if self.policy == "random":
            return self.rng.choice(free)
        if self.policy == "oracle":
            d = sum(1 << v for v in dom)
            s = sum(1 << v for v in stall)
            for v in free:
                if self.side == DOMINATOR:
                    if self.solver.dominator_wins(d | (1 << v), s, False):
                        return v
                else:
                    if not self.solver.dominator_wins(d, s | (1 << v), True):
                        return v
            return free[0]
        raise ValueError(f"unknown policy {self.policy!r}")


def _check_winner(G: Graph, dom: set[int], stall: set[int]) -> Optional[tuple[str, str]]:
    for v in range(G.n):
        nb = G.closed_neighborhood(v)
        if nb <= stall:
            return STALLER, "isolated_vertex"
    if all(G.closed_neighborhood(v) & dom for v in range(G.n)):
        return DOMINATOR, "dominating_set"
    return None


def play_match(
    G: Graph,
    dominator,
    staller,
    first: str = DOMINATOR,
    seed: Optional[int] = None,
    max_oracle_n: int = 13,
) -> Union[PlayTranscript, ExhaustiveReport]:
    """Run one match, or verify a fixed side against an exhaustive adversary.

    Each player is a strategy object, 'oracle', 'random', or 'exhaustive';
    with an exhaustive side the report states whether the other (fixed) side
    ever loses across the full move tree.
    """
    needs_oracle = "oracle" in (dominator, staller)
    solver = GameSolver(G, max_n=max_oracle_n) if needs_oracle else None
    rng = random.Random(seed)
    exhaustive_side = None
    if dominator == "exhaustive":
        exhaustive_side = DOMINATOR
    if staller == "exhaustive":
        if exhaustive_side is not None:
            raise ValueError("only one side may be exhaustive")
        exhaustive_side = STALLER

    def adapter(side, policy):
        return _Adapter(side, policy, rng, solver)

    if exhaustive_side is None:
        players = {DOMINATOR: adapter(DOMINATOR, dominator), STALLER: adapter(STALLER, staller)}
        dom: set[int] = set()
        stall: set[int] = set()
        transcript = PlayTranscript([], None, None)
        mover = first
        last: dict[str, Optional[int]] = {DOMINATOR: None, STALLER: None}
        while True:
            v = players[mover].move(G, dom, stall, last[mover])
            if v in dom or v in stall or not 0 <= v < G.n:
                raise IllegalMove(f"{mover} claimed unavailable vertex {v}", transcript)
            (dom if mover == DOMINATOR else stall).add(v)
            transcript.moves.append((mover, v))
            other = STALLER if mover == DOMINATOR else DOMINATOR
            last[other] = v
            ended = _check_winner(G, dom, stall)
            if ended is not None:
                transcript.winner, transcript.reason = ended
                return transcript
            mover = other

    fixed_side = STALLER if exhaustive_side == DOMINATOR else DOMINATOR
    fixed_policy = dominator if fixed_side == DOMINATOR else staller
    report = ExhaustiveReport(
        fixed_side=fixed_side,
        lines=0,
        fixed_losses=0,
        example_loss=None,
        wins={DOMINATOR: 0, STALLER: 0},
    )

    def walk(dom: set, stall: set, mover: str, fixed: _Adapter, last_fixed, moves: list) -> None:
        ended = _check_winner(G, dom, stall)
        if ended is None and len(dom) + len(stall) == G.n:
            raise AssertionError("full board must have a winner")
        if ended is not None:
            report.lines += 1
            report.wins[ended[0]] += 1
            if ended[0] != fixed_side and report.example_loss is None:
                report.example_loss = PlayTranscript(list(moves), ended[0], ended[1])
            return
        if mover == fixed_side:
            branch = fixed.fork()
            v = branch.move(G, dom, stall, last_fixed)
            if v in dom or v in stall:
                raise IllegalMove(
                    f"{mover} claimed unavailable vertex {v}",
                    PlayTranscript(list(moves), None, None),
                )
            claimed = dom if mover == DOMINATOR else stall
            claimed.add(v)
            moves.append((mover, v))
            walk(dom, stall, _other(mover), branch, None, moves)
            moves.pop()
            claimed.discard(v)
        else:
            for v in range(G.n):
                if v in dom or v in stall:
                    continue
                claimed = dom if mover == DOMINATOR else stall
                claimed.add(v)
                moves.append((mover, v))
                walk(dom, stall, _other(mover), fixed, v, moves)
                moves.pop()
                claimed.discard(v)

    walk(set(), set(), first, adapter(fixed_side, fixed_policy), None, [])
    return report


def _other(side: str) -> str:
    return STALLER if side == DOMINATOR else DOMINATOR

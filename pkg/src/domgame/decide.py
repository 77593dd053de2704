"""Routing facade: strongest applicable decider first, certificate preferred.

Routing: isolated vertex, then the spanning factor test (valid on every
graph), then the class deciders. A no-factor verdict on block or outerplanar
inputs only proves the second player cannot win, so those decisions surface as
not-D and are refined to N/S by the star-plus-factor test or the exact oracle
when the instance is small enough.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .certificates import FactorCertificate, PairingDominatingSet
from .factor import Infeasible, NoFactor, max_partial_12_factor, perfect_12_factor
from .graph import Graph, ClassFlags, classify_graph
from .intervals import (
    IntervalRep,
    intersection_graph,
    is_proper,
    normalize_representation,
    pds_dp,
    unit_interval_decide,
)
from .oracle import BoundExceeded, GameSolver, Outcome, outcome
from .strategy import StallerStrategy, staller_cut_factor_strategy


@dataclass
class Decision:
    outcome: Outcome
    certificate: object
    method: str
    notes: dict = field(default_factory=dict)


@dataclass(frozen=True)
class StarFactorWitness:
    """Dominator's first move plus a factor covering everything off the star."""

    center: int
    leaves: tuple[int, ...]
    factor: tuple


def dominator_first_star_factor(G: Graph) -> Optional[StarFactorWitness]:
    """Partition into one star plus an edge/cycle packing of the remainder.

    For each candidate center c, vertices outside N[c] must be packed in G-c;
    neighbors of c may stay unpacked and become star leaves. On success,
    claiming c first and then playing the packing wins for Dominator.
    """
    for c in range(G.n):
        others = [v for v in range(G.n) if v != c]
        sub, mapping = G.induced(others)
        neighborhood = set(G.adj[c])
        must_cover = [i for i, old in enumerate(mapping) if old not in neighborhood]
        try:
            cert = max_partial_12_factor(sub, forced_covered=must_cover)
        except Infeasible:
            continue
        leaves = tuple(
            mapping[i] for i in range(sub.n) if i not in cert.covered
        )
        factor = tuple(_remap_component(comp, mapping) for comp in cert.components)
        return StarFactorWitness(center=c, leaves=leaves, factor=factor)
    return None


def _remap_component(comp, mapping):
    from .certificates import Cycle, Edge

    if isinstance(comp, Edge):
        u, v = mapping[comp.u], mapping[comp.v]
        return Edge(min(u, v), max(u, v))
    return Cycle(tuple(mapping[x] for x in comp.order))


def decide(
    G: Graph,
    rep: Optional[IntervalRep] = None,
    hints: Optional[ClassFlags] = None,
    max_oracle_n: int = 13,
) -> Decision:
    """Outcome plus certificate plus method provenance for one instance."""
    if rep is not None:
        if intersection_graph(rep).adj != G.adj:
            raise ValueError("interval representation does not generate the given graph")
    flags = hints if hints is not None else classify_graph(G)
    if G.n == 0:
        return Decision(Outcome.D, FactorCertificate(()), "factor")

    if flags.has_isolated_vertex:
        return _refine_not_d(
            G, Decision(Outcome.NOT_D_UNRESOLVED, staller_cut_factor_strategy(G), "none"),
            max_oracle_n,
        )

    factor = perfect_12_factor(G)
    if isinstance(factor, FactorCertificate):
        method = "regular" if flags.regular_degree is not None else "factor"
        return Decision(Outcome.D, factor, method)
    hall = factor

    if flags.is_block_graph or flags.is_outerplanar:
        if flags.is_tree:
            method = "tree"
        elif flags.is_block_graph:
            method = "block"
        else:
            method = "outerplanar"
        decision = Decision(
            Outcome.NOT_D_UNRESOLVED,
            staller_cut_factor_strategy(G),
            method,
            notes={"hall_violator": sorted(hall.hall_violator)},
        )
        if method == "tree":
            decision.notes["reason"] = "no perfect matching"
        return _refine_not_d(G, decision, max_oracle_n)

    if rep is not None:
        norm = normalize_representation(rep)
        if is_proper(norm):
            unit = unit_interval_decide(rep)
            if unit.outcome_D:
                return Decision(Outcome.D, unit.certificate, "unit_interval")
            if G.is_connected():
                return Decision(Outcome.N, None, "unit_interval")
            return _refine_not_d(
                G, Decision(Outcome.NOT_D_UNRESOLVED, None, "unit_interval"), max_oracle_n
            )
        pds = pds_dp(rep)
        if pds is not None:
            return Decision(Outcome.D, pds, "interval_dp")
        return _refine_not_d(
            G, Decision(Outcome.NOT_D_UNRESOLVED, None, "interval_dp"), max_oracle_n
        )

    try:
        exact = outcome(G, max_n=max_oracle_n)
    except BoundExceeded:
        exact = Outcome.UNKNOWN
    if exact is Outcome.UNKNOWN:
        return Decision(Outcome.UNKNOWN, None, "none")
    return Decision(exact, None, "oracle")


def _refine_not_d(G: Graph, decision: Decision, max_oracle_n: int) -> Decision:
    """Resolve S versus N after a not-D verdict when a cheap witness exists."""
    star = dominator_first_star_factor(G)
    if star is not None:
        decision.notes["not_d_method"] = decision.method
        decision.notes["star_witness"] = star
        decision.method = "star_factor"
        decision.outcome = Outcome.N
        return decision
    if G.n <= max_oracle_n:
        exact = outcome(G, max_n=max_oracle_n)
        assert exact is not Outcome.D, "class decider contradicted the oracle"
        decision.notes["refined_by"] = "oracle"
        decision.outcome = exact
        return decision
    return decision

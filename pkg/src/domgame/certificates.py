"""Certificate objects and their validators.

Everything a decider outputs as proof is one of these; validators check a
certificate against a graph independently of whatever produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph


class CertificateError(ValueError):
    """A certificate failed validation against its graph."""


@dataclass(frozen=True)
class Edge:
    u: int
    v: int

    def vertices(self) -> tuple[int, ...]:
        return (self.u, self.v)


@dataclass(frozen=True)
class Cycle:
    order: tuple[int, ...]

    def vertices(self) -> tuple[int, ...]:
        return self.order


@dataclass(frozen=True)
class TwoUniversal:
    """A component with two adjacent vertices dominating every leaf."""

    u: int
    v: int
    leaves: tuple[int, ...]

    def vertices(self) -> tuple[int, ...]:
        return (self.u, self.v) + self.leaves


Component = Union[Edge, Cycle, TwoUniversal]


@dataclass(frozen=True)
class FactorCertificate:
    """Spanning decomposition into Edge / Cycle / TwoUniversal components."""

    components: tuple[Component, ...]

    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for comp in self.components:
            out.update(comp.vertices())
        return frozenset(out)


@dataclass(frozen=True)
class PartialFactorCertificate:
    """Edge/Cycle packing covering only the listed vertex set."""

    covered: frozenset[int]
    components: tuple[Component, ...]


@dataclass(frozen=True)
class PairingDominatingSet:
    """Disjoint vertex pairs whose closed-neighborhood intersections cover V."""

    pairs: tuple[tuple[int, int], ...]

    def vertices(self) -> frozenset[int]:
        return frozenset(x for pair in self.pairs for x in pair)

    def adjacent_flags(self, G: Graph) -> tuple[bool, ...]:
        return tuple(G.has_edge(u, v) for u, v in self.pairs)


def pair_covers(G: Graph, u: int, v: int, x: int) -> bool:
    """x lies in the intersection of the closed neighborhoods of u and v."""
    return (x == u or G.has_edge(x, u)) and (x == v or G.has_edge(x, v))


def _check_component(G: Graph, comp: Component) -> None:
    if isinstance(comp, Edge):
        if comp.u == comp.v or not G.has_edge(comp.u, comp.v):
            raise CertificateError(f"edge component ({comp.u},{comp.v}) is not an edge")
    elif isinstance(comp, Cycle):
        order = comp.order
        if len(order) < 3:
            raise CertificateError(f"cycle component too short: {order}")
        if len(set(order)) != len(order):
            raise CertificateError(f"cycle component repeats a vertex: {order}")
        for i, a in enumerate(order):
            b = order[(i + 1) % len(order)]
            if not G.has_edge(a, b):
                raise CertificateError(f"cycle edge ({a},{b}) missing from graph")
    elif isinstance(comp, TwoUniversal):
        if not comp.leaves:
            raise CertificateError("two-universal component without leaves; use Edge")
        if not G.has_edge(comp.u, comp.v):
            raise CertificateError(f"universal pair ({comp.u},{comp.v}) not adjacent")
        for leaf in comp.leaves:
            if not (G.has_edge(leaf, comp.u) and G.has_edge(leaf, comp.v)):
                raise CertificateError(f"leaf {leaf} not adjacent to both universals")
    else:
        raise CertificateError(f"unknown component type {type(comp).__name__}")


def validate_factor(
    G: Graph,
    factor: Union[FactorCertificate, PartialFactorCertificate],
    covered: Optional[frozenset[int]] = None,
) -> None:
    """Raise CertificateError unless the components tile exactly the target set.

    For a FactorCertificate the target is all of V; a PartialFactorCertificate
    must tile its own covered set (components 1- or 2-regular only).
    """
    if isinstance(factor, PartialFactorCertificate):
        target = factor.covered
        comps = factor.components
        for comp in comps:
            if isinstance(comp, TwoUniversal):
                raise CertificateError("partial factor components must be 1- or 2-regular")
    else:
        target = covered if covered is not None else frozenset(range(G.n))
        comps = factor.components
    seen: set[int] = set()
    for comp in comps:
        _check_component(G, comp)
        for x in comp.vertices():
            if x in seen:
                raise CertificateError(f"vertex {x} appears in two components")
            seen.add(x)
    if seen != set(target):
        missing = sorted(set(target) - seen)
        extra = sorted(seen - set(target))
        raise CertificateError(f"component cover mismatch: missing={missing} extra={extra}")


def validate_pds(G: Graph, pds: PairingDominatingSet, adjacent: bool = False) -> None:
    """Raise CertificateError unless the pairing dominating set is valid."""
    used: set[int] = set()
    for u, v in pds.pairs:
        if u == v:
            raise CertificateError(f"pair ({u},{v}) repeats a vertex")
        for x in (u, v):
            if not 0 <= x < G.n:
                raise CertificateError(f"pair vertex {x} out of range")
            if x in used:
                raise CertificateError(f"vertex {x} appears in two pairs")
            used.add(x)
        if adjacent and not G.has_edge(u, v):
            raise CertificateError(f"pair ({u},{v}) not adjacent")
    for x in range(G.n):
        if not any(pair_covers(G, u, v, x) for u, v in pds.pairs):
            raise CertificateError(f"vertex {x} not pair-covered")

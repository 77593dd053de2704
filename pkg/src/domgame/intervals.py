"""Interval representations, nestedness chains, and the pairing-set machinery.

The layered dynamic program walks the 2n endpoint events of a normalized
representation. Each state records, per proper chain, the first interval still
waiting for a partner that starts later, plus the latest endpoint already
pair-covered; a state surviving past the last endpoint reconstructs into an
adjacent pairing dominating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .certificates import (
    CertificateError,
    Cycle,
    Edge,
    FactorCertificate,
    PairingDominatingSet,
    TwoUniversal,
    pair_covers,
    validate_factor,
    validate_pds,
)
from .graph import Graph, build_graph


@dataclass(frozen=True)
class IntervalRep:
    """Closed intervals with rational endpoints; interval id == position."""

    bounds: tuple[tuple[Fraction, Fraction], ...]

    @property
    def n(self) -> int:
        return len(self.bounds)

    def lo(self, i: int) -> Fraction:
        return self.bounds[i][0]

    def hi(self, i: int) -> Fraction:
        return self.bounds[i][1]


def interval_rep(pairs: Iterable[tuple] ) -> IntervalRep:
    bounds = []
    for lo, hi in pairs:
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError(f"interval [{lo},{hi}] has min > max")
        bounds.append((lo, hi))
    return IntervalRep(tuple(bounds))


def _raw_overlap(rep: IntervalRep, i: int, j: int) -> bool:
    return rep.lo(j) <= rep.hi(i) and rep.lo(i) <= rep.hi(j)


def intersection_graph(rep: IntervalRep) -> Graph:
    edges = [
        (i, j)
        for i in range(rep.n)
        for j in range(i + 1, rep.n)
        if _raw_overlap(rep, i, j)
    ]
    return build_graph(rep.n, edges)


def normalize_representation(raw: IntervalRep) -> IntervalRep:
    """Remap endpoints to distinct integers 1..2n without changing intersections.

    At equal coordinates starts precede ends, so touching closed intervals stay
    adjacent; equal starts (or ends) break ties by interval id.
    """
    records = []
    for i, (lo, hi) in enumerate(raw.bounds):
        records.append((lo, 0, i))
        records.append((hi, 1, i))
    records.sort()
    los: list[Optional[Fraction]] = [None] * raw.n
    his: list[Optional[Fraction]] = [None] * raw.n
    for pos, (_, kind, i) in enumerate(records, start=1):
        if kind == 0:
            los[i] = Fraction(pos)
        else:
            his[i] = Fraction(pos)
    return IntervalRep(tuple((lo, hi) for lo, hi in zip(los, his)))


def _is_normalized(rep: IntervalRep) -> bool:
    pts = [x for b in rep.bounds for x in b]
    return (
        all(x.denominator == 1 for x in pts)
        and sorted(pts) == [Fraction(i) for i in range(1, 2 * rep.n + 1)]
        and all(lo < hi for lo, hi in rep.bounds)
    )


@dataclass(frozen=True)
class ProperChainPartition:
    """Start-ordered chains, each a proper representation on its own."""

    chains: tuple[tuple[int, ...], ...]


def nestedness_and_chains(rep: IntervalRep) -> tuple[int, ProperChainPartition]:
    """Longest nested chain length plus a patience partition into that many
    proper chains (within a chain both endpoints strictly increase)."""
    if not _is_normalized(rep):
        raise ValueError("nestedness expects a normalized representation")
    order = sorted(range(rep.n), key=rep.lo)
    chains: list[list[int]] = []
    tails: list[Fraction] = []
    for i in order:
        hi = rep.hi(i)
        best = -1
        for ci, tail in enumerate(tails):
            if tail < hi and (best == -1 or tail > tails[best]):
                best = ci
        if best == -1:
            chains.append([i])
            tails.append(hi)
        else:
            chains[best].append(i)
            tails[best] = hi
    return len(chains), ProperChainPartition(tuple(tuple(c) for c in chains))


def is_proper(rep: IntervalRep) -> bool:
    """No interval strictly contains another (ties count as containment-free)."""
    for i in range(rep.n):
        for j in range(rep.n):
            if i != j and rep.lo(i) < rep.lo(j) and rep.hi(j) < rep.hi(i):
                return False
    return True


@dataclass(frozen=True)
class UnitIntervalDecision:
    outcome_D: bool
    certificate: Optional[FactorCertificate]
    component_sizes: tuple[int, ...]


def unit_interval_decide(rep: IntervalRep) -> UnitIntervalDecision:
    """Parity decider for proper representations, per connected component.

    A component on vertices v1..vp in start order wins for the second player
    iff p is even (pair consecutive vertices) or p is odd and some v_{2i-1} is
    adjacent to v_{2i+1} (one triangle plus a matching); a single vertex loses.
    """
    norm = normalize_representation(rep)
    if not is_proper(norm):
        raise ValueError("unit-interval decider expects a proper representation")
    G = intersection_graph(norm)
    order = sorted(range(norm.n), key=norm.lo)
    comps: list[list[int]] = []
    for v in order:
        if comps and any(G.has_edge(v, w) for w in comps[-1]):
            comps[-1].append(v)
        else:
            comps.append([v])
    components: list[list[int]] = []
    for run in comps:
        components.append(run)

    parts: list = []
    winnable = True
    for comp in components:
        p = len(comp)
        if p == 1:
            winnable = False
            continue
        if p % 2 == 0:
            parts.extend(Edge(min(a, b), max(a, b)) for a, b in zip(comp[0::2], comp[1::2]))
            continue
        tri_at = next(
            (e for e in range(0, p - 2, 2) if G.has_edge(comp[e], comp[e + 2])),
            None,
        )
        if tri_at is None:
            winnable = False
            continue
        head = comp[:tri_at]
        parts.extend(Edge(min(a, b), max(a, b)) for a, b in zip(head[0::2], head[1::2]))
        parts.append(Cycle((comp[tri_at], comp[tri_at + 1], comp[tri_at + 2])))
        tail = comp[tri_at + 3 :]
        parts.extend(Edge(min(a, b), max(a, b)) for a, b in zip(tail[0::2], tail[1::2]))

    cert = FactorCertificate(tuple(parts)) if winnable else None
    if cert is not None:
        validate_factor(G, cert)
    return UnitIntervalDecision(
        outcome_D=winnable,
        certificate=cert,
        component_sizes=tuple(len(c) for c in components),
    )


def _contains_gap(lo: int, hi: int, j: int) -> bool:
    # gap j sits between endpoint positions j and j+1
    return lo <= j < hi


def pds_dp(rep: IntervalRep) -> Optional[PairingDominatingSet]:
    """Layered search over endpoint events for an adjacent pairing dominating set.

    Start events branch three ways (newly started interval joins the waiting
    front, stays unpaired, or pairs with the first-to-end waiting interval);
    end events keep a state only if the closing interval is not itself waiting
    and was already pair-covered. Survivors at the last layer reconstruct into
    a minimum-size pairing with adjacent pairs; returns None when no state
    survives, which certifies that no pairing dominating set exists.
    """
    if rep.n == 0:
        return PairingDominatingSet(())
    norm = normalize_representation(rep)
    n = norm.n
    k, partition = nestedness_and_chains(norm)
    chains = partition.chains
    sizes = [len(c) for c in chains]
    lo = [int(norm.lo(i)) for i in range(n)]
    hi = [int(norm.hi(i)) for i in range(n)]
    chain_pos: dict[int, tuple[int, int]] = {}
    for ci, chain in enumerate(chains):
        for pos, iv in enumerate(chain):
            chain_pos[iv] = (ci, pos)
    events: list[Optional[tuple[str, int]]] = [None] * (2 * n + 1)
    for iv in range(n):
        events[lo[iv]] = ("start", iv)
        events[hi[iv]] = ("end", iv)

    sentinel = tuple(sizes)
    start_key = (sentinel, 1)  # t == first endpoint encodes "no pairs yet"
    layers: list[dict] = [{start_key: (0, None, None)}]
    bound = max(n, 2) ** (k + 1)  # single-interval reps reach 2 profiles

    for j in range(2 * n):
        kind, u = events[j + 1]
        ci, pos = chain_pos[u]
        cur = layers[j]
        nxt: dict = {}

        def push(key, cnt, parent, pair):
            old = nxt.get(key)
            if old is None or cnt < old[0]:
                nxt[key] = (cnt, parent, pair)

        for key, (cnt, _, _) in cur.items():
            sv, t = key
            if kind == "start":
                if sv[ci] == sizes[ci]:
                    s1 = sv[:ci] + (pos,) + sv[ci + 1 :]
                    push((s1, t), cnt, key, None)  # u joins the waiting front
                    push((sv, t), cnt, key, None)  # u never enters a pair
                else:
                    push((sv, t), cnt, key, None)  # front unchanged, u waits behind it
                fronts = [
                    (hi[chains[i][sv[i]]], i) for i in range(k) if sv[i] < sizes[i]
                ]
                if fronts:
                    _, i1 = min(fronts)
                    v = chains[i1][sv[i1]]
                    t2 = max(t, min(hi[u], hi[v]))
                    s3 = list(sv)
                    if i1 != ci:
                        nxtpos = sv[i1] + 1
                        if nxtpos < sizes[i1] and _contains_gap(
                            lo[chains[i1][nxtpos]], hi[chains[i1][nxtpos]], j
                        ):
                            s3[i1] = nxtpos
                        else:
                            s3[i1] = sizes[i1]
                    s3[ci] = sizes[ci]
                    push((tuple(s3), t2), cnt + 1, key, (v, u))
            else:
                if sv[ci] <= pos:
                    continue  # u still waiting for a partner: state dies
                if not lo[u] < t:
                    continue  # u ends without being pair-covered
                push((sv, t), cnt, key, None)
        assert len(nxt) <= bound, f"profile layer exceeded {bound}"
        if not nxt:
            return None
        layers.append(nxt)

    final = min(layers[-1].items(), key=lambda kv: kv[1][0])
    pairs: list[tuple[int, int]] = []
    key = final[0]
    for layer in range(2 * n, 0, -1):
        cnt, parent, pair = layers[layer][key]
        if pair is not None:
            pairs.append(pair)
        key = parent
    pairs.reverse()

    for v, u in pairs:
        assert _raw_overlap(norm, v, u), "reconstructed pair is not adjacent"
    pds = PairingDominatingSet(tuple(pairs))
    _check_prefix_coverage(norm, pairs)
    validate_pds(intersection_graph(norm), pds, adjacent=True)
    return pds


def _check_prefix_coverage(norm: IntervalRep, pairs: list[tuple[int, int]]) -> None:
    """Each interval must be pair-covered by pairs fully started before it ends."""
    G = intersection_graph(norm)
    for x in range(norm.n):
        end = norm.hi(x)
        ok = any(
            max(norm.lo(v), norm.lo(u)) < end and pair_covers(G, u, v, x)
            for v, u in pairs
        )
        assert ok, f"interval {x} not covered by the reconstructed pairing"


def pds_to_apds(rep: IntervalRep, pds: PairingDominatingSet) -> PairingDominatingSet:
    """Exchange non-adjacent pairs for adjacent ones without changing the count.

    Repeatedly take the non-adjacent pair (u,v) whose earlier member ends
    first; a witness covered only by that pair overlaps u and reaches v, so
    (u,witness) keeps the coverage, swapping across the witness's own pair
    when it has one.
    """
    norm = normalize_representation(rep)
    G = intersection_graph(norm)
    validate_pds(G, pds, adjacent=False)
    pairs = [tuple(p) for p in pds.pairs]

    while True:
        nonadj = []
        for idx, (a, b) in enumerate(pairs):
            if not G.has_edge(a, b):
                early, late = (a, b) if norm.hi(a) < norm.lo(b) else (b, a)
                nonadj.append((norm.hi(early), idx, early, late))
        if not nonadj:
            break
        _, idx, u, v = min(nonadj)
        used = {x for p in pairs for x in p}
        exclusive = [
            x
            for x in range(G.n)
            if pair_covers(G, u, v, x)
            and sum(1 for a, b in pairs if pair_covers(G, a, b, x)) == 1
        ]
        if exclusive:
            w = min(exclusive)
            if w not in used:
                pairs[idx] = (u, w)
            else:
                widx, (wa, wb) = next(
                    (i, p) for i, p in enumerate(pairs) if w in p
                )
                tpartner = wb if wa == w else wa
                assert norm.hi(w) < norm.lo(tpartner), "witness pair not ordered after witness"
                pairs[idx] = (u, w)
                pairs[widx] = (v, tpartner)
        else:
            # pair is redundant; substitute an adjacent pair to keep the count
            rest = [p for i, p in enumerate(pairs) if i != idx]
            repl = None
            for anchor in (u, v):
                free = [y for y in G.adj[anchor] if y not in used]
                if free:
                    repl = (anchor, free[0])
                    break
            if repl is None:
                unused = [x for x in range(G.n) if x not in used or x in (u, v)]
                repl = next(
                    (
                        (a, b)
                        for ai, a in enumerate(unused)
                        for b in unused[ai + 1 :]
                        if G.has_edge(a, b)
                    ),
                    None,
                )
            if repl is None:
                pairs = rest  # cannot keep the count; drop the redundant pair
            else:
                pairs = rest + [repl]

    out = PairingDominatingSet(tuple(pairs))
    validate_pds(G, out, adjacent=True)
    return out


def apds_factor_convert(
    G: Graph, obj: Union[PairingDominatingSet, FactorCertificate]
) -> Union[PairingDominatingSet, FactorCertificate]:
    """Swap between an adjacent pairing dominating set and its factor form.

    Pairs become components with two universal vertices (leaves attach to the
    lowest-index covering pair); Edge, TwoUniversal and triangle components
    give back their universal pair.
    """
    if isinstance(obj, PairingDominatingSet):
        validate_pds(G, obj, adjacent=True)
        members: dict[int, int] = {}
        for i, (u, v) in enumerate(obj.pairs):
            members[u] = i
            members[v] = i
        leaves: dict[int, list[int]] = {i: [] for i in range(len(obj.pairs))}
        for x in range(G.n):
            if x in members:
                continue
            owner = next(
                i for i, (u, v) in enumerate(obj.pairs) if pair_covers(G, u, v, x)
            )
            leaves[owner].append(x)
        comps: list = []
        for i, (u, v) in enumerate(obj.pairs):
            if leaves[i]:
                comps.append(TwoUniversal(u, v, tuple(leaves[i])))
            else:
                comps.append(Edge(min(u, v), max(u, v)))
        cert = FactorCertificate(tuple(comps))
        validate_factor(G, cert)
        return cert

    validate_factor(G, obj)
    pairs: list[tuple[int, int]] = []
    for comp in obj.components:
        if isinstance(comp, Edge):
            pairs.append((comp.u, comp.v))
        elif isinstance(comp, TwoUniversal):
            pairs.append((comp.u, comp.v))
        elif isinstance(comp, Cycle) and len(comp.order) == 3:
            pairs.append((comp.order[0], comp.order[1]))
        else:
            raise CertificateError(
                "factor with a long cycle has no two-universal pair form"
            )
    pds = PairingDominatingSet(tuple(pairs))
    validate_pds(G, pds, adjacent=True)
    return pds

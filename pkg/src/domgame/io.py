"""Instance and certificate file formats.

Instance files carry a graph section ("n m" header then m edge lines) and an
optional interval section (n lines "id min max"); an interval-only file omits
the header and the graph is derived. Certificates are JSON with a kind tag and
the sha256 digest of the canonical instance text they certify.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .certificates import (
    CertificateError,
    Cycle,
    Edge,
    FactorCertificate,
    PairingDominatingSet,
    PartialFactorCertificate,
    TwoUniversal,
    validate_factor,
    validate_pds,
)
from .graph import Graph, build_graph, GraphInputError
from .intervals import IntervalRep, intersection_graph
from .strategy import PlayTranscript, _check_winner


class InstanceParseError(ValueError):
    def __init__(self, lineno: Optional[int], message: str):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}{message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Instance:
    graph: Graph
    rep: Optional[IntervalRep]


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            out.append((ln, stripped))
    return out


def _parse_fraction(token: str, ln: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InstanceParseError(ln, f"bad endpoint {token!r}") from None


def _parse_interval_lines(lines: list[tuple[int, str]]) -> IntervalRep:
    seen: dict[int, tuple[Fraction, Fraction]] = {}
    for ln, text in lines:
        parts = text.split()
        if len(parts) != 3:
            raise InstanceParseError(ln, f"expected 'id min max', got {text!r}")
        try:
            iid = int(parts[0])
        except ValueError:
            raise InstanceParseError(ln, f"bad interval id {parts[0]!r}") from None
        lo = _parse_fraction(parts[1], ln)
        hi = _parse_fraction(parts[2], ln)
        if lo > hi:
            raise InstanceParseError(ln, f"interval {iid} has min > max")
        if iid in seen:
            raise InstanceParseError(ln, f"duplicate interval id {iid}")
        seen[iid] = (lo, hi)
    n = len(seen)
    if sorted(seen) != list(range(n)):
        raise InstanceParseError(None, "interval ids must be exactly 0..n-1")
    return IntervalRep(tuple(seen[i] for i in range(n)))


def parse_instance_text(text: str) -> Instance:
    lines = _content_lines(text)
    if not lines:
        raise InstanceParseError(None, "empty instance file")
    first_ln, first = lines[0]
    head = first.split()
    if len(head) == 3:
        rep = _parse_interval_lines(lines)
        return Instance(graph=intersection_graph(rep), rep=rep)
    if len(head) != 2:
        raise InstanceParseError(first_ln, f"expected 'n m' header, got {first!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InstanceParseError(first_ln, f"bad header {first!r}") from None
    if len(lines) < 1 + m:
        raise InstanceParseError(first_ln, f"header promises {m} edges, file has fewer lines")
    edges = []
    for ln, text_line in lines[1 : 1 + m]:
        parts = text_line.split()
        if len(parts) != 2:
            raise InstanceParseError(ln, f"expected 'u v', got {text_line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InstanceParseError(ln, f"bad edge {text_line!r}") from None
        edges.append((u, v))
    try:
        graph = build_graph(n, edges)
    except GraphInputError as exc:
        raise InstanceParseError(None, str(exc)) from None
    rest = lines[1 + m :]
    rep = None
    if rest:
        rep = _parse_interval_lines(rest)
        if rep.n != n:
            raise InstanceParseError(None, f"interval section has {rep.n} intervals, graph has {n} vertices")
        derived = intersection_graph(rep)
        if derived.adj != graph.adj:
            raise InstanceParseError(
                None, "interval section is inconsistent with the graph section"
            )
    return Instance(graph=graph, rep=rep)


def parse_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance_text(fh.read())


def _fraction_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    den = x.denominator
    k = 0
    while den % 2 == 0:
        den //= 2
        k += 1
    while den % 5 == 0:
        den //= 5
        k += 1
    if den != 1:
        return f"{x.numerator}/{x.denominator}"
    scale = 1
    digits = 0
    while scale * x.denominator != 0 and (x * scale).denominator != 1:
        scale *= 10
        digits += 1
    scaled = int(x * scale)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


def emit_instance(instance: Instance) -> str:
    G = instance.graph
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    if instance.rep is not None:
        lines.append("")
        for i in range(instance.rep.n):
            lo = _fraction_str(instance.rep.lo(i))
            hi = _fraction_str(instance.rep.hi(i))
            lines.append(f"{i} {lo} {hi}")
    return "\n".join(lines) + "\n"


def instance_digest(instance: Instance) -> str:
    return hashlib.sha256(emit_instance(instance).encode("utf-8")).hexdigest()


def _component_to_json(comp) -> dict:
    if isinstance(comp, Edge):
        return {"type": "edge", "u": comp.u, "v": comp.v}
    if isinstance(comp, Cycle):
        return {"type": "cycle", "vertices": list(comp.order)}
    return {"type": "two_universal", "u": comp.u, "v": comp.v, "leaves": list(comp.leaves)}


def _component_from_json(obj: dict):
    t = obj.get("type")
    if t == "edge":
        return Edge(obj["u"], obj["v"])
    if t == "cycle":
        return Cycle(tuple(obj["vertices"]))
    if t == "two_universal":
        return TwoUniversal(obj["u"], obj["v"], tuple(obj["leaves"]))
    raise CertificateError(f"unknown component type {t!r}")


def certificate_to_json(kind: str, instance: Instance, payload) -> str:
    """Serialize a certificate with the digest of the instance it certifies."""
    body: dict = {"kind": kind, "instance_digest": instance_digest(instance)}
    if kind == "factor":
        body["components"] = [_component_to_json(c) for c in payload.components]
    elif kind in ("pds", "apds"):
        body["pairs"] = [list(p) for p in payload.pairs]
    elif kind in ("staller", "transcript"):
        body["moves"] = [[player, v] for player, v in payload.moves]
        body["winner"] = payload.winner
        body["reason"] = payload.reason
    else:
        raise CertificateError(f"unknown certificate kind {kind!r}")
    return json.dumps(body, indent=2) + "\n"


def verify_certificate(instance: Instance, cert: Union[str, dict]) -> tuple[bool, Optional[str]]:
    """Check a certificate file against an instance; fails closed on digest mismatch."""
    if isinstance(cert, str):
        try:
            cert = json.loads(cert)
        except json.JSONDecodeError as exc:
            return False, f"malformed JSON: {exc}"
    kind = cert.get("kind")
    if cert.get("instance_digest") != instance_digest(instance):
        return False, "instance digest mismatch"
    G = instance.graph
    try:
        if kind == "factor":
            comps = tuple(_component_from_json(c) for c in cert.get("components", []))
            validate_factor(G, FactorCertificate(comps))
        elif kind in ("pds", "apds"):
            pairs = tuple((int(u), int(v)) for u, v in cert.get("pairs", []))
            validate_pds(G, PairingDominatingSet(pairs), adjacent=(kind == "apds"))
        elif kind in ("staller", "transcript"):
            ok, reason = _verify_transcript(G, cert)
            if not ok:
                return False, reason
            if kind == "staller" and cert.get("winner") != "staller":
                return False, "staller certificate must end in a Staller win"
        else:
            return False, f"unknown certificate kind {kind!r}"
    except CertificateError as exc:
        return False, str(exc)
    return True, None


def _verify_transcript(G: Graph, cert: dict) -> tuple[bool, Optional[str]]:
    dom: set[int] = set()
    stall: set[int] = set()
    expected: Optional[str] = None
    moves = cert.get("moves", [])
    for i, entry in enumerate(moves):
        player, v = entry[0], int(entry[1])
        if expected is not None and player != expected:
            return False, f"move {i}: players must alternate"
        expected = "staller" if player == "dominator" else "dominator"
        if player not in ("dominator", "staller"):
            return False, f"move {i}: unknown player {player!r}"
        if not 0 <= v < G.n or v in dom or v in stall:
            return False, f"move {i}: vertex {v} unavailable"
        (dom if player == "dominator" else stall).add(v)
        ended = _check_winner(G, dom, stall)
        if ended is not None:
            if i != len(moves) - 1:
                return False, f"move {i}: game already decided before last move"
            winner, _ = ended
            if cert.get("winner") != winner:
                return False, f"declared winner {cert.get('winner')!r} but replay gives {winner}"
            return True, None
    return False, "transcript ends without a decided game"

"""Simple undirected graphs plus the structural analyses the deciders share."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


class GraphInputError(ValueError):
    """Malformed graph construction input (bad vertex id or self-loop)."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertex ids 0..n-1 with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset((v,) + self.adj[v])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            queue = deque([s])
            comp = [s]
            while queue:
                v = queue.popleft()
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the id table mapping new ids back to this graph."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        adj: list[list[int]] = [[] for _ in order]
        for v in order:
            for w in self.adj[v]:
                if w in index:
                    adj[index[v]].append(index[w])
        return Graph(len(order), tuple(tuple(a) for a in adj)), tuple(order)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, collapsing duplicate edges deterministically."""
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    buckets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u} rejected")
        buckets[u].add(v)
        buckets[v].add(u)
    return Graph(n, tuple(tuple(sorted(b)) for b in buckets))


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components (blocks) and articulation points of a graph."""

    cut_vertices: frozenset[int]
    blocks: tuple[frozenset[int], ...]
    blocks_of: dict[int, tuple[int, ...]]


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Blocks partition the edge set; cut vertices are the articulation points.

    Iterative Hopcroft-Tarjan lowpoint computation with an explicit edge stack,
    so deep paths do not hit the interpreter recursion limit.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    estack: list[tuple[int, int]] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1 or G.degree(root) == 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        work: list[tuple[int, int, int]] = [(root, -1, 0)]
        while work:
            v, parent, i = work.pop()
            if i < len(G.adj[v]):
                work.append((v, parent, i + 1))
                w = G.adj[v][i]
                if w == parent:
                    continue
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    work.append((w, v, 0))
                elif disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                if parent == -1:
                    continue
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    members: set[int] = set()
                    while estack:
                        e = estack.pop()
                        members.update(e)
                        if e == (parent, v):
                            break
                    blocks.append(frozenset(members))
                    if parent == root:
                        root_children += 1
                    else:
                        cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)

    blocks_of: dict[int, list[int]] = {v: [] for v in range(n)}
    for bi, block in enumerate(blocks):
        for v in block:
            blocks_of[v].append(bi)
    return BlockDecomposition(
        cut_vertices=frozenset(cuts),
        blocks=tuple(blocks),
        blocks_of={v: tuple(bs) for v, bs in blocks_of.items()},
    )


@dataclass(frozen=True)
class ClassFlags:
    regular_degree: Optional[int]
    is_tree: bool
    is_bipartite: bool
    is_block_graph: bool
    is_outerplanar: bool
    has_isolated_vertex: bool


def _is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _block_is_clique(G: Graph, block: frozenset[int]) -> bool:
    size = len(block)
    for v in block:
        if sum(1 for w in G.adj[v] if w in block) != size - 1:
            return False
    return True


def _block_is_outerplanar(G: Graph, block: frozenset[int]) -> bool:
    """Ear reduction on one biconnected block.

    One slot per vertex pair; a slot remembers how many contracted ears run
    between its endpoints. One ear fused onto a plain edge closes a triangle
    face and the edge stays a single boundary segment, but two ears form a
    closed cycle: the pair then contributes two boundary ends per endpoint,
    and any further vertex in the block would need a third connection between
    the same pair, so the reduction rejects unless only the endpoints remain.
    Repeatedly contract a boundary vertex with exactly two single-weight
    slots; accept when two vertices remain, reject on a stuck state or more
    than 2n-3 slots.
    """
    verts = set(block)
    if len(verts) <= 2:
        return True
    paths: dict[frozenset[int], int] = {}
    nbrs: dict[int, set[int]] = {v: set() for v in verts}
    for v in verts:
        for w in G.adj[v]:
            if w in verts and v < w:
                paths[frozenset((v, w))] = 0
                nbrs[v].add(w)
                nbrs[w].add(v)

    def weight(a: int, b: int) -> int:
        return 2 if paths[frozenset((a, b))] >= 2 else 1

    while len(verts) > 2:
        slot_count = sum(len(s) for s in nbrs.values()) // 2
        if slot_count > 2 * len(verts) - 3:
            return False
        ear = next(
            (
                v
                for v in sorted(verts)
                if len(nbrs[v]) == 2 and sum(weight(v, u) for u in nbrs[v]) == 2
            ),
            None,
        )
        if ear is None:
            return False
        u, w = sorted(nbrs[ear])
        for x in (u, w):
            del paths[frozenset((ear, x))]
            nbrs[x].discard(ear)
        verts.discard(ear)
        del nbrs[ear]
        key = frozenset((u, w))
        if key in paths:
            paths[key] += 1
            if paths[key] >= 2 and len(verts) > 2:
                return False
        else:
            paths[key] = 1
            nbrs[u].add(w)
            nbrs[w].add(u)
    return True


def classify_graph(G: Graph, blocks: Optional[BlockDecomposition] = None) -> ClassFlags:
    """Compute the class flags every decider routes on."""
    if blocks is None:
        blocks = block_decomposition(G)
    degrees = [G.degree(v) for v in range(G.n)]
    regular: Optional[int] = None
    if G.n > 0 and len(set(degrees)) == 1 and degrees[0] >= 1:
        regular = degrees[0]
    is_tree = G.n >= 1 and G.is_connected() and G.m == G.n - 1
    return ClassFlags(
        regular_degree=regular,
        is_tree=is_tree,
        is_bipartite=_is_bipartite(G),
        is_block_graph=all(_block_is_clique(G, b) for b in blocks.blocks),
        is_outerplanar=all(_block_is_outerplanar(G, b) for b in blocks.blocks),
        has_isolated_vertex=any(d == 0 for d in degrees),
    )

"""Multigraphs with loops and parallel edges, and their basic surgery.

Vertices are ids ``0..n-1``; edges are an ordered list of (tail, head)
pairs, so parallel edges and loops are just repeated or degenerate pairs.
Every edge carries the fixed orientation tail -> head, which the incidence
matrix encodes as -1 at the tail and +1 at the head.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import NotConnectedError
from .intlinalg import IntMatrix


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a multigraph needs at least one vertex")
        for idx, (t, h) in enumerate(self.edges):
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise ValueError(f"edge {idx} = ({t}, {h}) has endpoints outside 0..{self.vertex_count - 1}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_loop(self, edge: int) -> bool:
        t, h = self.edges[edge]
        return t == h

    def check_edge(self, edge: int) -> None:
        if not (0 <= edge < len(self.edges)):
            raise ValueError(f"invalid edge id {edge} (graph has {len(self.edges)} edges)")


class EdgeKind(Enum):
    LOOP = "loop"
    BRIDGE = "bridge"
    ORDINARY = "ordinary"


@dataclass(frozen=True)
class EdgeRelabeling:
    """Id maps from a graph onto its deletion or contraction.

    ``edges`` maps each surviving old edge id to its new id; ``vertices``
    does the same for vertex ids. Edge ids absent from the map were removed.
    """

    edges: dict[int, int]
    vertices: dict[int, int]
    new_edge_count: int
    new_vertex_count: int

    def transport_chain(self, chain: Sequence) -> tuple:
        """Re-index a 1-chain, dropping coefficients of removed edges."""
        out = [0] * self.new_edge_count
        for old, new in self.edges.items():
            out[new] = chain[old]
        return tuple(out)


def incidence_matrix(g: Multigraph) -> IntMatrix:
    """Vertex-by-edge incidence matrix; loop columns are zero."""
    n, m = g.vertex_count, g.edge_count
    entries = [0] * (n * m)
    for j, (t, h) in enumerate(g.edges):
        if t != h:
            entries[t * m + j] = -1
            entries[h * m + j] = 1
    return IntMatrix(n, m, tuple(entries))


def _reachable(vertex_count: int, edge_pairs: Sequence[tuple[int, int]], start: int = 0) -> set[int]:
    adjacency: dict[int, list[int]] = {v: [] for v in range(vertex_count)}
    for t, h in edge_pairs:
        adjacency[t].append(h)
        adjacency[h].append(t)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_connected(g: Multigraph) -> bool:
    return len(_reachable(g.vertex_count, g.edges)) == g.vertex_count


def require_connected(g: Multigraph) -> None:
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")


def spanning_subgraph_connected(g: Multigraph, edge_ids) -> bool:
    """True when the subgraph on the given edges reaches every vertex."""
    pairs = [g.edges[e] for e in edge_ids]
    return len(_reachable(g.vertex_count, pairs)) == g.vertex_count


def delete(g: Multigraph, edge: int) -> tuple[Multigraph, EdgeRelabeling]:
    """Remove one edge; vertices are untouched."""
    g.check_edge(edge)
    new_edges = tuple(e for i, e in enumerate(g.edges) if i != edge)
    edge_map = {old: (old if old < edge else old - 1) for old in range(g.edge_count) if old != edge}
    relabeling = EdgeRelabeling(
        edges=edge_map,
        vertices={v: v for v in range(g.vertex_count)},
        new_edge_count=g.edge_count - 1,
        new_vertex_count=g.vertex_count,
    )
    return Multigraph(g.vertex_count, new_edges), relabeling


def contract(g: Multigraph, edge: int) -> tuple[Multigraph, EdgeRelabeling]:
    """Contract one edge, merging its endpoints (the lower id survives).

    Contracting a loop is deletion with no vertex changes.
    """
    g.check_edge(edge)
    t, h = g.edges[edge]
    if t == h:
        return delete(g, edge)
    keep, drop = min(t, h), max(t, h)
    vertex_map = {}
    for v in range(g.vertex_count):
        if v == drop:
            vertex_map[v] = keep
        elif v > drop:
            vertex_map[v] = v - 1
        else:
            vertex_map[v] = v
    new_edges = tuple(
        (vertex_map[a], vertex_map[b]) for i, (a, b) in enumerate(g.edges) if i != edge
    )
    edge_map = {old: (old if old < edge else old - 1) for old in range(g.edge_count) if old != edge}
    relabeling = EdgeRelabeling(
        edges=edge_map,
        vertices=vertex_map,
        new_edge_count=g.edge_count - 1,
        new_vertex_count=g.vertex_count - 1,
    )
    return Multigraph(g.vertex_count - 1, new_edges), relabeling


def contract_edges(g: Multigraph, edge_ids) -> tuple[Multigraph, EdgeRelabeling]:
    """Contract a whole edge subset at once (loops in the subset just vanish).

    All vertices touched by the subset collapse to one vertex per connected
    piece of the subset; surviving vertices are renumbered in increasing
    order of their smallest original member.
    """
    removed = set(edge_ids)
    for e in removed:
        g.check_edge(e)
    parent = list(range(g.vertex_count))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in removed:
        a, b = g.edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    reps = sorted({find(v) for v in range(g.vertex_count)})
    rep_index = {rep: i for i, rep in enumerate(reps)}
    vertex_map = {v: rep_index[find(v)] for v in range(g.vertex_count)}
    new_edges = []
    edge_map = {}
    for old, (a, b) in enumerate(g.edges):
        if old in removed:
            continue
        edge_map[old] = len(new_edges)
        new_edges.append((vertex_map[a], vertex_map[b]))
    relabeling = EdgeRelabeling(
        edges=edge_map,
        vertices=vertex_map,
        new_edge_count=len(new_edges),
        new_vertex_count=len(reps),
    )
    return Multigraph(len(reps), tuple(new_edges)), relabeling


def classify_edge(g: Multigraph, edge: int) -> EdgeKind:
    """Loop, bridge (deletion disconnects), or ordinary."""
    g.check_edge(edge)
    require_connected(g)
    if g.is_loop(edge):
        return EdgeKind.LOOP
    smaller, _ = delete(g, edge)
    return EdgeKind.ORDINARY if is_connected(smaller) else EdgeKind.BRIDGE


def corank(g: Multigraph) -> int:
    """|E| - |V| + 1, the rank of the cycle space of a connected graph."""
    require_connected(g)
    return g.edge_count - g.vertex_count + 1

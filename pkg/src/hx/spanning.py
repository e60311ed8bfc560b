"""Spanning trees, cycletrees, and fundamental cycle bases.

A cycletree is a connected spanning subgraph with exactly one cycle, i.e.
a spanning tree plus one extra edge, so it has exactly |V| edges. Its
unique cycle is stored as a chain with coefficients in {-1, 0, +1},
canonically oriented so the smallest cycle edge id gets +1.

Enumeration works by filtering edge subsets of the right size, which is
exact and deterministic at the intended scale; a configurable cap guards
the exponential blowup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import EnumerationCapError
from .graphs import (
    Multigraph,
    incidence_matrix,
    require_connected,
    spanning_subgraph_connected,
)
from .intlinalg import IntMatrix, det, mat_vec

DEFAULT_ENUMERATION_CAP = 16


@dataclass(frozen=True)
class Cycletree:
    """Edge set of a cycletree together with its oriented unique cycle."""

    edge_ids: frozenset[int]
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental cycle basis attached to a spanning tree.

    ``cycles[i]`` is the unique cycle through non-tree edge
    ``non_tree_edges[i]``, oriented with coefficient +1 on that edge.
    """

    graph: Multigraph
    tree: frozenset[int]
    non_tree_edges: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]


def check_enumeration_cap(g: Multigraph, cap: int | None) -> None:
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if g.edge_count > limit:
        raise EnumerationCapError(
            f"graph has {g.edge_count} edges, enumeration cap is {limit}"
        )


@lru_cache(maxsize=None)
def _spanning_trees_cached(g: Multigraph) -> tuple[frozenset[int], ...]:
    size = g.vertex_count - 1
    non_loops = [e for e in range(g.edge_count) if not g.is_loop(e)]
    found = []
    for combo in combinations(non_loops, size):
        if spanning_subgraph_connected(g, combo):
            found.append(frozenset(combo))
    return tuple(found)


def spanning_trees(g: Multigraph, cap: int | None = None) -> list[frozenset[int]]:
    """All spanning trees as edge-id sets, in lexicographic order."""
    require_connected(g)
    check_enumeration_cap(g, cap)
    return list(_spanning_trees_cached(g))


def lexmin_spanning_tree(g: Multigraph) -> frozenset[int]:
    """Greedy matroid construction of the lexicographically smallest tree."""
    require_connected(g)
    parent = list(range(g.vertex_count))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    chosen = []
    for e, (t, h) in enumerate(g.edges):
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[max(rt, rh)] = min(rt, rh)
            chosen.append(e)
    return frozenset(chosen)


def tree_number(g: Multigraph) -> int:
    """Number of spanning trees, by the reduced dim-0 Laplacian determinant."""
    require_connected(g)
    return _tree_number_cached(g)


@lru_cache(maxsize=None)
def _tree_number_cached(g: Multigraph) -> int:
    boundary = incidence_matrix(g)
    laplacian = boundary @ boundary.transpose()
    n = g.vertex_count
    reduced = IntMatrix(
        n - 1,
        n - 1,
        tuple(laplacian[i, j] for i in range(1, n) for j in range(1, n)),
    )
    return det(reduced)


def unique_cycle(g: Multigraph, edge_ids) -> tuple[int, ...]:
    """Oriented unique cycle of a cycletree edge set.

    Strips degree-one vertices until only the cycle remains, then walks it,
    fixing the sign so the smallest cycle edge id has coefficient +1.
    """
    edge_set = set(edge_ids)
    for e in edge_set:
        g.check_edge(e)
    if len(edge_set) != g.vertex_count or not spanning_subgraph_connected(g, edge_set):
        raise ValueError("edge set is not a cycletree (must be spanning, connected, |E| = |V|)")

    remaining = set(edge_set)
    degrees = [0] * g.vertex_count
    for e in remaining:
        t, h = g.edges[e]
        degrees[t] += 1
        degrees[h] += 1
    pending = [v for v in range(g.vertex_count) if degrees[v] == 1]
    incident: dict[int, set[int]] = {v: set() for v in range(g.vertex_count)}
    for e in remaining:
        t, h = g.edges[e]
        incident[t].add(e)
        incident[h].add(e)
    while pending:
        v = pending.pop()
        if degrees[v] != 1:
            continue
        e = next(iter(incident[v] & remaining))
        remaining.discard(e)
        t, h = g.edges[e]
        for w in (t, h):
            degrees[w] -= 1
            incident[w].discard(e)
            if degrees[w] == 1:
                pending.append(w)

    coeffs = [0] * g.edge_count
    start_edge = min(remaining)
    tail, head = g.edges[start_edge]
    coeffs[start_edge] = 1
    if tail == head:
        return tuple(coeffs)
    current = head
    last_edge = start_edge
    while current != tail:
        e = next(iter(e2 for e2 in incident[current] if e2 in remaining and e2 != last_edge))
        t, h = g.edges[e]
        if t == current:
            coeffs[e] = 1
            current = h
        else:
            coeffs[e] = -1
            current = t
        last_edge = e
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _cycletrees_cached(g: Multigraph) -> tuple[Cycletree, ...]:
    size = g.vertex_count
    found = []
    for combo in combinations(range(g.edge_count), size):
        if spanning_subgraph_connected(g, combo):
            found.append(Cycletree(frozenset(combo), unique_cycle(g, combo)))
    return tuple(found)


def cycletrees(g: Multigraph, cap: int | None = None) -> list[Cycletree]:
    """All cycletrees with canonically oriented cycles, in lexicographic order."""
    require_connected(g)
    check_enumeration_cap(g, cap)
    return list(_cycletrees_cached(g))


def _tree_path(g: Multigraph, tree: frozenset[int], start: int, goal: int) -> list[tuple[int, int]]:
    """Edge walk through the tree from start to goal as (edge id, direction)."""
    adjacency: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(g.vertex_count)}
    for e in tree:
        t, h = g.edges[e]
        adjacency[t].append((h, e, 1))
        adjacency[h].append((t, e, -1))
    prev: dict[int, tuple[int, int, int]] = {}
    stack = [start]
    seen = {start}
    while stack:
        v = stack.pop()
        if v == goal:
            break
        for w, e, direction in adjacency[v]:
            if w not in seen:
                seen.add(w)
                prev[w] = (v, e, direction)
                stack.append(w)
    path = []
    v = goal
    while v != start:
        u, e, direction = prev[v]
        path.append((e, direction))
        v = u
    path.reverse()
    return path


def fundamental_basis(g: Multigraph, tree) -> CycleBasis:
    """Fundamental cycles of the non-tree edges, in increasing edge id."""
    require_connected(g)
    tree = frozenset(tree)
    for e in tree:
        g.check_edge(e)
    if len(tree) != g.vertex_count - 1 or any(g.is_loop(e) for e in tree) or not spanning_subgraph_connected(g, tree):
        raise ValueError("edge set is not a spanning tree")
    non_tree = tuple(e for e in range(g.edge_count) if e not in tree)
    cycles = []
    for e in non_tree:
        coeffs = [0] * g.edge_count
        coeffs[e] = 1
        tail, head = g.edges[e]
        if tail != head:
            for f, direction in _tree_path(g, tree, head, tail):
                coeffs[f] = direction
        cycles.append(tuple(coeffs))
    return CycleBasis(graph=g, tree=tree, non_tree_edges=non_tree, cycles=tuple(cycles))


def express_in_basis(chain: Sequence[int], basis: CycleBasis) -> tuple[int, ...]:
    """Coordinates of a cycle in a fundamental basis.

    These are just the chain's coefficients at the non-tree edges; the input
    must be a cycle (zero boundary) for them to be coordinates at all.
    """
    g = basis.graph
    if len(chain) != g.edge_count:
        raise ValueError(f"chain length {len(chain)} != {g.edge_count} edges")
    if any(x != 0 for x in mat_vec(incidence_matrix(g), chain)):
        raise ValueError("chain is not a cycle")
    return tuple(chain[e] for e in basis.non_tree_edges)

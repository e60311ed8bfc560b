import random
from itertools import combinations_with_replacement

import pytest

from hx.errors import EnumerationCapError, NotConnectedError
from hx.graphs import Multigraph, contract, delete, incidence_matrix, is_connected
from hx.intlinalg import mat_vec
from hx.spanning import (
    cycletrees,
    express_in_basis,
    fundamental_basis,
    lexmin_spanning_tree,
    spanning_trees,
    tree_number,
    unique_cycle,
)
from hx.verify import connected_multigraphs

THETA = Multigraph(2, ((0, 1), (0, 1), (0, 1)))


def cycle_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def test_spanning_trees_of_tree_is_itself():
    g = path_graph(4)
    assert spanning_trees(g) == [frozenset({0, 1, 2})]


def test_spanning_trees_theta():
    assert spanning_trees(THETA) == [frozenset({0}), frozenset({1}), frozenset({2})]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_spanning_trees_cycle_graph(n):
    assert len(spanning_trees(cycle_graph(n))) == n


def test_spanning_trees_require_connected():
    with pytest.raises(NotConnectedError):
        spanning_trees(Multigraph(2, ()))


def test_enumeration_cap():
    g = Multigraph(2, tuple((0, 1) for _ in range(5)))
    with pytest.raises(EnumerationCapError):
        spanning_trees(g, cap=4)
    assert len(spanning_trees(g, cap=5)) == 5


def test_tree_number_examples():
    assert tree_number(path_graph(5)) == 1
    assert tree_number(THETA) == 3
    for n in range(3, 9):
        assert tree_number(cycle_graph(n)) == n


def test_lexmin_spanning_tree():
    assert lexmin_spanning_tree(THETA) == frozenset({0})
    assert lexmin_spanning_tree(cycle_graph(4)) == frozenset({0, 1, 2})


def test_cycletrees_theta():
    found = cycletrees(THETA)
    assert [ct.edge_ids for ct in found] == [frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})]
    assert found[0].cycle == (1, -1, 0)


def test_cycletrees_of_tree_empty():
    assert cycletrees(path_graph(3)) == []


def test_cycletree_single_loop():
    g = Multigraph(1, ((0, 0),))
    found = cycletrees(g)
    assert len(found) == 1
    assert found[0].edge_ids == frozenset({0})
    assert found[0].cycle == (1,)


def test_cycletree_invariants_family():
    for g in connected_multigraphs(4, 5):
        incid = incidence_matrix(g)
        for ct in cycletrees(g):
            assert len(ct.edge_ids) == g.vertex_count
            assert all(c in (-1, 0, 1) for c in ct.cycle)
            support = {e for e, c in enumerate(ct.cycle) if c}
            assert support <= ct.edge_ids
            assert all(v == 0 for v in mat_vec(incid, ct.cycle))
            assert ct.cycle[min(support)] == 1
            for e in support:
                rest = ct.edge_ids - {e}
                assert frozenset(rest) in set(spanning_trees(g))


def test_unique_cycle_theta_pair():
    assert unique_cycle(THETA, {0, 1}) == (1, -1, 0)


def test_unique_cycle_loop():
    g = Multigraph(2, ((0, 1), (1, 1)))
    assert unique_cycle(g, {0, 1}) == (0, 1)


def test_unique_cycle_triangle():
    g = cycle_graph(3)
    cycle = unique_cycle(g, {0, 1, 2})
    assert cycle[0] == 1
    assert all(v == 0 for v in mat_vec(incidence_matrix(g), cycle))


def test_unique_cycle_rejects_non_cycletree():
    with pytest.raises(ValueError):
        unique_cycle(THETA, {0})


def test_fundamental_basis_theta():
    basis = fundamental_basis(THETA, {0})
    assert basis.non_tree_edges == (1, 2)
    assert basis.cycles == ((-1, 1, 0), (-1, 0, 1))


def test_fundamental_basis_of_tree_is_empty():
    basis = fundamental_basis(path_graph(3), {0, 1})
    assert basis.cycles == ()


def test_fundamental_basis_with_loop():
    g = Multigraph(2, ((0, 1), (1, 1)))
    basis = fundamental_basis(g, {0})
    assert basis.cycles == ((0, 1),)


def test_fundamental_basis_rejects_non_tree():
    with pytest.raises(ValueError):
        fundamental_basis(THETA, {0, 1})


def test_express_in_basis_examples():
    basis = fundamental_basis(THETA, {0})
    assert express_in_basis((-1, 1, 0), basis) == (1, 0)
    assert express_in_basis((1, -1, 0), basis) == (-1, 0)
    assert express_in_basis((0, 0, 0), basis) == (0, 0)
    with pytest.raises(ValueError):
        express_in_basis((1, 0, 0), basis)


def test_express_reconstruction_round_trip():
    rng = random.Random(5)
    for g in connected_multigraphs(4, 5):
        basis = fundamental_basis(g, lexmin_spanning_tree(g))
        m = len(basis.cycles)
        for _ in range(5):
            coeffs = tuple(rng.randint(-4, 4) for _ in range(m))
            chain = [0] * g.edge_count
            for c, z in zip(coeffs, basis.cycles):
                for e, v in enumerate(z):
                    chain[e] += c * v
            assert express_in_basis(tuple(chain), basis) == coeffs


def all_connected_multigraphs_labeled(max_vertices, max_edges):
    for n in range(1, max_vertices + 1):
        pair_types = [(i, j) for i in range(n) for j in range(i, n)]
        for count in range(max_edges + 1):
            for combo in combinations_with_replacement(pair_types, count):
                g = Multigraph(n, combo)
                if is_connected(g):
                    yield g


def test_tree_count_matches_enumeration_family():
    for g in all_connected_multigraphs_labeled(5, 7):
        assert len(spanning_trees(g)) == tree_number(g)


def test_deletion_contraction_recursion_family():
    for g in connected_multigraphs(4, 6):
        k = tree_number(g)
        for e in range(g.edge_count):
            deleted, _ = delete(g, e)
            contracted, _ = contract(g, e)
            k_deleted = tree_number(deleted) if is_connected(deleted) else 0
            k_contracted = tree_number(contracted) if is_connected(contracted) else 0
            if g.is_loop(e):
                assert k == k_deleted == k_contracted
            else:
                assert k == k_deleted + k_contracted


def test_cycletree_bijections_family():
    for g in connected_multigraphs(4, 6):
        all_cts = cycletrees(g)
        for e in range(g.edge_count):
            through = sum(1 for y in all_cts if e in y.edge_ids)
            deleted, _ = delete(g, e)
            contracted, _ = contract(g, e)
            u_deleted = len(cycletrees(deleted)) if is_connected(deleted) else 0
            if g.is_loop(e):
                assert through == tree_number(contracted)
            else:
                assert through == len(cycletrees(contracted))
            assert len(all_cts) == through + u_deleted

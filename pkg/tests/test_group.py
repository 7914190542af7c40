from itertools import product

import pytest

from hlnet import group, topology
from hlnet.graph import check_isomorphism_by_map, common_neighbors
from hlnet.group import DihedralProductElement as El


def d(x, y, l=0):
    return El(((x, y),), (0,) * l)


def test_product_rule_examples():
    assert d(0, 1) * d(1, 0) == d(3, 1)
    assert d(2, 1) * El.identity(1, 0) == d(2, 1)
    assert (d(1, 1) * d(1, 1)).is_identity()


def test_inverse_examples():
    assert group.inverse(El.identity(1, 0)).is_identity()
    assert group.inverse(d(1, 0)) == d(3, 0)
    assert group.inverse(d(1, 1)) == d(1, 1)


def test_involutions():
    assert group.is_involution(d(2, 0))
    assert not group.is_involution(d(1, 0))
    assert group.is_involution(group.c(1, 0, 1))
    assert not group.is_involution(El.identity(1, 1))


def test_shape_mismatch():
    with pytest.raises(ValueError):
        d(1, 0) * El.identity(2, 0)


def test_associativity_exhaustive():
    for k, l in [(1, 0), (1, 1), (0, 3)]:
        els = [El.from_index(i, k, l) for i in range(group.group_order(k, l))]
        for a, b, c in product(els, repeat=3):
            assert (a * b) * c == a * (b * c)


def test_index_round_trip_and_identity_zero():
    assert El.identity(2, 1).index() == 0
    for i in range(group.group_order(2, 1)):
        assert El.from_index(i, 2, 1).index() == i


def test_generating_sets():
    assert group.generating_set(1, 0).names == ("a1^2", "b1", "a1b1")
    assert group.generating_set(0, 3).names == ("c1", "c2", "c3")
    assert len(group.generating_set(3, 0)) == 9
    with pytest.raises(ValueError):
        group.generating_set(0, 0)


def test_cayley_graph_shapes():
    G = group.cayley_graph(1, 0)
    assert G.order == 8 and G.regular_degree() == 3 and G.size == 12
    big = group.cayley_graph(5, 0, labels=False)
    assert big.order == 32768 and big.regular_degree() == 15


def test_cayley_edges_use_left_multiplication():
    G = group.cayley_graph(1, 0)
    assert sorted(G.label(v) for v in G.neighbors(G.index_of("b1"))) == sorted(["a1^2b1", "e", "a1"])
    assert sorted(G.label(v) for v in G.neighbors(G.index_of("a1b1"))) == sorted(["a1^3b1", "a1^3", "e"])


def test_gamma_zero_l_is_hypercube():
    for n in range(1, 7):
        assert check_isomorphism_by_map(group.cayley_graph(0, n), topology.hypercube(n), list(range(2 ** n)))


def test_right_translation_is_automorphism():
    for k, l in [(1, 0), (1, 2), (2, 0), (2, 1)]:
        G = group.cayley_graph(k, l)
        for h in range(G.order):
            rmap = group.right_multiplication_table(k, l, El.from_index(h, k, l)).tolist()
            assert check_isomorphism_by_map(G, G, rmap)


def test_pair_common_neighbor_is_vertex():
    for k, l in [(1, 0), (2, 0), (1, 2)]:
        G = group.cayley_graph(k, l)
        gens = group.generating_set(k, l)
        table = group.left_multiplication_table(k, l, gens.elements)
        for v in range(G.order):
            for i in range(k):
                cn = common_neighbors(G, int(table[3 * i + 1, v]), int(table[3 * i + 2, v]))
                assert cn.to_list() == [v]


def test_coset_decomposition_examples():
    dec = group.coset_decomposition(1, 0, group.generating_set(1, 0).index_of("b1"))
    labels = group.element_labels(1, 0)
    assert sorted(labels[i] for i in dec.members) == sorted(["e", "a1^2", "a1b1", "a1^3b1"])
    dec = group.coset_decomposition(0, 2, 1)
    assert sorted(group.element_labels(0, 2)[i] for i in dec.members) == ["c1", "e"]
    assert group.coset_decomposition(2, 0, group.generating_set(2, 0).index_of("b2")).subgroup_order == 32
    with pytest.raises(group.NotIndexTwoError):
        group.coset_decomposition(1, 0, 0)

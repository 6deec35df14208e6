from collections import Counter

import numpy as np
import pytest

from ggraph.errors import OrderLimitExceeded
from ggraph.groups import (
    M11_ORDER,
    alternating,
    cycle_notation,
    cyclic,
    dihedral,
    direct_product,
    mathieu11,
    perm_compose,
    perm_from_cycles,
    projective_special_linear2,
    psl2_order,
    quaternion,
    special_linear2,
    symmetric,
)


@pytest.mark.parametrize(
    "G",
    [cyclic(12), dihedral(10), quaternion(16), symmetric(4), alternating(4),
     direct_product([cyclic(2), quaternion(8)]), special_linear2(3)],
    ids=lambda G: G.name,
)
def test_axioms(G):
    G.check_axioms()


def test_orders_of_named_groups():
    assert cyclic(7).order == 7
    assert dihedral(12).order == 12
    assert quaternion(32).order == 32
    assert symmetric(5).order == 120
    assert alternating(5).order == 60
    assert special_linear2(5).order == 120


def test_dihedral_reflections_are_involutions():
    D = dihedral(14)
    assert all(D.element_order(x) == 2 for x in range(7, 14))
    assert D.element_order(1) == 7


def test_quaternion_has_one_involution_and_small_center():
    Q = quaternion(8)
    assert Q.unique_involution() == 2
    assert Q.center() == frozenset({0, 2})
    assert Counter(Q.orders.tolist()) == {1: 1, 2: 1, 4: 6}


def test_sl23_unique_involution():
    G = special_linear2(3)
    assert G.order == 24
    assert G.unique_involution() is not None


def test_product_indexing_is_row_major():
    G = direct_product([cyclic(3), cyclic(4)])
    a, b = 1 * 4 + 0, 0 * 4 + 1
    assert G.multiply(a, b) == 1 * 4 + 1
    assert G.element_order(a * 0 + 5) == 12  # (1, 1)


def test_product_orders_are_lcm():
    G = direct_product([cyclic(4), cyclic(6)])
    brute = [len({G.power(g, k) for k in range(24)}) for g in range(G.order)]
    assert G.orders.tolist() == brute


def test_table_matches_multiply():
    G = dihedral(8)
    t = G.table
    for a in range(8):
        for b in range(8):
            assert t[a, b] == G.multiply(a, b)


def test_table_refuses_large_groups():
    with pytest.raises(OrderLimitExceeded):
        _ = cyclic(5000).table


def test_m11_order_statistics():
    G = mathieu11()
    assert G.order == M11_ORDER
    assert Counter(G.orders.tolist()) == {
        1: 1, 2: 165, 3: 440, 4: 990, 5: 1584, 6: 1320, 8: 1980, 11: 1440,
    }


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13])
def test_psl2_orders(q):
    assert projective_special_linear2(q).order == psl2_order(q)


def test_psl25_is_a5_like():
    # every element of PSL(2,5) has prime order or is the identity
    G = projective_special_linear2(5)
    assert set(np.unique(G.orders)) <= {1, 2, 3, 5}


def test_order_cap():
    with pytest.raises(OrderLimitExceeded):
        symmetric(8, cap=1000)


def test_permutation_helpers():
    p = perm_from_cycles([(1, 2, 3)], 4)
    assert p == (1, 2, 0, 3)
    assert cycle_notation(p) == "(1 2 3)"
    # x first, then y
    x = perm_from_cycles([(1, 2)], 3)
    y = perm_from_cycles([(2, 3)], 3)
    assert perm_compose(x, y) == (2, 0, 1)

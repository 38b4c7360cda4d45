"""Group constructors, multiplication-table validation, and subgroup tools."""

import pytest
from hypothesis import given, strategies as st

from commhier.errors import BadAction, InvalidSpec, NotNormal, OrderCap
from commhier.groups import (FiniteGroup, SubgroupSet, abelian, cyclic,
                             dihedral, heisenberg, product, quaternion8,
                             semidirect, symmetric)


def test_orders_and_abelian_flags():
    assert cyclic(7).order == 7 and cyclic(7).is_abelian()
    assert abelian([2, 4]).order == 8 and abelian([2, 4]).is_abelian()
    assert dihedral(5).order == 10 and not dihedral(5).is_abelian()
    assert symmetric(4).order == 24 and not symmetric(4).is_abelian()
    assert quaternion8().order == 8 and not quaternion8().is_abelian()
    assert heisenberg(3).order == 27 and not heisenberg(3).is_abelian()
    assert product(cyclic(2), symmetric(3)).order == 12


def test_centers():
    assert symmetric(3).center().order == 1
    assert quaternion8().center().order == 2
    assert dihedral(4).center().order == 2
    assert dihedral(5).center().order == 1
    assert heisenberg(3).center().order == 3
    assert heisenberg(5).center().order == 5


def test_class_counts():
    assert symmetric(3).class_count() == 3
    assert symmetric(4).class_count() == 5
    assert quaternion8().class_count() == 5
    assert dihedral(4).class_count() == 5
    assert heisenberg(3).class_count() == 11


def test_group_axioms_hold_for_constructors():
    for G in (dihedral(6), quaternion8(), heisenberg(3), symmetric(4)):
        e = G.identity
        for a in range(G.order):
            assert G.mul[a][G.inv[a]] == e
            assert G.mul[G.inv[a]][a] == e


def test_latin_square_violation_rejected():
    with pytest.raises(InvalidSpec):
        FiniteGroup([[0, 0], [1, 1]])


def test_non_associative_table_rejected():
    # A quasigroup with identity that fails associativity somewhere.
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(InvalidSpec):
        FiniteGroup(table)


def test_order_cap_enforced():
    with pytest.raises(OrderCap):
        heisenberg(29)
    with pytest.raises(InvalidSpec):
        symmetric(9)


def test_quotient_by_center():
    G = dihedral(4)
    Q = G.quotient(G.center())
    assert Q.order == 4 and Q.is_abelian()
    # Klein four group: every non-identity element has order 2.
    assert all(Q.mul[a][a] == Q.identity for a in range(4))


def test_quotient_nonnormal_rejected():
    G = symmetric(3)
    # Any subgroup of order 2 is non-normal in S3.
    H = next(G.subgroup_closure([x]) for x in range(6)
             if G.subgroup_closure([x]).order == 2)
    with pytest.raises(NotNormal):
        G.quotient(H)


@given(st.lists(st.integers(min_value=0, max_value=23), min_size=1,
                max_size=3))
def test_closure_order_divides_group_order(gens):
    G = symmetric(4)
    H = G.subgroup_closure(gens)
    assert G.order % H.order == 0
    members = H.members
    assert all(G.mul[a][b] in members for a in members for b in members)


def test_subgroup_set_queries():
    G = dihedral(4)
    Z = G.center()
    assert Z.is_normal() and Z.is_abelian()
    assert Z <= G.full_subgroup()
    assert G.identity in Z


def test_semidirect_action_validation():
    # x -> 3x is not invertible mod 6 applied to C6... it is (gcd(3,6)=3), so
    # the action matrix [[3]] on C6 must be rejected.
    with pytest.raises(BadAction):
        semidirect([6], [2], ([(3,)],))
    # x -> 2x on C7 has order 3, which does not divide |C2| = 2.
    with pytest.raises(BadAction):
        semidirect([7], [2], ([(2,)],))


def test_semidirect_known_structures():
    # C3 x| C2 by inversion is S3 up to the usual invariants.
    ext = semidirect([3], [2], ([(-1,)],))
    G = ext.group
    assert G.order == 6 and not G.is_abelian() and G.class_count() == 3
    # Trivial action gives the direct product (abelian here).
    triv = semidirect([3], [4], ([(1,)],))
    assert triv.group.is_abelian()


def test_semidirect_projection_and_embedding():
    ext = semidirect([7], [3], ([(2,)],))
    G = ext.group
    assert G.order == 21
    kernel = ext.a_kernel()
    assert kernel.order == 7 and kernel.is_normal()
    for a in range(7):
        assert ext.project(ext.embed_a(a)) == ext.K.identity

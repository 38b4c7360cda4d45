"""Abelian subgroup enumeration, Moebius values, and headline statistics."""

import pytest

from commhier.errors import NotComparable, OrderCap
from commhier.groups import cyclic, dihedral, heisenberg, quaternion8, symmetric
from commhier.lattice import TOP, AbelianPoset, abelian_stats


def test_member_counts():
    # S3: trivial, three C2, one C3 (the whole group is the adjoined top).
    assert len(AbelianPoset(symmetric(3))) == 5
    # D8: trivial, center, five C2 total... enumerated: 1+5+3 = 9.
    assert len(AbelianPoset(dihedral(4))) == 9
    # Q8: trivial, center, three C4.
    assert len(AbelianPoset(quaternion8())) == 5
    # Abelian group: every subgroup, including the group itself.
    assert len(AbelianPoset(cyclic(12))) == 6


def test_every_member_is_abelian_subgroup():
    G = symmetric(4)
    poset = AbelianPoset(G)
    for H in poset.subgroups():
        assert H.is_abelian()
        members = H.members
        assert all(G.mul[a][b] in members for a in members for b in members)


def test_moebius_interval_values_in_cyclic_group():
    poset = AbelianPoset(cyclic(4))
    triv, c2, c4 = poset.masks[0], None, (1 << 4) - 1
    for m in poset.masks:
        if m.bit_count() == 2:
            c2 = m
    assert poset.moebius(c4, c4) == 1
    assert poset.moebius(c2, c4) == -1
    assert poset.moebius(triv, c4) == 0  # length-2 chain interval


def test_moebius_top_sums_to_zero():
    # mu(top, top) = 1 plus the member values must cancel: sum mu(A, top) = -1.
    for G in (symmetric(3), dihedral(4), quaternion8(), heisenberg(3)):
        poset = AbelianPoset(G)
        assert sum(poset.moebius(m) for m in poset.masks) == -1


def test_moebius_incomparable_rejected():
    G = symmetric(3)
    poset = AbelianPoset(G)
    order2 = [m for m in poset.masks if m.bit_count() == 2]
    with pytest.raises(NotComparable):
        poset.moebius(order2[0], order2[1])
    with pytest.raises(NotComparable):
        poset.moebius(0b110, TOP)  # mask without the identity: not a member


def test_stats_extraspecial_order8():
    for G in (dihedral(4), quaternion8()):
        stats = abelian_stats(AbelianPoset(G))
        assert (stats.m, stats.n_max, stats.b) == (4, 3, 2)
        assert stats.m_count == 3


def test_stats_heisenberg3():
    stats = abelian_stats(AbelianPoset(heisenberg(3)))
    assert (stats.m, stats.n_max, stats.b, stats.m_count) == (9, 4, 3, 4)


def test_stats_symmetric4():
    stats = abelian_stats(AbelianPoset(symmetric(4)))
    assert stats.m == 4  # largest abelian subgroups of S4 have order 4
    assert all(m.bit_count() == stats.m for m in stats.max_order_masks)


def test_stats_abelian_group():
    stats = abelian_stats(AbelianPoset(cyclic(9)))
    assert stats.m == 9 and stats.n_max == 1 and stats.b == 0


def test_lattice_cap():
    with pytest.raises(OrderCap):
        AbelianPoset(symmetric(4), cap=20)

"""The poset of abelian subgroups and its Moebius function.

Only abelian subgroups are ever enumerated: the Dirichlet spectrum needs
exactly the poset of abelian subgroups together with an adjoined top element
for the whole group, never the full subgroup lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotComparable, OrderCap
from .groups import FiniteGroup, SubgroupSet

LATTICE_CAP = 512

# Sentinel for the adjoined top element (the whole group) in Moebius queries.
TOP = "top"


class AbelianPoset:
    """All abelian subgroups of a group, as canonical bitmasks.

    The whole group is an adjoined top element; it is a member mask only when
    the group itself is abelian.
    """

    def __init__(self, G: FiniteGroup, cap: int = LATTICE_CAP):
        if G.order > cap:
            raise OrderCap(f"|G| = {G.order} exceeds lattice cap {cap}")
        self.group = G
        self.masks = sorted(_enumerate_abelian_masks(G))
        self._mask_set = set(self.masks)
        self._moebius_memo: dict[tuple[int, object], int] = {}

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, mask: int) -> bool:
        return mask in self._mask_set

    def subgroups(self) -> list[SubgroupSet]:
        return [SubgroupSet(self.group, m) for m in self.masks]

    def orders(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def maximal_masks(self) -> list[int]:
        """Members maximal under inclusion (within the poset, top excluded)."""
        out = []
        for m in self.masks:
            if not any(m != other and m & ~other == 0 for other in self.masks):
                out.append(m)
        return out

    def moebius(self, mask: int, top=TOP) -> int:
        """mu(A, top) in the poset with the whole group adjoined on top.

        ``top`` is either a member mask or the TOP sentinel for the adjoined
        group element.  Computed top-down: mu(top, top) = 1 and
        mu(A, top) = -sum of mu(B, top) over members A < B <= top.
        """
        if mask not in self._mask_set:
            raise NotComparable("lower element is not a poset member")
        if top is TOP:
            if self.group.is_abelian():
                # G is already the maximum member; adjoining changes nothing.
                return self.moebius(mask, self.group.full_mask)
            strictly_above = [m for m in self.masks
                              if m != mask and mask & ~m == 0]
        else:
            if top not in self._mask_set:
                raise NotComparable("top element is not a poset member")
            if mask & ~top != 0:
                raise NotComparable("elements are not comparable")
            if mask == top:
                return 1
            strictly_above = [m for m in self.masks
                              if m != mask and mask & ~m == 0
                              and m & ~top == 0 and m != top]
        key = (mask, top)
        cached = self._moebius_memo.get(key)
        if cached is not None:
            return cached
        # mu(top, top) = 1, plus the strictly-between members.
        total = 1
        for b in strictly_above:
            total += self.moebius(b, top)
        value = -total
        self._moebius_memo[key] = value
        return value


def _enumerate_abelian_masks(G: FiniteGroup) -> set[int]:
    """Closure-based enumeration: seed with cyclic subgroups, then repeatedly
    extend an abelian H by any centralizing element outside H."""
    masks: set[int] = set()
    frontier: list[int] = []
    for x in range(G.order):
        m = G.subgroup_closure([x]).mask
        if m not in masks:
            masks.add(m)
            frontier.append(m)
    while frontier:
        new = []
        for m in frontier:
            candidates = G.set_centralizer_mask(m) & ~m
            elems = []
            c = candidates
            while c:
                low = c & -c
                elems.append(low.bit_length() - 1)
                c ^= low
            base = [e for e in range(G.order) if m >> e & 1]
            for x in elems:
                grown = G.subgroup_closure(base + [x]).mask
                if grown not in masks and G.mask_is_abelian(grown):
                    masks.add(grown)
                    new.append(grown)
        frontier = new
    return masks


@dataclass(frozen=True)
class AbelianStats:
    """Headline statistics of the abelian subgroup poset.

    m: largest abelian subgroup order; n_max: number attaining it;
    b: second-largest distinct order (0 for abelian groups);
    m_count: number of inclusion-maximal abelian subgroups.
    """

    m: int
    n_max: int
    b: int
    m_count: int
    max_order_masks: tuple[int, ...]
    maximal_masks: tuple[int, ...]


def abelian_stats(poset: AbelianPoset) -> AbelianStats:
    orders = poset.orders()
    m = max(orders)
    max_masks = tuple(mk for mk in poset.masks if mk.bit_count() == m)
    if poset.group.is_abelian():
        b = 0
    else:
        lesser = [o for o in orders if o < m]
        b = max(lesser) if lesser else 0
    maximal = tuple(poset.maximal_masks())
    return AbelianStats(m=m, n_max=len(max_masks), b=b, m_count=len(maximal),
                        max_order_masks=max_masks, maximal_masks=maximal)

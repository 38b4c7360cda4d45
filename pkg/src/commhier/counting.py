"""Commuting-tuple counts, probabilities, and orbit counts.

Two independent routes exist for each quantity: a memoized centralizer
recursion (fast, used everywhere) and a pruned brute-force enumeration
(slow, used as the oracle in tests and in the verification corpus).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import Infeasible, InternalInconsistency
from .groups import FiniteGroup, _mask_elements

BRUTE_HOM_CAP = 10 ** 8
BRUTE_ORBIT_CAP = 10 ** 7


class HomCounter:
    """Memoized count of pairwise-commuting r-tuples inside subgroups of G.

    The recursion counts by the first coordinate:
    |Comm_r(H)| = sum over x in H of |Comm_{r-1}(C_H(x))|,
    with base cases r = 0 -> 1 and r = 1 -> |H|, and the abelian shortcut
    |Comm_r(H)| = |H|^r.  Memo keys are (subgroup mask, r); inserts are
    idempotent, so concurrent use is safe.
    """

    def __init__(self, G: FiniteGroup):
        self.group = G
        self._memo: dict[tuple[int, int], int] = {}

    def count_in_mask(self, mask: int, r: int) -> int:
        if r < 0:
            raise ValueError(f"r must be >= 0, got {r}")
        size = mask.bit_count()
        if r == 0:
            return 1
        if r == 1:
            return size
        if self.group.mask_is_abelian(mask):
            return size ** r
        key = (mask, r)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for x in _mask_elements(mask):
            total += self.count_in_mask(
                mask & self.group.centralizer_mask(x), r - 1)
        self._memo[key] = total
        return total

    def count(self, r: int) -> int:
        return self.count_in_mask(self.group.full_mask, r)


_counters: dict[int, HomCounter] = {}


def _counter(G: FiniteGroup) -> HomCounter:
    counter = _counters.get(id(G))
    if counter is None or counter.group is not G:
        counter = HomCounter(G)
        _counters[id(G)] = counter
    return counter


def hom_count(G: FiniteGroup, r: int) -> int:
    """|Hom(Z^r, G)| via the memoized centralizer recursion."""
    return _counter(G).count(r)


def hom_count_bruteforce(G: FiniteGroup, r: int) -> int:
    """|Hom(Z^r, G)| by exhaustive pruned enumeration (oracle route).

    Partial tuples are extended only by elements centralizing everything
    chosen so far; no memoization, so the route is independent of hom_count.
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if G.order ** r > BRUTE_HOM_CAP:
        raise Infeasible(f"|G|^r = {G.order ** r} exceeds {BRUTE_HOM_CAP}")
    def extend(allowed_mask: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for x in _mask_elements(allowed_mask):
            total += extend(allowed_mask & G.centralizer_mask(x),
                            remaining - 1)
        return total
    return extend(G.full_mask, r)


def commuting_probability(G: FiniteGroup, r: int) -> Fraction:
    """P_r(G) = |Hom(Z^r, G)| / |G|^r, in lowest terms."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return Fraction(hom_count(G, r), G.order ** r)


def kappa(G: FiniteGroup, r: int) -> int:
    """Number of diagonal-conjugation orbits on commuting r-tuples.

    Computed by the Burnside sum over elements and cross-checked against the
    normalization identity kappa_r = |G|^r * P_{r+1}; both must agree exactly.
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    counter = _counter(G)
    burnside = sum(
        counter.count_in_mask(G.centralizer_mask(h), r)
        for h in range(G.order))
    if burnside % G.order:
        raise InternalInconsistency(
            f"Burnside sum {burnside} not divisible by |G| = {G.order}")
    value = burnside // G.order
    if value * G.order != hom_count(G, r + 1):
        raise InternalInconsistency(
            "Burnside orbit count disagrees with |G|^r * P_(r+1)")
    return value


def kappa_orbits_bruteforce(G: FiniteGroup, r: int) -> int:
    """Orbit count by explicit enumeration of commuting r-tuples (oracle)."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if G.order ** r > BRUTE_ORBIT_CAP:
        raise Infeasible(f"|G|^r = {G.order ** r} exceeds {BRUTE_ORBIT_CAP}")
    tuples: list[tuple[int, ...]] = []
    def extend(prefix: tuple[int, ...], allowed_mask: int) -> None:
        if len(prefix) == r:
            tuples.append(prefix)
            return
        for x in _mask_elements(allowed_mask):
            extend(prefix + (x,), allowed_mask & G.centralizer_mask(x))
    extend((), G.full_mask)
    canonical = set()
    for tup in tuples:
        canonical.add(min(
            tuple(G.conj(g, x) for x in tup) for g in range(G.order)))
    return len(canonical)

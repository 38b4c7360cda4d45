"""Exact stratified formulas for split extensions A ⋊ K with A, K abelian.

Every closed formula here has an independent route to the same number
(the centralizer recursion on the embedded group, or direct lattice
enumeration), and the cross-check is part of the API, not only the tests:
mismatches raise, because they can only mean a bug.
"""

from __future__ import annotations

from math import gcd

from .counting import hom_count
from .errors import (AbelianGroup, HypothesisFails, FormulaMismatch,
                     NotCoprime, NotCyclic, SpectrumMismatch)
from .exact import divisors, jordan_totient
from .groups import SemidirectProduct, SubgroupSet, _mask_elements
from .lattice import AbelianPoset, AbelianStats, abelian_stats
from .spectrum import Spectrum, spectrum_from_moebius


class SplitAnalysis:
    """Cached stratum data (C_B, lambda(B), phi_r) for one split extension."""

    def __init__(self, ext: SemidirectProduct):
        self.ext = ext
        self.k_poset = AbelianPoset(ext.K)  # K abelian: all its subgroups
        self._g_poset: AbelianPoset | None = None
        self._fixed: dict[int, int] = {}
        self._lambda: dict[int, int] = {}

    @property
    def g_poset(self) -> AbelianPoset:
        if self._g_poset is None:
            self._g_poset = AbelianPoset(self.ext.group)
        return self._g_poset

    def strata(self) -> list[int]:
        """All subgroups B <= K, as K-masks."""
        return list(self.k_poset.masks)

    # --- fixed subgroups ---

    def fixed_a_indices(self, b_mask: int) -> list[int]:
        """A-indices fixed by every element of B."""
        ext = self.ext
        out = []
        members = _mask_elements(b_mask)
        for a in range(ext.a_order):
            if all(ext.action[k][a] == a for k in members):
                out.append(a)
        return out

    def fixed_subgroup(self, B: SubgroupSet) -> SubgroupSet:
        """C_A(B) embedded in the semidirect product group."""
        mask = 0
        for a in self.fixed_a_indices(B.mask):
            mask |= 1 << self.ext.embed_a(a)
        return SubgroupSet(self.ext.group, mask)

    def fixed_order(self, b_mask: int) -> int:
        cached = self._fixed.get(b_mask)
        if cached is None:
            cached = len(self.fixed_a_indices(b_mask))
            self._fixed[b_mask] = cached
        return cached

    # --- lift multiplicities ---

    def lambda_bruteforce(self, B: SubgroupSet) -> int:
        """Count abelian H <= G with projection B and kernel exactly C_A(B)."""
        ext = self.ext
        kn = ext.K.order
        c_mask = self.fixed_subgroup(B).mask
        count = 0
        for h_mask in self.g_poset.masks:
            proj = 0
            for g in _mask_elements(h_mask):
                proj |= 1 << ext.project(g)
            if proj != B.mask:
                continue
            kernel = 0
            for g in _mask_elements(h_mask):
                if ext.project(g) == ext.K.identity:
                    kernel |= 1 << g
            if kernel == c_mask:
                count += 1
        return count

    def lambda_coprime(self, B: SubgroupSet) -> int:
        """|A : C_A(B)|, valid when gcd(|A|, |B|) = 1."""
        if gcd(self.ext.a_order, B.order) != 1:
            raise NotCoprime(
                f"gcd(|A|, |B|) = {gcd(self.ext.a_order, B.order)} != 1")
        return self.ext.a_order // self.fixed_order(B.mask)

    def lift_multiplicity(self, b_mask: int) -> int:
        cached = self._lambda.get(b_mask)
        if cached is None:
            # Brute enumeration is ground truth; the coprime closed form is
            # cross-checked against it whenever it applies.
            B = SubgroupSet(self.ext.K, b_mask)
            cached = self.lambda_bruteforce(B)
            if gcd(self.ext.a_order, B.order) == 1:
                closed = self.lambda_coprime(B)
                if closed != cached:
                    raise FormulaMismatch(
                        f"coprime lambda {closed} != enumerated {cached}")
            self._lambda[b_mask] = cached
        return cached

    # --- generating-tuple counts ---

    def phi_r(self, B: SubgroupSet, r: int) -> int:
        """Number of r-tuples generating B, by Moebius over B's subgroups."""
        return sum(
            self.k_poset.moebius(d_mask, B.mask) * d_mask.bit_count() ** r
            for d_mask in self.k_poset.masks if d_mask & ~B.mask == 0)

    # --- stratified tuple counts ---

    def hom_count_split(self, r: int) -> int:
        """sum over B <= K of lambda(B) |C_B|^r phi_r(B); checked against the
        centralizer recursion on the embedded group."""
        total = sum(
            self.lift_multiplicity(b_mask)
            * self.fixed_order(b_mask) ** r
            * self.phi_r(SubgroupSet(self.ext.K, b_mask), r)
            for b_mask in self.strata())
        direct = hom_count(self.ext.group, r)
        if total != direct:
            raise FormulaMismatch(
                f"stratified count {total} != recursion count {direct}")
        return total

    def hom_count_cyclic(self, r: int) -> int:
        """Divisor-stratified Jordan-totient count for cyclic K."""
        omega = self._cyclic_order()
        total = 0
        for n in divisors(omega):
            c_n = self.fixed_order(self._cyclic_subgroup_mask(n))
            total += (self.ext.a_order // c_n) * c_n ** r * jordan_totient(r, n)
        direct = hom_count(self.ext.group, r)
        if total != direct:
            raise FormulaMismatch(
                f"cyclic count {total} != recursion count {direct}")
        return total

    def _cyclic_order(self) -> int:
        if self.ext.K.kind != "cyclic":
            raise NotCyclic("acting group K is not cyclic")
        return self.ext.K.order

    def _cyclic_subgroup_mask(self, n: int) -> int:
        """Mask of the unique subgroup of order n in cyclic K (additive)."""
        omega = self._cyclic_order()
        step = omega // n
        mask = 0
        for j in range(n):
            mask |= 1 << (j * step % omega)
        return mask

    # --- leading data and spectrum ---

    def m_and_nmax_formula(self) -> tuple[int, int]:
        """(m(G), N_max(G)) from fixed-subgroup geometry, checked against the
        abelian lattice of the embedded group."""
        scores = {b_mask: self.fixed_order(b_mask) * b_mask.bit_count()
                  for b_mask in self.strata()}
        m = max(scores.values())
        n_max = sum(self.lift_multiplicity(b_mask)
                    for b_mask, score in scores.items() if score == m)
        stats = abelian_stats(self.g_poset)
        if (m, n_max) != (stats.m, stats.n_max):
            raise FormulaMismatch(
                f"formula (m, N_max) = {(m, n_max)} != lattice "
                f"{(stats.m, stats.n_max)}")
        return m, n_max

    def uniform_stratum_stats(self) -> tuple[int, int]:
        """Closed-form (m, N_max) when all nontrivial powers of the cyclic
        generator share one fixed subgroup F."""
        omega = self._cyclic_order()
        if omega < 2:
            raise HypothesisFails("K must be nontrivial cyclic")
        # The hypothesis is about C_A(t^j) for each single nontrivial power.
        ext = self.ext
        fixed_sets = {
            tuple(a for a in range(ext.a_order) if ext.action[j][a] == a)
            for j in range(1, omega)}
        if len(fixed_sets) != 1:
            raise HypothesisFails(
                "fixed subgroups differ across nontrivial powers")
        f = len(next(iter(fixed_sets)))
        a = self.ext.a_order
        m = max(a, omega * f)
        if a > omega * f:
            n_max = 1
        elif a < omega * f:
            n_max = a // f
        else:
            n_max = 1 + a // f
        stats = abelian_stats(self.g_poset)
        if (m, n_max) != (stats.m, stats.n_max):
            raise FormulaMismatch(
                f"uniform-stratum (m, N_max) = {(m, n_max)} != lattice "
                f"{(stats.m, stats.n_max)}")
        return m, n_max

    def spectrum_explicit(self) -> Spectrum:
        """Dirichlet coefficients from the stratified expansion; must match
        the Moebius route on the embedded group."""
        G = self.ext.group
        if G.is_abelian():
            raise AbelianGroup(
                "spectrum is defined only for non-abelian groups")
        coeffs: dict[int, int] = {}
        a_order = self.ext.a_order
        k_order = self.ext.K.order
        for b_mask in self.strata():
            lam = self.lift_multiplicity(b_mask)
            a_index = a_order // self.fixed_order(b_mask)
            for d_mask in self.k_poset.masks:
                if d_mask & ~b_mask:
                    continue
                index = a_index * (k_order // d_mask.bit_count())
                mu = self.k_poset.moebius(d_mask, b_mask)
                if mu:
                    coeffs[index] = coeffs.get(index, 0) + lam * mu
        if any(m < 2 for m, c in coeffs.items() if c != 0):
            raise SpectrumMismatch("support point below 2 in stratified sum")
        entries = tuple(sorted((m, c) for m, c in coeffs.items() if c != 0))
        result = Spectrum(entries=entries, group_order=G.order)
        moebius_route = spectrum_from_moebius(G, self.g_poset)
        if result.entries != moebius_route.entries:
            raise SpectrumMismatch(
                f"stratified spectrum {result.entries} != Moebius "
                f"{moebius_route.entries}")
        return result


def phi_r_bruteforce(B: SubgroupSet, r: int) -> int:
    """Oracle: count r-tuples of B whose closure is exactly B."""
    members = B.members
    count = 0
    def extend(prefix, depth):
        nonlocal count
        if depth == r:
            if B.parent.subgroup_closure(prefix).mask == B.mask:
                count += 1
            return
        for x in members:
            extend(prefix + [x], depth + 1)
    extend([], 0)
    return count

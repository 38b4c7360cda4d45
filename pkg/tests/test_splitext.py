"""Stratified split-extension formulas against direct enumeration."""

import pytest

from commhier.corpus import (COPRIME_SPLIT_SPECS, FIXED_POINT_FREE_SPECS,
                             SPLIT_CORPUS_SPECS, corpus_extension)
from commhier.counting import hom_count
from commhier.errors import HypothesisFails, NotCoprime, NotCyclic
from commhier.groups import SubgroupSet, semidirect
from commhier.spectrum import spectrum_from_moebius
from commhier.splitext import SplitAnalysis, phi_r_bruteforce


def test_phi_r_against_bruteforce():
    # Trivial actions: the strata of K = V4 and K = C6 cover the non-cyclic
    # and composite-cyclic generating-tuple counts.
    identity = ((1,),)
    for k_factors, matrices in (([2, 2], (identity, identity)),
                                ([6], (identity,))):
        analysis = SplitAnalysis(semidirect([3], k_factors, matrices))
        for b_mask in analysis.strata():
            B = SubgroupSet(analysis.ext.K, b_mask)
            for r in (1, 2, 3):
                assert analysis.phi_r(B, r) == phi_r_bruteforce(B, r)


def test_stratified_count_matches_recursion():
    for name in SPLIT_CORPUS_SPECS:
        ext = corpus_extension(name)
        analysis = SplitAnalysis(ext)
        for r in (1, 2, 3, 4):
            # hom_count_split raises FormulaMismatch internally on any
            # disagreement, so equality here is double-checked.
            assert analysis.hom_count_split(r) == hom_count(ext.group, r)


def test_cyclic_jordan_route():
    for name in SPLIT_CORPUS_SPECS:
        ext = corpus_extension(name)
        if ext.K.kind != "cyclic":
            continue
        analysis = SplitAnalysis(ext)
        for r in (1, 2, 3, 5):
            assert analysis.hom_count_cyclic(r) == hom_count(ext.group, r)


def test_cyclic_route_needs_cyclic_k():
    # K = V4 (one generator inverting, one acting trivially) is not cyclic.
    analysis = SplitAnalysis(semidirect([3], [2, 2], (((-1,),), ((1,),))))
    with pytest.raises(NotCyclic):
        analysis.hom_count_cyclic(2)


def test_coprime_lift_multiplicity():
    for name in COPRIME_SPLIT_SPECS:
        analysis = SplitAnalysis(corpus_extension(name))
        for b_mask in analysis.strata():
            B = SubgroupSet(analysis.ext.K, b_mask)
            assert analysis.lambda_bruteforce(B) == analysis.lambda_coprime(B)


def test_coprime_formula_guard():
    # D8 = C4 x| C2 by inversion: gcd(|A|, |B|) = 2 for the full stratum.
    ext = semidirect([4], [2], (((-1,),),))
    analysis = SplitAnalysis(ext)
    full = SubgroupSet(ext.K, ext.K.full_mask)
    with pytest.raises(NotCoprime):
        analysis.lambda_coprime(full)
    # The brute-force route still works: the two Klein subgroups of D8
    # project onto K with kernel exactly C_A(K) = {0, 2}.
    assert analysis.lambda_bruteforce(full) == 2


def test_fixed_point_free_closed_form():
    for name in FIXED_POINT_FREE_SPECS:
        ext = corpus_extension(name)
        a, k = ext.a_order, ext.K.order
        for r in range(1, 7):
            assert hom_count(ext.group, r) == a ** r + a * (k ** r - 1)


def test_leading_data_formula():
    for name in SPLIT_CORPUS_SPECS:
        ext = corpus_extension(name)
        if ext.group.is_abelian():
            continue
        analysis = SplitAnalysis(ext)
        # Raises FormulaMismatch internally unless it matches the lattice.
        m, n_max = analysis.m_and_nmax_formula()
        assert m * n_max >= 1


def test_uniform_stratum_cases():
    # C7 x| C3: f = 1, 7 > 3 gives (m, N_max) = (7, 1)... unless equal.
    analysis = SplitAnalysis(corpus_extension(
        "semidirect(cyclic(7); cyclic(3); [[2]])"))
    assert analysis.uniform_stratum_stats() == (7, 1)
    # C5 x| C4 with a faithful action has f = 1 uniformly.
    analysis = SplitAnalysis(corpus_extension(
        "semidirect(cyclic(5); cyclic(4); [[2]])"))
    assert analysis.uniform_stratum_stats() == (5, 1)
    # C3 x| C4 by inversion: t^2 acts trivially while t does not, so the
    # fixed sets differ across powers and the hypothesis must be rejected.
    analysis = SplitAnalysis(corpus_extension(
        "semidirect(cyclic(3); cyclic(4); inversion)"))
    with pytest.raises(HypothesisFails):
        analysis.uniform_stratum_stats()


def test_explicit_spectrum_matches_moebius():
    for name in SPLIT_CORPUS_SPECS:
        ext = corpus_extension(name)
        if ext.group.is_abelian():
            continue
        analysis = SplitAnalysis(ext)
        assert analysis.spectrum_explicit().entries == \
            spectrum_from_moebius(ext.group).entries


def test_known_spectrum_frobenius21():
    analysis = SplitAnalysis(corpus_extension(
        "semidirect(cyclic(7); cyclic(3); [[2]])"))
    assert analysis.spectrum_explicit().entries == ((3, 1), (7, 7), (21, -7))

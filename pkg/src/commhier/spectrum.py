"""Finite Dirichlet spectrum of a non-abelian group and everything it drives:
exact P_r evaluation, the rank-generating series, special values, first-pole
data, the minimal linear recurrence, Hankel rank, and inverse recovery of the
spectrum from an initial block of exact values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (AbelianGroup, NonSpectralSequence, NotEnoughData,
                     PoleHit, SpectrumStatsMismatch)
from .exact import Matrix, rational_roots
from .groups import FiniteGroup
from .lattice import AbelianPoset, AbelianStats


@dataclass(frozen=True)
class Spectrum:
    """The nonzero Dirichlet coefficients {(m, c_m)} with support sorted
    ascending; P_r = sum of c_m / m^r for r >= 2."""

    entries: tuple[tuple[int, int], ...]
    group_order: int

    def __post_init__(self):
        supports = [m for m, _ in self.entries]
        if supports != sorted(set(supports)):
            raise ValueError("support must be strictly increasing")
        if any(m < 2 for m in supports):
            raise ValueError("support points must be >= 2")
        if any(c == 0 for _, c in self.entries):
            raise ValueError("zero coefficients must be dropped")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.entries)

    @property
    def size(self) -> int:
        return len(self.entries)


def spectrum_from_moebius(G: FiniteGroup,
                          poset: AbelianPoset | None = None) -> Spectrum:
    """c_m = -sum of mu(A, G) over abelian subgroups A of index m."""
    if G.is_abelian():
        raise AbelianGroup("spectrum is defined only for non-abelian groups")
    if poset is None:
        poset = AbelianPoset(G)
    coeffs: dict[int, int] = {}
    for mask in poset.masks:
        index = G.order // mask.bit_count()
        coeffs[index] = coeffs.get(index, 0) - poset.moebius(mask)
    entries = tuple(sorted((m, c) for m, c in coeffs.items() if c != 0))
    return Spectrum(entries=entries, group_order=G.order)


def eval_pr(spec: Spectrum, r: int) -> Fraction:
    """Exact P_r from the spectrum, valid for r >= 2."""
    if r < 2:
        raise ValueError(f"spectrum evaluation requires r >= 2, got {r}")
    return sum((Fraction(c, m ** r) for m, c in spec.entries), Fraction(0))


def eval_series(spec: Spectrum, z) -> Fraction:
    """The rank-generating series sum of c_m / (m (m - z)), exactly."""
    z = Fraction(z)
    if any(z == m for m in spec.support):
        raise PoleHit(f"z = {z} is a pole of the series")
    return sum((Fraction(c, 1) / (m * (m - z)) for m, c in spec.entries),
               Fraction(0))


def special_values(spec: Spectrum) -> tuple[Fraction, Fraction, int]:
    """(series at z=1, alternating series at z=-1, Dirichlet value sum c*m)."""
    sigma = eval_series(spec, 1)
    alt = eval_series(spec, -1)
    dirichlet_value = sum(c * m for m, c in spec.entries)
    return sigma, alt, dirichlet_value


def first_pole(spec: Spectrum, stats: AbelianStats) -> tuple[int, Fraction]:
    """Smallest support point and the pole coefficient c_{m*} / m*.

    Cross-checks the spectral leading data against the abelian subgroup
    statistics: m* must equal |G| / m(G) and c_{m*} must equal N_max.
    """
    m_star, c_star = spec.entries[0]
    if m_star * stats.m != spec.group_order:
        raise SpectrumStatsMismatch(
            f"first support {m_star} != |G|/m(G) = "
            f"{spec.group_order}/{stats.m}")
    if c_star != stats.n_max:
        raise SpectrumStatsMismatch(
            f"leading coefficient {c_star} != N_max = {stats.n_max}")
    return m_star, Fraction(c_star, m_star)


def recurrence_from_spectrum(spec: Spectrum) -> tuple[Fraction, ...]:
    """Elementary symmetric functions sigma_1..sigma_t of the rates 1/m_j.

    The hierarchy then satisfies the signed recurrence
    P_{r+t} = sigma_1 P_{r+t-1} - sigma_2 P_{r+t-2} + ... + (-1)^{t-1} sigma_t P_r.
    """
    rates = [Fraction(1, m) for m in spec.support]
    t = len(rates)
    # sigma[k] after processing = e_k of the rates seen so far
    sigma = [Fraction(0)] * (t + 1)
    sigma[0] = Fraction(1)
    for rate in rates:
        for k in range(t, 0, -1):
            sigma[k] += rate * sigma[k - 1]
    return tuple(sigma[1:])


def hankel_rank_of_sequence(values) -> int:
    """Rank of the k x k Hankel matrix of a P_2, P_3, ... prefix (k = len//2)."""
    values = [Fraction(v) for v in values]
    if len(values) < 2:
        raise ValueError("need at least two values")
    k = len(values) // 2
    hankel = Matrix([[values[i + j] for j in range(k)] for i in range(k)])
    return hankel.rank()


def _recurrence_holds(values, beta) -> bool:
    t = len(beta)
    return all(
        values[i + t] == sum(beta[k] * values[i + k] for k in range(t))
        for i in range(len(values) - t))


def inverse_spectrum(values) -> Spectrum:
    """Recover the finite spectrum from exact values P_2, P_3, ....

    The minimal order t is the smallest window size whose t x t Hankel block
    is invertible and whose induced order-t recurrence reproduces every
    supplied value (invertibility certifies that no shorter recurrence fits).
    The characteristic roots are extracted by the rational root theorem;
    every root must be 1/m with integer m >= 2 and every recovered
    coefficient a nonzero integer, and the result round-trips every input.
    """
    values = [Fraction(v) for v in values]
    if len(values) < 2:
        raise NotEnoughData("need at least two values")
    if all(v == 0 for v in values):
        raise NonSpectralSequence("zero sequence has no spectrum")

    t = None
    beta = None
    for order in range(1, len(values) // 2 + 1):
        hankel = Matrix([[values[i + j] for j in range(order)]
                         for i in range(order)])
        if hankel.rank() < order:
            continue
        rhs = [values[order + i] for i in range(order)]
        candidate = hankel.solve(rhs)
        if _recurrence_holds(values, candidate):
            t = order
            beta = candidate
            break
    if t is None:
        raise NotEnoughData(
            "no window admits a recurrence valid on all supplied values")

    # Characteristic polynomial x^t - beta_{t-1} x^{t-1} - ... - beta_0.
    coeffs = [-b for b in beta] + [Fraction(1)]
    roots = rational_roots(coeffs)
    if len(roots) != t or len(set(roots)) != t:
        raise NonSpectralSequence(
            "characteristic polynomial lacks t distinct rational roots")
    supports = []
    for root in roots:
        if root <= 0 or root.numerator != 1:
            raise NonSpectralSequence(f"rate {root} is not 1/m")
        if root.denominator < 2:
            raise NonSpectralSequence(
                f"rate {root} gives support point {root.denominator} < 2")
        supports.append(root.denominator)
    supports.sort()
    rates = [Fraction(1, m) for m in supports]

    # Vandermonde system: sum_j c_j rate_j^r = P_r for r = 2..t+1.
    vander = Matrix([[rate ** (2 + i) for rate in rates] for i in range(t)])
    coeff_values = vander.solve(values[:t])
    entries = []
    for m, c in zip(supports, coeff_values):
        if c == 0 or c.denominator != 1:
            raise NonSpectralSequence(
                f"coefficient {c} at support {m} is not a nonzero integer")
        entries.append((m, int(c)))
    # Smallest support point carries N_max = c >= 1 and |G| = m * m(G); the
    # group order is not recoverable from the sequence alone, so record the
    # minimal consistent one.
    spec = Spectrum(entries=tuple(entries), group_order=0)
    for r, value in enumerate(values, start=2):
        if eval_pr(spec, r) != value:
            raise NonSpectralSequence(
                f"recovered spectrum fails to reproduce P_{r}")
    return spec


@dataclass(frozen=True)
class SeriesReport:
    """Exact spectral/series summary of a non-abelian group, plus the two
    entropy normalizations (exact ratios; logs are display-only floats)."""

    group_order: int
    m_star: int
    pole_coefficient: Fraction
    sigma_value: Fraction
    alt_value: Fraction
    dirichlet_value: int
    recurrence: tuple[Fraction, ...]
    hankel_rank: int
    lambda_prob: Fraction
    lambda_orb: int
    h_prob: float
    h_orb: float


def entropy_ratios(stats: AbelianStats, order: int) -> tuple[Fraction, int]:
    """Exact growth rates (m/|G|, m); their product times |G|/m is |G|."""
    lambda_prob = Fraction(stats.m, order)
    lambda_orb = stats.m
    if Fraction(order, stats.m) * stats.m != order:
        raise SpectrumStatsMismatch("(|G|/m) * m != |G|")
    return lambda_prob, lambda_orb


def series_report(spec: Spectrum, stats: AbelianStats) -> SeriesReport:
    m_star, pole_coefficient = first_pole(spec, stats)
    sigma, alt, dirichlet_value = special_values(spec)
    recurrence = recurrence_from_spectrum(spec)
    lambda_prob, lambda_orb = entropy_ratios(stats, spec.group_order)
    return SeriesReport(
        group_order=spec.group_order,
        m_star=m_star,
        pole_coefficient=pole_coefficient,
        sigma_value=sigma,
        alt_value=alt,
        dirichlet_value=dirichlet_value,
        recurrence=recurrence,
        hankel_rank=spec.size,
        lambda_prob=lambda_prob,
        lambda_orb=lambda_orb,
        h_prob=math.log(1 / float(lambda_prob)),
        h_orb=math.log(float(lambda_orb)),
    )

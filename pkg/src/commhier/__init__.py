"""Exact toolkit for the commuting-tuple hierarchy of small finite groups.

Everything is computed in exact arithmetic (Python integers and fractions):
commuting r-tuple counts and probabilities P_r, conjugation orbit counts
kappa_r, the abelian subgroup poset with its Moebius function, the finite
Dirichlet spectrum and its generating series, the minimal linear recurrence
and Hankel rank of the hierarchy, inverse recovery of a spectrum from exact
values, and stratified closed formulas for split extensions A x| K with
abelian factors.  Independent brute-force oracles back every fast route.
"""

from .counting import (commuting_probability, hom_count, hom_count_bruteforce,
                       kappa, kappa_orbits_bruteforce)
from .errors import CommhierError
from .groups import (FiniteGroup, SemidirectProduct, SubgroupSet, abelian,
                     cyclic, dihedral, heisenberg, product, quaternion8,
                     semidirect, symmetric)
from .lattice import AbelianPoset, AbelianStats, abelian_stats
from .spectrum import (SeriesReport, Spectrum, eval_pr, eval_series,
                       first_pole, hankel_rank_of_sequence, inverse_spectrum,
                       recurrence_from_spectrum, series_report,
                       special_values, spectrum_from_moebius)
from .specparse import GroupSpec, build_extension, make_group, parse_spec
from .splitext import SplitAnalysis, phi_r_bruteforce
from .verify import VerificationReport, verify_corpus

__version__ = "0.1.0"

__all__ = [
    "AbelianPoset", "AbelianStats", "CommhierError", "FiniteGroup",
    "GroupSpec", "SemidirectProduct", "SeriesReport", "SplitAnalysis",
    "Spectrum", "SubgroupSet", "VerificationReport", "abelian",
    "abelian_stats", "build_extension", "commuting_probability", "cyclic",
    "dihedral", "eval_pr", "eval_series", "first_pole",
    "hankel_rank_of_sequence", "heisenberg", "hom_count",
    "hom_count_bruteforce", "inverse_spectrum", "kappa",
    "kappa_orbits_bruteforce", "make_group", "parse_spec", "phi_r_bruteforce",
    "product", "quaternion8", "recurrence_from_spectrum", "semidirect",
    "series_report", "special_values", "spectrum_from_moebius", "symmetric",
    "verify_corpus",
]

"""The built-in verification corpus.

Members are chosen to exercise the worked examples (S3, dihedral family,
Q8, the order-27 extraspecial group), the coprime split-extension theorems
(C7⋊C3, C5⋊C4, (C3xC3)⋊C2), and the non-coprime strata (C9⋊C2, C3⋊C4).
"""

from __future__ import annotations

from functools import lru_cache

from .groups import FiniteGroup, SemidirectProduct
from .specparse import GroupSpec, build_extension, make_group, parse_spec

CORPUS_SPECS: tuple[str, ...] = tuple(
    [f"cyclic({n})" for n in range(2, 13)]
    + ["abelian([2,2])", "abelian([2,4])", "abelian([3,3])"]
    + [f"dihedral({n})" for n in range(3, 9)]
    + ["symmetric(3)", "symmetric(4)", "quaternion8", "heisenberg(3)"]
    + [
        "product(symmetric(3), cyclic(2))",
        "product(quaternion8, cyclic(3))",
        "product(dihedral(4), cyclic(2))",
        "semidirect(cyclic(7); cyclic(3); [[2]])",
        "semidirect(cyclic(5); cyclic(4); [[2]])",
        "semidirect(abelian([3,3]); cyclic(2); inversion)",
        "semidirect(cyclic(9); cyclic(2); inversion)",
        # C3 ⋊ C4 with the generator of C4 acting by inversion (dicyclic),
        # and the trivial-action variant (abelian, = C12).
        "semidirect(cyclic(3); cyclic(4); inversion)",
        "semidirect(cyclic(3); cyclic(4); [[1]])",
    ])

SPLIT_CORPUS_SPECS: tuple[str, ...] = tuple(
    s for s in CORPUS_SPECS if s.startswith("semidirect"))

COPRIME_SPLIT_SPECS: tuple[str, ...] = (
    "semidirect(cyclic(7); cyclic(3); [[2]])",
    "semidirect(cyclic(5); cyclic(4); [[2]])",
    "semidirect(abelian([3,3]); cyclic(2); inversion)",
    "semidirect(cyclic(9); cyclic(2); inversion)",
)

FIXED_POINT_FREE_SPECS: tuple[str, ...] = (
    "semidirect(cyclic(7); cyclic(3); [[2]])",
    "semidirect(cyclic(5); cyclic(4); [[2]])",
    "semidirect(abelian([3,3]); cyclic(2); inversion)",
)


@lru_cache(maxsize=None)
def corpus_group(spec_text: str) -> FiniteGroup:
    return make_group(parse_spec(spec_text))


@lru_cache(maxsize=None)
def corpus_extension(spec_text: str) -> SemidirectProduct:
    return build_extension(parse_spec(spec_text))


def corpus() -> list[tuple[str, FiniteGroup]]:
    """All corpus members as (canonical spec string, group) pairs."""
    return [(s, corpus_group(s)) for s in CORPUS_SPECS]


def nonabelian_corpus() -> list[tuple[str, FiniteGroup]]:
    return [(s, G) for s, G in corpus() if not G.is_abelian()]

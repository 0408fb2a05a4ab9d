"""Extended ab-index and the invariants derived from it.

Two independent routes compute the extended ab-index: a weighted sum over
chains (no labeling needed) and a sum over pairs (M, E) of a maximal chain
and a set of toggled positions (needs an R-labeling).
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb
from typing import List, Optional

from .errors import NotRLabelingError, RankZeroError
from .models import ExtAbAlgorithm, ExtAbResult
from .ncpoly import (
    AbPoly,
    AbWord,
    CdLetter,
    CdPoly,
    CdWord,
    WeightVariant,
    YPoly,
    YTPoly,
    block_decompose,
    chain_weight,
    eval_y,
    iota,
    omega,
    specialize_ab,
)
from .poset import GradedPoset, chain_poincare, chains_in, maximal_chains, rank_set
from .rlabel import CoverLabeling, toggle_word, u_monomial, verify_r_labeling

logger = logging.getLogger(__name__)


def _require_rank(P: GradedPoset, operation: str) -> None:
    if P.n < 1:
        raise RankZeroError(operation)


def _require_r_labeling(P: GradedPoset, labeling: CoverLabeling) -> None:
    verdict = verify_r_labeling(P, labeling)
    if not verdict.ok:
        raise NotRLabelingError(verdict)


def extab_by_chains(P: GradedPoset) -> AbPoly:
    """Sum over chains C avoiding the maximum of Poin_C times wt_C."""
    acc = AbPoly()
    count = 0
    for chain in chains_in(P, exclude={P.top}):
        acc = acc + chain_weight(rank_set(P, chain), P.n) * chain_poincare(P, chain)
        count += 1
    logger.debug("Extended ab-index summed over %d chains", count)
    return acc


def extab_by_labeling(
    P: GradedPoset, labeling: CoverLabeling, check: bool = True
) -> AbPoly:
    """Sum of y^#E u(M, E) over maximal chains M and subsets E of 1..n.

    Raises:
        NotRLabelingError: If ``check`` is set and the labeling is not an
            R-labeling.
    """
    if check:
        _require_r_labeling(P, labeling)
    subsets = [
        (frozenset(E), size)
        for size in range(P.n + 1)
        for E in combinations(range(1, P.n + 1), size)
    ]
    acc: dict[AbWord, YPoly] = {}
    for chain in maximal_chains(P):
        u = u_monomial(P, chain, labeling)
        for E, size in subsets:
            word = toggle_word(u, E)
            acc[word] = acc.get(word, YPoly()) + YPoly.monomial(size)
    return AbPoly(acc)


def extended_ab_index(
    P: GradedPoset, labeling: Optional[CoverLabeling] = None
) -> ExtAbResult:
    """Extended ab-index by the labeling route when a labeling is given,
    by chains otherwise."""
    if labeling is None:
        poly, algorithm = extab_by_chains(P), ExtAbAlgorithm.BY_CHAINS
    else:
        poly, algorithm = extab_by_labeling(P, labeling), ExtAbAlgorithm.BY_LABELING
    return ExtAbResult(poly=poly, algorithm=algorithm, poset_rank=P.n)


def ab_index(P: GradedPoset) -> AbPoly:
    """The classical ab-index, the extended index at y = 0."""
    return eval_y(extab_by_chains(P), 0)


def pullback(P: GradedPoset) -> AbPoly:
    """The pullback ab-index, the extended index at y = 1."""
    return eval_y(extab_by_chains(P), 1)


def extab_plus_by_chains(P: GradedPoset) -> AbPoly:
    """Sum over all chains C of Poin_C times wt+_C; equals exPsi(P) * a."""
    acc = AbPoly()
    for chain in chains_in(P):
        weight = chain_weight(rank_set(P, chain), P.n, WeightVariant.PLUS)
        acc = acc + weight * chain_poincare(P, chain)
    return acc


def _inner_chains(P: GradedPoset) -> List[tuple[str, ...]]:
    return list(chains_in(P, exclude={P.bottom, P.top}))


def extab_circ_by_chains(P: GradedPoset) -> AbPoly:
    """Sum over chains C of the open poset of Poin_{0 u C} times wt-_C.

    This is the extended index with its first letter deleted.

    Raises:
        RankZeroError: If P has rank 0.
    """
    _require_rank(P, "extab_circ_by_chains")
    acc = AbPoly()
    for chain in _inner_chains(P):
        weight = chain_weight(rank_set(P, chain), P.n, WeightVariant.MINUS)
        acc = acc + weight * chain_poincare(P, (P.bottom,) + chain)
    return acc


def reduced_ab_index(P: GradedPoset) -> AbPoly:
    """Sum of wt-_C over chains of the open poset; the ab-index is a times it.

    Raises:
        RankZeroError: If P has rank 0.
    """
    _require_rank(P, "reduced_ab_index")
    acc = AbPoly()
    for chain in _inner_chains(P):
        acc = acc + chain_weight(rank_set(P, chain), P.n, WeightVariant.MINUS)
    return acc


def num_poly(P: GradedPoset) -> YTPoly:
    """Num(P; y, t) from its definition as a sum over chains of the open poset.

    Raises:
        RankZeroError: If P has rank 0.
    """
    _require_rank(P, "Num")
    t = YTPoly.t()
    one_minus_t = YTPoly.one() - t
    acc = YTPoly()
    for chain in _inner_chains(P):
        k = len(chain)
        coeff = YTPoly.from_ypoly(chain_poincare(P, (P.bottom,) + chain))
        acc = acc + coeff * t**k * one_minus_t ** (P.n - 1 - k)
    return acc


def num_from_extab(P: GradedPoset, labeling: CoverLabeling) -> YTPoly:
    """Num(P; y, t) as the image of iota(exPsi) under a -> 1, b -> t.

    Raises:
        RankZeroError: If P has rank 0.
        NotRLabelingError: If the labeling is not an R-labeling.
    """
    _require_rank(P, "Num")
    return specialize_ab(iota(extab_by_labeling(P, labeling)))


def poincare_from_ab(
    P: GradedPoset, labeling: Optional[CoverLabeling] = None
) -> YPoly:
    """Coefficient of a^(n-1) in iota(omega(Psi(P))).

    Psi is computed through the labeling when one is given.

    Raises:
        RankZeroError: If P has rank 0.
    """
    _require_rank(P, "poincare_from_ab")
    if labeling is None:
        psi = ab_index(P)
    else:
        psi = eval_y(extab_by_labeling(P, labeling), 0)
    return iota(omega(psi)).coefficient(AbWord(P.n - 1))


def _block_image(j: int) -> tuple[CdLetter, ...]:
    if j == 0:
        return (CdLetter.C1,)
    return (CdLetter.D,) + (CdLetter.C2,) * (j - 1)


def cd_index(P: GradedPoset, labeling: CoverLabeling) -> CdPoly:
    """c1c2d-form of the extended index from the block decomposition of each
    descent word: block a gives c1, block a b^j gives d c2^(j-1).

    Raises:
        NotRLabelingError: If the labeling is not an R-labeling.
    """
    _require_r_labeling(P, labeling)
    terms: List[tuple[CdWord, int]] = []
    for chain in maximal_chains(P):
        u = u_monomial(P, chain, labeling)
        letters: tuple[CdLetter, ...] = ()
        if u.length:
            for j in block_decompose(u):
                letters += _block_image(j)
        terms.append((CdWord(letters), 1))
    return CdPoly.from_terms(terms)


def count_maximal_chains(P: GradedPoset) -> int:
    """Number of maximal chains of P."""
    return sum(1 for _ in maximal_chains(P))


def total(p: AbPoly, y: int = 1) -> int:
    """Value of p at a = b = 1 and the given y."""
    return sum(coeff.evaluate(y) for _, coeff in p.terms())


def lower_bound(P: GradedPoset, k: int) -> int:
    """binom(n - 1, k) * Poin(P; 1), the floor for [t^k] Num(P; 1, t)."""
    return comb(P.n - 1, k) * chain_poincare(P, (P.bottom,)).evaluate(1)


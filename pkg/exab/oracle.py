"""Brute-force enumeration of interlacing pairs, increasing-decreasing chains
and the triple sets A, B and B-circ.

Everything here is exhaustive and meant for posets of rank at most 3; it
cross-checks the fast routes in :mod:`exab.extab` and :mod:`exab.poset`.
"""

from __future__ import annotations

import logging
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .errors import NotInterlacingError, NotRLabelingError, ROverlapsIEError
from .ncpoly import YPoly
from .poset import Chain, GradedPoset, Multichain, chains_in, maximal_chains
from .rlabel import (
    CoverLabeling,
    check_maximal,
    is_strictly_decreasing,
    is_weakly_increasing,
    u_monomial,
    verify_r_labeling,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InterlacingPair:
    """Chain C and multichain D with C_1 <= D_1 <= C_2 <= ... <= C_k <= D_k."""

    C: Chain
    D: Multichain


@dataclass(frozen=True)
class Triple:
    """Interlacing pair with a maximal chain increasing-decreasing for it."""

    C: Chain
    D: Multichain
    M: Chain

    @property
    def pair(self) -> InterlacingPair:
        return InterlacingPair(self.C, self.D)


def i_set(E: Iterable[int], n: int) -> FrozenSet[int]:
    """Ranks i in 0..n with i outside E and i + 1 in E.

    >>> sorted(i_set({1, 2}, 2))
    [0]
    """
    positions = frozenset(E)
    return frozenset(i for i in range(n + 1) if i not in positions and i + 1 in positions)


def j_set(E: Iterable[int], n: int) -> FrozenSet[int]:
    """Ranks i in 1..n with i in E and i + 1 outside E.

    >>> sorted(j_set({1, 2}, 2))
    [2]
    """
    positions = frozenset(E)
    return frozenset(i for i in range(1, n + 1) if i in positions and i + 1 not in positions)


class Oracle:
    """Exhaustive machinery over one R-labeled poset.

    Raises:
        NotRLabelingError: If ``check`` is set and the labeling fails.
    """

    def __init__(
        self, P: GradedPoset, labeling: CoverLabeling, check: bool = True
    ) -> None:
        if check:
            verdict = verify_r_labeling(P, labeling)
            if not verdict.ok:
                raise NotRLabelingError(verdict)
        self.P = P
        self.labeling = labeling
        self._maximal: List[Tuple[Chain, Tuple[int, ...]]] = [
            (M, tuple(labeling.along(M))) for M in maximal_chains(P)
        ]
        self._chains_by_ranks: Dict[FrozenSet[int], List[Chain]] = {}
        for chain in chains_in(P):
            key = frozenset(P.rank(x) for x in chain)
            self._chains_by_ranks.setdefault(key, []).append(chain)
        self._a_cache: Dict[Tuple[int, FrozenSet[int]], FrozenSet[Triple]] = {}
        self._lock = threading.Lock()
        logger.debug(
            "Oracle over %d maximal chains and %d chains",
            len(self._maximal),
            sum(len(v) for v in self._chains_by_ranks.values()),
        )

    def _sorted(self, elements: Iterable[str]) -> Tuple[str, ...]:
        return tuple(sorted(elements, key=lambda x: (self.P.rank(x), x)))

    def chains_with_ranks(self, S: Iterable[int]) -> List[Chain]:
        return self._chains_by_ranks.get(frozenset(S), [])

    def check_pair(self, C: Sequence[str], D: Sequence[str]) -> InterlacingPair:
        """Validate an interlacing pair.

        Raises:
            NotInterlacingError: If C is not a chain or D does not interlace it.
        """
        if len(C) != len(D):
            raise NotInterlacingError(C, D)
        for x, y in zip(C, C[1:]):
            if x == y or not self.P.leq(x, y):
                raise NotInterlacingError(C, D)
        sequence = [z for pair in zip(C, D) for z in pair]
        for x, y in zip(sequence, sequence[1:]):
            if not self.P.leq(x, y):
                raise NotInterlacingError(C, D)
        return InterlacingPair(tuple(C), tuple(D))

    def interlacing_multichains(self, C: Chain) -> Iterator[Multichain]:
        """All multichains D interlacing C."""
        bounds = list(C[1:]) + [self.P.top]

        def extend(prefix: List[str]) -> Iterator[Multichain]:
            i = len(prefix)
            if i == len(C):
                yield tuple(prefix)
                return
            for z in self.P.interval(C[i], bounds[i]):
                prefix.append(z)
                yield from extend(prefix)
                prefix.pop()

        yield from extend([])

    def irank(self, pair: InterlacingPair) -> int:
        return sum(self.P.rank(d) for d in pair.D) - sum(self.P.rank(c) for c in pair.C)

    def irank_set(self, pair: InterlacingPair) -> FrozenSet[int]:
        """Ranks r with rank(C_i) < r <= rank(D_i) for some i."""
        return frozenset(
            r
            for c, d in zip(pair.C, pair.D)
            for r in range(self.P.rank(c) + 1, self.P.rank(d) + 1)
        )

    def _is_incdec(self, M: Chain, labels: Sequence[int], pair: InterlacingPair) -> bool:
        for x in pair.C + pair.D:
            if M[self.P.rank(x)] != x:
                return False
        c = [self.P.rank(x) for x in pair.C]
        d = [self.P.rank(x) for x in pair.D]
        for lo, hi in zip(c, d):
            if not is_strictly_decreasing(labels[lo:hi]):
                return False
        for lo, hi in zip([0] + d, c + [self.P.n]):
            if not is_weakly_increasing(labels[lo:hi]):
                return False
        return True

    def incdec(self, pair: InterlacingPair) -> List[Chain]:
        """Maximal chains refining C u D that decrease on every [C_i, D_i] and
        weakly increase elsewhere."""
        self.check_pair(pair.C, pair.D)
        return [M for M, labels in self._maximal if self._is_incdec(M, labels, pair)]

    def mobius_via_chains(self, X: str, Y: str) -> int:
        """Number of strictly label-decreasing maximal chains of [X, Y]."""
        return sum(
            1
            for chain in maximal_chains(self.P, X, Y)
            if is_strictly_decreasing(self.labeling.along(chain))
        )

    def poincare_expansion(self, C: Chain) -> YPoly:
        """Sum over D interlacing C of #IncDec(C, D) y^irank(C, D)."""
        coeffs: Counter[int] = Counter()
        for D in self.interlacing_multichains(C):
            pair = InterlacingPair(C, D)
            coeffs[self.irank(pair)] += len(self.incdec(pair))
        return YPoly(coeffs[k] for k in range(max(coeffs, default=-1) + 1))

    def a_set(self, ell: int, S: Iterable[int]) -> FrozenSet[Triple]:
        """Triples (C, D, M) with Rank(C) = S, irank = ell and M in IncDec(C, D)."""
        key = (ell, frozenset(S))
        with self._lock:
            cached = self._a_cache.get(key)
        if cached is not None:
            return cached
        triples = set()
        for C in self.chains_with_ranks(key[1]):
            for D in self.interlacing_multichains(C):
                pair = InterlacingPair(C, D)
                if self.irank(pair) != ell:
                    continue
                for M, labels in self._maximal:
                    if self._is_incdec(M, labels, pair):
                        triples.add(Triple(C, D, M))
        result = frozenset(triples)
        with self._lock:
            self._a_cache[key] = result
        return result

    def phi(self, triple: Triple, added: Iterable[int]) -> Triple:
        """Add M_r to both C and D for every rank r in ``added``."""
        extra = [triple.M[r] for r in added]
        return Triple(
            self._sorted(set(triple.C) | set(extra)),
            self._sorted(list(triple.D) + extra),
            triple.M,
        )

    def _subtract_images(
        self, ell: int, T: FrozenSet[int], base: FrozenSet[int]
    ) -> FrozenSet[Triple]:
        images = set()
        members = sorted(T)
        for mask in range((1 << len(members)) - 1):
            S = frozenset(r for i, r in enumerate(members) if mask >> i & 1)
            added = sorted(T - S)
            for triple in self.a_set(ell, S | base):
                images.add(self.phi(triple, added))
        return self.a_set(ell, T | base) - images

    def b_set(self, ell: int, T: Iterable[int]) -> FrozenSet[Triple]:
        """A_ell(T) minus the images of A_ell(S) for every proper subset S of T."""
        return self._subtract_images(ell, frozenset(T), frozenset())

    def b_circ_set(self, ell: int, T: Iterable[int]) -> FrozenSet[Triple]:
        """A_ell(T u {0}) minus the images of A_ell(S u {0}), S a proper subset
        of T."""
        return self._subtract_images(ell, frozenset(T), frozenset({0}))

    def t_set(self, M: Sequence[str], E: Iterable[int]) -> FrozenSet[int]:
        """Ranks i in 0..n-1 with i, i+1 in E and u_(i+1) = a, or i, i+1 outside
        E and u_(i+1) = b."""
        positions = frozenset(E)
        u = u_monomial(self.P, M, self.labeling)
        result = set()
        for i in range(self.P.n):
            inside = i in positions and i + 1 in positions
            outside = i not in positions and i + 1 not in positions
            letter = u.letter(i)
            if (inside and letter == "a") or (outside and letter == "b"):
                result.add(i)
        return frozenset(result)

    def decomposition_pair(
        self, M: Sequence[str], E: Iterable[int], R: Iterable[int]
    ) -> InterlacingPair:
        """C_R = {M_i : i in I_E u R} and the multichain D_R = {M_i : i in J_E + R}.

        Raises:
            ROverlapsIEError: If R meets I_E or leaves 0..n.
        """
        chain = check_maximal(self.P, M)
        n = self.P.n
        positions = frozenset(E)
        extra = frozenset(R)
        starts = i_set(positions, n)
        if extra & starts or any(not 0 <= r <= n for r in extra):
            raise ROverlapsIEError(sorted(extra), sorted(starts))
        C = tuple(chain[i] for i in sorted(starts | extra))
        D = tuple(chain[i] for i in sorted(list(j_set(positions, n)) + list(extra)))
        return InterlacingPair(C, D)

    def pie_triple(self, M: Sequence[str], E: Iterable[int]) -> Triple:
        """The triple (C_T, D_T, M) for T = t_set(M, E)."""
        positions = frozenset(E)
        pair = self.decomposition_pair(M, positions, self.t_set(M, positions))
        return Triple(pair.C, pair.D, tuple(M))

    def irank_characterization(self, pair: InterlacingPair, E: Iterable[int]) -> bool:
        """Whether I_E and J_E are the multiset differences of Rank(C) and
        Rank(D) with their common part."""
        positions = frozenset(E)
        ranks_c = Counter(self.P.rank(x) for x in pair.C)
        ranks_d = Counter(self.P.rank(x) for x in pair.D)
        common = ranks_c & ranks_d
        return ranks_c - common == Counter(i_set(positions, self.P.n)) and (
            ranks_d - common == Counter(j_set(positions, self.P.n))
        )


def mobius_via_chains(P: GradedPoset, labeling: CoverLabeling, X: str, Y: str) -> int:
    return Oracle(P, labeling).mobius_via_chains(X, Y)


def incdec(
    P: GradedPoset, labeling: CoverLabeling, pair: InterlacingPair
) -> List[Chain]:
    return Oracle(P, labeling).incdec(pair)


def a_set(
    P: GradedPoset, labeling: CoverLabeling, ell: int, S: Iterable[int]
) -> FrozenSet[Triple]:
    return Oracle(P, labeling).a_set(ell, S)


def b_set(
    P: GradedPoset, labeling: CoverLabeling, ell: int, T: Iterable[int]
) -> FrozenSet[Triple]:
    return Oracle(P, labeling).b_set(ell, T)


def b_circ_set(
    P: GradedPoset, labeling: CoverLabeling, ell: int, T: Iterable[int]
) -> FrozenSet[Triple]:
    return Oracle(P, labeling).b_circ_set(ell, T)

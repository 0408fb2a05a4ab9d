"""Exception hierarchy for exab.

Every error is a ``ValueError`` so callers that only care about bad input can
catch the builtin; the subclasses carry the witness that made a check fail.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence, Tuple

if TYPE_CHECKING:
    from .models import RLabelingVerdict


class ExabError(ValueError):
    """Base class for all exab errors."""


# Posets


class PosetError(ExabError):
    """Invalid poset input or query."""


class EmptyPosetError(PosetError):
    """The element set is empty."""


class ElementNotInPosetError(PosetError):
    """An element identifier is unknown to the poset."""

    def __init__(self, element: str) -> None:
        super().__init__(f"Element {element!r} is not in the poset")
        self.element = element


class CyclicCoversError(PosetError):
    """The cover relations contain a directed cycle."""

    def __init__(self, cycle: Sequence[str]) -> None:
        self.cycle = list(cycle)
        super().__init__(
            "Cover relations are cyclic: " + " < ".join(self.cycle + self.cycle[:1])
        )


class NoUniqueMinError(PosetError):
    """The poset does not have exactly one minimal element."""

    def __init__(self, minima: Sequence[str]) -> None:
        super().__init__(f"Expected a unique minimum, found {sorted(minima)}")
        self.minima = sorted(minima)


class NoUniqueMaxError(PosetError):
    """The poset does not have exactly one maximal element."""

    def __init__(self, maxima: Sequence[str]) -> None:
        super().__init__(f"Expected a unique maximum, found {sorted(maxima)}")
        self.maxima = sorted(maxima)


class NotGradedError(PosetError):
    """Two maximal chains have different lengths."""

    def __init__(self, short_chain: Sequence[str], long_chain: Sequence[str]) -> None:
        super().__init__(
            "Poset is not graded: maximal chains "
            f"{list(short_chain)} and {list(long_chain)} have lengths "
            f"{len(short_chain) - 1} and {len(long_chain) - 1}"
        )
        self.short_chain = tuple(short_chain)
        self.long_chain = tuple(long_chain)


class RankMismatchError(PosetError):
    """A user supplied rank disagrees with the rank computed from covers."""

    def __init__(self, element: str, given: int, computed: int) -> None:
        super().__init__(
            f"Rank of {element!r} given as {given} but covers imply {computed}"
        )
        self.element = element
        self.given = given
        self.computed = computed


class NotComparableError(PosetError):
    """``X <= Y`` was required but does not hold."""

    def __init__(self, lower: str, upper: str) -> None:
        super().__init__(f"{lower!r} is not below {upper!r}")
        self.pair = (lower, upper)


class NotAChainError(PosetError):
    """A sequence of elements is not strictly increasing."""

    def __init__(self, chain: Sequence[str]) -> None:
        super().__init__(f"{list(chain)} is not a strictly increasing chain")
        self.chain = tuple(chain)


class NotMaximalError(PosetError):
    """A chain is not a maximal chain 0 = M_0 < ... < M_n = 1 of covers."""

    def __init__(self, chain: Sequence[str]) -> None:
        super().__init__(f"{list(chain)} is not a maximal chain")
        self.chain = tuple(chain)


# Noncommutative polynomials


class PolynomialError(ExabError):
    """Invalid polynomial operation."""


class RankOutOfRangeError(PolynomialError):
    """A rank lies outside the admissible positions of a weight variant."""

    def __init__(self, rank: int, allowed: range) -> None:
        super().__init__(
            f"Rank {rank} outside admissible positions {allowed.start}..{allowed.stop - 1}"
        )
        self.rank = rank


class EmptyWordError(PolynomialError):
    """Deleting the first letter of the empty word."""

    def __init__(self) -> None:
        super().__init__("Cannot delete the first letter of the empty word")


class LeadingBError(PolynomialError):
    """Block decomposition of a word starting with b."""

    def __init__(self, word: str) -> None:
        super().__init__(f"Word {word!r} starts with b and has no a*b^j blocks")
        self.word = word


# Labelings


class LabelingError(ExabError):
    """Invalid cover labeling."""


class PositionOutOfRangeError(LabelingError):
    """A position of E lies outside 1..n."""

    def __init__(self, position: int, n: int) -> None:
        super().__init__(f"Position {position} outside 1..{n}")
        self.position = position


class NotALatticeError(LabelingError):
    """Two elements have no join."""

    def __init__(self, pair: Tuple[str, str]) -> None:
        super().__init__(f"Elements {pair[0]!r} and {pair[1]!r} have no join")
        self.pair = pair


class NoAtomGeneratesError(LabelingError):
    """No atom join produces the upper element of a cover."""

    def __init__(self, cover: Tuple[str, str]) -> None:
        super().__init__(
            f"No atom joined with {cover[0]!r} gives {cover[1]!r} (non-atomic input)"
        )
        self.cover = cover


class NotRLabelingError(LabelingError):
    """The labeling failed R-labeling verification."""

    def __init__(self, verdict: "RLabelingVerdict") -> None:
        super().__init__(
            f"Not an R-labeling: interval [{verdict.lower}, {verdict.upper}] has "
            f"{verdict.increasing_chains} weakly increasing maximal chains"
        )
        self.verdict = verdict


# Polynomial invariants


class RankZeroError(ExabError):
    """The operation needs a poset of rank at least 1."""

    def __init__(self, operation: str) -> None:
        super().__init__(f"{operation} is undefined on a rank-0 poset")
        self.operation = operation


# Arrangements


class ArrangementError(ExabError):
    """Invalid hyperplane arrangement."""


class ZeroNormalError(ArrangementError):
    """A hyperplane normal is the zero vector."""

    def __init__(self, index: int) -> None:
        super().__init__(f"Normal {index + 1} is the zero vector")
        self.index = index


class DimensionMismatchError(ArrangementError):
    """A normal does not live in the ambient dimension."""

    def __init__(self, index: int, length: int, dim: int) -> None:
        super().__init__(f"Normal {index + 1} has {length} entries, expected {dim}")
        self.index = index


class DuplicateHyperplaneError(ArrangementError):
    """Two normals define the same hyperplane."""

    def __init__(self, pair: Tuple[int, int]) -> None:
        super().__init__(
            f"Hyperplanes {pair[0] + 1} and {pair[1] + 1} coincide (parallel normals)"
        )
        self.pair = pair


class ElementNotInLatticeError(ArrangementError):
    """A flat identifier is not in the lattice of flats."""

    def __init__(self, element: str) -> None:
        super().__init__(f"{element!r} is not a flat of the arrangement")
        self.element = element


# Oracle


class OracleError(ExabError):
    """Invalid oracle input."""


class NotInterlacingError(OracleError):
    """C_1 <= D_1 <= C_2 <= ... <= C_k <= D_k fails."""

    def __init__(self, chain: Sequence[str], multichain: Sequence[str]) -> None:
        super().__init__(f"{list(multichain)} does not interlace {list(chain)}")
        self.chain = tuple(chain)
        self.multichain = tuple(multichain)


class ROverlapsIEError(OracleError):
    """R meets I_E or leaves 0..n."""

    def __init__(self, r: Sequence[int], i_e: Sequence[int]) -> None:
        super().__init__(f"R={sorted(r)} must avoid I_E={sorted(i_e)} and lie in 0..n")
        self.r = sorted(r)
        self.i_e = sorted(i_e)


class RankGuardError(ExabError):
    """Input rank above the configured maximum."""

    def __init__(self, rank: int, limit: int) -> None:
        self.rank = rank
        self.limit = limit
        super().__init__(f"Rank {rank} exceeds EXAB_MAX_RANK={limit}; use --force")

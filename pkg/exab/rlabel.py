"""Cover labelings, R-labeling verification and the descent words u(M), u(M, E)."""

from __future__ import annotations

import logging
from typing import (
    Collection,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from .errors import (
    LabelingError,
    NoAtomGeneratesError,
    NotALatticeError,
    NotMaximalError,
    PositionOutOfRangeError,
)
from .models import RLabelingVerdict
from .ncpoly import AbWord
from .poset import Chain, GradedPoset

logger = logging.getLogger(__name__)

Cover = Tuple[str, str]


class CoverLabeling:
    """A positive integer on every cover relation of a poset."""

    KEY_SEPARATOR = "|"

    def __init__(self, P: GradedPoset, labels: Mapping[Cover, int]) -> None:
        covers = set(P.covers)
        extra = sorted(set(labels) - covers)
        if extra:
            raise LabelingError(f"Labels given for non-covers {extra}")
        missing = sorted(covers - set(labels))
        if missing:
            raise LabelingError(f"No label for covers {missing}")
        for cover, value in labels.items():
            if value < 1:
                raise LabelingError(f"Label {value} of {cover} is not a positive integer")
        self._poset = P
        self._labels: Dict[Cover, int] = dict(labels)

    @classmethod
    def from_file_labels(cls, P: GradedPoset, labels: Mapping[str, int]) -> "CoverLabeling":
        """Read labels keyed ``"lower|upper"``."""
        parsed: Dict[Cover, int] = {}
        for key, value in labels.items():
            parts = key.split(cls.KEY_SEPARATOR)
            if len(parts) != 2:
                raise LabelingError(f"Label key {key!r} is not of the form 'lower|upper'")
            parsed[(parts[0], parts[1])] = value
        return cls(P, parsed)

    def to_file_labels(self) -> Dict[str, int]:
        return {
            f"{x}{self.KEY_SEPARATOR}{y}": value
            for (x, y), value in sorted(self._labels.items())
        }

    @property
    def poset(self) -> GradedPoset:
        return self._poset

    def __call__(self, lower: str, upper: str) -> int:
        try:
            return self._labels[(lower, upper)]
        except KeyError:
            raise LabelingError(f"{lower!r} < {upper!r} is not a cover") from None

    def along(self, chain: Sequence[str]) -> List[int]:
        """Labels of consecutive covers of a saturated chain."""
        return [self(x, y) for x, y in zip(chain, chain[1:])]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoverLabeling):
            return NotImplemented
        return self._labels == other._labels

    def __repr__(self) -> str:
        return f"CoverLabeling({self.to_file_labels()})"


def is_weakly_increasing(labels: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(labels, labels[1:]))


def is_strictly_decreasing(labels: Sequence[int]) -> bool:
    return all(x > y for x, y in zip(labels, labels[1:]))


def _increasing_chains(
    P: GradedPoset, labeling: CoverLabeling, lower: str, upper: str
) -> Iterator[Chain]:
    """Weakly increasing maximal chains of [lower, upper], pruned depth-first."""

    def extend(prefix: List[str], last_label: int) -> Iterator[Chain]:
        head = prefix[-1]
        if head == upper:
            yield tuple(prefix)
            return
        for nxt in P.upper_covers(head):
            label = labeling(head, nxt)
            if label >= last_label and P.leq(nxt, upper):
                prefix.append(nxt)
                yield from extend(prefix, label)
                prefix.pop()

    yield from extend([lower], 0)


def verify_r_labeling(P: GradedPoset, labeling: CoverLabeling) -> RLabelingVerdict:
    """Check that every interval has exactly one weakly increasing maximal chain.

    Intervals are visited shortest first and the first failure is returned as
    the witness.
    """
    pairs = sorted(
        (
            (P.rank(y) - P.rank(x), P.rank(x), x, y)
            for x in P.elements
            for y in P.above(x)
            if P.rank(y) - P.rank(x) >= 2
        )
    )
    for _, _, x, y in pairs:
        count = 0
        for _chain in _increasing_chains(P, labeling, x, y):
            count += 1
            if count > 1:
                break
        if count != 1:
            if count > 1:
                count = sum(1 for _ in _increasing_chains(P, labeling, x, y))
            logger.debug("R-labeling fails on [%s, %s] with %d chains", x, y, count)
            return RLabelingVerdict(ok=False, lower=x, upper=y, increasing_chains=count)
    logger.debug("R-labeling verified on %d intervals", len(pairs))
    return RLabelingVerdict(ok=True)


def min_atom_labeling(
    P: GradedPoset, atom_order: Optional[Sequence[str]] = None
) -> Tuple[CoverLabeling, RLabelingVerdict]:
    """Label ``X < Y`` by the least i with ``X v atom_i = Y``.

    Args:
        P: A lattice.
        atom_order: Atoms in the order defining their indices; identifier
            order when omitted.

    Returns:
        The labeling and its R-labeling verdict.

    Raises:
        NotALatticeError: If two elements have no join.
        NoAtomGeneratesError: If some cover is not an atom join.
    """
    atoms = list(atom_order) if atom_order is not None else P.atoms()
    if sorted(atoms) != P.atoms():
        raise LabelingError(f"Atom order {atoms} does not list the atoms {P.atoms()}")
    elements = P.elements
    for i, x in enumerate(elements):
        for y in elements[i + 1 :]:
            if P.join(x, y) is None:
                raise NotALatticeError((x, y))

    labels: Dict[Cover, int] = {}
    for x, y in P.covers:
        index = next(
            (i for i, atom in enumerate(atoms, start=1) if P.join(x, atom) == y), None
        )
        if index is None:
            raise NoAtomGeneratesError((x, y))
        labels[(x, y)] = index
    labeling = CoverLabeling(P, labels)
    return labeling, verify_r_labeling(P, labeling)


def check_maximal(P: GradedPoset, chain: Sequence[str]) -> Chain:
    """Return ``chain`` as a tuple after checking it is a maximal chain."""
    if (
        len(chain) != P.n + 1
        or chain[0] != P.bottom
        or chain[-1] != P.top
        or any(y not in P.upper_covers(x) for x, y in zip(chain, chain[1:]))
    ):
        raise NotMaximalError(chain)
    return tuple(chain)


def u_monomial(P: GradedPoset, chain: Sequence[str], labeling: CoverLabeling) -> AbWord:
    """Descent word of a maximal chain: letter 1 is a, letter i is b exactly
    when the label drops from cover i - 1 to cover i.

    Raises:
        NotMaximalError: If ``chain`` is not a maximal chain.
    """
    labels = labeling.along(check_maximal(P, chain))
    return AbWord.from_b_positions(
        len(labels), (i for i in range(1, len(labels)) if labels[i - 1] > labels[i])
    )


def toggle_word(u: AbWord, positions: Collection[int]) -> AbWord:
    """Apply the E-toggle to a descent word: position i holding a becomes b
    when i is in E, position i holding b becomes a when i - 1 is in E."""
    b_positions = []
    for i in range(1, u.length + 1):
        if u.letter(i - 1) == "a":
            if i in positions:
                b_positions.append(i - 1)
        elif i - 1 not in positions:
            b_positions.append(i - 1)
    return AbWord.from_b_positions(u.length, b_positions)


def u_monomial_e(
    P: GradedPoset, chain: Sequence[str], E: Iterable[int], labeling: CoverLabeling
) -> AbWord:
    """Descent word of ``chain`` toggled by E, a set of positions in 1..n.

    Raises:
        NotMaximalError: If ``chain`` is not a maximal chain.
        PositionOutOfRangeError: If E leaves 1..n.
    """
    positions = frozenset(E)
    for i in positions:
        if not 1 <= i <= P.n:
            raise PositionOutOfRangeError(i, P.n)
    return toggle_word(u_monomial(P, chain, labeling), positions)

"""Central rational hyperplane arrangements.

Flats are index sets of hyperplanes closed under "contains the intersection",
found by rank computations with sympy. Covectors are decided one sign vector
at a time by Fourier-Motzkin elimination over ``Fraction`` after the zero
constraints are solved by a null space basis; every covector keeps a rational
witness point that is checked by substitution.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy as sp

from .errors import (
    ArrangementError,
    DimensionMismatchError,
    DuplicateHyperplaneError,
    ElementNotInLatticeError,
    ZeroNormalError,
)
from .extab import ab_index, pullback
from .models import ArrangementFile, FiberCount, PullbackCheck
from .ncpoly import A as LETTER_A
from .poset import GradedPoset, build_poset, chain_poincare, check_chain

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
Flat = FrozenSet[int]

BOTTOM_FACE = "bottom"


def _to_sympy(rows: Sequence[Vector], dim: int) -> sp.Matrix:
    return sp.Matrix(
        len(rows), dim, [sp.Rational(x.numerator, x.denominator) for row in rows for x in row]
    )


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _sign(value: Fraction) -> str:
    if value > 0:
        return "+"
    if value < 0:
        return "-"
    return "0"


def flat_id(flat: Iterable[int]) -> str:
    """Identifier of a flat from its 0-based hyperplane indices.

    >>> flat_id({2, 0})
    '{1,3}'
    """
    return "{" + ",".join(str(i + 1) for i in sorted(flat)) + "}"


class Arrangement:
    """Central arrangement of the hyperplanes ``<normal_i, x> = 0`` in Q^dim.

    Raises:
        ArrangementError: If there is no hyperplane.
        DimensionMismatchError: If a normal has the wrong length.
        ZeroNormalError: If a normal is zero.
        DuplicateHyperplaneError: If two normals are parallel.
    """

    def __init__(self, dim: int, normals: Sequence[Sequence[Fraction | int]]) -> None:
        if dim < 1:
            raise ArrangementError(f"Ambient dimension must be at least 1, got {dim}")
        if not normals:
            raise ArrangementError("An arrangement needs at least one hyperplane")
        rows: List[Vector] = []
        for i, normal in enumerate(normals):
            if len(normal) != dim:
                raise DimensionMismatchError(i, len(normal), dim)
            row = tuple(Fraction(x) for x in normal)
            if not any(row):
                raise ZeroNormalError(i)
            rows.append(row)
        self._dim = dim
        self._normals: Tuple[Vector, ...] = tuple(rows)
        self._ranks: Dict[Flat, int] = {}
        self._lock = threading.Lock()
        for i in range(len(rows)):
            for j in range(i):
                if self.rank({i, j}) == 1:
                    raise DuplicateHyperplaneError((j, i))

    @classmethod
    def from_file(cls, document: ArrangementFile) -> "Arrangement":
        """Build an arrangement from its file model."""
        return cls(document.dim, document.normals)

    @property
    def dim(self) -> int:
        """Ambient dimension."""
        return self._dim

    @property
    def m(self) -> int:
        """Number of hyperplanes."""
        return len(self._normals)

    @property
    def normals(self) -> Tuple[Vector, ...]:
        """Hyperplane normals in input order."""
        return self._normals

    def rank(self, indices: Iterable[int]) -> int:
        """Rank of the normals with the given indices."""
        key = frozenset(indices)
        with self._lock:
            if key not in self._ranks:
                if not key:
                    self._ranks[key] = 0
                else:
                    rows = [self._normals[i] for i in sorted(key)]
                    self._ranks[key] = int(_to_sympy(rows, self._dim).rank())
            return self._ranks[key]

    def closure(self, indices: Iterable[int]) -> Flat:
        """All hyperplanes containing the intersection of the given ones."""
        base = frozenset(indices)
        r = self.rank(base)
        return frozenset(
            j for j in range(self.m) if j in base or self.rank(base | {j}) == r
        )

    def flats(self) -> List[Flat]:
        """All flats, by rank then by sorted index tuple."""
        found = {self.closure(())}
        frontier = list(found)
        while frontier:
            nxt: List[Flat] = []
            for flat in frontier:
                for j in range(self.m):
                    if j not in flat:
                        bigger = self.closure(flat | {j})
                        if bigger not in found:
                            found.add(bigger)
                            nxt.append(bigger)
            frontier = nxt
        return sorted(found, key=lambda f: (self.rank(f), sorted(f)))

    def __repr__(self) -> str:
        return f"Arrangement(dim={self._dim}, m={self.m})"


@dataclass(frozen=True)
class FlatsLattice:
    """Lattice of flats with the flat behind each element identifier."""

    poset: GradedPoset
    flats: Dict[str, Flat]
    atom_order: List[str]

    def flat_of(self, element: str) -> Flat:
        """Hyperplane indices of the flat named ``element``."""
        try:
            return self.flats[element]
        except KeyError:
            raise ElementNotInLatticeError(element) from None


def flats_lattice(A: Arrangement) -> FlatsLattice:
    """Intersection lattice ordered by reverse inclusion of subspaces, which is
    inclusion of the closed index sets; rank is the rank of the normals."""
    flats = A.flats()
    ids = {flat_id(f): f for f in flats}
    covers = [
        (flat_id(f), flat_id(g))
        for f in flats
        for g in flats
        if f < g and A.rank(g) == A.rank(f) + 1
    ]
    poset = build_poset(list(ids), covers)
    logger.debug("Lattice of flats: %d flats, rank %d", len(flats), poset.n)
    return FlatsLattice(
        poset=poset, flats=ids, atom_order=[flat_id({i}) for i in range(A.m)]
    )


Constraint = Tuple[Vector, Fraction]  # sum coeffs[j] * z_j >= rhs


def _normalize(constraint: Constraint) -> Constraint:
    coeffs, rhs = constraint
    pivot = next((abs(c) for c in coeffs if c), None)
    if pivot is None:
        return coeffs, rhs
    return tuple(c / pivot for c in coeffs), rhs / pivot


def _eliminate(system: List[Constraint], j: int) -> List[Constraint]:
    """Fourier-Motzkin step removing variable j."""
    positive = [c for c in system if c[0][j] > 0]
    negative = [c for c in system if c[0][j] < 0]
    result = {_normalize(c) for c in system if c[0][j] == 0}
    for p_coeffs, p_rhs in positive:
        for n_coeffs, n_rhs in negative:
            lp, ln = -n_coeffs[j], p_coeffs[j]
            coeffs = tuple(lp * a + ln * b for a, b in zip(p_coeffs, n_coeffs))
            result.add(_normalize((coeffs, lp * p_rhs + ln * n_rhs)))
    return sorted(result)


def solve_inequalities(system: List[Constraint], k: int) -> Optional[Vector]:
    """A rational point satisfying every ``coeffs . z >= rhs``, or None.

    >>> half = Fraction(1, 2)
    >>> solve_inequalities([((Fraction(1),), half), ((Fraction(-1),), -half)], 1)
    (Fraction(1, 2),)
    >>> solve_inequalities([((Fraction(1),), Fraction(1)), ((Fraction(-1),), Fraction(0))], 1)
    """
    stages = [system]
    for j in reversed(range(k)):
        stages.append(_eliminate(stages[-1], j))
    if any(rhs > 0 for _, rhs in stages[-1]):
        return None
    point: List[Fraction] = []
    for j in range(k):
        lower: List[Fraction] = []
        upper: List[Fraction] = []
        for coeffs, rhs in stages[k - j - 1]:
            rest = rhs - _dot(coeffs[:j], point)
            if coeffs[j] > 0:
                lower.append(rest / coeffs[j])
            elif coeffs[j] < 0:
                upper.append(rest / coeffs[j])
        if lower:
            value = max(lower)
        elif upper:
            value = min(upper)
        else:
            value = Fraction(0)
        point.append(value)
    return tuple(point)


@dataclass(frozen=True)
class Covector:
    """Realizable sign vector and a point realizing it."""

    signs: str
    witness: Vector

    @property
    def zero_set(self) -> Flat:
        return frozenset(i for i, s in enumerate(self.signs) if s == "0")


def _null_basis(A: Arrangement, zeros: Flat) -> List[Vector]:
    if not zeros:
        return [
            tuple(Fraction(int(i == j)) for j in range(A.dim)) for i in range(A.dim)
        ]
    rows = [A.normals[i] for i in sorted(zeros)]
    return [
        tuple(Fraction(int(sp.fraction(x)[0]), int(sp.fraction(x)[1])) for x in v)
        for v in _to_sympy(rows, A.dim).nullspace()
    ]


def realize(A: Arrangement, signs: str) -> Optional[Covector]:
    """Decide whether ``signs`` is a covector of A.

    Strict conditions ``<n_i, x> > 0`` become ``<n_i, x> >= 1`` (and
    ``< 0`` becomes ``<= -1``); the system is homogeneous so both have the
    same solvability.
    """
    if len(signs) != A.m or set(signs) - set("+-0"):
        raise ArrangementError(f"{signs!r} is not a sign vector of length {A.m}")
    zeros = frozenset(i for i, s in enumerate(signs) if s == "0")
    basis = _null_basis(A, zeros)
    k = len(basis)
    system: List[Constraint] = []
    for i, s in enumerate(signs):
        if s == "0":
            continue
        scale = Fraction(1 if s == "+" else -1)
        coeffs = tuple(scale * _dot(A.normals[i], v) for v in basis)
        if not any(coeffs):
            return None
        system.append((coeffs, Fraction(1)))
    z = solve_inequalities(system, k)
    if z is None:
        return None
    x = tuple(
        sum((z[j] * basis[j][c] for j in range(k)), Fraction(0)) for c in range(A.dim)
    )
    found = "".join(_sign(_dot(n, x)) for n in A.normals)
    if found != signs:
        raise ArrangementError(f"Witness {x} realizes {found}, not {signs}")
    return Covector(signs, x)


def covectors(A: Arrangement) -> List[Covector]:
    """All covectors, each with a witness point.

    A covector's zero set is always a flat, so only sign vectors whose zero
    set is a flat are tested.
    """
    found = []
    for flat in A.flats():
        free = [i for i in range(A.m) if i not in flat]
        for choice in product("+-", repeat=len(free)):
            signs = ["0"] * A.m
            for i, s in zip(free, choice):
                signs[i] = s
            covector = realize(A, "".join(signs))
            if covector is not None:
                found.append(covector)
    logger.debug("Found %d covectors of %r", len(found), A)
    return sorted(found, key=lambda c: (-len(c.zero_set), c.signs))


def face_rank(A: Arrangement, signs: str) -> int:
    """Rank in the face poset: rank of the zero set plus one."""
    return A.rank(i for i, s in enumerate(signs) if s == "0") + 1


def face_leq(lower: str, upper: str) -> bool:
    """``upper`` lies in the closure of the face ``lower``."""
    return all(t in ("0", s) for s, t in zip(lower, upper))


def face_poset(A: Arrangement, faces: Optional[Sequence[Covector]] = None) -> GradedPoset:
    """Covectors ordered by reverse inclusion of faces, with a minimum adjoined.

    Chambers have rank 1 and the origin is the maximum.
    """
    signs = [c.signs for c in (faces if faces is not None else covectors(A))]
    ranks = {s: face_rank(A, s) for s in signs}
    by_rank: Dict[int, List[str]] = {}
    for s in signs:
        by_rank.setdefault(ranks[s], []).append(s)
    covers = [(BOTTOM_FACE, s) for s in by_rank.get(1, [])]
    for r, lowers in sorted(by_rank.items()):
        for lower in lowers:
            for upper in by_rank.get(r + 1, []):
                if face_leq(lower, upper):
                    covers.append((lower, upper))
    return build_poset([BOTTOM_FACE] + signs, covers)


def supp(A: Arrangement, signs: str) -> str:
    """Flat spanned by a face: the closure of its zero set."""
    if len(signs) != A.m or set(signs) - set("+-0"):
        raise ArrangementError(f"{signs!r} is not a sign vector of length {A.m}")
    zeros = frozenset(i for i, s in enumerate(signs) if s == "0")
    flat = A.closure(zeros)
    if flat != zeros:
        raise ArrangementError(f"{signs!r} is not a covector")
    return flat_id(flat)


def supp_fibers(
    A: Arrangement,
    chain: Sequence[str],
    lattice: Optional[FlatsLattice] = None,
    faces: Optional[Sequence[Covector]] = None,
) -> FiberCount:
    """Count chains of faces mapped by supp onto a chain of flats.

    Raises:
        ElementNotInLatticeError: If an element of ``chain`` is not a flat.
    """
    lattice = lattice or flats_lattice(A)
    for element in chain:
        lattice.flat_of(element)
    flats_chain = check_chain(lattice.poset, chain)
    expected = chain_poincare(lattice.poset, flats_chain).evaluate(1)
    if not flats_chain:
        return FiberCount(chain=[], faces=1, expected=expected)

    signs = [c.signs for c in (faces if faces is not None else covectors(A))]
    levels = [[s for s in signs if supp(A, s) == element] for element in flats_chain]
    counts = {s: 1 for s in levels[0]}
    for level in levels[1:]:
        counts = {
            upper: sum(c for lower, c in counts.items() if face_leq(lower, upper))
            for upper in level
        }
    return FiberCount(
        chain=list(flats_chain), faces=sum(counts.values()), expected=expected
    )


def euler_characteristic(A: Arrangement, faces: Optional[Sequence[Covector]] = None) -> int:
    """Sum over faces of (-1)^dim; a face has dimension dim - rank(zero set)."""
    return sum(
        (-1) ** (A.dim - A.rank(c.zero_set))
        for c in (faces if faces is not None else covectors(A))
    )


def chamber_count(A: Arrangement, faces: Optional[Sequence[Covector]] = None) -> int:
    """Number of covectors with no zero entry."""
    return sum(
        1 for c in (faces if faces is not None else covectors(A)) if not c.zero_set
    )


def check_pullback(A: Arrangement) -> PullbackCheck:
    """Compare Psi(face poset) with a * Psi_pull(lattice of flats)."""
    face_side = ab_index(face_poset(A))
    flats_side = LETTER_A * pullback(flats_lattice(A).poset)
    return PullbackCheck(
        face_side=str(face_side), flats_side=str(flats_side), ok=face_side == flats_side
    )

"""Tests for hyperplane arrangements, face posets and supp fibers."""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import List

import pytest

from exab.arrangement import (
    BOTTOM_FACE,
    Arrangement,
    chamber_count,
    check_pullback,
    covectors,
    euler_characteristic,
    face_leq,
    face_poset,
    face_rank,
    flats_lattice,
    realize,
    supp,
    supp_fibers,
)
from exab.errors import (
    ArrangementError,
    DimensionMismatchError,
    DuplicateHyperplaneError,
    ElementNotInLatticeError,
    NotAChainError,
    ZeroNormalError,
)
from exab.extab import ab_index
from exab.families import (
    braid_arrangement,
    concurrent_lines,
    coordinate_arrangement,
    corpus_arrangements,
)
from exab.models import ArrangementFile
from exab.ncpoly import YPoly
from exab.poset import chains_in, poincare


def test_arrangement_validation() -> None:
    """Test malformed normals are rejected."""
    with pytest.raises(ArrangementError):
        Arrangement(2, [])
    with pytest.raises(ArrangementError):
        Arrangement(0, [[1]])
    with pytest.raises(DimensionMismatchError):
        Arrangement(2, [[1, 0], [1]])
    with pytest.raises(ZeroNormalError) as zero:
        Arrangement(2, [[1, 0], [0, 0]])
    assert zero.value.index == 1
    with pytest.raises(DuplicateHyperplaneError) as duplicate:
        Arrangement(2, [[1, 0], [2, 0]])
    assert duplicate.value.pair == (0, 1)


def test_arrangement_from_file() -> None:
    """Test rational normals parse from strings."""
    document = ArrangementFile.model_validate({"dim": 2, "normals": [[1, "1/2"], ["-3/6", 0]]})
    A = Arrangement.from_file(document)
    assert A.normals == ((Fraction(1), Fraction(1, 2)), (Fraction(-1, 2), Fraction(0)))
    assert A.m == 2
    assert A.dim == 2


def test_rank_and_closure() -> None:
    """Test ranks and closures of three concurrent lines."""
    A = concurrent_lines()
    assert A.rank([]) == 0
    assert A.rank([0]) == 1
    assert A.rank([0, 2]) == 2
    assert A.closure([0]) == {0}
    assert A.closure([0, 1]) == {0, 1, 2}
    assert len(A.flats()) == 5


def test_rank_cache_under_concurrent_queries() -> None:
    """Test ranks queried from several threads match a fresh arrangement."""
    A = braid_arrangement(4)
    subsets = [s for k in range(A.m + 1) for s in combinations(range(A.m), k)] * 4
    with ThreadPoolExecutor(max_workers=4) as pool:
        ranks = list(pool.map(A.rank, subsets))
    fresh = braid_arrangement(4)
    assert ranks == [fresh.rank(s) for s in subsets]
    assert max(ranks) == 3


def test_flats_lattice() -> None:
    """Test the lattice of flats and its atom order."""
    lattice = flats_lattice(concurrent_lines())
    assert lattice.poset.n == 2
    assert lattice.atom_order == ["{1}", "{2}", "{3}"]
    assert lattice.flat_of("{1,2,3}") == {0, 1, 2}
    assert poincare(lattice.poset) == YPoly([1, 3, 2])
    with pytest.raises(ElementNotInLatticeError):
        lattice.flat_of("{4}")


def test_single_hyperplane() -> None:
    """Test one hyperplane gives a chain of rank 1."""
    A = Arrangement(1, [[1]])
    lattice = flats_lattice(A)
    assert lattice.poset.n == 1
    assert len(lattice.poset) == 2
    assert chamber_count(A) == 2
    assert check_pullback(A).ok


def test_realize() -> None:
    """Test realizable and non-realizable sign vectors."""
    A = concurrent_lines()
    covector = realize(A, "+-0")
    assert covector is not None
    x, y = covector.witness
    assert x > 0 and y < 0 and x + y == 0
    assert covector.zero_set == {2}
    assert realize(A, "0+-") is None
    assert realize(A, "++-") is None
    with pytest.raises(ArrangementError):
        realize(A, "++")
    with pytest.raises(ArrangementError):
        realize(A, "+x0")


def test_covectors_and_face_poset() -> None:
    """Test face counts of concurrent lines and of the coordinate arrangement."""
    A = concurrent_lines()
    faces = covectors(A)
    assert len(faces) == 13
    assert faces[0].signs == "000"
    P = face_poset(A, faces)
    assert len(P) == 14
    assert P.n == 3
    assert P.bottom == BOTTOM_FACE
    assert P.top == "000"
    assert face_rank(A, "+-0") == 2
    assert face_leq("++-", "+0-")
    assert not face_leq("+0-", "++-")
    assert len(covectors(coordinate_arrangement(3))) == 27
    assert len(face_poset(coordinate_arrangement(3))) == 28


def test_euler_characteristic_and_chambers() -> None:
    """Test the face counts Euler characteristic and chambers."""
    A = concurrent_lines()
    assert euler_characteristic(A) == 1
    assert chamber_count(A) == 6
    cube = coordinate_arrangement(3)
    assert euler_characteristic(cube) == -1
    assert chamber_count(cube) == 8


def test_supp() -> None:
    """Test supp of faces and of non-covectors."""
    A = concurrent_lines()
    assert supp(A, "+-0") == "{3}"
    assert supp(A, "+++") == "{}"
    assert supp(A, "000") == "{1,2,3}"
    with pytest.raises(ArrangementError):
        supp(A, "00+")


@pytest.mark.parametrize(
    "chain, faces",
    [
        ([], 1),
        (["{}"], 6),
        (["{1}"], 2),
        (["{}", "{1}"], 4),
        (["{}", "{2}", "{1,2,3}"], 4),
        (["{1,2,3}"], 1),
    ],
)
def test_supp_fibers(chain: List[str], faces: int) -> None:
    """Test fiber sizes equal Poin_C at y = 1."""
    fiber = supp_fibers(concurrent_lines(), chain)
    assert fiber.faces == faces
    assert fiber.ok


def test_supp_fibers_errors() -> None:
    """Test unknown flats and non-chains are rejected."""
    A = concurrent_lines()
    with pytest.raises(ElementNotInLatticeError):
        supp_fibers(A, ["{4}"])
    with pytest.raises(NotAChainError):
        supp_fibers(A, ["{1}", "{2}"])


def test_check_pullback() -> None:
    """Test Psi(face poset) = a * Psi_pull(flats) on three lines."""
    check = check_pullback(concurrent_lines())
    assert check.ok
    assert check.face_side == "a^3 + (5)*a*b*a + (5)*a*a*b + a*b^2"
    assert check.flats_side == check.face_side
    assert str(ab_index(face_poset(concurrent_lines()))) == check.face_side


@pytest.mark.parametrize("name, A", corpus_arrangements(count=5))
def test_check_pullback_on_random_arrangements(name: str, A: Arrangement) -> None:
    """Test the pullback identity on random arrangements."""
    assert check_pullback(A).ok, name


@pytest.mark.parametrize(
    "name, A",
    [("coordinates", coordinate_arrangement(3))] + corpus_arrangements(count=5),
)
def test_supp_fibers_on_every_chain(name: str, A: Arrangement) -> None:
    """Test the face chains over every chain of flats number Poin_C(1)."""
    lattice = flats_lattice(A)
    faces = covectors(A)
    for chain in chains_in(lattice.poset):
        fiber = supp_fibers(A, chain, lattice, faces)
        assert fiber.ok, (name, chain, fiber.faces, fiber.expected)


@pytest.mark.parametrize("name, A", corpus_arrangements(count=5))
def test_euler_relation_on_random_arrangements(name: str, A: Arrangement) -> None:
    """Test the Euler characteristic and the chamber count."""
    faces = covectors(A)
    assert euler_characteristic(A, faces) == (-1) ** A.dim, name
    assert chamber_count(A, faces) == poincare(flats_lattice(A).poset).evaluate(1), name


@pytest.mark.parametrize(
    "name, A",
    [("lines", concurrent_lines()), ("coordinates", coordinate_arrangement(3))]
    + corpus_arrangements(count=5),
)
def test_supp_is_an_order_and_rank_preserving_surjection(name: str, A: Arrangement) -> None:
    """Test supp drops face ranks by one, keeps covers ordered and hits every flat."""
    flats = flats_lattice(A).poset
    faces = covectors(A)
    P = face_poset(A, faces)
    image = {c.signs: supp(A, c.signs) for c in faces}
    for signs, flat in image.items():
        assert flats.rank(flat) == P.rank(signs) - 1, (name, signs)
    for lower, upper in P.covers:
        if lower == BOTTOM_FACE:
            continue
        assert flats.leq(image[lower], image[upper]), (name, lower, upper)
    assert set(image.values()) == set(flats.elements), name

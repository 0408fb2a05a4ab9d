"""Tests for the standard families and the corpus."""

import pytest

from exab.arrangement import flats_lattice
from exab.extab import count_maximal_chains
from exab.families import (
    boolean_lattice,
    braid_arrangement,
    chain_poset,
    coordinate_arrangement,
    corpus,
    partition_lattice,
    random_arrangement,
    uniform_matroid_lattice,
)
from exab.ncpoly import YPoly
from exab.poset import poincare


def test_chain_poset() -> None:
    """Test the chain of rank n."""
    P = chain_poset(3)
    assert P.elements == ("0", "1", "2", "3")
    assert P.n == 3
    assert chain_poset(0).n == 0
    with pytest.raises(ValueError):
        chain_poset(-1)


def test_boolean_lattice() -> None:
    """Test B_3 sizes and identifiers."""
    P = boolean_lattice(3)
    assert len(P) == 8
    assert P.bottom == "{}"
    assert P.top == "{1,2,3}"
    assert poincare(P) == YPoly([1, 1]) ** 3


def test_uniform_matroid_lattice() -> None:
    """Test U_{2,4} and U_{3,4}."""
    P = uniform_matroid_lattice(2, 4)
    assert len(P) == 6
    assert poincare(P) == YPoly([1, 4, 3])
    Q = uniform_matroid_lattice(3, 4)
    assert Q.n == 3
    assert len(Q) == 12
    with pytest.raises(ValueError):
        uniform_matroid_lattice(5, 4)


def test_partition_lattice() -> None:
    """Test Pi_4 has 15 partitions and 18 maximal chains."""
    P = partition_lattice(4)
    assert len(P) == 15
    assert P.bottom == "1|2|3|4"
    assert P.top == "1234"
    assert count_maximal_chains(P) == 18
    with pytest.raises(ValueError):
        partition_lattice(10)


def test_arrangement_families() -> None:
    """Test coordinate and braid arrangements."""
    assert flats_lattice(coordinate_arrangement(3)).poset.n == 3
    braid = braid_arrangement(4)
    assert braid.m == 6
    lattice = flats_lattice(braid)
    assert len(lattice.poset) == 15
    assert poincare(lattice.poset) == poincare(partition_lattice(4))
    with pytest.raises(ValueError):
        braid_arrangement(1)


def test_random_arrangement() -> None:
    """Test random draws are reproducible and non-degenerate."""
    first = random_arrangement(4, 3, seed=7)
    again = random_arrangement(4, 3, seed=7)
    assert first.normals == again.normals
    assert first.m == 4
    with pytest.raises(ValueError):
        random_arrangement(2, 1, seed=0)
    with pytest.raises(ValueError):
        random_arrangement(30, 2, seed=0, bound=1)


def test_corpus() -> None:
    """Test the corpus members carry R-labelings of their posets."""
    entries = corpus(include_random=False)
    names = [entry.name for entry in entries]
    assert names == ["B1", "B2", "B3", "B4", "U2,3", "U2,4", "U2,5", "U3,4", "Pi4"]
    for entry in entries:
        assert entry.labeling.poset is entry.poset, entry.name

"""Test configuration for exab."""

import json
from pathlib import Path
from typing import Any, Dict, List

import pytest

from exab.families import CorpusEntry, corpus
from exab.poset import GradedPoset, build_poset
from exab.rlabel import CoverLabeling

# Rank-2 lattice with three atoms; chains through a1, a2, a3 carry the labels
# (1, 2), (2, 1) and (3, 1).
L_ELEMENTS = ["0", "a1", "a2", "a3", "1"]
L_COVERS = [
    ["0", "a1"],
    ["0", "a2"],
    ["0", "a3"],
    ["a1", "1"],
    ["a2", "1"],
    ["a3", "1"],
]
L_LABELS = {
    "0|a1": 1,
    "0|a2": 2,
    "0|a3": 3,
    "a1|1": 2,
    "a2|1": 1,
    "a3|1": 1,
}

L_EXTAB = "a^2 + (3*y + 2*y^2)*b*a + (2 + 3*y)*a*b + (y^2)*b*b"
L_NUM = "1 + 3*y + 2*y^2 + (2 + 3*y + y^2)*t"


@pytest.fixture
def lattice_l() -> GradedPoset:
    """The rank-2 lattice with three atoms."""
    return build_poset(L_ELEMENTS, L_COVERS)


@pytest.fixture
def labeling_l(lattice_l: GradedPoset) -> CoverLabeling:
    return CoverLabeling.from_file_labels(lattice_l, L_LABELS)


@pytest.fixture
def rank0() -> GradedPoset:
    return build_poset(["0"], [])


@pytest.fixture
def l_document() -> Dict[str, Any]:
    return {"elements": L_ELEMENTS, "covers": L_COVERS, "labels": L_LABELS}


def write_json(directory: Path, name: str, body: Any) -> str:
    """Helper function to write a JSON input file."""
    path = directory / name
    path.write_text(json.dumps(body), encoding="utf-8")
    return str(path)


@pytest.fixture(scope="session")
def corpus_entries() -> List[CorpusEntry]:
    """Boolean, uniform matroid, partition and random arrangement lattices."""
    return corpus()


"""Poincare-extended ab-index of graded posets and hyperplane arrangements."""

from .arrangement import Arrangement, check_pullback, face_poset, flats_lattice
from .errors import ExabError
from .extab import (
    ab_index,
    cd_index,
    extab_by_chains,
    extab_by_labeling,
    extended_ab_index,
    num_poly,
    pullback,
)
from .ncpoly import AbPoly, AbWord, CdPoly, YPoly, YTPoly, cd_expand, iota, omega
from .poset import GradedPoset, build_poset, mobius, poincare
from .rlabel import CoverLabeling, min_atom_labeling, verify_r_labeling

__version__ = "0.1.0"
__all__ = [
    "AbPoly",
    "AbWord",
    "Arrangement",
    "CdPoly",
    "CoverLabeling",
    "ExabError",
    "GradedPoset",
    "YPoly",
    "YTPoly",
    "ab_index",
    "build_poset",
    "cd_expand",
    "cd_index",
    "check_pullback",
    "extab_by_chains",
    "extab_by_labeling",
    "extended_ab_index",
    "face_poset",
    "flats_lattice",
    "iota",
    "min_atom_labeling",
    "mobius",
    "num_poly",
    "omega",
    "poincare",
    "pullback",
    "verify_r_labeling",
]

"""Standard posets and arrangements, and the corpus the verification suites run on."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .arrangement import Arrangement, flats_lattice
from .poset import GradedPoset, build_poset
from .rlabel import CoverLabeling, min_atom_labeling


def _set_id(indices: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(indices)) + "}"


def chain_poset(n: int) -> GradedPoset:
    """Chain 0 < 1 < ... < n."""
    if n < 0:
        raise ValueError("Rank must be nonnegative")
    return build_poset([str(i) for i in range(n + 1)], [(str(i), str(i + 1)) for i in range(n)])


def boolean_lattice(n: int) -> GradedPoset:
    """Subsets of {1, ..., n} ordered by inclusion."""
    if n < 0:
        raise ValueError("Rank must be nonnegative")
    ground = range(1, n + 1)
    subsets = [s for k in range(n + 1) for s in combinations(ground, k)]
    covers = [
        (_set_id(s), _set_id(s + (i,)))
        for s in subsets
        for i in ground
        if i not in s
    ]
    return build_poset([_set_id(s) for s in subsets], covers)


def uniform_matroid_lattice(rank: int, size: int) -> GradedPoset:
    """Lattice of flats of U_{rank,size}: every subset of fewer than ``rank``
    elements, and the ground set."""
    if not 1 <= rank <= size:
        raise ValueError("Need 1 <= rank <= size")
    ground = tuple(range(1, size + 1))
    small = [s for k in range(rank) for s in combinations(ground, k)]
    covers = []
    for s in small:
        if len(s) < rank - 1:
            covers.extend(
                (_set_id(s), _set_id(tuple(sorted(s + (i,))))) for i in ground if i not in s
            )
        else:
            covers.append((_set_id(s), _set_id(ground)))
    return build_poset([_set_id(s) for s in small] + [_set_id(ground)], covers)


def _set_partitions(items: Sequence[int]) -> List[Tuple[Tuple[int, ...], ...]]:
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    result = []
    for partition in _set_partitions(rest):
        result.append(((first,),) + partition)
        for i, block in enumerate(partition):
            merged = ((first,) + block,) + partition[:i] + partition[i + 1 :]
            result.append(merged)
    return [tuple(sorted(p)) for p in result]


def _partition_id(partition: Sequence[Sequence[int]]) -> str:
    return "|".join("".join(str(i) for i in block) for block in sorted(partition))


def partition_lattice(n: int) -> GradedPoset:
    """Set partitions of {1, ..., n} ordered by refinement, finest at the bottom."""
    if not 1 <= n <= 9:
        raise ValueError("Partition lattices are built for 1 <= n <= 9")
    partitions = _set_partitions(tuple(range(1, n + 1)))
    covers = []
    for p in partitions:
        for i, j in combinations(range(len(p)), 2):
            merged = tuple(sorted(p[i] + p[j]))
            coarser = [b for k, b in enumerate(p) if k not in (i, j)] + [merged]
            covers.append((_partition_id(p), _partition_id(coarser)))
    return build_poset(sorted({_partition_id(p) for p in partitions}), covers)


def coordinate_arrangement(d: int) -> Arrangement:
    """The coordinate hyperplanes x_i = 0 of Q^d."""
    if d < 1:
        raise ValueError("Dimension must be at least 1")
    return Arrangement(d, [[int(i == j) for j in range(d)] for i in range(d)])


def braid_arrangement(d: int) -> Arrangement:
    """The hyperplanes x_i - x_j = 0 for 1 <= i < j <= d."""
    if d < 2:
        raise ValueError("Dimension must be at least 2")
    normals = []
    for i in range(d):
        for j in range(i + 1, d):
            coeffs = [0] * d
            coeffs[i] = 1
            coeffs[j] = -1
            normals.append(coeffs)
    return Arrangement(d, normals)


def concurrent_lines() -> Arrangement:
    """Three lines through the origin of the plane."""
    return Arrangement(2, [[1, 0], [0, 1], [1, 1]])


def _parallel(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i, j in combinations(range(len(u)), 2))


def random_arrangement(
    m: int, d: int, seed: int, bound: int = 2, attempts: int = 1000
) -> Arrangement:
    """m pairwise non-parallel integer normals with entries in [-bound, bound]."""
    if d == 1 and m > 1:
        raise ValueError("A line carries at most one hyperplane through the origin")
    rng = random.Random(seed)
    normals: List[List[int]] = []
    for _ in range(attempts):
        if len(normals) == m:
            break
        candidate = [rng.randint(-bound, bound) for _ in range(d)]
        if any(candidate) and not any(_parallel(candidate, n) for n in normals):
            normals.append(candidate)
    if len(normals) < m:
        raise ValueError(f"Could not draw {m} hyperplanes in dimension {d}")
    return Arrangement(d, normals)


@dataclass(frozen=True)
class CorpusEntry:
    """A named poset with its minimal-atom labeling."""

    name: str
    poset: GradedPoset
    labeling: CoverLabeling


def _entry(name: str, P: GradedPoset, atom_order: Optional[List[str]] = None) -> CorpusEntry:
    labeling, _ = min_atom_labeling(P, atom_order)
    return CorpusEntry(name, P, labeling)


def corpus_arrangements(count: int = 10, seed: int = 0) -> List[Tuple[str, Arrangement]]:
    """Random central arrangements with at most 5 hyperplanes in at most 3 dimensions."""
    result = []
    for k in range(count):
        d = 2 + k % 2
        m = 2 + k % 4
        result.append((f"random-{seed + k}", random_arrangement(m, d, seed + k)))
    return result


def corpus(include_random: bool = True) -> List[CorpusEntry]:
    """Boolean lattices up to rank 4, four uniform matroid lattices, the partition
    lattice of {1, 2, 3, 4} and lattices of flats of random arrangements."""
    entries = [_entry(f"B{n}", boolean_lattice(n)) for n in range(1, 5)]
    for rank, size in [(2, 3), (2, 4), (2, 5), (3, 4)]:
        entries.append(_entry(f"U{rank},{size}", uniform_matroid_lattice(rank, size)))
    entries.append(_entry("Pi4", partition_lattice(4)))
    if include_random:
        for name, arrangement in corpus_arrangements():
            lattice = flats_lattice(arrangement)
            entries.append(_entry(name, lattice.poset, lattice.atom_order))
    return entries

"""Finite graded posets with unique minimum and maximum.

A poset is given by its cover relations; ranks, gradedness and the order
relation are derived from them with networkx.

>>> P = build_poset(["0", "x", "y", "1"], [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")])
>>> P.n, mobius(P, "0", "1")
(2, 1)
>>> str(poincare(P))
'1 + 2*y + y^2'
"""

from __future__ import annotations

import logging
import threading
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    CyclicCoversError,
    ElementNotInPosetError,
    EmptyPosetError,
    NoUniqueMaxError,
    NoUniqueMinError,
    NotAChainError,
    NotComparableError,
    NotGradedError,
    PosetError,
    RankMismatchError,
)
from .models import PosetFile
from .ncpoly import ONE_Y, YPoly

logger = logging.getLogger(__name__)

Chain = Tuple[str, ...]
Multichain = Tuple[str, ...]


class GradedPoset:
    """Immutable graded poset. Build instances with :func:`build_poset`."""

    def __init__(
        self, graph: nx.DiGraph, ranks: Mapping[str, int], bottom: str, top: str
    ) -> None:
        self._graph = graph
        self._ranks = dict(ranks)
        self._bottom = bottom
        self._top = top
        self._order = nx.transitive_closure_dag(graph)
        self._elements: Tuple[str, ...] = tuple(
            sorted(graph.nodes, key=lambda x: (self._ranks[x], x))
        )
        self._up: Dict[str, frozenset[str]] = {
            x: frozenset(self._order.successors(x)) | {x} for x in graph.nodes
        }
        self._mobius_rows: Dict[str, Dict[str, int]] = {}
        self._lock = threading.Lock()

    @property
    def elements(self) -> Tuple[str, ...]:
        """Elements sorted by (rank, identifier)."""
        return self._elements

    @property
    def covers(self) -> List[Tuple[str, str]]:
        """Cover pairs (lower, upper), sorted."""
        return sorted(self._graph.edges)

    @property
    def bottom(self) -> str:
        """The minimum element."""
        return self._bottom

    @property
    def top(self) -> str:
        """The maximum element."""
        return self._top

    @property
    def n(self) -> int:
        """Rank of the poset."""
        return self._ranks[self._top]

    def rank(self, element: str) -> int:
        """Rank of ``element``; the minimum has rank 0."""
        self._check(element)
        return self._ranks[element]

    def __contains__(self, element: object) -> bool:
        return element in self._ranks

    def __len__(self) -> int:
        return len(self._elements)

    def __repr__(self) -> str:
        return f"GradedPoset(elements={len(self)}, n={self.n})"

    def _check(self, *elements: str) -> None:
        for x in elements:
            if x not in self._ranks:
                raise ElementNotInPosetError(x)

    def leq(self, x: str, y: str) -> bool:
        """Whether x <= y."""
        self._check(x, y)
        return x == y or self._order.has_edge(x, y)

    def upper_covers(self, x: str) -> List[str]:
        """Elements covering x."""
        self._check(x)
        return sorted(self._graph.successors(x))

    def lower_covers(self, x: str) -> List[str]:
        """Elements covered by x."""
        self._check(x)
        return sorted(self._graph.predecessors(x))

    def above(self, x: str) -> List[str]:
        """All Z >= x, sorted by (rank, identifier)."""
        self._check(x)
        return [z for z in self._elements if z == x or self._order.has_edge(x, z)]

    def interval(self, x: str, y: str) -> List[str]:
        """Elements of [x, y] sorted by (rank, identifier)."""
        if not self.leq(x, y):
            raise NotComparableError(x, y)
        return [z for z in self.above(x) if z == y or self._order.has_edge(z, y)]

    def atoms(self) -> List[str]:
        """Elements of rank 1."""
        return self.upper_covers(self._bottom)

    def join(self, x: str, y: str) -> Optional[str]:
        """Least upper bound of x and y, or None when there is none."""
        self._check(x, y)
        bounds = self._up[x] & self._up[y]
        if not bounds:
            return None
        least = min(bounds, key=lambda z: (self._ranks[z], z))
        return least if bounds <= self._up[least] else None

    def _mobius_row(self, x: str) -> Dict[str, int]:
        with self._lock:
            row = self._mobius_rows.get(x)
            if row is not None:
                return row
            row = {}
            up = self.above(x)
            for z in up:
                if z == x:
                    row[z] = 1
                    continue
                row[z] = -sum(
                    row[w] for w in up if w != z and w in row and self.leq(w, z)
                )
            self._mobius_rows[x] = row
            logger.debug("Filled Mobius row of %r (%d entries)", x, len(row))
            return row

    def mobius(self, x: str, y: str) -> int:
        """mu(x, y), with each row of mu(x, -) computed once."""
        if not self.leq(x, y):
            raise NotComparableError(x, y)
        return self._mobius_row(x)[y]


def _longest_down(graph: nx.DiGraph, ranks: Mapping[str, int], v: str) -> List[str]:
    """A longest chain from the minimum to v, read bottom-up."""
    path = [v]
    while ranks[path[-1]] > 0:
        path.append(
            min(u for u in graph.predecessors(path[-1]) if ranks[u] == ranks[path[-1]] - 1)
        )
    return path[::-1]


def _longest_up(graph: nx.DiGraph, heights: Mapping[str, int], v: str) -> List[str]:
    """A longest chain from v to the maximum."""
    path = [v]
    while heights[path[-1]] > 0:
        path.append(
            min(w for w in graph.successors(path[-1]) if heights[w] == heights[path[-1]] - 1)
        )
    return path


def build_poset(
    elements: Iterable[str],
    covers: Iterable[Sequence[str]],
    ranks: Optional[Mapping[str, int]] = None,
) -> GradedPoset:
    """Validate cover data and build a graded poset.

    Args:
        elements: Element identifiers.
        covers: Pairs ``(lower, upper)``.
        ranks: Optional ranks; they must agree with the ranks implied by covers.

    Returns:
        The validated poset.

    Raises:
        EmptyPosetError: If there are no elements.
        ElementNotInPosetError: If a cover or rank names an unknown element.
        CyclicCoversError: If the covers contain a directed cycle.
        NoUniqueMinError: If there is not exactly one minimal element.
        NoUniqueMaxError: If there is not exactly one maximal element.
        NotGradedError: If two maximal chains differ in length.
        RankMismatchError: If a given rank disagrees with the computed one.
    """
    names = list(elements)
    if not names:
        raise EmptyPosetError("A poset needs at least one element")
    if len(set(names)) != len(names):
        duplicates = sorted({x for x in names if names.count(x) > 1})
        raise PosetError(f"Duplicate elements {duplicates}")

    graph = nx.DiGraph()
    graph.add_nodes_from(names)
    for pair in covers:
        if len(pair) != 2:
            raise PosetError(f"Cover {list(pair)} is not a pair")
        lower, upper = pair
        for x in (lower, upper):
            if x not in graph:
                raise ElementNotInPosetError(x)
        graph.add_edge(lower, upper)

    if not nx.is_directed_acyclic_graph(graph):
        raise CyclicCoversError([u for u, _ in nx.find_cycle(graph)])

    minima = [x for x in graph.nodes if graph.in_degree(x) == 0]
    if len(minima) != 1:
        raise NoUniqueMinError(minima)
    maxima = [x for x in graph.nodes if graph.out_degree(x) == 0]
    if len(maxima) != 1:
        raise NoUniqueMaxError(maxima)
    bottom, top = minima[0], maxima[0]

    order = list(nx.topological_sort(graph))
    computed: Dict[str, int] = {}
    for v in order:
        computed[v] = max((computed[u] + 1 for u in graph.predecessors(v)), default=0)
    heights: Dict[str, int] = {}
    for v in reversed(order):
        heights[v] = max((heights[w] + 1 for w in graph.successors(v)), default=0)

    for lower, upper in sorted(graph.edges):
        if computed[upper] != computed[lower] + 1:
            long_chain = _longest_down(graph, computed, upper)[:-1] + _longest_up(
                graph, heights, upper
            )
            short_chain = _longest_down(graph, computed, lower) + _longest_up(
                graph, heights, upper
            )
            raise NotGradedError(short_chain, long_chain)

    if ranks is not None:
        for x, given in sorted(ranks.items()):
            if x not in computed:
                raise ElementNotInPosetError(x)
            if given != computed[x]:
                raise RankMismatchError(x, given, computed[x])

    poset = GradedPoset(graph, computed, bottom, top)
    logger.debug("Built poset with %d elements, rank %d", len(poset), poset.n)
    return poset


def from_file(document: PosetFile) -> GradedPoset:
    """Build and validate a poset from its file model."""
    return build_poset(document.elements, document.covers, document.ranks)


def to_file(P: GradedPoset, labels: Optional[Mapping[str, int]] = None) -> PosetFile:
    """Export a poset (and optionally cover labels) in the JSON file format."""
    return PosetFile(
        elements=list(P.elements),
        covers=P.covers,
        labels=dict(sorted(labels.items())) if labels is not None else None,
    )


def mobius(P: GradedPoset, X: str, Y: str) -> int:
    """Mobius function mu(X, Y) by the defining recursion.

    Raises:
        NotComparableError: If X is not below Y.
    """
    return P.mobius(X, Y)


def poincare_interval(P: GradedPoset, X: str, Y: str) -> YPoly:
    """Poincare polynomial of [X, Y]: sum of |mu(X, Z)| y^(rank Z - rank X)."""
    members = P.interval(X, Y)
    base = P.rank(X)
    coeffs = [0] * (P.rank(Y) - base + 1)
    for z in members:
        coeffs[P.rank(z) - base] += abs(P.mobius(X, z))
    return YPoly(coeffs)


def poincare(P: GradedPoset) -> YPoly:
    """Poincare polynomial of the whole poset."""
    return poincare_interval(P, P.bottom, P.top)


def check_chain(P: GradedPoset, chain: Sequence[str]) -> Chain:
    """Return ``chain`` as a tuple after checking it is strictly increasing."""
    for x in chain:
        if x not in P:
            raise ElementNotInPosetError(x)
    for lower, upper in zip(chain, chain[1:]):
        if lower == upper or not P.leq(lower, upper):
            raise NotAChainError(chain)
    return tuple(chain)


def chain_poincare(P: GradedPoset, C: Sequence[str]) -> YPoly:
    """Product of the interval Poincare polynomials along C with the maximum
    appended; the empty chain gives 1.

    >>> P = build_poset(["0", "1"], [("0", "1")])
    >>> str(chain_poincare(P, ["0"])), str(chain_poincare(P, []))
    ('1 + y', '1')
    """
    chain = check_chain(P, C)
    if not chain:
        return ONE_Y
    result = ONE_Y
    for lower, upper in zip(chain, chain[1:] + (P.top,)):
        result = result * poincare_interval(P, lower, upper)
    return result


def rank_set(P: GradedPoset, chain: Iterable[str]) -> frozenset[int]:
    """Ranks of the elements of a chain."""
    return frozenset(P.rank(x) for x in chain)


def maximal_chains(
    P: GradedPoset, start: Optional[str] = None, end: Optional[str] = None
) -> Iterator[Chain]:
    """Maximal chains of [start, end] (default the whole poset), depth-first
    with covers visited in identifier order."""
    lo = P.bottom if start is None else start
    hi = P.top if end is None else end
    if not P.leq(lo, hi):
        raise NotComparableError(lo, hi)

    def extend(prefix: List[str]) -> Iterator[Chain]:
        last = prefix[-1]
        if last == hi:
            yield tuple(prefix)
            return
        for nxt in P.upper_covers(last):
            if P.leq(nxt, hi):
                prefix.append(nxt)
                yield from extend(prefix)
                prefix.pop()

    yield from extend([lo])


def chains_in(P: GradedPoset, exclude: Iterable[str] = ()) -> Iterator[Chain]:
    """All chains (the empty chain first) of P with ``exclude`` removed.

    Raises:
        PosetError: If ``exclude`` is not a subset of {minimum, maximum}.
    """
    removed = set(exclude)
    if not removed <= {P.bottom, P.top}:
        raise PosetError(
            f"Only the minimum and maximum can be excluded, got {sorted(removed)}"
        )
    pool = [x for x in P.elements if x not in removed]

    def extend(prefix: List[str], start: int) -> Iterator[Chain]:
        yield tuple(prefix)
        for i in range(start, len(pool)):
            candidate = pool[i]
            if not prefix or (candidate != prefix[-1] and P.leq(prefix[-1], candidate)):
                prefix.append(candidate)
                yield from extend(prefix, i + 1)
                prefix.pop()

    yield from extend([], 0)

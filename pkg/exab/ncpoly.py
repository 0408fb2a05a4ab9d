"""Noncommutative polynomials in a, b (and c1, c2, d) over Z[y].

Words in a, b are packed into integers with letter ``i`` stored at bit ``i``
(``b`` is a set bit), so sorting by ``(length, bits)`` is the canonical print
order: ``aa < ba < ab < bb``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import groupby
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from .errors import EmptyWordError, LeadingBError, RankOutOfRangeError

logger = logging.getLogger(__name__)


class YPoly:
    """Integer polynomial in y, stored as a trimmed coefficient tuple.

    >>> p = YPoly([1, 3, 2])
    >>> str(p)
    '1 + 3*y + 2*y^2'
    >>> str(YPoly([1, 1]) ** 2)
    '1 + 2*y + y^2'
    >>> p.evaluate(1)
    6
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def constant(cls, value: int) -> "YPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "YPoly":
        return cls([0] * exponent + [coeff])

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in y, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return 0

    def evaluate(self, value: int) -> int:
        result = 0
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = YPoly.constant(other)
        if not isinstance(other, YPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Union["YPoly", int]) -> "YPoly":
        other = _as_ypoly(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return YPoly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self) -> "YPoly":
        return YPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union["YPoly", int]) -> "YPoly":
        return self + (-_as_ypoly(other))

    def __rsub__(self, other: int) -> "YPoly":
        return _as_ypoly(other) - self

    def __mul__(self, other: Union["YPoly", int]) -> "YPoly":
        other = _as_ypoly(other)
        if not self._coeffs or not other._coeffs:
            return ZERO_Y
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return YPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "YPoly":
        result = ONE_Y
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"YPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            power = "y" if k == 1 else f"y^{k}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        return " + ".join(parts) if parts else "0"


ZERO_Y = YPoly()
ONE_Y = YPoly((1,))
Y = YPoly((0, 1))


def _as_ypoly(value: Union[YPoly, int]) -> YPoly:
    if isinstance(value, YPoly):
        return value
    return YPoly.constant(value)


def _render_term(coeff: YPoly, letters: Sequence[str]) -> str:
    """Render ``coeff * letters`` in canonical text form."""
    if not letters:
        return str(coeff)
    if coeff == ONE_Y:
        runs = []
        for letter, group in groupby(letters):
            size = len(list(group))
            runs.append(letter if size == 1 else f"{letter}^{size}")
        return "*".join(runs)
    return f"({coeff})*" + "*".join(letters)


@dataclass(frozen=True, order=True)
class AbWord:
    """A word in a, b; letter ``i`` is bit ``i`` of ``bits`` (b = 1).

    >>> w = AbWord.from_str("aab")
    >>> (len(w), w.bits, str(w.complement()))
    (3, 4, 'bba')
    """

    length: int
    bits: int = 0

    @classmethod
    def from_str(cls, text: str) -> "AbWord":
        bits = 0
        for i, letter in enumerate(text):
            if letter == "b":
                bits |= 1 << i
            elif letter != "a":
                raise ValueError(f"Invalid letter {letter!r} in ab-word {text!r}")
        return cls(len(text), bits)

    @classmethod
    def from_b_positions(cls, length: int, positions: Iterable[int]) -> "AbWord":
        """Word of the given length with b exactly at ``positions`` (0-based)."""
        bits = 0
        for i in positions:
            bits |= 1 << i
        return cls(length, bits)

    def __len__(self) -> int:
        return self.length

    def letter(self, index: int) -> str:
        return "b" if self.bits >> index & 1 else "a"

    def letters(self) -> List[str]:
        return [self.letter(i) for i in range(self.length)]

    def count_b(self) -> int:
        return bin(self.bits).count("1")

    def concat(self, other: "AbWord") -> "AbWord":
        return AbWord(self.length + other.length, self.bits | other.bits << self.length)

    def drop_first(self) -> "AbWord":
        if self.length == 0:
            raise EmptyWordError()
        return AbWord(self.length - 1, self.bits >> 1)

    def complement(self) -> "AbWord":
        return AbWord(self.length, self.bits ^ ((1 << self.length) - 1))

    def __str__(self) -> str:
        return "".join(self.letters())


EMPTY_WORD = AbWord(0)

Coefficient = Union[YPoly, int]


class AbPoly:
    """Element of Z[y]<a, b>: a finite map from AbWord to nonzero YPoly."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[AbWord, Coefficient] | None = None) -> None:
        self._terms: Dict[AbWord, YPoly] = {}
        for word, coeff in (terms or {}).items():
            value = _as_ypoly(coeff)
            if value:
                self._terms[word] = value

    @classmethod
    def one(cls) -> "AbPoly":
        return cls({EMPTY_WORD: ONE_Y})

    @classmethod
    def word(cls, word: Union[AbWord, str], coeff: Coefficient = 1) -> "AbPoly":
        if isinstance(word, str):
            word = AbWord.from_str(word)
        return cls({word: coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[AbWord, Coefficient]]) -> "AbPoly":
        """Sum of terms, merging repeated words."""
        acc: Dict[AbWord, YPoly] = {}
        for word, coeff in terms:
            acc[word] = acc.get(word, ZERO_Y) + coeff
        return cls(acc)

    def terms(self) -> List[Tuple[AbWord, YPoly]]:
        """Terms in canonical order."""
        return sorted(self._terms.items())

    def words(self) -> List[AbWord]:
        return sorted(self._terms)

    def coefficient(self, word: Union[AbWord, str]) -> YPoly:
        if isinstance(word, str):
            word = AbWord.from_str(word)
        return self._terms.get(word, ZERO_Y)

    def lengths(self) -> set[int]:
        return {word.length for word in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator[Tuple[AbWord, YPoly]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "AbPoly") -> "AbPoly":
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            acc[word] = acc.get(word, ZERO_Y) + coeff
        return AbPoly(acc)

    def __neg__(self) -> "AbPoly":
        return AbPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "AbPoly") -> "AbPoly":
        return self + (-other)

    def __mul__(self, other: Union["AbPoly", YPoly, int]) -> "AbPoly":
        if not isinstance(other, AbPoly):
            scalar = _as_ypoly(other)
            return AbPoly({w: c * scalar for w, c in self._terms.items()})
        acc: Dict[AbWord, YPoly] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                key = w1.concat(w2)
                acc[key] = acc.get(key, ZERO_Y) + c1 * c2
        return AbPoly(acc)

    def __rmul__(self, other: Union[YPoly, int]) -> "AbPoly":
        return self * other

    def __pow__(self, exponent: int) -> "AbPoly":
        result = AbPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"AbPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_render_term(c, w.letters()) for w, c in self.terms())


A = AbPoly.word("a")
B = AbPoly.word("b")


class WeightVariant(str, Enum):
    """Which positions a chain weight ranges over."""

    STANDARD = "standard"  # w_0 ... w_{n-1}
    PLUS = "plus"  # w_0 ... w_n
    MINUS = "minus"  # w_1 ... w_{n-1}

    def positions(self, n: int) -> range:
        if self is WeightVariant.PLUS:
            return range(0, n + 1)
        if self is WeightVariant.MINUS:
            return range(1, n)
        return range(0, n)


@lru_cache(maxsize=None)
def _weight(rank_set: frozenset[int], n: int, variant: WeightVariant) -> AbPoly:
    result = AbPoly.one()
    for i in variant.positions(n):
        result = result * (B if i in rank_set else A - B)
    return result


def chain_weight(
    rank_set: Iterable[int], n: int, variant: WeightVariant = WeightVariant.STANDARD
) -> AbPoly:
    """Product of ``b`` at positions in ``rank_set`` and ``a - b`` elsewhere.

    >>> str(chain_weight({0, 1}, 2))
    'b^2'
    >>> str(chain_weight({1}, 2, WeightVariant.MINUS))
    'b'
    """
    ranks = frozenset(rank_set)
    allowed = variant.positions(n)
    for r in ranks:
        if r not in allowed:
            raise RankOutOfRangeError(r, allowed)
    return _weight(ranks, n, variant)


# y-deformed letters used by omega and cd_expand
C1_IMAGE = A + B * Y  # a + yb
C2_IMAGE = B + A * Y  # b + ya
D_IMAGE = AbPoly.word("ab", ONE_Y + Y) + AbPoly.word("ba", Y + Y * Y)


@lru_cache(maxsize=None)
def _omega_word(word: AbWord) -> AbPoly:
    result = AbPoly.one()
    i = 0
    while i < word.length:
        if word.letter(i) == "a" and i + 1 < word.length and word.letter(i + 1) == "b":
            result = result * D_IMAGE
            i += 2
            continue
        result = result * (C1_IMAGE if word.letter(i) == "a" else C2_IMAGE)
        i += 1
    return result


def omega(p: AbPoly) -> AbPoly:
    """Replace every factor ab by ab + yba + yab + y^2ba, then a by a + yb and
    b by b + ya.

    Occurrences of ab in a word never overlap, so one left-to-right scan
    marks all of them.

    >>> str(omega(AbPoly.word("ab")))
    '(y + y^2)*b*a + (1 + y)*a*b'
    """
    acc = AbPoly()
    for word, coeff in p.terms():
        acc = acc + _omega_word(word) * coeff
    return acc


def iota(p: AbPoly) -> AbPoly:
    """Delete the first letter of every word.

    >>> str(iota(AbPoly.word("ab") + AbPoly.word("bb")))
    '(2)*b'
    """
    return AbPoly.from_terms((word.drop_first(), coeff) for word, coeff in p.terms())


def eval_y(p: AbPoly, value: int) -> AbPoly:
    """Substitute the integer ``value`` for y."""
    return AbPoly({w: c.evaluate(value) for w, c in p.terms()})


def block_decompose(word: AbWord) -> List[int]:
    """Exponents ``[j_1, ..., j_k]`` of the factorization ``(a b^j_1)...(a b^j_k)``.

    >>> block_decompose(AbWord.from_str("aabab"))
    [0, 1, 1]
    """
    if word.length == 0 or word.letter(0) == "b":
        raise LeadingBError(str(word))
    blocks: List[int] = []
    for letter in word.letters():
        if letter == "a":
            blocks.append(0)
        else:
            blocks[-1] += 1
    return blocks


class CdLetter(str, Enum):
    """Letters of a c1c2d-word."""

    C1 = "c1"
    C2 = "c2"
    D = "d"

    @property
    def degree(self) -> int:
        return 2 if self is CdLetter.D else 1


@dataclass(frozen=True)
class CdWord:
    """A word in c1, c2, d."""

    letters: Tuple[CdLetter, ...] = ()

    @property
    def degree(self) -> int:
        """Weighted degree: c's count 1, d counts 2."""
        return sum(letter.degree for letter in self.letters)

    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        return (len(self.letters), tuple(letter.value for letter in self.letters))

    def concat(self, other: "CdWord") -> "CdWord":
        return CdWord(self.letters + other.letters)

    def __str__(self) -> str:
        return "".join(letter.value for letter in self.letters)


class CdPoly:
    """Finite map from CdWord to nonzero YPoly."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[CdWord, Coefficient] | None = None) -> None:
        self._terms: Dict[CdWord, YPoly] = {}
        for word, coeff in (terms or {}).items():
            value = _as_ypoly(coeff)
            if value:
                self._terms[word] = value

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[CdWord, Coefficient]]) -> "CdPoly":
        acc: Dict[CdWord, YPoly] = {}
        for word, coeff in terms:
            acc[word] = acc.get(word, ZERO_Y) + coeff
        return cls(acc)

    def terms(self) -> List[Tuple[CdWord, YPoly]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, word: CdWord) -> YPoly:
        return self._terms.get(word, ZERO_Y)

    def degrees(self) -> set[int]:
        return {word.degree for word in self._terms}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CdPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "CdPoly") -> "CdPoly":
        return CdPoly.from_terms(list(self._terms.items()) + list(other._terms.items()))

    def __mul__(self, other: "CdPoly") -> "CdPoly":
        return CdPoly.from_terms(
            (w1.concat(w2), c1 * c2)
            for w1, c1 in self._terms.items()
            for w2, c2 in other._terms.items()
        )

    def __repr__(self) -> str:
        return f"CdPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            _render_term(c, [letter.value for letter in w.letters])
            for w, c in self.terms()
        )


_CD_IMAGES = {CdLetter.C1: C1_IMAGE, CdLetter.C2: C2_IMAGE, CdLetter.D: D_IMAGE}


def cd_expand(q: CdPoly) -> AbPoly:
    """Substitute c1 -> a + yb, c2 -> b + ya, d -> ab + yba + yab + y^2ba."""
    acc = AbPoly()
    for word, coeff in q.terms():
        term = AbPoly.one()
        for letter in word.letters:
            term = term * _CD_IMAGES[letter]
        acc = acc + term * coeff
    return acc


class YTPoly:
    """Integer polynomial in commuting y, t keyed by (y-exponent, t-exponent).

    >>> p = YTPoly.from_ypoly(YPoly([1, 1])) * (YTPoly.one() - YTPoly.t())
    >>> str(p)
    '1 + y + (-1 + -y)*t'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Tuple[int, int], int] | None = None) -> None:
        self._coeffs: Dict[Tuple[int, int], int] = {
            key: int(c) for key, c in (coeffs or {}).items() if c
        }

    @classmethod
    def one(cls) -> "YTPoly":
        return cls({(0, 0): 1})

    @classmethod
    def t(cls) -> "YTPoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_ypoly(cls, p: YPoly, t_exponent: int = 0) -> "YTPoly":
        return cls({(i, t_exponent): c for i, c in enumerate(p.coeffs)})

    @property
    def coeffs(self) -> Dict[Tuple[int, int], int]:
        return dict(self._coeffs)

    def t_degree(self) -> int:
        return max((j for _, j in self._coeffs), default=-1)

    def coefficient_t(self, exponent: int) -> YPoly:
        """``[t^exponent]`` as a polynomial in y."""
        size = 1 + max((i for i, j in self._coeffs if j == exponent), default=-1)
        return YPoly(self._coeffs.get((i, exponent), 0) for i in range(size))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YTPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "YTPoly") -> "YTPoly":
        acc = dict(self._coeffs)
        for key, c in other._coeffs.items():
            acc[key] = acc.get(key, 0) + c
        return YTPoly(acc)

    def __neg__(self) -> "YTPoly":
        return YTPoly({key: -c for key, c in self._coeffs.items()})

    def __sub__(self, other: "YTPoly") -> "YTPoly":
        return self + (-other)

    def __mul__(self, other: "YTPoly") -> "YTPoly":
        acc: Dict[Tuple[int, int], int] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return YTPoly(acc)

    def __pow__(self, exponent: int) -> "YTPoly":
        result = YTPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"YTPoly({str(self)!r})"

    def __str__(self) -> str:
        parts = []
        for k in range(self.t_degree() + 1):
            coeff = self.coefficient_t(k)
            if not coeff:
                continue
            if k == 0:
                parts.append(str(coeff))
                continue
            power = "t" if k == 1 else f"t^{k}"
            parts.append(power if coeff == ONE_Y else f"({coeff})*{power}")
        return " + ".join(parts) if parts else "0"


def specialize_ab(p: AbPoly) -> YTPoly:
    """Send a -> 1 and b -> t."""
    acc = YTPoly()
    for word, coeff in p.terms():
        acc = acc + YTPoly.from_ypoly(coeff, word.count_b())
    return acc

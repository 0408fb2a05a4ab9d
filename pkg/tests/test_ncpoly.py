"""Tests for noncommutative polynomials, omega, iota and the cd-form."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exab.errors import EmptyWordError, LeadingBError, RankOutOfRangeError
from exab.ncpoly import (
    A,
    B,
    AbPoly,
    AbWord,
    CdLetter,
    CdPoly,
    CdWord,
    WeightVariant,
    Y,
    YPoly,
    YTPoly,
    block_decompose,
    cd_expand,
    chain_weight,
    eval_y,
    iota,
    omega,
    specialize_ab,
)

words = st.text(alphabet="ab", max_size=5).map(AbWord.from_str)
small_polys = st.lists(
    st.tuples(words, st.integers(min_value=-3, max_value=3)), max_size=4
).map(AbPoly.from_terms)
a_leading_words = st.text(alphabet="ab", max_size=9).map(lambda s: AbWord.from_str("a" + s))
nonempty_polys = st.lists(
    st.tuples(
        st.text(alphabet="ab", min_size=1, max_size=5).map(AbWord.from_str),
        st.integers(min_value=-3, max_value=3),
    ),
    max_size=4,
).map(AbPoly.from_terms)


def test_ypoly_rendering() -> None:
    """Test ascending rendering of polynomials in y."""
    assert str(YPoly([1, 3, 2])) == "1 + 3*y + 2*y^2"
    assert str(YPoly([0, -1])) == "-y"
    assert str(YPoly([0, 0, 0, 2])) == "2*y^3"
    assert str(YPoly()) == "0"
    assert str(YPoly([0, 0])) == "0"


def test_ypoly_arithmetic() -> None:
    """Test ring operations and integer comparisons."""
    p = YPoly([1, 1])
    assert p * p == YPoly([1, 2, 1])
    assert p - p == 0
    assert 1 - Y == YPoly([1, -1])
    assert (p**3).evaluate(1) == 8
    assert p.coefficient(5) == 0
    assert YPoly().degree == -1


def test_word_order_and_rendering() -> None:
    """Test canonical order aa < ba < ab < bb."""
    p = AbPoly.from_terms((AbWord.from_str(w), 1) for w in ["bb", "ab", "ba", "aa"])
    assert str(p) == "a^2 + b*a + a*b + b^2"
    assert str(AbPoly()) == "0"
    assert str(AbPoly.one()) == "1"
    assert str(AbPoly.word("abb", YPoly([0, 0, 1]))) == "(y^2)*a*b*b"
    assert str(AbPoly.word("abb")) == "a*b^2"


def test_coefficient_is_total() -> None:
    """Test coefficient of absent words is zero."""
    p = AbPoly.word("ab", 2)
    assert p.coefficient("ab") == 2
    assert p.coefficient("ba") == 0
    assert p.coefficient(AbWord.from_str("aaa")) == 0


def test_word_helpers() -> None:
    """Test complement, concatenation and first-letter removal."""
    w = AbWord.from_str("aba")
    assert str(w.complement()) == "bab"
    assert str(w.concat(AbWord.from_str("b"))) == "abab"
    assert str(w.drop_first()) == "ba"
    assert w.count_b() == 1
    with pytest.raises(EmptyWordError):
        AbWord(0).drop_first()
    with pytest.raises(ValueError):
        AbWord.from_str("abc")


def test_chain_weights() -> None:
    """Test the three weight variants."""
    assert chain_weight(set(), 2) == (A - B) * (A - B)
    assert chain_weight({0}, 2) == B * (A - B)
    assert chain_weight({0, 1, 2}, 2, WeightVariant.PLUS) == B * B * B
    assert chain_weight(set(), 1, WeightVariant.MINUS) == AbPoly.one()
    with pytest.raises(RankOutOfRangeError):
        chain_weight({2}, 2)
    with pytest.raises(RankOutOfRangeError):
        chain_weight({0}, 3, WeightVariant.MINUS)


def test_omega_examples() -> None:
    """Test omega on single words."""
    assert omega(AbPoly.one()) == AbPoly.one()
    assert str(omega(A)) == "a + (y)*b"
    assert str(omega(B)) == "(y)*a + b"
    psi = AbPoly.word("aa") + AbPoly.word("ab", 2)
    assert str(omega(psi)) == "a^2 + (3*y + 2*y^2)*b*a + (2 + 3*y)*a*b + (y^2)*b*b"


def test_omega_at_zero_is_identity() -> None:
    """Test omega collapses to the identity at y = 0."""
    p = AbPoly.word("abba", 3) + AbPoly.word("bab", -1)
    assert eval_y(omega(p), 0) == p


@given(small_polys, small_polys)
def test_omega_is_additive(p: AbPoly, q: AbPoly) -> None:
    """Test omega is linear."""
    assert omega(p + q) == omega(p) + omega(q)


@given(words)
def test_omega_at_zero_on_words(w: AbWord) -> None:
    """Test omega(w) at y = 0 is w."""
    assert eval_y(omega(AbPoly.word(w)), 0) == AbPoly.word(w)


@given(words.filter(lambda w: w.length > 0))
def test_iota_drops_first_letter(w: AbWord) -> None:
    """Test iota on single words."""
    assert iota(AbPoly.word(w)) == AbPoly.word(w.drop_first())


def test_iota_merges_terms() -> None:
    """Test iota adds coefficients of words that collapse together."""
    p = AbPoly.word("ab", YPoly([1, 1])) + AbPoly.word("bb", Y)
    assert str(iota(p)) == "(1 + 2*y)*b"
    with pytest.raises(EmptyWordError):
        iota(AbPoly.one())


def _block(j: int) -> AbPoly:
    return AbPoly.word("a" + "b" * j)


@given(a_leading_words)
def test_omega_is_multiplicative_over_blocks(w: AbWord) -> None:
    """Test omega(w) is the product of omega over the blocks a b^j of w."""
    expected = AbPoly.one()
    for j in block_decompose(w):
        expected = expected * omega(_block(j))
    assert omega(AbPoly.word(w)) == expected


@pytest.mark.parametrize("j", range(1, 9))
def test_omega_of_block(j: int) -> None:
    """Test omega(a b^j) = (ab + yba + yab + y^2ba)(b + ya)^(j-1)."""
    ab = AbPoly.word("ab")
    ba = AbPoly.word("ba")
    d = ab + ba * Y + ab * Y + ba * (Y * Y)
    expected = d * (B + A * Y) ** (j - 1)
    assert omega(_block(j)) == expected


def test_omega_of_single_a_block() -> None:
    """Test the block a alone maps to a + yb."""
    assert omega(_block(0)) == A + B * Y


@given(nonempty_polys, st.sampled_from(["a", "b"]))
def test_iota_commutes_with_right_multiplication(p: AbPoly, letter: str) -> None:
    """Test iota(p x) = iota(p) x for a single letter x."""
    x = AbPoly.word(letter)
    assert iota(p * x) == iota(p) * x


@given(small_polys)
def test_specialized_omega_at_zero(p: AbPoly) -> None:
    """Test omega leaves a -> 1, b -> t unchanged at y = 0."""
    assert specialize_ab(eval_y(omega(p), 0)) == specialize_ab(p)


def test_block_decompose() -> None:
    """Test block exponents."""
    assert block_decompose(AbWord.from_str("a")) == [0]
    assert block_decompose(AbWord.from_str("abbab")) == [2, 1]
    with pytest.raises(LeadingBError):
        block_decompose(AbWord.from_str("ba"))
    with pytest.raises(LeadingBError):
        block_decompose(AbWord(0))


def test_cd_expand() -> None:
    """Test the cd-substitution on the rank-2 example."""
    c1, d = CdLetter.C1, CdLetter.D
    q = CdPoly.from_terms([(CdWord((c1, c1)), 1), (CdWord((d,)), 2)])
    assert str(q) == "(2)*d + c1^2"
    assert q.degrees() == {2}
    expanded = cd_expand(q)
    assert str(expanded) == "a^2 + (3*y + 2*y^2)*b*a + (2 + 3*y)*a*b + (y^2)*b*b"
    assert str(eval_y(expanded, 1)) == "a^2 + (5)*b*a + (5)*a*b + b^2"
    assert cd_expand(CdPoly({CdWord(): 1})) == AbPoly.one()


def test_ytpoly() -> None:
    """Test rendering and specialization a -> 1, b -> t."""
    p = AbPoly.word("a", YPoly([1, 3, 2])) + AbPoly.word("b", YPoly([2, 3, 1]))
    num = specialize_ab(p)
    assert str(num) == "1 + 3*y + 2*y^2 + (2 + 3*y + y^2)*t"
    assert num.coefficient_t(1) == YPoly([2, 3, 1])
    assert num.t_degree() == 1
    assert str(YTPoly.t() ** 2) == "t^2"
    assert str(YTPoly()) == "0"

import pytest
from hypothesis import given, settings, strategies as st

from ncrewrite.coeff import RATIONALS
from ncrewrite.freealg import (
    Alphabet,
    AlphabetMismatchError,
    EmptyPatternError,
    FreeAlgebraError,
    Polynomial,
    Word,
    poly_combine,
)
from ncrewrite.syntax import parse_polynomial

XY = Alphabet(("x", "y"))
ABC = Alphabet(("a", "b", "c", "d"))


def w(alphabet, text):
    return alphabet.word(*text) if text else alphabet.one()


def p(text, alphabet=XY):
    return parse_polynomial(text, RATIONALS, alphabet)


def test_alphabet_validation():
    with pytest.raises(FreeAlgebraError):
        Alphabet(("x", "x"))
    with pytest.raises(FreeAlgebraError):
        Alphabet(("x",), (0,))
    with pytest.raises(FreeAlgebraError):
        Alphabet(("",))


def test_concat():
    assert w(XY, "xy") * w(XY, "y") == w(XY, "xyy")
    assert XY.one() * w(XY, "yx") == w(XY, "yx")
    assert w(XY, "x") * XY.one() == w(XY, "x")


def test_concat_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        w(XY, "x") * w(ABC, "a")


def test_occurrences_overlapping():
    word = w(XY, "xyxyx")
    assert word.occurrences_of(w(XY, "xyx")) == [
        (XY.one(), w(XY, "yx")),
        (w(XY, "xy"), XY.one()),
    ]


def test_occurrences_absent():
    assert w(ABC, "abc").occurrences_of(w(ABC, "d")) == []


def test_occurrences_self_overlap():
    assert w(ABC, "aaa").occurrences_of(w(ABC, "aa")) == [
        (ABC.one(), w(ABC, "a")),
        (w(ABC, "a"), ABC.one()),
    ]


def test_empty_pattern_rejected():
    with pytest.raises(EmptyPatternError):
        w(XY, "xy").occurrences_of(XY.one())


words = st.lists(st.integers(0, 1), max_size=8).map(
    lambda ls: Word(XY, tuple(ls)))
patterns = st.lists(st.integers(0, 1), min_size=1, max_size=4).map(
    lambda ls: Word(XY, tuple(ls)))


@given(words, patterns)
def test_occurrence_count_matches_bruteforce(word, pattern):
    found = word.occurrences_of(pattern)
    brute = [
        i for i in range(len(word.letters) + 1)
        if word.letters[i:i + len(pattern.letters)] == pattern.letters
        and i + len(pattern.letters) <= len(word.letters)
    ]
    assert len(found) == len(brute)
    for (prefix, suffix), i in zip(found, brute):
        assert prefix * pattern * suffix == word
        assert len(prefix.letters) == i


def test_combine_cancellation():
    a = p("2*x*y")
    b = p("-2*x*y")
    assert poly_combine(RATIONALS.one(), a, b).is_zero()


def test_combine_scaling():
    assert poly_combine(RATIONALS.coeff(3), p("x"), p("y")) == p("3*x + y")


def test_combine_zero_scalar():
    assert poly_combine(RATIONALS.zero(), p("x*y*x"), p("y")) == p("y")


def test_mul_simple():
    assert p("x + y") * p("x") == p("x*x + y*x")


def test_mul_collects_like_terms():
    q = p("x*y + 1")
    assert q * q == p("x*y*x*y + 2*x*y + 1")


def test_mul_unit():
    a = p("3*x*y - 1/2*y")
    assert a * Polynomial.one(RATIONALS, XY) == a


small_polys = st.lists(
    st.tuples(st.lists(st.integers(0, 1), max_size=4),
              st.fractions(min_value=-50, max_value=50, max_denominator=8)),
    max_size=5,
).map(lambda terms: sum(
    (Polynomial.monomial(Word(XY, tuple(ls)), RATIONALS.coeff(c))
     for ls, c in terms),
    Polynomial.zero(RATIONALS, XY)))


@settings(max_examples=60)
@given(small_polys, small_polys, small_polys)
def test_mul_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(small_polys, small_polys)
def test_structural_equality_hash(a, b):
    if a == b:
        assert hash(a) == hash(b)

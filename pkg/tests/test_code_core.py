"""Tests for words, codes, exact sums and the code file format"""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.code_core import (
    Code, LengthProfile, builtin_code, commutatively_equivalent, count_occurrences,
    is_prefix_free, iter_free_words, kraft_sum, length_equivalent, length_multiset,
    load_code, parse_code, power_profile, weighted_ternary_sum,
)
from src.enumeration import enumerate_codes
from src.errors import CodeParseError, UnknownBuiltinError

SHOR_PROFILE = {
    1: 1, 2: 2, 4: 8, 6: 32, 8: 256, 9: 256, 10: 512,
    11: 1024, 12: 2048, 13: 8192, 14: 16384, 15: 32768,
}

words = st.text(alphabet='ab', min_size=1, max_size=5)
codes = st.frozensets(words, min_size=1, max_size=5).map(Code)


def test_code_rejects_bad_words():
    """Empty words and foreign symbols never make it into a Code"""
    with pytest.raises(CodeParseError):
        Code.of('a', '')
    with pytest.raises(CodeParseError):
        Code.of('ac')
    with pytest.raises(CodeParseError):
        Code.from_words(['a', 'a'])


def test_sorted_is_length_then_lex():
    assert Code.of('bb', 'a', 'ab', 'b').sorted() == ['a', 'b', 'ab', 'bb']
    assert list(Code.of('ba', 'a')) == ['a', 'ba']


def test_count_occurrences():
    assert count_occurrences('abaab', 'a') == 3
    assert count_occurrences('abaab', 'b') == 2


def test_prefix_free():
    assert is_prefix_free(Code.of('a', 'ba'))
    assert is_prefix_free(Code.of('a', 'b'))
    assert not is_prefix_free(Code.of('a', 'ab'))
    assert not is_prefix_free(Code.of('ab', 'abba', 'b'))


def test_exact_sums():
    """Sums are exact fractions, never floats"""
    assert kraft_sum(Code.of('a', 'ab')) == Fraction(3, 4)
    assert weighted_ternary_sum(Code.of('a', 'b')) == 1
    assert weighted_ternary_sum(Code.of('a', 'ab')) == Fraction(8, 9)
    assert isinstance(kraft_sum(Code.of('a')), Fraction)


@given(codes)
def test_kraft_sum_matches_termwise_sum(code):
    assert kraft_sum(code) == sum(Fraction(1, 2 ** len(w)) for w in code.words)


@given(codes)
def test_ternary_sum_matches_termwise_sum(code):
    expected = sum(Fraction(2 ** w.count('a'), 3 ** len(w)) for w in code.words)
    assert weighted_ternary_sum(code) == expected


def test_power_profile():
    assert power_profile(Code.of('a', 'ab')).as_dict() == {1: 2, 2: 2}
    assert power_profile(Code.of('a', 'ba')) == power_profile(Code.of('a', 'ab'))
    assert power_profile(Code.of('bb')).to_dict() == {'2': 1}


def test_length_profile_arithmetic():
    profile = LengthProfile({1: 2})
    assert profile.plus(2, 4).as_dict() == {1: 2, 2: 4}
    assert profile.plus(2, 4).diff(profile) == {2: 4}
    assert profile.get(3) == 0
    with pytest.raises(ValueError):
        LengthProfile({1: 0})


def test_equivalences():
    assert commutatively_equivalent(Code.of('ab'), Code.of('ba'))
    assert not commutatively_equivalent(Code.of('ab'), Code.of('bb'))
    assert length_multiset(Code.of('a', 'ab', 'ba')) == (1, 2, 2)
    assert length_equivalent(Code.of('a', 'ab'), Code.of('b', 'aa'))


def test_iter_free_words():
    assert list(iter_free_words({'a'}, 2)) == ['ba', 'bb']
    assert list(iter_free_words({'a'}, 2, a_total=1)) == ['ba']
    assert list(iter_free_words(set(), 2, a_total=3)) == []
    assert len(list(iter_free_words(set(), 4))) == 16


def test_shor_builtin():
    """The builtin code has 16 words and this exact profile"""
    shor = builtin_code('shor')
    assert len(shor) == 16
    assert power_profile(shor).as_dict() == SHOR_PROFILE
    assert not is_prefix_free(shor)


def test_unknown_builtin():
    with pytest.raises(UnknownBuiltinError):
        builtin_code('nope')


def test_parse_code_skips_comments_and_blanks():
    code = parse_code("# header\n\na\n  ba  \n\n# trailing\n")
    assert code == Code.of('a', 'ba')


def test_parse_code_reports_line_numbers():
    with pytest.raises(CodeParseError) as info:
        parse_code("a\nb\nac\n")
    assert info.value.line == 3
    assert 'line 3' in str(info.value)

    with pytest.raises(CodeParseError) as info:
        parse_code("a\nb\na\n")
    assert info.value.line == 3


def test_parse_code_rejects_empty_file():
    with pytest.raises(CodeParseError):
        parse_code("# nothing here\n")


def test_load_code(tmp_path):
    path = tmp_path / 'code.txt'
    path.write_text("a\nab\n", encoding='utf-8')
    assert load_code(path) == Code.of('a', 'ab')


def test_commutative_equivalence_is_an_equivalence_relation():
    """Reflexive, symmetric and transitive over every code of <= 2 words, length <= 2"""
    universe = list(enumerate_codes(2, 2))
    related = {(x, y) for x in universe for y in universe if commutatively_equivalent(x, y)}
    assert all((x, x) in related for x in universe)
    assert all((y, x) in related for x, y in related)
    for x, y in related:
        for z in universe:
            if (y, z) in related:
                assert (x, z) in related
    assert (Code.of('ab'), Code.of('ba')) in related

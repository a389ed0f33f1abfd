"""Tests for Sardinas-Patterson and the length-bounded oracle"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.code_core import Code, builtin_code
from src.decodability import (
    UdVerdict, agreement_bound, brute_force_ud, is_uniquely_decodable, sardinas_patterson,
)
from src.errors import PreconditionError

codes = st.frozensets(st.text(alphabet='ab', min_size=1, max_size=3), min_size=1, max_size=3).map(Code)


def _assert_valid_witness(code, verdict):
    first, second = verdict.factorizations
    assert first != second
    assert ''.join(first) == ''.join(second) == verdict.witness
    assert all(f in code for f in first + second)


def test_prefix_free_codes_are_decodable():
    assert sardinas_patterson(Code.of('a', 'ba', 'bb')).decodable
    assert is_uniquely_decodable(Code.of('a', 'b'))


def test_suffix_code_is_decodable():
    """{a, ab} is not prefix-free but every word still parses one way"""
    verdict = sardinas_patterson(Code.of('a', 'ab'))
    assert verdict.decodable
    assert verdict.witness is None


def test_witness_for_a_ab_ba():
    code = Code.of('a', 'ab', 'ba')
    verdict = sardinas_patterson(code)
    assert not verdict.decodable
    assert verdict.witness == 'aba'
    assert set(verdict.factorizations) == {('a', 'ba'), ('ab', 'a')}
    _assert_valid_witness(code, verdict)


def test_witness_for_a_aa():
    code = Code.of('a', 'aa')
    verdict = sardinas_patterson(code)
    assert not verdict.decodable
    assert verdict.witness == 'aa'
    _assert_valid_witness(code, verdict)


def test_shor_code_is_decodable():
    assert sardinas_patterson(builtin_code('shor')).decodable


def test_agreement_bound():
    # suffixes {a, b} of ab, ba, plus one, times length 2
    assert agreement_bound(Code.of('a', 'ab', 'ba')) == 6
    assert agreement_bound(Code.of('a', 'b')) == 1


def test_brute_force_finds_shortest_witness():
    code = Code.of('a', 'ab', 'ba')
    verdict = brute_force_ud(code, agreement_bound(code))
    assert not verdict.decodable
    assert len(verdict.witness) == 3
    assert verdict.bound == 6
    _assert_valid_witness(code, verdict)


def test_brute_force_bound_must_cover_longest_word():
    with pytest.raises(PreconditionError):
        brute_force_ud(Code.of('a', 'abb'), 2)


def test_empty_code_is_rejected():
    with pytest.raises(PreconditionError):
        sardinas_patterson(Code())


def test_verdict_validates_witness():
    with pytest.raises(ValueError):
        UdVerdict(True, witness='a')
    with pytest.raises(ValueError):
        UdVerdict(False, 'aba', (('a', 'ba'), ('a', 'ba')))
    with pytest.raises(ValueError):
        UdVerdict(False, 'aba', (('a', 'b'), ('ab', 'a')))


def test_verdict_to_dict():
    verdict = sardinas_patterson(Code.of('a', 'aa'))
    out = verdict.to_dict()
    assert out['decodable'] is False
    assert out['witness'] == 'aa'
    assert len(out['factorizations']) == 2


@settings(max_examples=200, deadline=None)
@given(codes)
def test_sardinas_patterson_agrees_with_bounded_search(code):
    sp = sardinas_patterson(code)
    bf = brute_force_ud(code, agreement_bound(code))
    assert sp.decodable == bf.decodable
    for verdict in (sp, bf):
        if not verdict.decodable:
            _assert_valid_witness(code, verdict)

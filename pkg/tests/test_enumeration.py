"""Tests for the exhaustive universes"""
import pytest

from src.code_core import Code
from src.enumeration import (
    all_words, enumerate_codes, enumerate_exponent_instances, enumerate_length_multisets,
    enumerate_symmetric_trees,
)
from src.errors import PreconditionError
from src.symtree import canonical_form, is_symmetric


def test_all_words_order():
    assert all_words(2) == ['a', 'b', 'aa', 'ab', 'ba', 'bb']


def test_small_code_counts():
    assert list(enumerate_codes(2, 1, 'prefix_free')) == [Code.of('a'), Code.of('b'), Code.of('a', 'b')]
    assert sum(1 for _ in enumerate_codes(1, 1)) == 2
    assert sum(1 for _ in enumerate_codes(1, 2)) == 6


def test_code_counts_are_pinned():
    # 30 words of length <= 4: C(30,1) + C(30,2) + C(30,3)
    assert sum(1 for _ in enumerate_codes(3, 4)) == 4525


def test_filters_narrow_the_universe():
    everything = set(enumerate_codes(2, 2))
    decodable = set(enumerate_codes(2, 2, 'decodable'))
    prefix_free = set(enumerate_codes(2, 2, 'prefix_free'))
    assert prefix_free <= decodable <= everything
    assert Code.of('a', 'ab') in decodable - prefix_free
    assert Code.of('a', 'aa') in everything - decodable


def test_enumeration_is_deterministic():
    assert list(enumerate_codes(2, 3, 'decodable')) == list(enumerate_codes(2, 3, 'decodable'))


def test_enumerate_codes_preconditions():
    with pytest.raises(PreconditionError):
        list(enumerate_codes(0, 2))
    with pytest.raises(PreconditionError):
        list(enumerate_codes(2, 2, 'bogus'))


@pytest.mark.parametrize('depth, count', [(0, 1), (1, 4), (2, 25), (3, 676)])
def test_symmetric_tree_counts(depth, count):
    trees = list(enumerate_symmetric_trees(depth))
    assert len(trees) == count
    assert len({canonical_form(t) for t in trees}) == count
    assert all(is_symmetric(t) and t.depth <= depth for t in trees)


def test_symmetric_trees_preconditions():
    with pytest.raises(PreconditionError):
        list(enumerate_symmetric_trees(-1))


def test_length_multisets():
    assert list(enumerate_length_multisets(2, 2)) == [(1,), (2,), (1, 1), (1, 2), (2, 2)]
    assert (1, 1, 1) not in set(enumerate_length_multisets(3, 2))


def test_exponent_instances():
    assert list(enumerate_exponent_instances(1, 1)) == [((0,), 0), ((1,), 1), ((0, 1), 1)]
    for exponents, target in enumerate_exponent_instances(3, 2):
        assert all(e <= target for e in exponents)
        assert sum(2 ** e for e in exponents) >= 2 ** target

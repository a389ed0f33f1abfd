"""
Enumeration - exhaustive universes of small codes, trees and multisets
Every generator is deterministic: same bounds, same order.
"""

from itertools import combinations, combinations_with_replacement, product
from fractions import Fraction
from typing import Iterator

from .code_core import ALPHABET, Code, is_prefix_free
from .config import CODE_FILTERS
from .decodability import sardinas_patterson
from .errors import PreconditionError
from .symtree import Tree, tree_from_shape

Shape = tuple  # nested tuples of children; () is a leaf


def all_words(max_len: int) -> list[str]:
    """Nonempty words up to max_len, by length then lexicographically"""
    return [''.join(p) for n in range(1, max_len + 1) for p in product(ALPHABET, repeat=n)]


def enumerate_codes(max_words: int, max_len: int, filter: str = 'all') -> Iterator[Code]:
    """Every nonempty set of at most max_words words of length <= max_len passing `filter`"""
    if max_words < 1 or max_len < 1:
        raise PreconditionError("max_words and max_len must be at least 1")
    if filter not in CODE_FILTERS:
        raise PreconditionError(f"unknown filter {filter!r}; expected one of {CODE_FILTERS}")

    pool = all_words(max_len)
    for size in range(1, max_words + 1):
        for combo in combinations(pool, size):
            code = Code(frozenset(combo))
            if filter == 'prefix_free' and not is_prefix_free(code):
                continue
            if filter == 'decodable' and not sardinas_patterson(code).decodable:
                continue
            yield code


def _shape_form(shape: Shape) -> str:
    return '(' + ''.join(sorted(_shape_form(c) for c in shape)) + ')'


def _normalize(shape: Shape) -> Shape:
    return tuple(sorted(shape, key=_shape_form))


def symmetric_shapes(max_depth: int) -> list[Shape]:
    """One shape per isomorphism class of symmetric trees of depth <= max_depth"""
    if max_depth < 0:
        raise PreconditionError("max_depth must be nonnegative")
    shapes: list[Shape] = [()]
    for _ in range(max_depth):
        grown: list[Shape] = [()]
        grown += [(x,) for x in shapes]
        grown += [(x, x) for x in shapes]
        grown += [(x, x, y) for x in shapes for y in shapes]
        seen, unique = set(), []
        for shape in map(_normalize, grown):
            form = _shape_form(shape)
            if form not in seen:
                seen.add(form)
                unique.append(shape)
        shapes = unique
    return shapes


def enumerate_symmetric_trees(max_depth: int) -> Iterator[Tree]:
    for shape in symmetric_shapes(max_depth):
        yield tree_from_shape(shape)


def enumerate_length_multisets(max_count: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Length multisets with Kraft sum <= 1"""
    for count in range(1, max_count + 1):
        for lengths in combinations_with_replacement(range(1, max_len + 1), count):
            if sum(Fraction(1, 2 ** n) for n in lengths) <= 1:
                yield lengths


def enumerate_exponent_instances(max_exponent: int, max_multiplicity: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """(multiset, N) pairs with every element <= N and sum of 2^n >= 2^N"""
    for target in range(max_exponent + 1):
        for counts in product(range(max_multiplicity + 1), repeat=target + 1):
            if sum(c << n for n, c in enumerate(counts)) < 1 << target:
                continue
            multiset = tuple(n for n, c in enumerate(counts) for _ in range(c))
            yield multiset, target

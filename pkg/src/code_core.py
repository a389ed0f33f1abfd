"""
Code Core - words, codes, symbol counts and exact Kraft-style sums
Words are plain strings over 'a' and 'b'; a Code is an immutable set of them.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional

from .errors import CodeParseError, UnknownBuiltinError


class Symbol(str, Enum):
    """Binary alphabet; a < b is the tie-break order everywhere"""
    A = 'a'
    B = 'b'


ALPHABET = (Symbol.A.value, Symbol.B.value)


def validate_word(word: str) -> str:
    if not isinstance(word, str):
        raise CodeParseError(f"word must be a string, got {type(word).__name__}")
    if not word:
        raise CodeParseError("empty word is not allowed in a code")
    bad = set(word) - set(ALPHABET)
    if bad:
        raise CodeParseError(f"word {word!r} contains symbols outside {{a,b}}: {sorted(bad)}")
    return word


def count_occurrences(word: str, symbol: str | Symbol) -> int:
    """Number of positions of `word` holding `symbol`"""
    return word.count(Symbol(symbol).value)


def a_count(word: str) -> int:
    return word.count('a')


@dataclass(frozen=True)
class Code:
    """Finite set of nonempty binary words"""
    words: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        words = frozenset(self.words)
        for w in words:
            validate_word(w)
        object.__setattr__(self, 'words', words)

    @classmethod
    def of(cls, *words: str) -> 'Code':
        return cls.from_words(words)

    @classmethod
    def from_words(cls, words: Iterable[str]) -> 'Code':
        """Build a code, rejecting duplicates (a repeated word is never decodable)"""
        seen = set()
        for w in words:
            if w in seen:
                raise CodeParseError(f"duplicate word {w!r}")
            seen.add(w)
        return cls(frozenset(seen))

    def __iter__(self) -> Iterator[str]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self.words

    def sorted(self) -> list[str]:
        """Words by length, then lexicographically (a < b)"""
        return sorted(self.words, key=lambda w: (len(w), w))

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    @property
    def lengths(self) -> frozenset:
        return frozenset(len(w) for w in self.words)

    def to_lines(self) -> str:
        return ''.join(f"{w}\n" for w in self.sorted())

    def to_list(self) -> list[str]:
        return self.sorted()


@dataclass(frozen=True)
class LengthProfile:
    """Length k -> P_k = sum of 2^{[w]_a} over words of length k"""
    entries: tuple = ()

    def __post_init__(self):
        items = self.entries.items() if isinstance(self.entries, Mapping) else self.entries
        normalized = tuple(sorted((int(k), int(v)) for k, v in items))
        for k, v in normalized:
            if v < 1:
                raise ValueError(f"profile entry P_{k} = {v} must be positive")
        if len({k for k, _ in normalized}) != len(normalized):
            raise ValueError("profile has repeated lengths")
        object.__setattr__(self, 'entries', normalized)

    def __getitem__(self, k: int) -> int:
        return self.as_dict()[k]

    def get(self, k: int, default: int = 0) -> int:
        return self.as_dict().get(k, default)

    def keys(self) -> frozenset:
        return frozenset(k for k, _ in self.entries)

    def items(self) -> tuple:
        return self.entries

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def plus(self, k: int, amount: int) -> 'LengthProfile':
        d = self.as_dict()
        d[k] = d.get(k, 0) + amount
        return LengthProfile(d)

    def diff(self, other: 'LengthProfile') -> dict[int, int]:
        """Nonzero entries of self - other"""
        mine, theirs = self.as_dict(), other.as_dict()
        out = {}
        for k in sorted(set(mine) | set(theirs)):
            delta = mine.get(k, 0) - theirs.get(k, 0)
            if delta:
                out[k] = delta
        return out

    def to_dict(self) -> dict[str, int]:
        return {str(k): v for k, v in self.entries}


# Multiset of (count_a, count_b) pairs, kept as a sorted tuple
ParikhSignature = tuple


def parikh_signature(code: Code) -> ParikhSignature:
    return tuple(sorted((w.count('a'), w.count('b')) for w in code.words))


def is_prefix_free(code: Code) -> bool:
    """No word is a proper prefix of another"""
    # In lexicographic order a prefix sorts immediately before its extensions
    ordered = sorted(code.words)
    return not any(nxt.startswith(cur) for cur, nxt in zip(ordered, ordered[1:]))


def kraft_sum(code: Code) -> Fraction:
    """Exact sum of 2^{-|w|}"""
    top = code.max_length
    return Fraction(sum(2 ** (top - len(w)) for w in code.words), 2 ** top)


def weighted_ternary_sum(code: Code) -> Fraction:
    """Exact sum of 3^{-|c|} * 2^{[c]_a}"""
    top = code.max_length
    return Fraction(sum(3 ** (top - len(c)) * 2 ** a_count(c) for c in code.words), 3 ** top)


def power_profile(code: Code) -> LengthProfile:
    totals: Counter = Counter()
    for w in code.words:
        totals[len(w)] += 2 ** a_count(w)
    return LengthProfile(dict(totals))


def commutatively_equivalent(first: Code, second: Code) -> bool:
    return parikh_signature(first) == parikh_signature(second)


def length_multiset(code: Code) -> tuple[int, ...]:
    return tuple(sorted(len(w) for w in code.words))


def length_equivalent(first: Code, second: Code) -> bool:
    return length_multiset(first) == length_multiset(second)


def proper_prefixes(words: Iterable[str]) -> set[str]:
    """All nonempty proper prefixes of the given words"""
    out = set()
    for w in words:
        for i in range(1, len(w)):
            out.add(w[:i])
    return out


def iter_free_words(blocked: Iterable[str], length: int,
                    a_total: Optional[int] = None) -> Iterator[str]:
    """
    Words of `length` with no prefix in `blocked`, in lexicographic order.
    With `a_total` set, only words holding exactly that many a's.
    """
    blocked = set(blocked)
    if a_total is not None and not 0 <= a_total <= length:
        return

    def walk(prefix: str, a_left: Optional[int]):
        if prefix in blocked:
            return
        depth = len(prefix)
        if depth == length:
            yield prefix
            return
        remaining = length - depth
        for symbol in ALPHABET:
            if a_left is None:
                yield from walk(prefix + symbol, None)
                continue
            left = a_left - 1 if symbol == 'a' else a_left
            if 0 <= left <= remaining - 1:
                yield from walk(prefix + symbol, left)

    yield from walk('', a_total)


# Shor's code, written out product by product
def _shor_words() -> list[str]:
    words = ['b' + 'a' * k for k in (0, 1, 7, 13, 14)]
    words += ['a' * p + 'b' + 'a' * k for p in (3, 8) for k in (0, 2, 4, 6)]
    words += ['a' * 11 + 'b' + 'a' * k for k in (0, 1, 2)]
    return words


BUILTIN_CODES = {
    'shor': _shor_words,
}


def builtin_code(name: str) -> Code:
    if name not in BUILTIN_CODES:
        raise UnknownBuiltinError(f"unknown builtin code {name!r}; known: {sorted(BUILTIN_CODES)}")
    return Code.from_words(BUILTIN_CODES[name]())


def parse_code(text: str) -> Code:
    """
    Parse the code file format: one word per line, '#' comments and blank
    lines ignored, duplicates rejected.
    """
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        try:
            validate_word(line)
        except CodeParseError as e:
            raise CodeParseError(str(e), line=lineno) from None
        if line in seen:
            raise CodeParseError(f"duplicate word {line!r} (first on line {seen[line]})", line=lineno)
        seen[line] = lineno
    if not seen:
        raise CodeParseError("code file holds no words")
    return Code(frozenset(seen))


def load_code(path: str | Path) -> Code:
    return parse_code(Path(path).read_text(encoding='utf-8'))
